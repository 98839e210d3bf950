#
# Copyright (c) The zosrdv developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the "Software"), to deal in
# the Software without restriction, including without limitation the rights to
# use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of
# the Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS
# FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR
# COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER
# IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
# CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#

__authors__ = ["zosrdv developers"]
__license__ = "MIT"
__date__ = "18/10/2026"

import pathlib

from zosrdv.tasks.AbstractTask import AbstractTask

from zosrdv.utils import UtilsPath
from zosrdv.utils import UtilsRandom
from zosrdv.utils import UtilsLogging
from zosrdv.utils import UtilsSchedule
from zosrdv.utils import UtilsSimulation
from zosrdv.utils.UtilsChannel import ChannelSet

logger = UtilsLogging.getLogger()

SCHEDULE_FILE_NAME = "schedule.txt"


class GenerateSchedule(AbstractTask):
    """
    Generates the ZOS schedule of one user and writes its text form to
    schedule.txt in the working directory.
    """

    def getInDataSchema(self):
        return {
            "type": "object",
            "required": ["numberOfChannels", "availableChannels", "seed"],
            "properties": {
                "numberOfChannels": {"type": "integer", "minimum": 2},
                "availableChannels": {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 1},
                    "minItems": 1,
                },
                "seed": {"type": "integer", "minimum": 0},
                "stayChannel": {"type": ["integer", "null"]},
                "workingDirectory": {"type": "string"},
            },
        }

    def getOutDataSchema(self):
        return {
            "type": "object",
            "required": ["numberOfChannels", "L", "stayChannel", "seed", "columnLengths", "scheduleText"],
            "properties": {
                "numberOfChannels": {"type": "integer"},
                "L": {"type": "integer"},
                "stayChannel": {"type": "integer"},
                "seed": {"type": "string"},
                "columnLengths": {"type": "array", "items": {"type": "integer"}},
                "scheduleText": {"type": "string"},
                "scheduleFile": {"type": "string"},
                "available": self.getSchema("channelSet.json"),
            },
        }

    def run(self, inData):
        numberOfChannels = inData["numberOfChannels"]
        available = ChannelSet.fromChannels(numberOfChannels, inData["availableChannels"])
        rng = UtilsRandom.RngStream(inData["seed"], ("user", 1))
        schedule = UtilsSchedule.generateSchedule(
            numberOfChannels, available, rng, stayOverride=inData.get("stayChannel")
        )
        scheduleText = schedule.toText()
        scheduleFile = UtilsPath.writeText(pathlib.Path.cwd() / SCHEDULE_FILE_NAME, scheduleText)
        return {
            "numberOfChannels": numberOfChannels,
            "L": schedule.L,
            "stayChannel": schedule.stayChannel,
            "seed": schedule.seed.toString(),
            "columnLengths": [len(column) for column in schedule.columns],
            "scheduleText": scheduleText,
            "scheduleFile": str(scheduleFile),
            "available": available.toDict(),
        }


class SimulatePair(AbstractTask):
    """
    One pair of users, user 2 leading by `offset` slots. Schedules are read
    from scheduleFile1/2 when given, generated otherwise.
    """

    def getInDataSchema(self):
        availableSchema = {
            "type": "array",
            "items": {"type": "integer", "minimum": 1},
            "minItems": 1,
        }
        return {
            "type": "object",
            "required": ["offset"],
            "properties": {
                "numberOfChannels": {"type": "integer", "minimum": 2},
                "availableChannels1": availableSchema,
                "availableChannels2": availableSchema,
                "scheduleFile1": {"type": "string"},
                "scheduleFile2": {"type": "string"},
                "offset": {"type": "integer", "minimum": 0},
                "seed": {"type": "integer", "minimum": 0},
                "horizon": {"type": ["integer", "null"], "minimum": 1},
                "stayChannel1": {"type": ["integer", "null"]},
                "stayChannel2": {"type": ["integer", "null"]},
                "algorithm": {"type": "string", "enum": ["zos", "random"]},
                "workingDirectory": {"type": "string"},
            },
        }

    def getOutDataSchema(self):
        return self.getSchema("rendezvousResult.json")

    def run(self, inData):
        schedule1 = self.loadOrGenerate(inData, 1)
        schedule2 = self.loadOrGenerate(inData, 2)
        config = UtilsSimulation.PairConfig(
            schedule1, schedule2, inData["offset"], inData.get("horizon")
        )
        result = UtilsSimulation.simulatePair(config)
        if result.met:
            logger.info("Rendezvous after %d slots on channel %d", result.ttr, result.channel)
        else:
            logger.warning("No rendezvous within %d slots", result.horizon)
        return result.toDict()

    @staticmethod
    def loadOrGenerate(inData, user):
        scheduleFile = inData.get("scheduleFile{0}".format(user))
        if scheduleFile is not None:
            with open(scheduleFile) as f:
                return UtilsSchedule.readScheduleText(f.read())
        for key in ("numberOfChannels", "availableChannels{0}".format(user), "seed"):
            if key not in inData:
                raise RuntimeError("Missing '{0}' for user {1}".format(key, user))
        numberOfChannels = inData["numberOfChannels"]
        available = ChannelSet.fromChannels(numberOfChannels, inData["availableChannels{0}".format(user)])
        rng = UtilsRandom.RngStream(inData["seed"], ("user", user))
        if inData.get("algorithm", "zos") == "random":
            return UtilsSimulation.randomBaselineSchedule(numberOfChannels, available, rng)
        return UtilsSchedule.generateSchedule(
            numberOfChannels, available, rng,
            stayOverride=inData.get("stayChannel{0}".format(user)),
        )
