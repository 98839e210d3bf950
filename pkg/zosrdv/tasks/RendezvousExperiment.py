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

import io
import pathlib

from zosrdv.tasks.AbstractTask import AbstractTask

from zosrdv.utils import UtilsPath
from zosrdv.utils import UtilsLogging
from zosrdv.utils import UtilsExperiment

logger = UtilsLogging.getLogger()

CSV_FILE_NAME = "ttr.csv"


def experimentInDataSchema(thetaSchema):
    return {
        "type": "object",
        "required": ["numberOfChannels", "theta", "common", "trials", "masterSeed"],
        "properties": {
            "numberOfChannels": {"type": "integer", "minimum": 2},
            "theta": thetaSchema,
            "common": {"type": "integer", "minimum": 1},
            "trials": {"type": "integer", "minimum": 1},
            "masterSeed": {"type": "integer", "minimum": 0},
            "algorithms": {
                "type": "array",
                "items": {"type": "string", "enum": list(UtilsExperiment.ALGORITHMS)},
                "minItems": 1,
            },
            "horizon": {"type": ["integer", "null"], "minimum": 1},
            "model": {"type": "string", "enum": list(UtilsExperiment.MODELS)},
            "out": {"type": ["string", "null"]},
            "workingDirectory": {"type": "string"},
        },
    }


def createExperimentConfig(inData, theta):
    return UtilsExperiment.ExperimentConfig(
        numberOfChannels=inData["numberOfChannels"],
        theta=theta,
        common=inData["common"],
        trials=inData["trials"],
        masterSeed=inData["masterSeed"],
        algorithms=tuple(inData.get("algorithms", UtilsExperiment.ALGORITHMS)),
        horizon=inData.get("horizon"),
        model=inData.get("model", "asymmetric"),
    )


class RendezvousExperiment(AbstractTask):
    """
    Monte-Carlo trials for one theta, one ttrStats entry per algorithm.
    """

    def getInDataSchema(self):
        return experimentInDataSchema({"type": "number", "exclusiveMinimum": 0, "maximum": 1})

    def getOutDataSchema(self):
        return {
            "type": "object",
            "required": ["ttrStats"],
            "properties": {
                "ttrStats": {"type": "array", "items": self.getSchema("ttrStats.json")},
            },
        }

    def run(self, inData):
        config = createExperimentConfig(inData, inData["theta"])
        listStats = UtilsExperiment.runExperiment(config)
        return {"ttrStats": [stats.toDict() for stats in listStats]}


class ControlRendezvousExperiment(AbstractTask):
    """
    Theta sweep: one RendezvousExperiment per theta run in parallel, results
    written as ttr.csv in the working directory and to `out` when given.
    """

    def getInDataSchema(self):
        return experimentInDataSchema({
            "type": "array",
            "items": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
            "minItems": 1,
        })

    def getOutDataSchema(self):
        return {
            "type": "object",
            "required": ["ttrStats", "csv", "csvFile"],
            "properties": {
                "ttrStats": {"type": "array", "items": self.getSchema("ttrStats.json")},
                "csv": {"type": "string"},
                "csvFile": {"type": "string"},
                "out": {"type": ["string", "null"]},
            },
        }

    def run(self, inData):
        # Geometry errors surface here, before any subprocess starts
        for theta in inData["theta"]:
            createExperimentConfig(inData, theta)
        listTask = []
        for index, theta in enumerate(inData["theta"]):
            subInData = dict(inData, theta=theta, workingDirectory=str(self.getWorkingDirectory()))
            subInData.pop("out", None)
            task = RendezvousExperiment(inData=subInData, workingDirectorySuffix="theta{0}".format(index))
            task.start()
            listTask.append((theta, task))
        listStats = []
        for theta, task in listTask:
            task.join()
            if task.isFailure():
                raise RuntimeError("Experiment for theta={0} failed".format(theta))
            listStats += [
                UtilsExperiment.TtrStats.fromDict(dictStats) for dictStats in task.outData["ttrStats"]
            ]
        destination = io.StringIO()
        UtilsExperiment.emitCsv(listStats, destination)
        csvText = destination.getvalue()
        csvFile = UtilsPath.writeText(pathlib.Path.cwd() / CSV_FILE_NAME, csvText)
        out = inData.get("out")
        if out is not None:
            UtilsPath.writeText(out, csvText)
            logger.info("TTR table written to %s", out)
        return {
            "ttrStats": [stats.toDict() for stats in listStats],
            "csv": csvText,
            "csvFile": str(csvFile),
            "out": out,
        }
