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

from zosrdv.tasks.AbstractTask import AbstractTask

from zosrdv.utils import UtilsConfig
from zosrdv.utils import UtilsVerify
from zosrdv.utils import UtilsLogging

logger = UtilsLogging.getLogger()


class VerifyBounds(AbstractTask):
    """
    Runs one named verification gate and returns its bound report.
    """

    def getInDataSchema(self):
        return {
            "type": "object",
            "required": ["gate"],
            "properties": {
                "gate": {"type": "string", "enum": UtilsVerify.GATES},
                "seeds": {"type": ["integer", "null"], "minimum": 1},
                "masterSeed": {"type": "integer", "minimum": 0},
                "configurations": {"type": "integer", "minimum": 1},
                "workingDirectory": {"type": "string"},
            },
        }

    def getOutDataSchema(self):
        return self.getSchema("boundReport.json")

    def run(self, inData):
        gate = inData["gate"]
        numberOfSeeds = inData.get("seeds")
        if numberOfSeeds is None and UtilsConfig.get(self, "seeds") is not None:
            numberOfSeeds = int(UtilsConfig.get(self, "seeds"))
        masterSeed = inData.get("masterSeed", int(UtilsConfig.get(self, "seed", 0)))
        numberOfConfigurations = inData.get(
            "configurations", int(UtilsConfig.get(self, "sampled_configurations", 1000))
        )
        logger.info("Verification gate '%s' started", gate)
        report = UtilsVerify.runGate(
            gate,
            numberOfSeeds=numberOfSeeds,
            masterSeed=masterSeed,
            numberOfConfigurations=numberOfConfigurations,
        )
        return report.toDict()


class ControlVerify(AbstractTask):
    """
    Runs the requested gates in parallel, one VerifyBounds task each.
    """

    def getInDataSchema(self):
        return {
            "type": "object",
            "properties": {
                "gates": {
                    "type": "array",
                    "items": {"type": "string", "enum": UtilsVerify.GATES},
                },
                "seeds": {"type": ["integer", "null"], "minimum": 1},
                "masterSeed": {"type": "integer", "minimum": 0},
                "configurations": {"type": "integer", "minimum": 1},
                "workingDirectory": {"type": "string"},
            },
        }

    def getOutDataSchema(self):
        return {
            "type": "object",
            "required": ["pass", "reports"],
            "properties": {
                "pass": {"type": "boolean"},
                "reports": {"type": "array", "items": self.getSchema("boundReport.json")},
            },
        }

    def run(self, inData):
        gates = inData.get("gates", UtilsVerify.GATES)
        listTask = []
        for gate in gates:
            subInData = {"gate": gate, "workingDirectory": str(self.getWorkingDirectory())}
            for key in ("seeds", "masterSeed", "configurations"):
                if inData.get(key) is not None:
                    subInData[key] = inData[key]
            task = VerifyBounds(inData=subInData, workingDirectorySuffix=gate)
            task.start()
            listTask.append((gate, task))
        listReport = []
        for gate, task in listTask:
            task.join()
            if task.isFailure():
                raise RuntimeError("Verification gate '{0}' failed to run".format(gate))
            listReport.append(task.outData)
        hasPassed = all(report["pass"] for report in listReport)
        for report in listReport:
            logger.info("%s: %s", report["description"], "PASS" if report["pass"] else "FAIL")
        return {"pass": hasPassed, "reports": listReport}
