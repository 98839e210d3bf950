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
import unittest

from zosrdv.utils import UtilsTest
from zosrdv.utils import UtilsBounds
from zosrdv.utils import UtilsLogging
from zosrdv.utils import UtilsExperiment

from zosrdv.tasks.RendezvousExperiment import ControlRendezvousExperiment

logger = UtilsLogging.getLogger()


class RendezvousExperimentExecTest(unittest.TestCase):

    def setUp(self):
        self.dataPath = UtilsTest.prepareTestDataPath(__file__)

    def test_benchmarkProtocol(self):
        inData = {
            "numberOfChannels": 100,
            "theta": list(UtilsExperiment.DEFAULT_THETAS),
            "common": 6,
            "trials": 5000,
            "masterSeed": 2026,
            "algorithms": ["zos", "random"],
        }
        control1 = ControlRendezvousExperiment(inData=inData)
        control1.execute()
        self.assertTrue(control1.isSuccess())
        listStats = control1.outData["ttrStats"]
        for stats in listStats:
            logger.info("%s theta=%.1f: average %.1f, max %d",
                        stats["algorithm"], stats["theta"], stats["averageTtr"], stats["maxTtr"])
            self.assertLessEqual(stats["averageTtr"], stats["maxTtr"])
            if stats["algorithm"] == "zos":
                setSize = UtilsExperiment.numberOfAvailableChannels(stats["theta"], 100)
                self.assertEqual(stats["timeoutCount"], 0)
                self.assertLessEqual(stats["maxTtr"], UtilsBounds.mttrBound(100, setSize, setSize))
        byTheta = {(stats["algorithm"], stats["theta"]): stats for stats in listStats}
        # memoryless hopping: mean TTR m1 m2 / G = 100 / 6 at theta = 0.1
        self.assertAlmostEqual(byTheta[("random", 0.1)]["averageTtr"], 100 / 6, delta=0.1 * 100 / 6)
        logger.info("theta=0.1 average TTR: zos %.1f, random %.1f",
                    byTheta[("zos", 0.1)]["averageTtr"], byTheta[("random", 0.1)]["averageTtr"])
        self.assertEqual(len(UtilsExperiment.readCsv(io.StringIO(control1.outData["csv"]))), 10)
        control2 = ControlRendezvousExperiment(inData=inData)
        control2.execute()
        self.assertEqual(control2.outData["csv"], control1.outData["csv"])
