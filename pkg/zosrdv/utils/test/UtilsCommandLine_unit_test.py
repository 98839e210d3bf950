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
import os
import json
import unittest

from zosrdv.utils import UtilsTest
from zosrdv.utils import UtilsExperiment
from zosrdv.utils import UtilsCommandLine


def runMain(argv):
    stdout = io.StringIO()
    exitCode = UtilsCommandLine.main(argv, stdout=stdout)
    return exitCode, stdout.getvalue()


class UtilsCommandLineUnitTest(unittest.TestCase):

    def setUp(self):
        self.dataPath = UtilsTest.prepareTestDataPath(__file__)
        os.environ["ZOSRDV_TEST_SEED"] = "4242"

    def tearDown(self):
        os.environ.pop("ZOSRDV_TEST_SEED", None)

    def test_generate(self):
        exitCode, output = runMain(["generate", "--channels", "3", "--available", "1,2", "--stay", "2"])
        self.assertEqual(exitCode, 0)
        lines = output.splitlines()
        self.assertEqual(lines[0:5], ["M 3", "L 2", "stay 2", "available 1 2", "seed 0 1 0 0 1 1 0 1 0 0 1 1 s"])
        self.assertEqual(len(lines), 18)

    def test_simulate(self):
        exitCode, output = runMain([
            "simulate", "--channels", "3", "--available1", "1,2", "--available2", "2,3",
            "--offset", "5", "--seed", "1",
        ])
        self.assertEqual(exitCode, 0)
        result = json.loads(output)
        self.assertEqual(result["outcome"], "met")
        self.assertEqual(result["channel"], 2)
        self.assertLessEqual(result["ttr"], 156)

    def test_simulate_scheduleFiles(self):
        scheduleFile = str(self.dataPath / "schedule_M3_c1c2.txt")
        exitCode, output = runMain([
            "simulate", "--schedule1", scheduleFile, "--schedule2", scheduleFile, "--offset", "0",
        ])
        self.assertEqual(exitCode, 0)
        self.assertEqual(json.loads(output)["ttr"], 1)

    def test_verify(self):
        exitCode, output = runMain(["verify", "--gate", "crt,seedWindows"])
        self.assertEqual(exitCode, 0)
        self.assertEqual(output.count("PASS"), 2)

    def test_experiment(self):
        tmpDir = UtilsTest.createTestTmpDirectory("experiment")
        outPath = os.path.join(tmpDir, "ttr.csv")
        argv = [
            "experiment", "--channels", "12", "--theta", "0.25,0.5", "--common", "1",
            "--trials", "5", "--seed", "3", "--out", outPath,
        ]
        exitCode, output = runMain(argv)
        self.assertEqual(exitCode, 0)
        self.assertEqual(output, "")
        with open(outPath) as f:
            csvText = f.read()
        listRow = UtilsExperiment.readCsv(io.StringIO(csvText))
        self.assertEqual([(row["algorithm"], row["theta"]) for row in listRow],
                         [("zos", 0.25), ("random", 0.25), ("zos", 0.5), ("random", 0.5)])
        # same master seed, byte-identical table
        exitCode, output = runMain(argv[:-2])
        self.assertEqual(exitCode, 0)
        self.assertEqual(output, csvText)

    def test_experiment_relativeOut(self):
        tmpDir = UtilsTest.createTestTmpDirectory("relativeOut")
        currentDir = os.getcwd()
        os.chdir(tmpDir)
        try:
            exitCode, output = runMain([
                "experiment", "--channels", "10", "--theta", "0.3", "--common", "1",
                "--trials", "3", "--seed", "1", "--out", "ttr.csv",
            ])
        finally:
            os.chdir(currentDir)
        self.assertEqual(exitCode, 0)
        self.assertEqual(output, "")
        outPath = os.path.join(tmpDir, "ttr.csv")
        self.assertTrue(os.path.exists(outPath))
        with open(outPath) as f:
            self.assertEqual(len(UtilsExperiment.readCsv(f)), 2)

    def test_simulate_relativeScheduleFiles(self):
        currentDir = os.getcwd()
        os.chdir(str(self.dataPath))
        try:
            exitCode, output = runMain([
                "simulate", "--schedule1", "schedule_M3_c1c2.txt",
                "--schedule2", "schedule_M3_c1c2.txt", "--offset", "13",
            ])
        finally:
            os.chdir(currentDir)
        self.assertEqual(exitCode, 0)
        self.assertEqual(json.loads(output)["ttr"], 13)

    def test_experiment_configFile(self):
        exitCode, output = runMain([
            "--config", str(self.dataPath / "experiment.cfg"), "experiment",
            "--theta", "0.2", "--algo", "zos",
        ])
        self.assertEqual(exitCode, 0)
        listRow = UtilsExperiment.readCsv(io.StringIO(output))
        self.assertEqual(len(listRow), 1)
        self.assertEqual(listRow[0]["trials"], 10)
        self.assertEqual(listRow[0]["timeouts"], 0)

    def test_invalidConfiguration(self):
        listArgv = [
            ["experiment", "--channels", "10", "--theta", "0.1", "--common", "6", "--trials", "5", "--seed", "1"],
            ["experiment", "--channels", "ten", "--common", "1", "--trials", "5", "--seed", "1"],
            ["experiment", "--channels", "10", "--theta", "0.5", "--common", "1", "--trials", "5",
             "--seed", "1", "--algo", "ejs"],
            ["generate", "--channels", "3", "--available", "1,4"],
            ["generate", "--channels", "3", "--available", "1,2", "--stay", "3"],
            ["simulate", "--channels", "4", "--available1", "1,2", "--available2", "3,4", "--offset", "0"],
            ["verify", "--gate", "noSuchGate"],
            ["--config", str(self.dataPath / "malformed.cfg"), "verify"],
            ["frobnicate"],
        ]
        for argv in listArgv:
            exitCode, _ = runMain(argv)
            self.assertEqual(exitCode, 2, argv)
