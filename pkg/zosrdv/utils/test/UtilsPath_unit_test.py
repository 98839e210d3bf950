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

import os
import unittest

from zosrdv.utils import UtilsTest
from zosrdv.utils import UtilsPath


class NamedTask:
    pass


class UtilsPathUnitTest(unittest.TestCase):

    def setUp(self):
        self.dataPath = UtilsTest.prepareTestDataPath(__file__)

    def test_getWorkingDirectory(self):
        tmpDir = UtilsTest.createTestTmpDirectory("getWorkingDirectory")
        inData = {"workingDirectory": tmpDir}
        workingDirectory1 = UtilsPath.getWorkingDirectory(NamedTask(), inData)
        workingDirectory2 = UtilsPath.getWorkingDirectory(NamedTask(), inData)
        self.assertNotEqual(workingDirectory1, workingDirectory2)
        self.assertTrue(workingDirectory1.name.startswith("NamedTask_"))
        withSuffix1 = UtilsPath.getWorkingDirectory(NamedTask(), inData, workingDirectorySuffix="theta0")
        withSuffix2 = UtilsPath.getWorkingDirectory(NamedTask(), inData, workingDirectorySuffix="theta0")
        self.assertEqual(withSuffix1.name, "NamedTask_theta0")
        self.assertEqual(withSuffix2.name, "NamedTask_theta0_01")

    def test_writeText(self):
        tmpDir = UtilsTest.createTestTmpDirectory("writeText")
        filePath = UtilsPath.writeText(os.path.join(tmpDir, "sub", "ttr.csv"), "a,b\n")
        with open(str(filePath)) as f:
            self.assertEqual(f.read(), "a,b\n")

    def test_loadTestData(self):
        inData = UtilsTest.loadTestData(self.dataPath / "workedExample.json")
        self.assertEqual(inData["mttrBound"], 156)
        inData = UtilsTest.substituteTestData({"file": "$ZOSRDV_TASK_DATA/x.txt"}, taskDataPath="/data")
        self.assertEqual(inData["file"], "/data/x.txt")
