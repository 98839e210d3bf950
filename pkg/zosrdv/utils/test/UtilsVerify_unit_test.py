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

import unittest

from zosrdv.utils import UtilsTest
from zosrdv.utils import UtilsRandom
from zosrdv.utils import UtilsVerify
from zosrdv.utils.UtilsChannel import ChannelSet
from zosrdv.utils.UtilsVerify import BoundReport


class UtilsVerifyUnitTest(unittest.TestCase):

    def setUp(self):
        self.dataPath = UtilsTest.prepareTestDataPath(__file__)

    def test_boundReport(self):
        report = BoundReport("test", bound=10)
        report.record(4, {"offset": 1})
        report.record(7, {"offset": 2})
        report.record(5, {"offset": 3})
        self.assertTrue(report.passed)
        self.assertEqual(report.worstObservedTtr, 7)
        self.assertEqual(report.witness, {"offset": 2})
        report.fail({"offset": 9}, timeout=True)
        self.assertFalse(report.passed)
        self.assertEqual(report.toDict()["timeouts"], 1)
        self.assertTrue(report.witness["failure"])
        self.assertIn("FAIL", report.summary())

    def test_mergeReports(self):
        report1 = BoundReport("a", bound=12, worstObservedTtr=9, trials=2)
        report2 = BoundReport("b", bound=20, worstObservedTtr=15, trials=3)
        merged = UtilsVerify.mergeReports("ab", [report1, report2])
        self.assertEqual(merged.trials, 5)
        self.assertEqual(merged.worstObservedTtr, 15)
        self.assertTrue(merged.passed)
        swapped = UtilsVerify.mergeReports("ba", [report2, report1])
        self.assertEqual(swapped.toDict()["pass"], merged.toDict()["pass"])
        report3 = BoundReport("c", bound=10, worstObservedTtr=11)
        merged = UtilsVerify.mergeReports("abc", [report1, report2, report3])
        self.assertFalse(merged.passed)

    def test_elementaryBound(self):
        report = UtilsVerify.verifyElementaryBound(2, 2, range(50), 4)
        self.assertTrue(report.passed, report.summary())
        self.assertLessEqual(report.worstObservedTtr, 12)
        self.assertEqual(report.trials, 100)

    def test_elementaryBound_singleton(self):
        singleton = ChannelSet.fromChannels(4, [3])
        report = UtilsVerify.verifyElementaryBound(1, 1, [0, 1], 4, setPairs=[(singleton, singleton)])
        self.assertTrue(report.passed)
        self.assertEqual(report.worstObservedTtr, 1)

    def test_mttrBound_workedExample(self):
        report = UtilsVerify.verifyMttrBound(3, 2, 2, range(3), exhaustiveSets=True)
        self.assertTrue(report.passed, report.summary())
        self.assertEqual(report.bound, 156)
        self.assertEqual(report.timeouts, 0)

    def test_mttrBound_smallSizes(self):
        report = UtilsVerify.verifyMttrBoundAllSizes(4, [0, 1], maxSetSize=2)
        self.assertTrue(report.passed, report.summary())

    def test_sampleIntersectingSets(self):
        rng = UtilsRandom.RngStream(3)
        for index in range(200):
            set1, set2 = UtilsVerify.sampleIntersectingSets(10, 3, 4, rng.derive(index))
            self.assertEqual((len(set1), len(set2)), (3, 4))
            self.assertTrue(set1.intersects(set2))
        with self.assertRaises(RuntimeError):
            UtilsVerify.sampleIntersectingSets(3, 4, 1, rng)

    def test_intersectingSetPairs(self):
        listPair = list(UtilsVerify.intersectingSetPairs(3, 2, 2))
        # every pair of 2-subsets of 3 channels intersects
        self.assertEqual(len(listPair), 9)
        listPair = list(UtilsVerify.intersectingSetPairs(3, 1, 1))
        self.assertEqual(len(listPair), 3)

    def test_stayOverrides(self):
        rng = UtilsRandom.RngStream(5)
        singleton = ChannelSet.fromChannels(3, [2])
        self.assertIsNone(UtilsVerify.stayOverrides(singleton, singleton, "distinct", rng))
        self.assertEqual(UtilsVerify.stayOverrides(singleton, singleton, "equal", rng), (2, 2))
        set1 = ChannelSet.fromChannels(3, [1, 2])
        s1, s2 = UtilsVerify.stayOverrides(set1, singleton, "distinct", rng)
        self.assertEqual((s1, s2), (1, 2))
        with self.assertRaises(RuntimeError):
            UtilsVerify.stayOverrides(set1, singleton, "other", rng)

    def test_seedWindows(self):
        for numberOfChannels in range(2, 17):
            self.assertTrue(UtilsVerify.checkSeedWindows(numberOfChannels))
        self.assertTrue(UtilsVerify.verifySeedWindows(range(2, 17)).passed)

    def test_crtGate(self):
        report = UtilsVerify.runGate("crt")
        self.assertTrue(report.passed)
        self.assertGreater(report.trials, 0)

    def test_fullPeriod(self):
        report = UtilsVerify.verifyFullPeriod(2, [0])
        self.assertTrue(report.passed, report.summary())
        # C1 = C2 = {c} has no distinct stay channels
        self.assertEqual(len(report.skipped), 2)

    def test_unknownGate(self):
        with self.assertRaises(RuntimeError):
            UtilsVerify.runGate("noSuchGate")
