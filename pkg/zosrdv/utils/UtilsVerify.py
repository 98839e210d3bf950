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

# Executable forms of the rendezvous guarantees: exhaustive offset oracles
# for the elementary pair bound and the ZOS MTTR bound, the seed-window
# distinctness check and the coprime cycle alignment check.

import math
import itertools
import dataclasses

import numpy

from zosrdv.utils import UtilsBounds
from zosrdv.utils import UtilsRandom
from zosrdv.utils import UtilsLogging
from zosrdv.utils import UtilsSchedule
from zosrdv.utils import UtilsElementary
from zosrdv.utils import UtilsSimulation
from zosrdv.utils.UtilsChannel import ChannelSet
from zosrdv.utils.UtilsSchedule import SeedSymbol

logger = UtilsLogging.getLogger()

MAX_EXHAUSTIVE_CHANNELS = 8
SAMPLED_PAIRS_PER_SEED = 8
MAX_REJECTIONS = 10000

GATES = ["elementary", "mttr", "sampled", "fullPeriod", "seedWindows", "crt"]
DEFAULT_SEEDS = {"elementary": 25}


@dataclasses.dataclass
class BoundReport:
    """
    pass <=> worstObservedTtr <= bound, no timeout and no violation of a
    sharper per-case bound (role-swapped elementary bound, same stay channel
    bound, round-aligned same stay bound).
    """

    description: str
    bound: int = 0
    worstObservedTtr: int = 0
    offsetsChecked: int = 0
    trials: int = 0
    timeouts: int = 0
    violations: int = 0
    witness: dict = None
    skipped: list = dataclasses.field(default_factory=list)

    @property
    def passed(self):
        return self.worstObservedTtr <= self.bound and self.timeouts == 0 and self.violations == 0

    def record(self, ttr, witness):
        """Keeps the worst case witness, a failing one wins over a passing one."""
        if self.witness is None or (ttr > self.worstObservedTtr and not self.witness.get("failure")):
            self.witness = witness
        self.worstObservedTtr = max(self.worstObservedTtr, ttr)

    def fail(self, witness, timeout=False):
        if timeout:
            self.timeouts += 1
        else:
            self.violations += 1
        if self.witness is None or not self.witness.get("failure"):
            self.witness = dict(witness, failure=True)
        logger.error("%s: bound violated, replay with %s", self.description, witness)

    def toDict(self):
        return {
            "description": self.description,
            "bound": self.bound,
            "worstObservedTtr": self.worstObservedTtr,
            "offsetsChecked": self.offsetsChecked,
            "trials": self.trials,
            "timeouts": self.timeouts,
            "violations": self.violations,
            "pass": self.passed,
            "witness": self.witness,
            "skipped": list(self.skipped),
        }

    def summary(self):
        text = "{0}: {1} (bound {2}, worst TTR {3}, {4} trials, {5} offsets".format(
            self.description,
            "PASS" if self.passed else "FAIL",
            self.bound,
            self.worstObservedTtr,
            self.trials,
            self.offsetsChecked,
        )
        if self.timeouts or self.violations:
            text += ", {0} timeouts, {1} violations".format(self.timeouts, self.violations)
        if self.skipped:
            text += ", {0} skipped".format(len(self.skipped))
        text += ")"
        if not self.passed and self.witness is not None:
            text += "\n    witness: {0}".format(self.witness)
        return text


def mergeReports(description, listReport):
    """Order-insensitive reduction of partial reports."""
    merged = BoundReport(description)
    for report in listReport:
        merged.bound = max(merged.bound, report.bound)
        merged.offsetsChecked += report.offsetsChecked
        merged.trials += report.trials
        merged.timeouts += report.timeouts
        merged.violations += report.violations
        merged.skipped += report.skipped
        if report.witness is not None and (
            merged.witness is None
            or (report.witness.get("failure") and not merged.witness.get("failure"))
            or (not merged.witness.get("failure") and report.worstObservedTtr > merged.worstObservedTtr)
        ):
            merged.witness = report.witness
        merged.worstObservedTtr = max(merged.worstObservedTtr, report.worstObservedTtr)
    # A part may pass against its own bound while exceeding a smaller one
    # of another part, the merged verdict follows the parts.
    if any(not report.passed for report in listReport) and merged.passed:
        merged.violations += 1
    return merged


def sampleIntersectingSets(numberOfChannels, m1, m2, rng):
    """Uniform m1- and m2-subsets of [1, M] conditioned on a common channel."""
    if m1 < 1 or m2 < 1 or m1 > numberOfChannels or m2 > numberOfChannels:
        raise RuntimeError(
            "Cannot draw sets of sizes {0}, {1} from M={2}".format(m1, m2, numberOfChannels)
        )
    channels = list(range(1, numberOfChannels + 1))
    for _ in range(MAX_REJECTIONS):
        channels1 = rng.permutation(channels)[0:m1]
        channels2 = rng.permutation(channels)[0:m2]
        if set(channels1) & set(channels2):
            return (
                ChannelSet.fromChannels(numberOfChannels, channels1),
                ChannelSet.fromChannels(numberOfChannels, channels2),
            )
    raise RuntimeError("Could not draw intersecting sets of sizes {0}, {1}".format(m1, m2))


def intersectingSetPairs(numberOfChannels, m1, m2):
    """All ordered pairs (C1, C2) with |C1| = m1, |C2| = m2 and C1, C2 intersecting."""
    channels = range(1, numberOfChannels + 1)
    for channels1 in itertools.combinations(channels, m1):
        for channels2 in itertools.combinations(channels, m2):
            if set(channels1) & set(channels2):
                yield (
                    ChannelSet(numberOfChannels, channels1),
                    ChannelSet(numberOfChannels, channels2),
                )


def stayOverrides(set1, set2, regime, rng):
    """
    Stay channels (s1, s2) for the 'distinct' or 'equal' regime, or None when
    the regime is infeasible (distinct with C1 = C2 = {c}).
    """
    if regime == "equal":
        return (rng.choice(set1.intersection(set2)),) * 2
    elif regime == "distinct":
        candidates = [(s1, s2) for s1 in set1 for s2 in set2 if s1 != s2]
        if len(candidates) == 0:
            return None
        return candidates[int(rng.integers(0, len(candidates)))]
    raise RuntimeError("Unknown stay channel regime: {0}".format(regime))


def elementaryDirection(report, set1, set2, seed, rng, kind1, recordWorst=True):
    """
    One direction of the elementary oracle: sequence kind1 over C1, the other
    kind over C2, checked against the bound of that direction. Only the
    direction matching report.bound feeds worstObservedTtr.
    """
    bit1 = 1 if kind1 == "ONE_TYPE" else 0
    sequence1 = UtilsElementary.zeroOneES(set1, bit1, rng.derive("user", 1))
    sequence2 = UtilsElementary.zeroOneES(set2, 1 - bit1, rng.derive("user", 2))
    if bit1 == 1:
        bound = UtilsBounds.elementaryBound(len(set1), len(set2))
    else:
        bound = UtilsBounds.elementaryBound(len(set2), len(set1))
    offsets = numpy.arange(math.lcm(len(sequence1), len(sequence2)))
    ttrs, channels = UtilsSimulation.firstMeetings(
        UtilsSimulation.CyclicSequence(sequence1),
        UtilsSimulation.CyclicSequence(sequence2),
        offsets,
        bound,
    )
    report.offsetsChecked += offsets.size
    report.trials += 1
    witness = {
        "seed": seed,
        "sets": [list(set1), list(set2)],
        "kinds": [sequence1.kind.name, sequence2.kind.name],
    }
    for index in numpy.flatnonzero(ttrs == 0):
        report.fail(dict(witness, offset=int(offsets[index])), timeout=True)
    worstIndex = int(ttrs.argmax())
    if recordWorst:
        report.record(int(ttrs[worstIndex]), dict(witness, offset=int(offsets[worstIndex])))
    if ttrs.max() > bound:
        report.fail(dict(witness, offset=int(offsets[worstIndex]), ttr=int(ttrs.max()), bound=bound))


def verifyElementaryBound(m1, m2, rngSeeds, numberOfChannels, setPairs=None):
    """
    1-type over C1 against 0-type over C2 for every offset of the joint cycle,
    checked against 2(P1+1)P2, plus the role-swapped direction checked against
    2(P2+1)P1. Sets are sampled per seed unless setPairs is given.
    """
    report = BoundReport(
        "elementary m1={0} m2={1} M={2}".format(m1, m2, numberOfChannels),
        bound=UtilsBounds.elementaryBound(m1, m2),
    )
    for seed in rngSeeds:
        rng = UtilsRandom.RngStream(seed, ("elementary", m1, m2))
        if setPairs is None:
            listSetPair = [sampleIntersectingSets(numberOfChannels, m1, m2, rng.derive("sets"))]
        else:
            listSetPair = setPairs
        for pairIndex, (set1, set2) in enumerate(listSetPair):
            pairRng = rng.derive("pair", pairIndex)
            elementaryDirection(report, set1, set2, seed, pairRng.derive("direct"), "ONE_TYPE")
            elementaryDirection(report, set1, set2, seed, pairRng.derive("swapped"), "ZERO_TYPE",
                                recordWorst=False)
    logger.debug(report.summary())
    return report


def zosPairRun(report, numberOfChannels, set1, set2, seed, rng, regime, offsets, horizon):
    overrides = stayOverrides(set1, set2, regime, rng.derive("regime", regime))
    witness = {"seed": seed, "sets": [list(set1), list(set2)], "regime": regime}
    if overrides is None:
        report.skipped.append(witness)
        return
    schedule1 = UtilsSchedule.generateSchedule(
        numberOfChannels, set1, rng.derive("user", 1), stayOverride=overrides[0]
    )
    schedule2 = UtilsSchedule.generateSchedule(
        numberOfChannels, set2, rng.derive("user", 2), stayOverride=overrides[1]
    )
    witness["stay"] = list(overrides)
    offsets = numpy.asarray(offsets, dtype=numpy.int64)
    ttrs, channels = UtilsSimulation.firstMeetings(schedule1, schedule2, offsets, horizon)
    report.offsetsChecked += offsets.size
    report.trials += 1
    for index in numpy.flatnonzero(ttrs == 0):
        report.fail(dict(witness, offset=int(offsets[index])), timeout=True)
    worstIndex = int(ttrs.argmax())
    report.record(int(ttrs[worstIndex]), dict(witness, offset=int(offsets[worstIndex])))
    if ttrs.max() > report.bound:
        report.fail(dict(witness, offset=int(offsets[worstIndex]), ttr=int(ttrs.max())))
    met = ttrs > 0
    common = set(set1.intersection(set2))
    if not all(int(channel) in common for channel in channels[met]):
        report.fail(dict(witness, reason="meeting channel outside C1 & C2"))
    if regime == "equal":
        sameStayBound = UtilsBounds.sameStayBound(numberOfChannels, len(set1))
        for index in numpy.flatnonzero(ttrs > sameStayBound):
            report.fail(dict(witness, offset=int(offsets[index]), ttr=int(ttrs[index]),
                             bound=sameStayBound))
        roundLength = schedule1.roundLength
        aligned = (offsets % roundLength == 0) & (ttrs > roundLength)
        for index in numpy.flatnonzero(aligned):
            report.fail(dict(witness, offset=int(offsets[index]), ttr=int(ttrs[index]),
                             bound=roundLength))


def verifyMttrBound(numberOfChannels, m1, m2, rngSeeds, exhaustiveSets=False,
                    sampledPairs=SAMPLED_PAIRS_PER_SEED, offsets=None):
    """
    ZOS against ZOS for every offset in [0, bound] with horizon = bound, in
    both stay channel regimes. All set pairs when exhaustiveSets and M <= 8.
    """
    bound = UtilsBounds.mttrBound(numberOfChannels, m1, m2)
    report = BoundReport(
        "mttr M={0} m1={1} m2={2}".format(numberOfChannels, m1, m2), bound=bound
    )
    if offsets is None:
        offsets = numpy.arange(bound + 1)
    if exhaustiveSets and numberOfChannels <= MAX_EXHAUSTIVE_CHANNELS:
        listSetPair = list(intersectingSetPairs(numberOfChannels, m1, m2))
    else:
        listSetPair = None
    for seed in rngSeeds:
        rng = UtilsRandom.RngStream(seed, ("mttr", numberOfChannels, m1, m2))
        if listSetPair is None:
            seedSetPairs = [
                sampleIntersectingSets(numberOfChannels, m1, m2, rng.derive("sets", index))
                for index in range(sampledPairs)
            ]
        else:
            seedSetPairs = listSetPair
        for pairIndex, (set1, set2) in enumerate(seedSetPairs):
            pairRng = rng.derive("pair", pairIndex)
            for regime in ("distinct", "equal"):
                zosPairRun(report, numberOfChannels, set1, set2, seed,
                           pairRng.derive(regime), regime, offsets, bound)
    logger.debug(report.summary())
    return report


def verifyMttrBoundAllSizes(numberOfChannels, rngSeeds, maxSetSize=None):
    """Exhaustive ZOS gate: every set size pair, every intersecting set pair."""
    if maxSetSize is None:
        maxSetSize = numberOfChannels
    listReport = []
    for m1 in range(1, maxSetSize + 1):
        for m2 in range(1, maxSetSize + 1):
            listReport.append(
                verifyMttrBound(numberOfChannels, m1, m2, rngSeeds, exhaustiveSets=True)
            )
    return mergeReports(
        "mttr exhaustive M={0} |Ci|<={1}".format(numberOfChannels, maxSetSize), listReport
    )


def verifySampledMttr(numberOfChannels, numberOfConfigurations, masterSeed, offsetsPerConfiguration=16):
    """Random sizes, sets, stay regime and offsets, one pair of schedules per configuration."""
    listReport = []
    rng = UtilsRandom.RngStream(masterSeed, ("sampled", numberOfChannels))
    for index in range(numberOfConfigurations):
        configurationRng = rng.derive("configuration", index)
        m1 = int(configurationRng.integers(1, numberOfChannels + 1))
        m2 = int(configurationRng.integers(1, numberOfChannels + 1))
        set1, set2 = sampleIntersectingSets(numberOfChannels, m1, m2, configurationRng.derive("sets"))
        regime = configurationRng.choice(["distinct", "equal"])
        bound = UtilsBounds.mttrBound(numberOfChannels, m1, m2)
        offsets = configurationRng.integers(0, bound + 1, size=offsetsPerConfiguration)
        report = BoundReport("sampled", bound=bound)
        zosPairRun(report, numberOfChannels, set1, set2, masterSeed,
                   configurationRng.derive("schedules"), regime, offsets, bound)
        if report.witness is not None:
            report.witness["configuration"] = index
        listReport.append(report)
    return mergeReports(
        "mttr sampled M={0} configurations={1}".format(numberOfChannels, numberOfConfigurations),
        listReport,
    )


def verifyFullPeriod(numberOfChannels, rngSeeds):
    """
    Every offset of the joint schedule period for every intersecting set
    pair: offsets beyond the bound are then covered, not assumed.
    """
    listReport = []
    sizes = range(1, numberOfChannels + 1)
    for m1, m2 in itertools.product(sizes, sizes):
        bound = UtilsBounds.mttrBound(numberOfChannels, m1, m2)
        report = BoundReport("full period", bound=bound)
        for seed in rngSeeds:
            rng = UtilsRandom.RngStream(seed, ("period", numberOfChannels, m1, m2))
            for pairIndex, (set1, set2) in enumerate(intersectingSetPairs(numberOfChannels, m1, m2)):
                for regime in ("distinct", "equal"):
                    pairRng = rng.derive("pair", pairIndex, regime)
                    period = jointPeriod(numberOfChannels, set1, set2, pairRng, regime)
                    if period is None:
                        report.skipped.append({"seed": seed, "sets": [list(set1), list(set2)],
                                               "regime": regime})
                        continue
                    zosPairRun(report, numberOfChannels, set1, set2, seed, pairRng, regime,
                               numpy.arange(period), bound)
        listReport.append(report)
    return mergeReports("mttr full period M={0}".format(numberOfChannels), listReport)


def jointPeriod(numberOfChannels, set1, set2, rng, regime):
    """lcm of both schedule periods, as generated by zosPairRun for the same stream."""
    overrides = stayOverrides(set1, set2, regime, rng.derive("regime", regime))
    if overrides is None:
        return None
    schedule1 = UtilsSchedule.generateSchedule(
        numberOfChannels, set1, rng.derive("user", 1), stayOverride=overrides[0]
    )
    schedule2 = UtilsSchedule.generateSchedule(
        numberOfChannels, set2, rng.derive("user", 2), stayOverride=overrides[1]
    )
    return math.lcm(schedule1.period(), schedule2.period())


def seedWindowViolations(numberOfChannels):
    """
    For s1 != s2, every 3L-window of one seed starting in [1, 3L] must differ
    from every such window of the other seed (binary symbols only).
    Returns the violating (s1, s2, i, j) tuples.
    """
    L = UtilsSchedule.bitLength(numberOfChannels)
    binarySeeds = {}
    for stayChannel in range(1, numberOfChannels + 1):
        symbols = UtilsSchedule.buildSeed(numberOfChannels, stayChannel).symbols
        assert SeedSymbol.STAY not in symbols[0:6 * L]
        binarySeeds[stayChannel] = tuple(symbol.value for symbol in symbols[0:6 * L])
    violations = []
    for s1, s2 in itertools.permutations(binarySeeds, 2):
        windows2 = {}
        for j in range(1, 3 * L + 1):
            windows2.setdefault(binarySeeds[s2][j - 1:j - 1 + 3 * L], j)
        for i in range(1, 3 * L + 1):
            window1 = binarySeeds[s1][i - 1:i - 1 + 3 * L]
            if window1 in windows2:
                violations.append((s1, s2, i, windows2[window1]))
    return violations


def checkSeedWindows(numberOfChannels):
    return len(seedWindowViolations(numberOfChannels)) == 0


def verifySeedWindows(listNumberOfChannels):
    report = BoundReport("seed windows M={0}..{1}".format(min(listNumberOfChannels),
                                                          max(listNumberOfChannels)))
    for numberOfChannels in listNumberOfChannels:
        report.trials += 1
        for s1, s2, i, j in seedWindowViolations(numberOfChannels):
            report.fail({"M": numberOfChannels, "stay": [s1, s2], "windows": [i, j]})
    logger.debug(report.summary())
    return report


def verifyCrtAlignment(maxCycleLength):
    report = BoundReport("coprime alignment p,q<={0}".format(maxCycleLength))
    for p in range(1, maxCycleLength + 1):
        for q in range(1, maxCycleLength + 1):
            if math.gcd(p, q) != 1:
                continue
            report.trials += 1
            if not UtilsBounds.checkCrtAlignment(p, q):
                report.fail({"p": p, "q": q})
    logger.debug(report.summary())
    return report


def verifyElementaryGate(maxSetSize, rngSeeds, numberOfChannels):
    listReport = []
    for m1 in range(1, maxSetSize + 1):
        for m2 in range(1, maxSetSize + 1):
            listReport.append(verifyElementaryBound(m1, m2, rngSeeds, numberOfChannels))
    return mergeReports(
        "elementary m1,m2<={0} M={1}".format(maxSetSize, numberOfChannels), listReport
    )


def runGate(gate, numberOfSeeds=None, masterSeed=0, numberOfConfigurations=1000):
    """
    Named verification gates, as run by the verify command:
    elementary, mttr, sampled, fullPeriod, seedWindows, crt.
    """
    if numberOfSeeds is None:
        numberOfSeeds = DEFAULT_SEEDS.get(gate, 10)
    rngSeeds = [masterSeed + index for index in range(numberOfSeeds)]
    if gate == "elementary":
        report = verifyElementaryGate(6, rngSeeds, 8)
    elif gate == "mttr":
        report = mergeReports(
            "mttr exhaustive M=2,3,4",
            [verifyMttrBoundAllSizes(numberOfChannels, rngSeeds) for numberOfChannels in (2, 3, 4)],
        )
    elif gate == "sampled":
        report = verifySampledMttr(16, numberOfConfigurations, masterSeed)
    elif gate == "fullPeriod":
        report = verifyFullPeriod(2, rngSeeds)
    elif gate == "seedWindows":
        report = verifySeedWindows(range(2, 17))
    elif gate == "crt":
        report = verifyCrtAlignment(30)
    else:
        raise RuntimeError("Unknown verification gate: {0}".format(gate))
    logger.info(report.summary())
    return report
