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

# Monte-Carlo TTR experiment: per trial, two available sets of
# round(theta * M) channels sharing exactly G channels, a uniform offset in
# [0, MTTR bound) and one schedule per user and algorithm.

import csv
import math
import dataclasses

import numpy

from zosrdv.utils import UtilsBounds
from zosrdv.utils import UtilsRandom
from zosrdv.utils import UtilsLogging
from zosrdv.utils import UtilsSchedule
from zosrdv.utils import UtilsSimulation
from zosrdv.utils.UtilsChannel import ChannelSet

logger = UtilsLogging.getLogger()

ALGORITHMS = ("zos", "random")
MODELS = ("asymmetric", "symmetric")
DEFAULT_THETAS = (0.1, 0.2, 0.3, 0.4, 0.5)
CSV_HEADER = ["algorithm", "theta", "trials", "avg_ttr", "max_ttr", "timeouts"]
PROGRESS_INTERVAL = 500


def numberOfAvailableChannels(theta, numberOfChannels):
    """round(theta * M) with halves rounded up."""
    return int(math.floor(theta * numberOfChannels + 0.5))


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    numberOfChannels: int
    theta: float
    common: int
    trials: int
    masterSeed: int
    algorithms: tuple = ALGORITHMS
    horizon: int = None
    model: str = "asymmetric"

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        if self.numberOfChannels < 2:
            raise RuntimeError("Need at least 2 channels, got M={0}".format(self.numberOfChannels))
        if not 0 < self.theta <= 1:
            raise RuntimeError("theta must be in (0, 1], got {0}".format(self.theta))
        if self.trials < 1:
            raise RuntimeError("Need at least one trial, got {0}".format(self.trials))
        if self.masterSeed < 0:
            raise RuntimeError("Master seed must be non-negative, got {0}".format(self.masterSeed))
        if len(self.algorithms) == 0:
            raise RuntimeError("No algorithm selected")
        for algorithm in self.algorithms:
            if algorithm not in ALGORITHMS:
                raise RuntimeError("Unknown algorithm '{0}', use one of {1}".format(algorithm, ALGORITHMS))
        if self.model not in MODELS:
            raise RuntimeError("Unknown model '{0}', use one of {1}".format(self.model, MODELS))
        if self.horizon is not None and self.horizon < 1:
            raise RuntimeError("Horizon must be positive, got {0}".format(self.horizon))
        setSize = self.setSize
        if setSize < 1:
            raise RuntimeError(
                "theta={0} gives no available channel for M={1}".format(self.theta, self.numberOfChannels)
            )
        if self.model == "asymmetric":
            checkGeometry(self.numberOfChannels, setSize, setSize, self.common)

    @property
    def setSize(self):
        return numberOfAvailableChannels(self.theta, self.numberOfChannels)

    def toDict(self):
        return {
            "numberOfChannels": self.numberOfChannels,
            "theta": self.theta,
            "common": self.common,
            "trials": self.trials,
            "masterSeed": self.masterSeed,
            "algorithms": list(self.algorithms),
            "horizon": self.horizon,
            "model": self.model,
        }


@dataclasses.dataclass(frozen=True)
class TtrStats:
    algorithm: str
    theta: float
    averageTtr: float
    maxTtr: int
    timeoutCount: int
    trials: int
    stdTtr: float = 0.0
    sameStayCount: int = None
    averageTtrSameStay: float = None
    averageTtrDistinctStay: float = None

    def toDict(self):
        return dataclasses.asdict(self)

    @classmethod
    def fromDict(cls, dictStats):
        return cls(**dictStats)


def checkGeometry(numberOfChannels, m1, m2, common):
    if common < 1:
        raise RuntimeError("At least one common channel needed, got G={0}".format(common))
    if common > min(m1, m2):
        raise RuntimeError(
            "G={0} common channels exceed set sizes {1}, {2}".format(common, m1, m2)
        )
    if m1 + m2 - common > numberOfChannels:
        raise RuntimeError(
            "Sets of sizes {0}, {1} sharing {2} channels do not fit in M={3}".format(
                m1, m2, common, numberOfChannels
            )
        )


def sampleChannelSets(numberOfChannels, m1, m2, common, rng):
    """
    (C1, C2) with |C1| = m1, |C2| = m2 and exactly `common` shared channels,
    drawn uniformly without replacement from the whole set.
    """
    checkGeometry(numberOfChannels, m1, m2, common)
    channels = rng.permutation(range(1, numberOfChannels + 1))
    commonChannels = channels[0:common]
    private1 = channels[common:m1]
    private2 = channels[m1:m1 + m2 - common]
    return (
        ChannelSet.fromChannels(numberOfChannels, commonChannels + private1),
        ChannelSet.fromChannels(numberOfChannels, commonChannels + private2),
    )


def buildSchedule(algorithm, numberOfChannels, available, rng):
    if algorithm == "zos":
        return UtilsSchedule.generateSchedule(numberOfChannels, available, rng)
    elif algorithm == "random":
        return UtilsSimulation.randomBaselineSchedule(numberOfChannels, available, rng)
    raise RuntimeError("Unknown algorithm '{0}'".format(algorithm))


def runTrial(config, trialIndex):
    """One independent trial keyed by (master seed, set size, trial index)."""
    rng = UtilsRandom.RngStream(config.masterSeed, ("trial", config.setSize, trialIndex))
    if config.model == "symmetric":
        set1 = ChannelSet.fromChannels(
            config.numberOfChannels,
            rng.derive("sets").permutation(range(1, config.numberOfChannels + 1))[0:config.setSize],
        )
        set2 = set1
    else:
        set1, set2 = sampleChannelSets(
            config.numberOfChannels, config.setSize, config.setSize, config.common, rng.derive("sets")
        )
    bound = UtilsBounds.mttrBound(config.numberOfChannels, len(set1), len(set2))
    offset = int(rng.derive("offset").integers(0, bound))
    horizon = config.horizon if config.horizon is not None else bound + 1
    trialResult = {}
    for algorithm in config.algorithms:
        algorithmRng = rng.derive(algorithm)
        schedule1 = buildSchedule(algorithm, config.numberOfChannels, set1, algorithmRng.derive("user", 1))
        schedule2 = buildSchedule(algorithm, config.numberOfChannels, set2, algorithmRng.derive("user", 2))
        result = UtilsSimulation.simulatePair(
            UtilsSimulation.PairConfig(schedule1, schedule2, offset, horizon)
        )
        sameStay = None
        if algorithm == "zos":
            sameStay = schedule1.stayChannel == schedule2.stayChannel
            if not result.met:
                logger.error(
                    "ZOS timeout: seed=%d trial=%d sets=%s,%s offset=%d horizon=%d",
                    config.masterSeed, trialIndex, set1, set2, offset, horizon
                )
        trialResult[algorithm] = (result, sameStay)
    return trialResult


def aggregate(algorithm, theta, listResult):
    """Order-insensitive reduction of (RendezvousResult, sameStay) pairs."""
    ttrs = numpy.array([result.ttr for result, _ in listResult if result.met], dtype=numpy.float64)
    timeoutCount = sum(1 for result, _ in listResult if not result.met)
    averageTtr = float(ttrs.mean()) if ttrs.size > 0 else 0.0
    maxTtr = int(ttrs.max()) if ttrs.size > 0 else 0
    stdTtr = float(ttrs.std()) if ttrs.size > 0 else 0.0
    sameStayCount = None
    averageTtrSameStay = None
    averageTtrDistinctStay = None
    if algorithm == "zos":
        same = [result.ttr for result, sameStay in listResult if result.met and sameStay]
        distinct = [result.ttr for result, sameStay in listResult if result.met and not sameStay]
        sameStayCount = sum(1 for _, sameStay in listResult if sameStay)
        averageTtrSameStay = float(numpy.mean(same)) if same else None
        averageTtrDistinctStay = float(numpy.mean(distinct)) if distinct else None
    return TtrStats(
        algorithm=algorithm,
        theta=theta,
        averageTtr=averageTtr,
        maxTtr=maxTtr,
        timeoutCount=timeoutCount,
        trials=len(listResult),
        stdTtr=stdTtr,
        sameStayCount=sameStayCount,
        averageTtrSameStay=averageTtrSameStay,
        averageTtrDistinctStay=averageTtrDistinctStay,
    )


def runExperiment(config, trialIndices=None):
    """
    Runs the trials (all of them unless trialIndices is given) and returns
    one TtrStats per algorithm. Fully determined by config.masterSeed.
    """
    if trialIndices is None:
        trialIndices = range(config.trials)
    results = {algorithm: [] for algorithm in config.algorithms}
    for count, trialIndex in enumerate(trialIndices, start=1):
        trialResult = runTrial(config, trialIndex)
        for algorithm in config.algorithms:
            results[algorithm].append(trialResult[algorithm])
        if count % PROGRESS_INTERVAL == 0:
            logger.info("theta=%.3f: %d trials done", config.theta, count)
    listStats = [aggregate(algorithm, config.theta, results[algorithm]) for algorithm in config.algorithms]
    for stats in listStats:
        logger.info(
            "%s theta=%.3f: average TTR %.3f, max TTR %d, %d timeouts",
            stats.algorithm, stats.theta, stats.averageTtr, stats.maxTtr, stats.timeoutCount
        )
    return listStats


def emitCsv(listStats, destination):
    """
    Writes the header and one row per TtrStats to a text sink; theta and
    avg_ttr with 3 decimals, integers as is.
    """
    writer = csv.writer(destination, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for stats in listStats:
        writer.writerow([
            stats.algorithm,
            "{0:.3f}".format(stats.theta),
            stats.trials,
            "{0:.3f}".format(stats.averageTtr),
            stats.maxTtr,
            stats.timeoutCount,
        ])


def readCsv(source):
    """Parses rows written by emitCsv."""
    reader = csv.DictReader(source)
    if reader.fieldnames != CSV_HEADER:
        raise RuntimeError("Unexpected CSV header: {0}".format(reader.fieldnames))
    listRow = []
    for row in reader:
        listRow.append({
            "algorithm": row["algorithm"],
            "theta": float(row["theta"]),
            "trials": int(row["trials"]),
            "avg_ttr": float(row["avg_ttr"]),
            "max_ttr": int(row["max_ttr"]),
            "timeouts": int(row["timeouts"]),
        })
    return listRow
