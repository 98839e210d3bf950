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

# Slot-aligned two-user simulation. User 2 started `offset` slots before
# user 1: in user 1's slot t user 2 is in its own slot t + offset. TTR is
# counted from user 1's first slot.

import dataclasses

import numpy

from zosrdv.utils import UtilsBounds
from zosrdv.utils import UtilsLogging

logger = UtilsLogging.getLogger()

FIRST_CHUNK = 256
MAX_CHUNK = 65536
SWEEP_CHUNK = 128
BASELINE_BLOCK = 1024


@dataclasses.dataclass(frozen=True)
class RendezvousResult:
    met: bool
    ttr: int = None
    channel: int = None
    horizon: int = None

    @classmethod
    def meeting(cls, ttr, channel, horizon=None):
        return cls(True, int(ttr), int(channel), None if horizon is None else int(horizon))

    @classmethod
    def timeout(cls, horizon):
        return cls(False, None, None, int(horizon))

    def toDict(self):
        if self.met:
            return {"outcome": "met", "ttr": self.ttr, "channel": self.channel, "horizon": self.horizon}
        return {"outcome": "timeout", "horizon": self.horizon}


@dataclasses.dataclass(frozen=True)
class PairConfig:
    schedule1: object
    schedule2: object
    offset: int = 0
    horizon: int = None

    def __post_init__(self):
        if self.schedule1.numberOfChannels != self.schedule2.numberOfChannels:
            raise RuntimeError(
                "Schedules over different channel sets: M={0} and M={1}".format(
                    self.schedule1.numberOfChannels, self.schedule2.numberOfChannels
                )
            )
        if not self.schedule1.available.intersects(self.schedule2.available):
            raise RuntimeError(
                "Available sets {0} and {1} share no channel".format(
                    self.schedule1.available, self.schedule2.available
                )
            )
        if self.offset < 0:
            raise RuntimeError("Offset must be non-negative, got {0}".format(self.offset))
        if self.horizon is None:
            object.__setattr__(self, "horizon", defaultHorizon(self.schedule1, self.schedule2))
        elif self.horizon < 1:
            raise RuntimeError("Horizon must be positive, got {0}".format(self.horizon))


def defaultHorizon(schedule1, schedule2):
    """One slot more than the MTTR bound: a ZOS timeout is then a bound violation."""
    return (
        UtilsBounds.mttrBound(
            schedule1.numberOfChannels, len(schedule1.available), len(schedule2.available)
        )
        + 1
    )


def firstMeeting(schedule1, schedule2, offset, horizon):
    """Scans growing slot chunks of both hop streams for the first coincidence."""
    start = 1
    chunk = FIRST_CHUNK
    while start <= horizon:
        stop = min(start + chunk, horizon + 1)
        timeslots = numpy.arange(start, stop, dtype=numpy.int64)
        hops1 = schedule1.channelsAt(timeslots)
        hops2 = schedule2.channelsAt(timeslots + offset)
        coincidences = numpy.flatnonzero(hops1 == hops2)
        if coincidences.size > 0:
            index = int(coincidences[0])
            return RendezvousResult.meeting(timeslots[index], hops1[index], horizon)
        start = stop
        chunk = min(2 * chunk, MAX_CHUNK)
    return RendezvousResult.timeout(horizon)


def simulatePair(config):
    result = firstMeeting(config.schedule1, config.schedule2, config.offset, config.horizon)
    logger.debug("Pair offset=%d: %s", config.offset, result)
    return result


def firstMeetings(schedule1, schedule2, offsets, horizon):
    """
    Offset sweep: TTR (0 on timeout) and meeting channel (0 on timeout) for
    every offset, same semantics as simulatePair.
    """
    offsets = numpy.asarray(offsets, dtype=numpy.int64)
    ttrs = numpy.zeros(offsets.shape, dtype=numpy.int64)
    channels = numpy.zeros(offsets.shape, dtype=numpy.int64)
    pending = numpy.arange(offsets.size)
    start = 1
    while start <= horizon and pending.size > 0:
        stop = min(start + SWEEP_CHUNK, horizon + 1)
        timeslots = numpy.arange(start, stop, dtype=numpy.int64)
        hops1 = schedule1.channelsAt(timeslots)
        hops2 = schedule2.channelsAt(timeslots[numpy.newaxis, :] + offsets[pending][:, numpy.newaxis])
        coincidences = hops2 == hops1[numpy.newaxis, :]
        hasMet = coincidences.any(axis=1)
        firstIndex = coincidences.argmax(axis=1)
        metRows = pending[hasMet]
        ttrs[metRows] = timeslots[firstIndex[hasMet]]
        channels[metRows] = hops1[firstIndex[hasMet]]
        pending = pending[~hasMet]
        start = stop
    return ttrs, channels


class CyclicSequence:
    """An elementary sequence repeated forever, seen as a schedule."""

    def __init__(self, sequence, numberOfChannels=None):
        self.sequence = sequence
        self.numberOfChannels = numberOfChannels
        self._items = sequence.asArray()

    def channelAt(self, t):
        return self.sequence.item(((t - 1) % len(self.sequence)) + 1)

    def channelsAt(self, timeslots):
        timeslots = numpy.asarray(timeslots, dtype=numpy.int64)
        return self._items[(timeslots - 1) % self._items.size]


def checkElementaryPair(sequence1, sequence2):
    kinds = {sequence1.kind.name, sequence2.kind.name}
    if kinds != {"ZERO_TYPE", "ONE_TYPE"}:
        raise RuntimeError(
            "Need one 0-type and one 1-type sequence, got {0} and {1}".format(
                sequence1.kind.name, sequence2.kind.name
            )
        )
    # The permutation prefix puts every available channel into the items
    if not set(sequence1.items) & set(sequence2.items):
        raise RuntimeError("Elementary sequences share no channel")


def simulateElementaryPair(sequence1, sequence2, offset, horizon):
    checkElementaryPair(sequence1, sequence2)
    if offset < 0:
        raise RuntimeError("Offset must be non-negative, got {0}".format(offset))
    return firstMeeting(CyclicSequence(sequence1), CyclicSequence(sequence2), offset, horizon)


class BaselineSchedule:
    """
    Random hopping: every slot an independent uniform draw from the available
    set. Slot t reads block (t-1) // BASELINE_BLOCK of the stream derived
    with labels ("block", index), so channelAt(t) depends only on (stream, t).
    """

    def __init__(self, numberOfChannels, available, rng):
        if len(available) == 0:
            raise RuntimeError("Available channel set is empty")
        self.numberOfChannels = numberOfChannels
        self.available = available
        self._rng = rng
        self._members = numpy.asarray(available.members, dtype=numpy.int64)
        self._blocks = {}

    def _block(self, blockIndex):
        block = self._blocks.get(blockIndex)
        if block is None:
            if len(self._blocks) > 256:
                self._blocks.clear()
            draws = self._rng.derive("block", blockIndex).integers(
                0, self._members.size, size=BASELINE_BLOCK
            )
            block = self._members[draws]
            self._blocks[blockIndex] = block
        return block

    def channelsAt(self, timeslots):
        timeslots = numpy.asarray(timeslots, dtype=numpy.int64)
        zeroBased = timeslots - 1
        blockIndices, inverse = numpy.unique(zeroBased // BASELINE_BLOCK, return_inverse=True)
        table = numpy.stack([self._block(int(index)) for index in blockIndices])
        channels = table[inverse.reshape(-1), (zeroBased % BASELINE_BLOCK).reshape(-1)]
        return channels.reshape(timeslots.shape)

    def channelAt(self, t):
        if t < 1:
            raise RuntimeError("Timeslots start at 1, got {0}".format(t))
        return int(self._block((t - 1) // BASELINE_BLOCK)[(t - 1) % BASELINE_BLOCK])


def randomBaselineSchedule(numberOfChannels, available, rng):
    if available.universeSize != numberOfChannels:
        raise RuntimeError(
            "Available set defined over {0} channels, expected {1}".format(
                available.universeSize, numberOfChannels
            )
        )
    return BaselineSchedule(numberOfChannels, available, rng.derive("baseline"))
