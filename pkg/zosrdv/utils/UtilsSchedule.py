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

# A ZOS schedule is a table of 6L+1 columns: column i repeats the elementary
# sequence selected by seed symbol i, and timeslot t reads row
# (ceil(t/(6L+1)) - 1) mod |Z(i)| + 1 of column i = ((t-1) mod (6L+1)) + 1.

import enum
import math
import dataclasses

import numpy

from zosrdv.utils import UtilsChannel
from zosrdv.utils import UtilsLogging
from zosrdv.utils import UtilsElementary
from zosrdv.utils.UtilsElementary import ElementaryKind

logger = UtilsLogging.getLogger()


class SeedSymbol(enum.Enum):
    ZERO = "0"
    ONE = "1"
    STAY = "s"


SYMBOL_TO_KIND = {
    SeedSymbol.ZERO: ElementaryKind.ZERO_TYPE,
    SeedSymbol.ONE: ElementaryKind.ONE_TYPE,
    SeedSymbol.STAY: ElementaryKind.S_TYPE,
}


def seedLength(numberOfChannels):
    return 6 * bitLength(numberOfChannels) + 1


def bitLength(numberOfChannels):
    """L = ceil(log2 M) for M >= 2."""
    if numberOfChannels < 2:
        raise RuntimeError(
            "Whole channel set must have at least 2 channels, got {0}".format(numberOfChannels)
        )
    return (int(numberOfChannels) - 1).bit_length()


@dataclasses.dataclass(frozen=True)
class Seed:
    L: int
    symbols: tuple
    stayChannel: int

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) != 6 * self.L + 1:
            raise RuntimeError(
                "Seed has {0} symbols, expected {1}".format(len(symbols), 6 * self.L + 1)
            )
        if symbols[-1] != SeedSymbol.STAY or SeedSymbol.STAY in symbols[:-1]:
            raise RuntimeError("Stay symbol must appear exactly once, in last position")

    def __len__(self):
        return len(self.symbols)

    def symbol(self, i):
        """i-th symbol, 1 <= i <= 6L+1."""
        return self.symbols[i - 1]

    def bits(self):
        """The 6L binary symbols as 0/1 integers."""
        return [0 if symbol == SeedSymbol.ZERO else 1 for symbol in self.symbols[:-1]]

    def toString(self):
        return "".join(symbol.value for symbol in self.symbols)


@dataclasses.dataclass(frozen=True)
class RoundPosition:
    column: int
    row: int


def encodeStayChannel(stayChannel, L):
    """
    L-bit big-endian binary encoding of stayChannel - 1. The zero-based value
    always fits in L bits, also for s = M = 2^L, and distinct stay channels
    keep distinct encodings.
    """
    if L < 1:
        raise RuntimeError("Seed block length must be positive, got {0}".format(L))
    if stayChannel < 1 or stayChannel > 2 ** L:
        raise RuntimeError(
            "Stay channel {0} cannot be encoded on {1} bits".format(stayChannel, L)
        )
    value = stayChannel - 1
    return [
        SeedSymbol.ONE if (value >> shift) & 1 else SeedSymbol.ZERO
        for shift in range(L - 1, -1, -1)
    ]


def buildSeed(numberOfChannels, stayChannel, L=None):
    """Seed <A, O, I, A, O, I, s> of length 6L+1."""
    if L is None:
        L = bitLength(numberOfChannels)
    elif L != bitLength(numberOfChannels):
        raise RuntimeError(
            "L={0} does not match ceil(log2 {1})".format(L, numberOfChannels)
        )
    UtilsChannel.checkChannelId(stayChannel, numberOfChannels)
    blockA = encodeStayChannel(stayChannel, L)
    blockO = [SeedSymbol.ZERO] * L
    blockI = [SeedSymbol.ONE] * L
    symbols = blockA + blockO + blockI + blockA + blockO + blockI + [SeedSymbol.STAY]
    return Seed(L, tuple(symbols), stayChannel)


class ZosSchedule:
    """
    Complete hopping state of one user. Immutable after construction;
    channelAt and channelsAt are pure lookups.
    """

    def __init__(self, numberOfChannels, available, seed, columns):
        self.numberOfChannels = numberOfChannels
        self.L = bitLength(numberOfChannels)
        self.available = available
        self.seed = seed
        self.columns = tuple(columns)
        self._check()
        self.roundLength = len(self.columns)
        self._lengths = numpy.array([len(column) for column in self.columns], dtype=numpy.int64)
        self._table = numpy.zeros((self.roundLength, int(self._lengths.max())), dtype=numpy.int64)
        for index, column in enumerate(self.columns):
            self._table[index, 0:len(column)] = column.asArray()
        self._table.setflags(write=False)

    def _check(self):
        if self.available.universeSize != self.numberOfChannels:
            raise RuntimeError(
                "Available set defined over {0} channels, schedule over {1}".format(
                    self.available.universeSize, self.numberOfChannels
                )
            )
        if self.seed.L != self.L:
            raise RuntimeError("Seed L={0} but schedule L={1}".format(self.seed.L, self.L))
        if len(self.columns) != len(self.seed):
            raise RuntimeError(
                "{0} columns for a seed of length {1}".format(len(self.columns), len(self.seed))
            )
        if self.seed.stayChannel not in self.available:
            raise RuntimeError(
                "Stay channel {0} not in available set {1}".format(
                    self.seed.stayChannel, self.available
                )
            )
        availableChannels = set(self.available.members)
        for index, column in enumerate(self.columns):
            if column.kind != SYMBOL_TO_KIND[self.seed.symbols[index]]:
                raise RuntimeError(
                    "Column {0} is {1} but seed symbol is {2}".format(
                        index + 1, column.kind.name, self.seed.symbols[index].name
                    )
                )
            unavailable = set(column.items) - availableChannels
            if unavailable:
                raise RuntimeError(
                    "Column {0} uses unavailable channels {1}".format(index + 1, sorted(unavailable))
                )
        if self.columns[-1].items != (self.seed.stayChannel,):
            raise RuntimeError("Last column must be the stay channel")

    @property
    def stayChannel(self):
        return self.seed.stayChannel

    def __eq__(self, other):
        if not isinstance(other, ZosSchedule):
            return NotImplemented
        return (
            self.numberOfChannels == other.numberOfChannels
            and self.available == other.available
            and self.seed == other.seed
            and self.columns == other.columns
        )

    def __hash__(self):
        return hash((self.numberOfChannels, self.available, self.seed, self.columns))

    def roundPosition(self, t):
        if t < 1:
            raise RuntimeError("Timeslots start at 1, got {0}".format(t))
        column = ((t - 1) % self.roundLength) + 1
        rowCount = len(self.columns[column - 1])
        row = ((t - 1) // self.roundLength) % rowCount + 1
        return RoundPosition(column, row)

    def channelAt(self, t):
        position = self.roundPosition(t)
        return self.columns[position.column - 1].item(position.row)

    def channelsAt(self, timeslots):
        """Vectorized channelAt over an integer array of timeslots (any shape, all >= 1)."""
        timeslots = numpy.asarray(timeslots, dtype=numpy.int64)
        zeroBased = timeslots - 1
        columnIndex = zeroBased % self.roundLength
        rowIndex = (zeroBased // self.roundLength) % self._lengths[columnIndex]
        return self._table[columnIndex, rowIndex]

    def period(self):
        """A whole-schedule period: (6L+1) times the lcm of the column lengths."""
        return self.roundLength * math.lcm(*[len(column) for column in self.columns])

    def toText(self):
        lines = [
            "M {0}".format(self.numberOfChannels),
            "L {0}".format(self.L),
            "stay {0}".format(self.stayChannel),
            "available {0}".format(" ".join(str(c) for c in self.available)),
            "seed {0}".format(" ".join(symbol.value for symbol in self.seed.symbols)),
        ]
        for column in self.columns:
            lines.append(" ".join(str(item) for item in column.items))
        return "\n".join(lines) + "\n"


def channelAt(schedule, t):
    return schedule.channelAt(t)


def generateSchedule(numberOfChannels, available, rng, stayOverride=None):
    """
    ZOS schedule for one user: stay channel drawn uniformly from the available
    set (unless overridden), seed built from it, one independent elementary
    sequence per binary seed symbol and the s-type column last.
    """
    if available.universeSize != numberOfChannels:
        raise RuntimeError(
            "Available set defined over {0} channels, expected {1}".format(
                available.universeSize, numberOfChannels
            )
        )
    if stayOverride is None:
        stayChannel = rng.derive("stay").choice(available.members)
    elif stayOverride not in available:
        raise RuntimeError(
            "Stay channel override {0} not in available set {1}".format(stayOverride, available)
        )
    else:
        stayChannel = stayOverride
    seed = buildSeed(numberOfChannels, stayChannel)
    columns = []
    for index, bit in enumerate(seed.bits(), start=1):
        columns.append(UtilsElementary.zeroOneES(available, bit, rng.derive("column", index)))
    columns.append(UtilsElementary.stayElementarySequence(stayChannel))
    logger.debug(
        "ZOS schedule M=%d available=%s stay=%d seed=%s",
        numberOfChannels, available, stayChannel, seed.toString()
    )
    return ZosSchedule(numberOfChannels, available, seed, columns)


def readScheduleText(text):
    """Parses the text written by ZosSchedule.toText."""
    lines = [line.strip() for line in text.strip().splitlines() if line.strip() != ""]
    header = {}
    for line in lines[0:5]:
        key, _, value = line.partition(" ")
        header[key] = value.split()
    for key in ("M", "L", "stay", "available", "seed"):
        if key not in header:
            raise RuntimeError("Schedule text misses '{0}' header line".format(key))
    numberOfChannels = int(header["M"][0])
    stayChannel = int(header["stay"][0])
    available = UtilsChannel.ChannelSet.fromChannels(
        numberOfChannels, [int(c) for c in header["available"]]
    )
    seed = buildSeed(numberOfChannels, stayChannel)
    if [symbol.value for symbol in seed.symbols] != header["seed"]:
        raise RuntimeError("Seed line does not match stay channel {0}".format(stayChannel))
    if int(header["L"][0]) != seed.L:
        raise RuntimeError("L line does not match M={0}".format(numberOfChannels))
    columnLines = lines[5:]
    if len(columnLines) != len(seed):
        raise RuntimeError(
            "Schedule text has {0} columns, expected {1}".format(len(columnLines), len(seed))
        )
    prime = UtilsChannel.smallestPrimeAtLeast(len(available))
    columns = []
    for symbol, line in zip(seed.symbols, columnLines):
        items = tuple(int(item) for item in line.split())
        kind = SYMBOL_TO_KIND[symbol]
        if kind == ElementaryKind.S_TYPE:
            columns.append(UtilsElementary.ElementarySequence(kind, items))
        else:
            columns.append(UtilsElementary.ElementarySequence(kind, items, prime))
    return ZosSchedule(numberOfChannels, available, seed, columns)
