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

# Sequence positions are 1-based like the hopping formulas; items are stored
# in 0-based tuples and ElementarySequence.item() is the only conversion point.

import enum
import dataclasses

import numpy

from zosrdv.utils import UtilsChannel
from zosrdv.utils import UtilsLogging

logger = UtilsLogging.getLogger()


class ElementaryKind(enum.Enum):
    ZERO_TYPE = "0"
    ONE_TYPE = "1"
    S_TYPE = "s"


@dataclasses.dataclass(frozen=True)
class ElementarySequence:
    kind: ElementaryKind
    items: tuple
    prime: int = None

    def __post_init__(self):
        if not isinstance(self.items, tuple):
            object.__setattr__(self, "items", tuple(int(item) for item in self.items))
        if self.kind == ElementaryKind.S_TYPE:
            expectedLength = 1
        elif self.prime is None:
            raise RuntimeError("{0} sequence without prime".format(self.kind.name))
        elif self.kind == ElementaryKind.ZERO_TYPE:
            expectedLength = 2 * self.prime
        else:
            expectedLength = 2 * self.prime * (self.prime + 1)
        if len(self.items) != expectedLength:
            raise RuntimeError(
                "{0} sequence has {1} items, expected {2}".format(
                    self.kind.name, len(self.items), expectedLength
                )
            )

    def __len__(self):
        return len(self.items)

    def item(self, n):
        """n-th item, 1 <= n <= len."""
        if n < 1 or n > len(self.items):
            raise RuntimeError("Position {0} outside of [1, {1}]".format(n, len(self.items)))
        return self.items[n - 1]

    def oddItems(self):
        """Items at positions 1, 3, 5, ..."""
        return self.items[0::2]

    def evenItems(self):
        """Items at positions 2, 4, 6, ..."""
        return self.items[1::2]

    def asArray(self):
        return numpy.asarray(self.items, dtype=numpy.int64)


def stayElementarySequence(stayChannel):
    return ElementarySequence(ElementaryKind.S_TYPE, (stayChannel,))


def buildFrame(available, length, rng):
    """
    Frame of `length` channels: a fresh random permutation of the available
    set followed by length - m independent uniform selections.
    """
    frame = UtilsChannel.randomPermutation(available, rng)
    if length > len(available):
        frame += UtilsChannel.randomSelection(available, length - len(available), rng)
    return frame


def interleave(xFrame, yFrame, b):
    """
    b = 0: Z[2k-1] = X[k], Z[2k] = Y[k] for k = 1..P.
    b = 1: Z[2k-1] = X[((k-1) mod P)+1], Z[2k] = Y[((k-1) mod (P+1))+1]
    for k = 1..P(P+1), i.e. X repeated P+1 times on odd positions and Y
    repeated P times on even positions.
    """
    prime = len(xFrame)
    if len(yFrame) != prime + b:
        raise RuntimeError(
            "Y frame has {0} items, expected {1}".format(len(yFrame), prime + b)
        )
    numberOfPairs = prime if b == 0 else prime * (prime + 1)
    k = numpy.arange(numberOfPairs)
    zArray = numpy.empty(2 * numberOfPairs, dtype=numpy.int64)
    zArray[0::2] = numpy.asarray(xFrame, dtype=numpy.int64)[k % prime]
    zArray[1::2] = numpy.asarray(yFrame, dtype=numpy.int64)[k % (prime + b)]
    return tuple(zArray.tolist())


def zeroOneES(available, b, rng):
    """
    0-type (b = 0, length 2P) or 1-type (b = 1, length 2P(P+1)) elementary
    sequence over the available set, P the smallest prime >= |available|.
    X (P items) and Y (P + b items) each start with an independent random
    permutation of the available set.
    """
    if b not in (0, 1):
        raise RuntimeError("Elementary sequence bit must be 0 or 1, got {0!r}".format(b))
    if len(available) == 0:
        raise RuntimeError("Cannot build an elementary sequence over an empty set")
    prime = UtilsChannel.smallestPrimeAtLeast(len(available))
    xFrame = buildFrame(available, prime, rng)
    yFrame = buildFrame(available, prime + b, rng)
    kind = ElementaryKind.ZERO_TYPE if b == 0 else ElementaryKind.ONE_TYPE
    return ElementarySequence(kind, interleave(xFrame, yFrame, b), prime)
