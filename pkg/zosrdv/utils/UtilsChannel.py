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

# Channels are plain integers in [1, M] (1-based, as the licensed channel
# indices c1..cM); a ChannelSet is a user's available subset of the whole set.

import math
import functools
import dataclasses

from zosrdv.utils import UtilsLogging

logger = UtilsLogging.getLogger()


def checkChannelId(channel, universeSize):
    if isinstance(channel, bool) or int(channel) != channel:
        raise RuntimeError("Channel index must be an integer: {0!r}".format(channel))
    if channel < 1 or channel > universeSize:
        raise RuntimeError(
            "Channel {0} outside of whole channel set [1, {1}]".format(channel, universeSize)
        )
    return int(channel)


@dataclasses.dataclass(frozen=True)
class ChannelSet:
    universeSize: int
    members: tuple

    def __post_init__(self):
        if self.universeSize < 2:
            raise RuntimeError(
                "Whole channel set must have at least 2 channels, got {0}".format(self.universeSize)
            )
        if len(self.members) == 0:
            raise RuntimeError("Available channel set is empty")
        members = tuple(checkChannelId(c, self.universeSize) for c in self.members)
        if len(set(members)) != len(members):
            raise RuntimeError("Duplicate channels in {0}".format(list(members)))
        if list(members) != sorted(members):
            raise RuntimeError("Channels not in ascending order: {0}".format(list(members)))
        object.__setattr__(self, "members", members)

    @classmethod
    def fromChannels(cls, universeSize, channels):
        """Builds a set from any iterable of channel indices (duplicates rejected)."""
        channels = list(channels)
        if len(set(channels)) != len(channels):
            raise RuntimeError("Duplicate channels in {0}".format(channels))
        return cls(universeSize, tuple(sorted(channels)))

    @classmethod
    def fromDict(cls, dictSet):
        return cls.fromChannels(dictSet["numberOfChannels"], dictSet["channels"])

    def toDict(self):
        return {"numberOfChannels": self.universeSize, "channels": list(self.members)}

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, channel):
        return channel in self.members

    def intersection(self, other):
        """Common channels as a sorted list (possibly empty)."""
        return sorted(set(self.members) & set(other.members))

    def intersects(self, other):
        return len(self.intersection(other)) > 0

    def __str__(self):
        return "{" + ",".join("c{0}".format(c) for c in self.members) + "}"


def isPrime(number):
    if number < 2:
        return False
    if number < 4:
        return True
    if number % 2 == 0:
        return False
    for divisor in range(3, math.isqrt(number) + 1, 2):
        if number % divisor == 0:
            return False
    return True


@functools.lru_cache(maxsize=4096)
def smallestPrimeAtLeast(m):
    """
    Smallest prime P with P >= m. By Bertrand-Chebyshev P <= 2m, which is
    asserted. m = 1 gives 2.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise RuntimeError("smallestPrimeAtLeast needs a positive integer, got {0!r}".format(m))
    prime = max(int(m), 2)
    while not isPrime(prime):
        prime += 1
    assert prime <= 2 * m, "Bertrand-Chebyshev violated for m={0}".format(m)
    return prime


def randomPermutation(channelSet, rng):
    """Uniform random ordering of all channels of the set."""
    return rng.permutation(channelSet.members)


def randomSelection(channelSet, k, rng):
    """k channels drawn independently and uniformly, repeats allowed."""
    if k < 0:
        raise RuntimeError("Cannot select a negative number of channels: {0}".format(k))
    return rng.choices(channelSet.members, k)
