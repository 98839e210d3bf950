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

import math

from zosrdv.utils import UtilsChannel
from zosrdv.utils import UtilsSchedule


def elementaryBound(m1, m2):
    """
    Slots within which a 1-type sequence over m1 channels meets a 0-type
    sequence over m2 channels: 2 (P1 + 1) P2.
    """
    prime1 = UtilsChannel.smallestPrimeAtLeast(m1)
    prime2 = UtilsChannel.smallestPrimeAtLeast(m2)
    return 2 * (prime1 + 1) * prime2


def mttrBound(numberOfChannels, m1, m2):
    """
    Maximum time-to-rendezvous of two ZOS users:
    (12L + 2)(P1 P2 + max{P1, P2}), L = ceil(log2 M).
    """
    if m1 > numberOfChannels or m2 > numberOfChannels:
        raise RuntimeError(
            "Available set sizes {0}, {1} exceed M={2}".format(m1, m2, numberOfChannels)
        )
    L = UtilsSchedule.bitLength(numberOfChannels)
    prime1 = UtilsChannel.smallestPrimeAtLeast(m1)
    prime2 = UtilsChannel.smallestPrimeAtLeast(m2)
    bound = (12 * L + 2) * (prime1 * prime2 + max(prime1, prime2))
    looseBound = (24 * L + 4) * (2 * m1 * m2 + max(m1, m2))
    assert bound <= looseBound, "MTTR bound {0} above loose form {1}".format(bound, looseBound)
    return bound


def sameStayBound(numberOfChannels, m1):
    """TTR bound when both users picked the same stay channel: 2 P1 (6L + 1)."""
    roundLength = UtilsSchedule.seedLength(numberOfChannels)
    return 2 * UtilsChannel.smallestPrimeAtLeast(m1) * roundLength


def checkCrtAlignment(p, q):
    """
    U = <u1..up> repeated q times and V = <v1..vq> repeated p times: returns
    True iff every pair (ui, vj) occurs at a common position k <= pq.
    """
    if p < 1 or q < 1:
        raise RuntimeError("Cycle lengths must be positive: {0}, {1}".format(p, q))
    if math.gcd(p, q) != 1:
        raise RuntimeError("Cycle lengths {0} and {1} are not coprime".format(p, q))
    # Sentinels: u_i -> i, v_j -> j, both 1-based
    sequenceU = [i for _ in range(q) for i in range(1, p + 1)]
    sequenceV = [j for _ in range(p) for j in range(1, q + 1)]
    pairsHit = set(zip(sequenceU, sequenceV))
    return len(pairsHit) == p * q
