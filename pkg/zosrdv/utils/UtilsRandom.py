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

# A stream is identified by a master seed and a path of labels, e.g.
# (seed, "trial", 12, "user", 1, "column", 5). Every label becomes one 32-bit
# word of a numpy SeedSequence spawn key: integer labels modulo 2**32, string
# labels the first 4 bytes (big endian) of their 8-byte blake2b digest.
# Equal (seed, labels) give bit-identical draws within this implementation.

import hashlib

import numpy

MASK_64 = (1 << 64) - 1
MASK_32 = (1 << 32) - 1


def labelKey(label):
    if isinstance(label, (bool, numpy.bool_)):
        raise RuntimeError("Boolean stream label not allowed: {0!r}".format(label))
    if isinstance(label, (int, numpy.integer)):
        return int(label) & MASK_32
    if isinstance(label, str):
        digest = hashlib.blake2b(label.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest[0:4], "big")
    raise RuntimeError("Unsupported stream label: {0!r}".format(label))


class RngStream:
    """
    Single-owner random stream. Never share one instance between concurrent
    workers, derive a sub-stream instead.
    """

    def __init__(self, seed, labels=()):
        if seed is None or int(seed) < 0:
            raise RuntimeError("Stream seed must be a non-negative integer: {0!r}".format(seed))
        self.seed = int(seed) & MASK_64
        self.labels = tuple(labels)
        seedSequence = numpy.random.SeedSequence(
            entropy=self.seed, spawn_key=tuple(labelKey(label) for label in self.labels)
        )
        self._generator = numpy.random.Generator(numpy.random.PCG64(seedSequence))

    def __repr__(self):
        return "RngStream(seed={0}, labels={1!r})".format(self.seed, self.labels)

    def derive(self, *labels):
        """Independent sub-stream; does not consume draws from this stream."""
        return RngStream(self.seed, self.labels + tuple(labels))

    def permutation(self, items):
        items = list(items)
        order = self._generator.permutation(len(items))
        return [items[index] for index in order]

    def choices(self, items, k):
        """k independent uniform draws with replacement."""
        items = list(items)
        if k == 0:
            return []
        indices = self._generator.integers(0, len(items), size=k)
        return [items[index] for index in indices]

    def choice(self, items):
        return self.choices(items, 1)[0]

    def integers(self, low, high, size=None):
        """Uniform integers in [low, high)."""
        return self._generator.integers(low, high, size=size)
