"""Sequences, extended intervals and left/right embeddings.

Sequences are plain Python sequences (``str``, ``tuple``, ``list``) of
hashable symbols.  Every index exposed by this package is 1-based; 0 and
``len + 1`` are sentinels that are never dereferenced.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

Seq = Sequence[Hashable]


class NotSubsequenceError(ValueError):
    """Raised when an operation needs ``X`` to be a subsequence of ``S``."""


def like(template, symbols) -> Seq:
    """Build a sequence of the same flavour as ``template`` (str or tuple)."""
    if isinstance(template, str):
        return "".join(symbols)
    return tuple(symbols)


def concat(seqs: Sequence[Seq]) -> Seq:
    if seqs and all(isinstance(s, str) for s in seqs):
        return "".join(seqs)
    return tuple(c for s in seqs for c in s)


def substring(s: Seq, i: int, j: int) -> Seq:
    """``S[i..j]`` with 1-based inclusive bounds; empty when ``j < i``."""
    if j < i:
        return s[0:0]
    return s[max(i, 1) - 1:min(j, len(s))]


def delete_index(s: Seq, i: int) -> Seq:
    return s[:i - 1] + s[i:]


@dataclass(frozen=True)
class ExtInterval:
    """Interval with integer endpoints over ``[0, n+1]`` of some sequence.

    Only the integer indices it contains matter at runtime.
    """

    left: int
    right: int
    left_closed: bool = True
    right_closed: bool = True

    def indices(self, n: int) -> range:
        """Indices of a length-``n`` sequence inside the interval."""
        lo = self.left if self.left_closed else self.left + 1
        hi = self.right if self.right_closed else self.right - 1
        return range(max(lo, 1), min(hi, n) + 1)

    def is_empty(self, n: int) -> bool:
        return len(self.indices(n)) == 0

    def of(self, s: Seq) -> Seq:
        r = self.indices(len(s))
        return s[r.start - 1:r.stop - 1] if r else s[0:0]

    @classmethod
    def closed_open(cls, lo: int, hi: int) -> "ExtInterval":
        return cls(lo, hi, True, False)

    @classmethod
    def open(cls, lo: int, hi: int) -> "ExtInterval":
        return cls(lo, hi, False, False)

    def __str__(self):
        return "%s%d,%d%s" % ("[" if self.left_closed else "(", self.left,
                              self.right, "]" if self.right_closed else ")")


@dataclass(frozen=True)
class EmbeddingMap:
    """Strictly increasing map from indices of X into indices of S.

    ``image[i-1]`` is the target of index ``i``.  Calling the map also
    accepts the sentinels ``0 -> 0`` and ``len(X)+1 -> len(S)+1``.
    """

    image: tuple
    target_len: int

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if i == len(self.image) + 1:
            return self.target_len + 1
        if not 1 <= i <= len(self.image):
            raise IndexError(i)
        return self.image[i - 1]

    def __len__(self):
        return len(self.image)

    def __iter__(self):
        return iter(self.image)

    def __eq__(self, other):
        if isinstance(other, EmbeddingMap):
            return self.image == other.image and self.target_len == other.target_len
        if isinstance(other, (list, tuple)):
            return list(self.image) == list(other)
        return NotImplemented

    __hash__ = None


def is_subsequence(x: Seq, s: Seq) -> bool:
    it = iter(s)
    return all(c in it for c in x)


def left_embedding(x: Seq, s: Seq) -> EmbeddingMap:
    image = []
    j = 0
    n = len(s)
    for c in x:
        while j < n and s[j] != c:
            j += 1
        if j == n:
            raise NotSubsequenceError("sequence is not a subsequence")
        j += 1
        image.append(j)
    return EmbeddingMap(tuple(image), n)


def right_embedding(x: Seq, s: Seq) -> EmbeddingMap:
    image = []
    j = len(s) - 1
    for c in reversed(x):
        while j >= 0 and s[j] != c:
            j -= 1
        if j < 0:
            raise NotSubsequenceError("sequence is not a subsequence")
        image.append(j + 1)
        j -= 1
    image.reverse()
    return EmbeddingMap(tuple(image), len(s))


def longest_common_prefix(a: Seq, b: Seq) -> int:
    p = 0
    for ca, cb in zip(a, b):
        if ca != cb:
            break
        p += 1
    return p
