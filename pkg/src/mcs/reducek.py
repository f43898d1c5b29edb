"""Reduction of a common supersequence of k strings in O(N log N).

The output is grown in an :class:`OccString`, an append-only string that
answers next-occurrence queries by binary search over per-symbol
occurrence arrays sized from a template.
"""
from __future__ import annotations

import heapq
from bisect import bisect_right
from collections import Counter
from typing import Hashable, NamedTuple, Sequence

from .core import NotSubsequenceError, Seq, concat, like, right_embedding
from .reduce2 import NotCommonSupersequenceError


class CapacityError(RuntimeError):
    """A symbol was appended more often than the template allows."""


class OccString:
    """Subsequence of a template ``T`` stored as occurrence arrays.

    >>> d = OccString("abccbacc")
    >>> for c in "abca":
    ...     d.insert(c)
    >>> d.find_next("a", 1), d.find_next("c", 3), len(d)
    (4, 5, 4)
    >>> d.build_str("abccbacc")
    'abca'
    """

    __slots__ = ("capacity", "occ", "fill", "length", "queries")

    def __init__(self, template: Seq = ()):
        self.capacity = dict(Counter(template))
        self.occ = {c: [0] * k for c, k in self.capacity.items()}
        self.fill = dict.fromkeys(self.capacity, 0)
        self.length = 0
        self.queries = 0

    def __len__(self):
        return self.length

    def insert(self, c: Hashable) -> None:
        k = self.fill.get(c, 0)
        if k >= self.capacity.get(c, 0):
            raise CapacityError("symbol %r exceeds its template capacity %d"
                                % (c, self.capacity.get(c, 0)))
        self.length += 1
        self.occ[c][k] = self.length
        self.fill[c] = k + 1

    def find_next(self, c: Hashable, i: int) -> int:
        """Smallest ``j > i`` with ``S[j] == c``, else ``len(S) + 1``."""
        self.queries += 1
        arr = self.occ.get(c)
        if arr is None:
            return self.length + 1
        k = self.fill[c]
        p = bisect_right(arr, i, 0, k)
        return arr[p] if p < k else self.length + 1

    def occurrences(self, c: Hashable) -> list[int]:
        return self.occ.get(c, [])[:self.fill.get(c, 0)]

    def build_str(self, template: Seq) -> Seq:
        cursor = dict.fromkeys(self.capacity, 0)
        out = []
        nxt = 1
        for c in template:
            if nxt > self.length:
                break
            k = cursor[c]
            if k < self.fill[c] and self.occ[c][k] == nxt:
                out.append(c)
                cursor[c] = k + 1
                nxt += 1
        if nxt <= self.length:
            raise ValueError("stored string is not a subsequence of the template")
        return like(template, out)


def occ_new(template: Seq) -> OccString:
    return OccString(template)


def occ_insert(d: OccString, c: Hashable) -> None:
    d.insert(c)


def occ_find_next(d: OccString, c: Hashable, i: int) -> int:
    return d.find_next(c, i)


def occ_build_str(d: OccString, template: Seq) -> Seq:
    return d.build_str(template)


class MergedREntry(NamedTuple):
    s_index: int
    string_id: int


def merge_right_embeddings(s: Seq, inputs: Sequence[Seq]) -> list[MergedREntry]:
    """All right-embedding indices of the inputs, tagged and sorted by index.

    Ties on ``s_index`` are ordered by ascending ``string_id`` (0-based).
    """
    images = []
    for sid, x in enumerate(inputs):
        try:
            img = right_embedding(x, s).image
        except NotSubsequenceError:
            raise NotCommonSupersequenceError(sid + 1) from None
        images.append([MergedREntry(i, sid) for i in img])
    return list(heapq.merge(*images))


def reduce_k(s: Seq, inputs: Sequence[Seq], trace=None, stats: dict | None = None) -> Seq:
    """Reduce a common supersequence of ``inputs`` to a minimal one.

    ``trace``, when given, is called as ``trace(pos, outp, l_all)`` at the
    start of every loop iteration.  ``stats`` receives the number of
    next-occurrence queries under ``"find_next"``.
    """
    r_all = merge_right_embeddings(s, inputs)
    r_all.append(MergedREntry(len(s) + 1, -1))
    outp = OccString(s)
    l_all = [0] * len(inputs)
    n = len(s)
    pos = 1
    j = 0
    while pos <= n:
        if trace is not None:
            trace(pos, outp, l_all)
        r_idx, sid = r_all[j]
        if pos == r_idx:
            c = s[pos - 1]
            new_top = outp.find_next(c, l_all[sid])
            if new_top == outp.length + 1:
                outp.insert(c)
            l_all[sid] = new_top
            j += 1
        else:
            pos += 1
    if stats is not None:
        stats["find_next"] = outp.queries
    return outp.build_str(s)


def mcs_k(inputs: Sequence[Seq]) -> Seq:
    return reduce_k(concat(list(inputs)), inputs)
