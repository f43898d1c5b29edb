"""Brute-force ground truth, kept deliberately naive.

Nothing here uses embeddings: minimality is checked by literally deleting
each character, and MCS sets come from exhaustive search over strings.
"""
from __future__ import annotations

from typing import Sequence

from .core import Seq, like

DEFAULT_CAP = 2_000_000


class SearchSpaceError(RuntimeError):
    pass


def _contains(s, x) -> bool:
    it = iter(s)
    return all(c in it for c in x)


def brute_is_minimal(s: Seq, inputs: Sequence[Seq]) -> bool:
    if not all(_contains(s, x) for x in inputs):
        return False
    for i in range(len(s)):
        t = s[:i] + s[i + 1:]
        if all(_contains(t, x) for x in inputs):
            return False
    return True


def search_space_size(alphabet_size: int, lo: int, hi: int) -> int:
    return sum(alphabet_size ** n for n in range(lo, hi + 1))


def brute_mcs_set(a: Seq, b: Seq, max_len: int | None = None, cap: int = DEFAULT_CAP) -> set:
    """Every minimal common supersequence of ``a`` and ``b`` up to ``max_len``.

    Candidates are all strings over the union alphabet with length in
    ``[max(|a|, |b|), max_len]``.  Prefixes that can no longer absorb the
    unmatched rest of ``a`` or ``b`` within ``max_len`` are cut, which never
    discards a common supersequence.
    """
    if max_len is None:
        max_len = len(a) + len(b)
    lo = max(len(a), len(b))
    if max_len < lo:
        raise ValueError("max_len must be at least max(|a|, |b|)")
    alphabet = sorted(set(a) | set(b), key=repr)
    if search_space_size(len(alphabet), lo, max_len) > cap:
        raise SearchSpaceError("search space exceeds cap of %d candidates" % cap)

    found = set()
    prefix = []

    def grow(i, j):
        # i, j: greedy match lengths of a and b in the current prefix
        if i == len(a) and j == len(b):
            # any extension keeps a deletable trailing symbol
            if len(prefix) >= lo:
                cand = like(a if isinstance(a, str) else b, prefix)
                if brute_is_minimal(cand, [a, b]):
                    found.add(cand)
            return
        if len(prefix) == max_len:
            return
        for c in alphabet:
            ni = i + (i < len(a) and a[i] == c)
            nj = j + (j < len(b) and b[j] == c)
            if len(prefix) + 1 + max(len(a) - ni, len(b) - nj) > max_len:
                continue
            prefix.append(c)
            grow(ni, nj)
            prefix.pop()

    grow(0, 0)
    return found


def _block(s, lo, hi):
    """``s[lo..hi]`` restricted to real indices, 1-based inclusive."""
    lo, hi = max(lo, 1), min(hi, len(s))
    return s[lo - 1:hi] if lo <= hi else s[0:0]


def brute_fills(x_str, x, xp, y_str, lo, hi) -> bool:
    """``(x, x')`` fills the indices ``lo..hi`` of ``Y``: contained, and
    neither one-step widening of ``X(x, x')`` stays contained."""
    if not 0 <= x < xp <= len(x_str) + 1:
        return False
    target = _block(y_str, lo, hi)
    if not _contains(target, _block(x_str, x + 1, xp - 1)):
        return False
    if x >= 1 and _contains(target, _block(x_str, x, xp - 1)):
        return False
    if xp <= len(x_str) and _contains(target, _block(x_str, x + 1, xp)):
        return False
    return True


def brute_edge_targets(x_str, y_str, x, y) -> list[tuple[int, int]]:
    """``(y', x')`` of every edge out of ``(X, x, Y, y)`` by the definition:
    nonempty label ``Y[y..y']`` and both the closed ``[y, y'+1)`` and open
    ``(y, y'+1)`` fills hold."""
    out = []
    ny, nx = len(y_str), len(x_str)
    for yp in range(0, ny + 2):
        if max(y, 1) > min(yp, ny):
            continue
        for xp in range(0, nx + 2):
            if brute_fills(x_str, x, xp, y_str, y, yp) and brute_fills(x_str, x, xp, y_str, y + 1, yp):
                out.append((yp, xp))
    return out


def brute_st_vertices(a, b) -> set:
    """Vertices ``(X, x, Y, y)`` on some start-to-end path of the full graph."""
    strings = {"A": a, "B": b}
    other = {"A": "B", "B": "A"}
    verts = [(xn, x, other[xn], y)
             for xn in "AB" for x in range(len(strings[xn]) + 2)
             for y in range(len(strings[other[xn]]) + 2)]
    succ = {v: [] for v in verts}
    pred = {v: [] for v in verts}
    for v in verts:
        xn, x, yn, y = v
        for yp, xp in brute_edge_targets(strings[xn], strings[yn], x, y):
            w = (yn, yp, xn, xp)
            succ[v].append(w)
            pred[w].append(v)

    def closure(seeds, nbrs):
        seen = set(seeds)
        todo = list(seeds)
        while todo:
            for w in nbrs[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    starts = [("A", 0, "B", 0), ("B", 0, "A", 0)]
    ends = [("A", len(a) + 1, "B", len(b) + 1), ("B", len(b) + 1, "A", len(a) + 1)]
    return closure(starts, succ) & closure(ends, pred)


def brute_path_labels(a, b) -> list:
    """Labels of all start-to-end paths of the full graph, by plain DFS."""
    strings = {"A": a, "B": b}
    ends = {("A", len(a) + 1, "B", len(b) + 1), ("B", len(b) + 1, "A", len(a) + 1)}
    out = []

    def walk(v, label):
        if v in ends:
            out.append(label)
            return
        xn, x, yn, y = v
        for yp, xp in brute_edge_targets(strings[xn], strings[yn], x, y):
            walk((yn, yp, xn, xp), label + _block(strings[yn], y, yp))

    for start in [("A", 0, "B", 0), ("B", 0, "A", 0)]:
        walk(start, a[0:0])
    return out
