"""Linear-time reduction of a common supersequence of two strings."""
from __future__ import annotations

from .core import NotSubsequenceError, Seq, concat, like, right_embedding


class NotCommonSupersequenceError(ValueError):
    def __init__(self, which: int, message: str | None = None):
        super().__init__(message or "input %d is not a subsequence of the supersequence" % which)
        self.which = which


def build_right_embedding_image(s: Seq, x: Seq) -> list[int]:
    """Ascending indices of ``S`` hit by the right embedding of ``X``."""
    return list(right_embedding(x, s).image)


def reduce_two(s: Seq, a: Seq, b: Seq, trace=None) -> Seq:
    """Delete characters of ``S`` until it is a minimal supersequence of A and B.

    One left-to-right sweep: position ``pos`` survives only if the left
    embedding of A or B (restricted to surviving positions) lands on it at
    the moment the right embedding reaches it.

    ``trace``, when given, is called as ``trace(pos, deleted)`` where
    ``deleted`` is the deletion mark array at the start of iteration ``pos``.
    """
    n = len(s)
    try:
        r_a = build_right_embedding_image(s, a) + [n + 1]
    except NotSubsequenceError:
        raise NotCommonSupersequenceError(1) from None
    try:
        r_b = build_right_embedding_image(s, b) + [n + 1]
    except NotSubsequenceError:
        raise NotCommonSupersequenceError(2) from None

    # 1-based views; slot 0 is never compared against a symbol
    S = [None, *s]
    A = [None, *a]
    B = [None, *b]
    has_x = [False] * (n + 1)
    j_a = j_b = 1
    l_a = l_b = 0
    for pos in range(1, n + 1):
        if trace is not None:
            trace(pos, has_x)
        if pos == r_a[j_a - 1]:
            l_a += 1
            while has_x[l_a] or A[j_a] != S[l_a]:
                l_a += 1
            j_a += 1
        if pos == r_b[j_b - 1]:
            l_b += 1
            while has_x[l_b] or B[j_b] != S[l_b]:
                l_b += 1
            j_b += 1
        if l_a != pos and l_b != pos:
            has_x[pos] = True
    return like(s, (S[i] for i in range(1, n + 1) if not has_x[i]))


def mcs_two(a: Seq, b: Seq) -> Seq:
    return reduce_two(concat([a, b]), a, b)
