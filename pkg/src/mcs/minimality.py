"""Essential indices and a linear-time minimality check.

An index ``i`` of ``S`` is essential for ``X`` when dropping ``S[i]``
loses ``X`` as a subsequence.  That happens exactly when the left and
right embeddings of ``X`` agree on some index ``j`` and send it to ``i``,
so both embeddings are enough and no deletion needs to be tried.
"""
from __future__ import annotations

from typing import Sequence

from .core import NotSubsequenceError, Seq, left_embedding, right_embedding


def essential_indices(s: Seq, x: Seq) -> list[int]:
    lam = left_embedding(x, s)
    rho = right_embedding(x, s)
    return [li for li, ri in zip(lam.image, rho.image) if li == ri]


def is_essential_for_pair(s: Seq, i: int, x: Seq, j: int) -> bool:
    if not 1 <= i <= len(s):
        raise IndexError("index %d outside 1..%d of S" % (i, len(s)))
    if not 1 <= j <= len(x):
        raise IndexError("index %d outside 1..%d of X" % (j, len(x)))
    return left_embedding(x, s)(j) == i == right_embedding(x, s)(j)


def first_inessential_index(s: Seq, inputs: Sequence[Seq]) -> int | None:
    """Smallest index of ``S`` essential for no input, or None.

    Raises NotSubsequenceError if some input is not contained in ``S``.
    """
    covered = bytearray(len(s) + 1)
    for x in inputs:
        for i in essential_indices(s, x):
            covered[i] = 1
    for i in range(1, len(s) + 1):
        if not covered[i]:
            return i
    return None


def verify_minimal(s: Seq, inputs: Sequence[Seq]) -> bool:
    try:
        return first_inessential_index(s, inputs) is None
    except NotSubsequenceError:
        return False
