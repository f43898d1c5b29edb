import itertools
import random

import pytest
from hypothesis import given, strategies as st

from mcs.core import (EmbeddingMap, ExtInterval, NotSubsequenceError, delete_index,
                      is_subsequence, left_embedding, longest_common_prefix,
                      right_embedding, substring)

words = st.text(alphabet="abc", max_size=10)


def subset_oracle(x, s):
    return any("".join(s[i] for i in idx) == x
               for idx in itertools.combinations(range(len(s)), len(x)))


@pytest.mark.parametrize("x, s, expected", [
    ("", "abc", True),
    ("abab", "abcbacb", True),
    ("abab", "abcbcb", False),
])
def test_is_subsequence_examples(x, s, expected):
    assert is_subsequence(x, s) is expected


def test_is_subsequence_matches_index_subsets():
    rng = random.Random(5)
    for _ in range(300):
        s = "".join(rng.choice("ab") for _ in range(rng.randint(0, 12)))
        x = "".join(rng.choice("ab") for _ in range(rng.randint(0, 5)))
        assert is_subsequence(x, s) == subset_oracle(x, s)


def test_left_embedding():
    assert left_embedding("abab", "ababacbcb") == [1, 2, 3, 4]
    assert left_embedding("ac", "abccbacc") == [1, 3]
    e = left_embedding("", "abc")
    assert list(e) == [] and e(0) == 0 and e(1) == 4


def test_right_embedding():
    assert right_embedding("abab", "ababacbcb") == [3, 4, 5, 9]
    assert right_embedding("acbcb", "ababacbcb") == [5, 6, 7, 8, 9]
    assert right_embedding("a", "a") == [1]


def test_embeddings_reject_non_subsequence():
    with pytest.raises(NotSubsequenceError):
        left_embedding("abab", "abcbcb")
    with pytest.raises(NotSubsequenceError):
        right_embedding("abab", "abcbcb")


def test_embedding_sentinels():
    e = right_embedding("ab", "xaxbx")
    assert (e(0), e(1), e(2), e(3)) == (0, 2, 4, 6)
    with pytest.raises(IndexError):
        e(4)


@pytest.mark.parametrize("a, b, p", [("abc", "abd", 2), ("xay", "zaw", 0), ("abc", "abc", 3)])
def test_longest_common_prefix(a, b, p):
    assert longest_common_prefix(a, b) == p


def test_substring_and_intervals():
    assert substring("abcde", 2, 4) == "bcd"
    assert substring("abcde", 4, 2) == ""
    assert ExtInterval.closed_open(0, 3).of("abcde") == "ab"
    assert ExtInterval.open(0, 6).of("abcde") == "abcde"
    assert ExtInterval.open(2, 3).is_empty(5)
    assert list(ExtInterval(0, 6).indices(5)) == [1, 2, 3, 4, 5]
    assert str(ExtInterval.closed_open(1, 4)) == "[1,4)"


def all_embeddings(x, s):
    for idx in itertools.combinations(range(1, len(s) + 1), len(x)):
        if all(s[i - 1] == c for i, c in zip(idx, x)):
            yield idx


@given(words, words)
def test_every_embedding_is_sandwiched(s, x):
    if not is_subsequence(x, s):
        return
    lam, rho = left_embedding(x, s), right_embedding(x, s)
    for phi in all_embeddings(x, s):
        assert all(l <= p <= r for l, p, r in zip(lam, phi, rho))
    assert list(rho) == sorted(set(rho))
    if x:
        assert rho(1) >= lam(1)


@given(words, st.data())
def test_embeddings_are_valid(s, data):
    x = "".join(c for c in s if data.draw(st.booleans()))
    for e in (left_embedding(x, s), right_embedding(x, s)):
        assert all(s[i - 1] == c for i, c in zip(e, x))
        assert list(e) == sorted(set(e))
        assert isinstance(e, EmbeddingMap)


def test_tuple_sequences():
    assert right_embedding((1, 2), (2, 1, 2, 1, 2)) == [4, 5]
    assert delete_index((1, 2, 3), 2) == (1, 3)
