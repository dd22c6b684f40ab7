"""Lexicographic order on N^k, the monotone cone and the fold bijection.

Tuples are plain Python tuples of nonnegative ints. Coordinates are named
1-based in docstrings (``n_1 .. n_k``) and stored 0-based.
"""
from itertools import accumulate
from typing import Sequence, Tuple

LESS = -1
EQUAL = 0
GREATER = 1

Coords = Tuple[int, ...]


def check_dim(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"dimension must be a positive integer, got {k!r}")
    return k


def check_tuple(n: Sequence[int]) -> Coords:
    n = tuple(n)
    if not n:
        raise ValueError("tuples need at least one coordinate")
    for v in n:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"coordinates must be nonnegative integers, got {v!r}")
    return n


def lex_cmp(m: Sequence[int], n: Sequence[int]) -> int:
    """Compare two k-tuples at their first differing coordinate.

    Returns ``LESS``, ``EQUAL`` or ``GREATER`` (-1, 0, 1). Works on any
    tuples of equal length, monotone or not.
    """
    if len(m) != len(n):
        raise ValueError(f"dimension mismatch: {len(m)} != {len(n)}")
    for a, b in zip(m, n):
        if a != b:
            return LESS if a < b else GREATER
    return EQUAL


def is_monotone(n: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(n, n[1:]))


def check_monotone(m: Sequence[int]) -> Coords:
    m = check_tuple(m)
    if not is_monotone(m):
        raise ValueError(f"tuple is not nonincreasing: {m}")
    return m


def minimum(k: int) -> Coords:
    """Least element of the monotone cone of dimension ``k``: all zeros."""
    return (0,) * check_dim(k)


def successor(m: Sequence[int]) -> Coords:
    """Immediate lexicographic successor of ``m`` inside the monotone cone.

    Find the trailing block of equal coordinates ``m_r = ... = m_k``, bump
    ``m_r`` by one and zero everything after it. When the whole tuple is
    constant the block starts at ``r = 1``.
    """
    m = check_monotone(m)
    r = len(m) - 1
    while r > 0 and m[r - 1] == m[r]:
        r -= 1
    return m[:r] + (m[r] + 1,) + (0,) * (len(m) - r - 1)


def fold(n: Sequence[int]) -> Coords:
    """Map a monotone tuple to ``(n_k, n_{k-1} - n_k, ..., n_1 - n_2)``."""
    n = check_monotone(n)
    rev = n[::-1]
    return (rev[0],) + tuple(b - a for a, b in zip(rev, rev[1:]))


def unfold(n: Sequence[int]) -> Coords:
    """Inverse of :func:`fold`; coordinate ``i`` is ``n_1 + ... + n_{k-i+1}``."""
    n = check_tuple(n)
    return tuple(accumulate(n))[::-1]
