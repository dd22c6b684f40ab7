"""Ranking and unranking between N^k and N.

``phi`` ranks the monotone cone, ``psi`` ranks all of N^k; both are exact
sums of binomial coefficients. Unranking reads the rank as a combinatorial
number system: with ``c_i = k - i + m_i`` the terms of ``phi`` become
``C(c_i, k - i + 1)`` with strictly decreasing ``c_i``, so a greedy digit
extraction recovers the tuple.
"""
from itertools import accumulate
from typing import Any, Dict, Iterator, Sequence

from .bigbinom import binom, largest_index_below
from .monotone_order import (
    Coords,
    check_dim,
    check_monotone,
    check_tuple,
    fold,
    minimum,
    successor,
)

SPACES = ("cone", "full")


def _check_rank(x: int) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise ValueError(f"rank must be a nonnegative integer, got {x!r}")
    return x


def phi(m: Sequence[int]) -> int:
    """Rank of a monotone tuple: ``sum_i C(k - i + m_i, k - i + 1)``."""
    m = check_monotone(m)
    k = len(m)
    return sum(binom(k - t - 1 + v, k - t) for t, v in enumerate(m))


def psi(n: Sequence[int]) -> int:
    """Rank of an arbitrary tuple: ``sum_i C(i - 1 + n_1 + ... + n_i, i)``."""
    n = check_tuple(n)
    return sum(binom(i + s, i + 1) for i, s in enumerate(accumulate(n)))


def combinadic(x: int, k: int) -> Coords:
    """Strictly decreasing ``(c_1, ..., c_k)`` with ``sum C(c_i, k-i+1) == x``."""
    rem = _check_rank(x)
    digits = []
    for j in range(check_dim(k), 0, -1):
        c = largest_index_below(rem, j)
        rem -= binom(c, j)
        digits.append(c)
    return tuple(digits)


def unrank_phi(x: int, k: int) -> Coords:
    """The monotone k-tuple whose :func:`phi` rank is ``x``."""
    c = combinadic(x, k)
    return tuple(ci - (k - 1 - t) for t, ci in enumerate(c))


def unrank_psi(x: int, k: int) -> Coords:
    """The k-tuple whose :func:`psi` rank is ``x``."""
    return fold(unrank_phi(x, k))


class TupleStream:
    """Endless rank-ordered stream of k-tuples.

    ``space="cone"`` yields the monotone tuples in lexicographic order;
    ``space="full"`` yields their folds, which walks N^k in :func:`psi`
    order. The element produced at position ``x`` has rank ``x``.

    A stream is single-owner mutable state. :meth:`snapshot` returns a
    JSON-safe dict that :meth:`restore` turns back into an equivalent stream.
    """

    def __init__(self, k: int, space: str = "full", start: int = 0):
        if space not in SPACES:
            raise ValueError(f"space must be one of {SPACES}, got {space!r}")
        self.k = check_dim(k)
        self.space = space
        self.index = _check_rank(start)
        self._current = unrank_phi(start, k) if start else minimum(k)

    def __iter__(self) -> "TupleStream":
        return self

    def __next__(self) -> Coords:
        out = self._current
        self._current = successor(out)
        self.index += 1
        return fold(out) if self.space == "full" else out

    def peek(self) -> Coords:
        return fold(self._current) if self.space == "full" else self._current

    def snapshot(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "space": self.space,
            "index": str(self.index),
            "current": [str(v) for v in self._current],
        }

    @classmethod
    def restore(cls, state: Dict[str, Any]) -> "TupleStream":
        stream = cls(state["k"], state["space"])
        current = check_monotone(int(v) for v in state["current"])
        index = _check_rank(int(state["index"]))
        if len(current) != stream.k or phi(current) != index:
            raise ValueError("snapshot is inconsistent: tuple rank != index")
        stream._current = current
        stream.index = index
        return stream


def enumerate_tuples(k: int, space: str = "full", start: int = 0) -> Iterator[Coords]:
    """Convenience wrapper returning a :class:`TupleStream`."""
    return TupleStream(k, space, start)
