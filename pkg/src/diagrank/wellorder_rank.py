"""Rank elements of a successor-generated linear order by counting.

If a linear order is infinite and every element has finitely many strict
predecessors, sending each element to that count is a bijection onto N.
An :class:`OrderSpec` describes such an order by its least element, a
successor function and a three-way comparator; :func:`rank_by_counting`
evaluates the count by walking, and :func:`verify_prefix_bijection` checks
the order's hypotheses mechanically on a finite prefix.

Specs are used read-only. A spec whose ``next`` or ``compare`` closes over
mutable state must be synchronized by its owner.
"""
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cmp_to_key
from itertools import product
from typing import Any, Callable, Iterable, List, Optional

from . import monotone_order as mo


class NotReached(LookupError):
    """The walk from ``first`` did not hit the target within the budget."""


@dataclass(frozen=True)
class OrderSpec:
    """Access interface to a linear order.

    ``compare(a, b)`` returns a negative, zero or positive int. ``sample`` is
    an optional finite collection of elements drawn independently of
    ``next``; without it a ``next`` that silently skips elements cannot be
    detected.
    """

    compare: Callable[[Any, Any], int]
    first: Any
    next: Callable[[Any], Any]
    sample: Optional[Iterable[Any]] = None
    name: str = "order"


@dataclass(frozen=True)
class Violation:
    index: int
    kind: str
    detail: str


@dataclass
class VerificationReport:
    name: str
    checked: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> Optional[Violation]:
        if not self.violations:
            return None
        return min(self.violations, key=lambda v: v.index)

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.name}: ranks 0..{self.checked - 1} verified"
        v = self.first_violation
        return f"FAIL {self.name}: {v.kind} at rank {v.index}: {v.detail}"


def _sign(c: int) -> int:
    return (c > 0) - (c < 0)


def rank_by_counting(spec: OrderSpec, a: Any, budget: int) -> int:
    """Number of elements strictly below ``a``, counted along the walk.

    Raises :class:`NotReached` when ``a`` is not met within ``budget``
    applications of ``next``, including when the walk steps past it.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    x = spec.first
    below = 0
    for step in range(budget + 1):
        c = _sign(spec.compare(x, a))
        if c == 0:
            return below
        if c > 0:
            raise NotReached(f"walk passed over the target after {step} steps")
        below += 1
        if step < budget:
            x = spec.next(x)
    raise NotReached(f"target not reached within {budget} steps")


def _back_offsets(i: int):
    d = 1
    while d <= i:
        yield i - d
        d <<= 1
    if i > 0:
        yield 0


def verify_prefix_bijection(spec: OrderSpec, n: int) -> VerificationReport:
    """Walk the first ``n`` elements and check that they get ranks ``0..n-1``.

    Checks performed, each reporting the rank where it first fails:

    * ``irreflexive``: ``compare(x, x) == 0`` for each walked element;
    * ``not-increasing``: each element is above its predecessor, both ways;
    * ``transitivity``: each element is above earlier elements sampled at
      power-of-two distances back and at the start of the walk;
    * ``gap``: every element of ``spec.sample`` that is not above the last
      walked element occurs in the walk. A missing one would take the rank
      at which it should have been inserted.
    """
    if n < 1:
        raise ValueError("n must be positive")
    report = VerificationReport(spec.name, n)
    walk = [spec.first]
    for _ in range(n - 1):
        walk.append(spec.next(walk[-1]))

    cmp = spec.compare
    for i, x in enumerate(walk):
        if _sign(cmp(x, x)) != 0:
            report.violations.append(Violation(i, "irreflexive", f"{x!r} compares unequal to itself"))
            break
        if i == 0:
            continue
        prev = walk[i - 1]
        if _sign(cmp(prev, x)) != -1 or _sign(cmp(x, prev)) != 1:
            report.violations.append(
                Violation(i, "not-increasing", f"{x!r} is not above its predecessor {prev!r}"))
            break
        bad = next((j for j in _back_offsets(i) if _sign(cmp(walk[j], x)) != -1), None)
        if bad is not None:
            report.violations.append(Violation(
                i, "transitivity",
                f"{walk[bad]!r} (rank {bad}) is not below {x!r} although a chain links them"))
            break
    if report.violations:
        # ranks beyond a broken chain are meaningless, so skip the gap search
        return report

    if spec.sample is not None:
        key = cmp_to_key(cmp)
        keyed = [key(x) for x in walk]
        last = walk[-1]
        gaps = []
        for s in spec.sample:
            if _sign(cmp(s, last)) > 0:
                continue
            pos = bisect_left(keyed, key(s))
            if _sign(cmp(walk[pos], s)) != 0:
                gaps.append((pos, s))
        if gaps:
            pos, s = min(gaps, key=lambda g: g[0])
            report.violations.append(Violation(
                pos, "gap", f"{s!r} belongs at rank {pos} but the walk skips it"))
    return report


def naturals_spec(sample_size: Optional[int] = 10_000) -> OrderSpec:
    """The naturals under ``<`` with ``next = +1``."""
    return OrderSpec(
        compare=lambda a, b: (a > b) - (a < b),
        first=0,
        next=lambda a: a + 1,
        sample=range(sample_size) if sample_size else None,
        name="naturals",
    )


def monotone_sample(k: int, bound: int) -> List[mo.Coords]:
    """Every monotone k-tuple with coordinates at most ``bound``."""
    return [t for t in product(range(bound + 1), repeat=k) if mo.is_monotone(t)]


def monotone_spec(k: int, sample_bound: Optional[int] = None,
                  successor: Callable[[Any], Any] = mo.successor) -> OrderSpec:
    """The monotone cone of dimension ``k`` under lexicographic order."""
    return OrderSpec(
        compare=mo.lex_cmp,
        first=mo.minimum(k),
        next=successor,
        sample=monotone_sample(k, sample_bound) if sample_bound is not None else None,
        name=f"monotone-cone k={k}",
    )


def _skipping_next(a: int) -> int:
    return a + 2 if a == 4 else a + 1


def _cyclic_compare(a: int, b: int) -> int:
    # agrees with < except that 0 is placed above everything from 10 on
    if a == 0 and b >= 10:
        return 1
    if b == 0 and a >= 10:
        return -1
    return (a > b) - (a < b)


def broken_specs(sample_size: int = 100) -> List[OrderSpec]:
    """Three naturals orders that each break one hypothesis.

    * ``skipping-next``: ``next(4) == 6``, so 5 is never walked (gap at rank 5);
    * ``non-transitive``: 0 < 1 < ... < 10 but 10 < 0 (fails at rank 10);
    * ``non-minimal-first``: the walk starts at 3, leaving 0 unranked (gap at rank 0).
    """
    sample = range(sample_size)
    natural = naturals_spec(None)
    return [
        OrderSpec(natural.compare, 0, _skipping_next, sample, "skipping-next"),
        OrderSpec(_cyclic_compare, 0, natural.next, sample, "non-transitive"),
        OrderSpec(natural.compare, 3, natural.next, sample, "non-minimal-first"),
    ]
