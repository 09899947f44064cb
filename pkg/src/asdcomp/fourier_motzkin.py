"""Exact Fourier-Motzkin elimination for small systems ``A x <= b``.

Everything is done over :class:`fractions.Fraction`.  Each derived row keeps
the nonnegative multipliers of the original rows it was built from, so an
infeasible system comes back with a Farkas certificate ``y >= 0`` satisfying
``y A = 0`` and ``y b < 0``.  Chernikov's rule (a row combining more than
``k + 1`` original rows after ``k`` eliminations is redundant) keeps the row
count manageable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Defect


@dataclass
class _Row:
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    mult: dict[int, Fraction] = field(default_factory=dict)


@dataclass(frozen=True)
class FMResult:
    """Outcome of :func:`solve`: a feasible point or a Farkas certificate."""

    point: tuple[Fraction, ...] | None
    certificate: dict[int, Fraction] | None

    @property
    def feasible(self) -> bool:
        return self.point is not None


def _normalize(row: _Row) -> _Row:
    scale = next((abs(c) for c in row.coeffs if c), None)
    if scale is None or scale == 1:
        return row
    return _Row(tuple(c / scale for c in row.coeffs), row.rhs / scale,
                {k: v / scale for k, v in row.mult.items()})


def _dedupe(rows: list[_Row]) -> list[_Row]:
    # Drop a row only if a parallel one is at least as tight and was built from
    # a subset of its original rows; anything weaker breaks Chernikov pruning.
    groups: dict[tuple[Fraction, ...], list[_Row]] = {}
    for r in rows:
        kept = groups.setdefault(r.coeffs, [])
        support = r.mult.keys()
        if any(o.rhs <= r.rhs and o.mult.keys() <= support for o in kept):
            continue
        kept[:] = [o for o in kept if not (r.rhs <= o.rhs and support <= o.mult.keys())]
        kept.append(r)
    return [r for kept in groups.values() for r in kept]


def _combine(p: _Row, q: _Row, v: int) -> _Row:
    a, c = p.coeffs[v], -q.coeffs[v]
    coeffs = tuple(c * x + a * y for x, y in zip(p.coeffs, q.coeffs))
    mult = {k: c * w for k, w in p.mult.items()}
    for k, w in q.mult.items():
        mult[k] = mult.get(k, 0) + a * w
    return _normalize(_Row(coeffs, c * p.rhs + a * q.rhs, mult))


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(math.floor(hi))
    c = Fraction(math.ceil(lo))
    if hi is None or c <= hi:
        return c
    return (lo + hi) / 2


def solve(A: list[list[Fraction | int]], b: list[Fraction | int]) -> FMResult:
    """Decide feasibility of ``A x <= b`` and return a witness or certificate."""
    nvars = len(A[0]) if A else 0
    rows = [_normalize(_Row(tuple(Fraction(x) for x in a), Fraction(r), {i: Fraction(1)}))
            for i, (a, r) in enumerate(zip(A, b))]
    stages: list[tuple[int, list[_Row]]] = []
    remaining = set(range(nvars))
    eliminated = 0

    while True:
        live = []
        for r in rows:
            if any(r.coeffs):
                live.append(r)
            elif r.rhs < 0:
                return FMResult(None, {k: v for k, v in r.mult.items() if v})
        rows = _dedupe(live)
        if not remaining:
            break
        # cheapest variable to eliminate next
        def cost(v: int) -> int:
            pos = sum(1 for r in rows if r.coeffs[v] > 0)
            neg = sum(1 for r in rows if r.coeffs[v] < 0)
            return pos * neg - pos - neg
        v = min(sorted(remaining), key=cost)
        stages.append((v, rows))
        remaining.discard(v)
        eliminated += 1
        pos = [r for r in rows if r.coeffs[v] > 0]
        neg = [r for r in rows if r.coeffs[v] < 0]
        nxt = [r for r in rows if r.coeffs[v] == 0]
        for p in pos:
            for q in neg:
                if len(p.mult.keys() | q.mult.keys()) > eliminated + 1:
                    continue
                nxt.append(_combine(p, q, v))
        rows = nxt

    x: list[Fraction | None] = [None] * nvars
    for v, stage_rows in reversed(stages):
        lo = hi = None
        for r in stage_rows:
            a = r.coeffs[v]
            if not a:
                continue
            rest = r.rhs - sum(c * x[j] for j, c in enumerate(r.coeffs) if c and j != v)
            bound = rest / a
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None and lo > hi:
            raise Defect("back-substitution found an empty interval")
        x[v] = _pick(lo, hi)
    point = tuple(Fraction(0) if t is None else t for t in x)
    for a, r in zip(A, b):
        if sum(Fraction(c) * t for c, t in zip(a, point)) > r:
            raise Defect("Fourier-Motzkin witness violates a constraint")
    return FMResult(point, None)
