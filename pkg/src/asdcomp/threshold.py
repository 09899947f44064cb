"""Threshold (polygon-space) complexes and their realization by length vectors."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from . import fourier_motzkin
from .complexes import (
    SimplicialComplex,
    facets,
    format_set,
    full_mask,
    require_asd,
    resource_limit,
)
from .errors import Defect, InvalidLengths, NotGeneric, TooLarge


class LengthVector:
    """Positive exact rational bar lengths (l_1, ..., l_n).

    Every entry must be shorter than the sum of the others.
    """

    __slots__ = ("lengths",)

    def __init__(self, lengths: Iterable[Fraction | int | str]):
        try:
            ls = tuple(Fraction(x) for x in lengths)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise InvalidLengths(f"cannot read lengths: {exc}") from None
        if len(ls) < 2:
            raise InvalidLengths("need at least two lengths")
        if any(x <= 0 for x in ls):
            raise InvalidLengths("lengths must be positive")
        total = sum(ls)
        for i, x in enumerate(ls, 1):
            if 2 * x >= total:
                raise InvalidLengths(f"l_{i} = {x} is not shorter than the other bars together")
        self.lengths = ls

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> Fraction:
        return sum(self.lengths, Fraction(0))

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def __getitem__(self, i: int) -> Fraction:
        return self.lengths[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LengthVector):
            return NotImplemented
        return self.lengths == other.lengths

    def __hash__(self) -> int:
        return hash(self.lengths)

    def __repr__(self) -> str:
        return "LengthVector([" + ", ".join(f"'{x}'" for x in self.lengths) + "])"

    def scaled(self, factor: Fraction | int) -> LengthVector:
        return LengthVector(x * factor for x in self.lengths)


def _subset_sums(L: LengthVector) -> list[Fraction]:
    sums = [Fraction(0)] * (1 << L.n)
    for m in range(1, 1 << L.n):
        low = m & -m
        sums[m] = sums[m ^ low] + L.lengths[low.bit_length() - 1]
    return sums


def is_generic(L: LengthVector) -> bool:
    """No subset has length sum exactly half of the total."""
    total = L.total
    return all(2 * s != total for s in _subset_sums(L))


def short_complex(L: LengthVector) -> SimplicialComplex:
    """SHORT(L): the subsets whose lengths sum to less than half the total."""
    total = L.total
    sums = _subset_sums(L)
    if any(2 * s == total for s in sums):
        raise NotGeneric(f"{L!r} lies on a wall")
    return SimplicialComplex._trusted(L.n, (m for m, s in enumerate(sums) if 2 * s < total))


def same_chamber(L1: LengthVector, L2: LengthVector) -> bool:
    if L1.n != L2.n:
        raise InvalidLengths("length vectors of different sizes")
    return short_complex(L1) == short_complex(L2)


@dataclass(frozen=True)
class ThresholdRealization:
    """Result of :func:`find_realization`.

    ``lengths`` is an integral witness with ``short_complex(lengths) == K``, or
    ``None``; in that case ``certificate`` lists nonnegative multipliers of the
    constraints (``"l_i >= 1"`` and ``"short F"``) whose combination reads
    ``0 <= negative``.
    """

    lengths: LengthVector | None
    certificate: tuple[tuple[str, Fraction], ...] = ()

    @property
    def realizable(self) -> bool:
        return self.lengths is not None


def threshold_system(K: SimplicialComplex) -> tuple[list[list[int]], list[int], list[str]]:
    """Rows of ``A l <= b`` whose solutions are the length vectors realizing K.

    Strict inequalities are made non-strict with unit slack, which is harmless
    because SHORT is invariant under scaling.  For an ASD complex the minimal
    non-faces are exactly the facet complements, so the "long" constraints
    coincide with the "short facet" ones and are not repeated.
    """
    n = K.n
    A, b, labels = [], [], []
    for i in range(n):
        A.append([-1 if j == i else 0 for j in range(n)])
        b.append(-1)
        labels.append(f"l_{i + 1} >= 1")
    for F in facets(K):
        A.append([1 if F >> j & 1 else -1 for j in range(n)])
        b.append(-2)
        labels.append(f"short {format_set(F)}")
    return A, b, labels


def find_realization(K: SimplicialComplex) -> ThresholdRealization:
    require_asd(K)
    if K.n > resource_limit(8):
        raise TooLarge(f"threshold realization guard: n={K.n} exceeds {resource_limit(8)}")
    A, b, labels = threshold_system(K)
    res = fourier_motzkin.solve(A, b)
    if not res.feasible:
        cert = tuple((labels[i], y) for i, y in sorted(res.certificate.items()))
        return ThresholdRealization(None, cert)
    denom = math.lcm(*(x.denominator for x in res.point))
    ints = [int(x * denom) for x in res.point]
    g = math.gcd(*ints)
    L = LengthVector(Fraction(x // g) for x in ints)
    if short_complex(L) != K:
        raise Defect("realization witness does not reproduce the complex")
    return ThresholdRealization(L)


def realize_threshold(K: SimplicialComplex) -> LengthVector | None:
    """A length vector L with SHORT(L) == K, or None if K is not threshold."""
    return find_realization(K).lengths


def verify_certificate(K: SimplicialComplex, certificate) -> bool:
    """Check an infeasibility certificate exactly against K's constraint system."""
    A, b, labels = threshold_system(K)
    index = {lab: i for i, lab in enumerate(labels)}
    y = [Fraction(0)] * len(A)
    for lab, w in certificate:
        if w < 0 or lab not in index:
            return False
        y[index[lab]] += Fraction(w)
    n = K.n
    combo = [sum(y[r] * A[r][j] for r in range(len(A))) for j in range(n)]
    return all(c == 0 for c in combo) and sum(yr * br for yr, br in zip(y, b)) < 0


def all_subsets_consistent(L: LengthVector, K: SimplicialComplex) -> bool:
    """Brute-force post-check: every subset is short iff it is a face."""
    total = L.total
    full = full_mask(K.n)
    sums = _subset_sums(L)
    return all((2 * sums[m] < total) == (m in K.faces) for m in range(full + 1))

