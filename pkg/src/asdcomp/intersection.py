"""Top intersection numbers of psi classes, |d_1, ..., d_n|_K.

Three independent routes are provided and can be cross-checked:

* :func:`intersection_recursion` contracts pairs of points and recurses down
  to the single point n = 3;
* :func:`intersection_formula` is the closed signed count of partitions;
* :func:`intersection_ring` multiplies psi classes in the Chow ring and
  evaluates the top-degree result.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from .chowring import evaluate_top, multiply, psi_class, unit
from .complexes import (
    SimplicialComplex,
    contract,
    relabel,
    require_asd,
    resource_limit,
)
from .errors import ASDError, Defect, DegreeMismatch, NotDistinct, TooLarge

PsiMonomial = tuple[int, ...]

METHODS = ("recursion", "formula", "ring")


def check_monomial(K: SimplicialComplex, d: Iterable[int]) -> PsiMonomial:
    d = tuple(int(x) for x in d)
    if len(d) != K.n:
        raise DegreeMismatch(f"monomial has {len(d)} exponents, complex has {K.n} vertices")
    if any(x < 0 for x in d):
        raise DegreeMismatch("exponents must be nonnegative")
    if sum(d) != K.n - 3:
        raise DegreeMismatch(f"exponents sum to {sum(d)}, expected n - 3 = {K.n - 3}")
    return d


def _contract_exponents(d: PsiMonomial, a: int, b: int, merged: int,
                        extra: dict[int, int] | None = None) -> PsiMonomial:
    # merged point sits at min(a, b); the other slot disappears
    lo, hi = min(a, b), max(a, b)
    out = []
    for v, x in enumerate(d):
        if v == hi:
            continue
        if v == lo:
            out.append(merged)
        else:
            out.append((extra or {}).get(v, x))
    return tuple(out)


def _term(K: SimplicialComplex, a: int, b: int, d: PsiMonomial) -> int:
    pair = (1 << a) | (1 << b)
    if pair not in K.faces:
        return 0
    return _recurse(contract(K, pair), d)


def _step(K: SimplicialComplex, d: PsiMonomial, i: int, j: int, k: int) -> int:
    t1 = _term(K, i, j, _contract_exponents(d, i, j, d[i] + d[j] - 1))
    t2 = _term(K, i, k, _contract_exponents(d, i, k, d[i] + d[k] - 1))
    t3 = _term(K, j, k, _contract_exponents(d, j, k, d[j] + d[k], {i: d[i] - 1}))
    return t1 + t2 - t3


@lru_cache(maxsize=None)
def _recurse(K: SimplicialComplex, d: PsiMonomial) -> int:
    n = K.n
    if n == 3:
        return 1
    i = next(v for v, x in enumerate(d) if x >= 1)
    j, k = [v for v in range(n) if v != i][:2]
    return _step(K, d, i, j, k)


def intersection_recursion(K: SimplicialComplex, d: Iterable[int],
                           choice: tuple[int, int, int] | None = None) -> int:
    """Intersection number by the contraction recursion.

    ``choice`` optionally fixes the 1-based (i, j, k) of the first step; it
    needs d_i >= 1.  Deeper steps always use the smallest admissible indices.
    """
    d = check_monomial(K, d)
    require_asd(K)
    if choice is None:
        return _recurse(K, d)
    i, j, k = (c - 1 for c in choice)
    if len({i, j, k}) != 3 or not all(0 <= v < K.n for v in (i, j, k)):
        raise NotDistinct(f"bad recursion choice {choice}")
    if d[i] < 1:
        raise ASDError(f"recursion point {i + 1} has exponent 0")
    return _step(K, d, i, j, k)


def intersection_formula(K: SimplicialComplex, d: Iterable[int]) -> int:
    """Intersection number as a signed count of partitions I + J = [n - 2]."""
    d = check_monomial(K, d)
    require_asd(K)
    n = K.n
    support = [v for v in range(n) if d[v]]
    m = len(support)
    order = support + [v for v in range(n) if not d[v]]
    images = [0] * n
    for pos, v in enumerate(order):
        images[v] = pos + 1
    L = relabel(K, images)
    dd = [d[v] for v in order]

    base = (1 << (n - 2)) - 1
    anchor = 1 << m
    last, second = 1 << (n - 1), 1 << (n - 2)
    free = base & ~anchor
    total = 0
    J = free
    while True:
        I = base & ~J
        if I in L.faces and J in L.faces:
            plus = (J | last) in L.faces and (J | second) in L.faces
            minus = (I | last) in L.faces and (I | second) in L.faces
            if plus and minus:
                raise Defect("both sign conditions hold; complex is not ASD")
            if plus or minus:
                N = J.bit_count() + sum(dd[q] for q in range(m) if J >> q & 1)
                total += (-1) ** N * (1 if plus else -1)
        if J == 0:
            break
        J = (J - 1) & free
    return total


def intersection_ring(K: SimplicialComplex, d: Iterable[int],
                      aux: dict[int, tuple[int, int]] | None = None) -> int:
    """Intersection number by multiplying psi classes in the Chow ring.

    ``aux`` maps a 1-based point i to the auxiliary pair (j, k) used for
    psi_i = (i j) + (i k) - (j k); the default is the two smallest other points.
    """
    d = check_monomial(K, d)
    require_asd(K)
    n = K.n
    x = unit(K)
    for i in range(1, n + 1):
        if not d[i - 1]:
            continue
        if aux and i in aux:
            j, k = aux[i]
        else:
            j, k = [v for v in range(1, n + 1) if v != i][:2]
        psi = psi_class(K, i, j, k)
        for _ in range(d[i - 1]):
            x = multiply(x, psi)
    return evaluate_top(x)


_DISPATCH = {
    "recursion": intersection_recursion,
    "formula": intersection_formula,
    "ring": intersection_ring,
}


def intersection_number(K: SimplicialComplex, d: Iterable[int], method: str = "recursion") -> int:
    try:
        fn = _DISPATCH[method]
    except KeyError:
        raise ASDError(f"unknown method {method!r}; choose from {METHODS}") from None
    return fn(K, d)


def top_monomials(n: int) -> Iterator[PsiMonomial]:
    """All exponent vectors of length n summing to n - 3, in descending lexicographic order."""
    total = n - 3

    def rec(slots: int, left: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (left,)
            return
        for x in range(left, -1, -1):
            for rest in rec(slots - 1, left - x):
                yield (x,) + rest

    yield from rec(n, total)


def intersection_table(K: SimplicialComplex, method: str = "recursion") -> dict[PsiMonomial, int]:
    if K.n > resource_limit(9):
        raise TooLarge(f"psi table guard: n={K.n} exceeds {resource_limit(9)}")
    require_asd(K)
    return {d: intersection_number(K, d, method) for d in top_monomials(K.n)}


@dataclass
class CrossCheckReport:
    complex: SimplicialComplex
    rows: list[tuple[PsiMonomial, int, int, int]] = field(default_factory=list)

    @property
    def disagreements(self) -> list[tuple[PsiMonomial, int, int, int]]:
        return [r for r in self.rows if not r[1] == r[2] == r[3]]

    @property
    def ok(self) -> bool:
        return not self.disagreements


def cross_check(K: SimplicialComplex, monomials: Sequence[PsiMonomial] | None = None) -> CrossCheckReport:
    """Run all three methods on every top monomial (or the given ones)."""
    if K.n > resource_limit(8):
        raise TooLarge(f"cross-check guard: n={K.n} exceeds {resource_limit(8)}")
    require_asd(K)
    report = CrossCheckReport(K)
    for d in monomials if monomials is not None else top_monomials(K.n):
        report.rows.append((tuple(d), intersection_recursion(K, d),
                            intersection_formula(K, d), intersection_ring(K, d)))
    return report


def clear_caches() -> None:
    """Drop memoized recursion values and ring products."""
    from .chowring import _times_edge

    _recurse.cache_clear()
    _times_edge.cache_clear()


__all__ = [
    "CrossCheckReport",
    "METHODS",
    "PsiMonomial",
    "check_monomial",
    "clear_caches",
    "cross_check",
    "intersection_formula",
    "intersection_number",
    "intersection_recursion",
    "intersection_ring",
    "intersection_table",
    "top_monomials",
]
