"""Poincaré polynomial, Betti numbers and Euler characteristic of ASD compactifications."""

from __future__ import annotations

from math import comb

from .complexes import SimplicialComplex, require_asd, size
from .errors import NonExactDivision


class IntegerPolynomial:
    """Polynomial in q with integer coefficients, ``coeffs[d]`` = coefficient of q^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q):
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntegerPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntegerPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntegerPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                 for i in range(m))

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return self + (-other)

    def reversed(self, degree: int) -> IntegerPolynomial:
        """q^degree * P(1/q)."""
        cs = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return IntegerPolynomial(cs[::-1])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            mag = abs(c)
            body = str(mag) if not mon else (mon if mag == 1 else f"{mag}{mon}")
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"IntegerPolynomial({list(self.coeffs)})"


def _divide_by_q(cs: list[int]) -> list[int]:
    if cs and cs[0]:
        raise NonExactDivision("numerator has a nonzero constant term")
    return cs[1:]


def _divide_by_q_minus_1(cs: list[int]) -> list[int]:
    # synthetic division by (q - 1), highest degree first
    if not cs:
        return []
    out = [0] * (len(cs) - 1)
    carry = 0
    for d in range(len(cs) - 1, 0, -1):
        carry += cs[d]
        out[d - 1] = carry
    if carry + cs[0]:
        raise NonExactDivision("numerator is not divisible by q - 1")
    return out


def face_polynomial(K: SimplicialComplex) -> IntegerPolynomial:
    """Sum over faces (including the empty one) of q^|face|."""
    cs = [0] * (K.n + 1)
    for f in K.faces:
        cs[size(f)] += 1
    return IntegerPolynomial(cs)


def poincare_polynomial(K: SimplicialComplex) -> IntegerPolynomial:
    """((1 + q)^(n-1) - sum over faces of q^|face|) / (q (q - 1))."""
    require_asd(K)
    n = K.n
    num = [comb(n - 1, d) if d <= n - 1 else 0 for d in range(n + 1)]
    for d, c in enumerate(face_polynomial(K).coeffs):
        num[d] -= c
    return IntegerPolynomial(_divide_by_q_minus_1(_divide_by_q(num)))


def projective_poincare(m: int) -> IntegerPolynomial:
    """Poincaré polynomial of the point-plus-boundary complex on m vertices: 1 + ... + q^(m-3)."""
    return IntegerPolynomial([1] * (m - 2))


def betti_numbers(K: SimplicialComplex) -> list[int]:
    """Even Betti numbers b_0, b_2, ..., b_{2(n-3)}."""
    return list(poincare_polynomial(K).coeffs)


def euler_characteristic(K: SimplicialComplex) -> int:
    return poincare_polynomial(K)(1)
