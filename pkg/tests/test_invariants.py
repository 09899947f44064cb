import random

import pytest

from asdcomp.complexes import complex_from_facets, enumerate_asd, facets, flip, projective_complex
from asdcomp.errors import NotASD
from asdcomp.invariants import (
    IntegerPolynomial,
    betti_numbers,
    euler_characteristic,
    face_polynomial,
    poincare_polynomial,
    projective_poincare,
)
from fixtures import PENTAGON, STAR, TRIANGLE
from oracles import poincare_by_definition



def test_examples():
    assert poincare_polynomial(projective_complex(5)) == [1, 1, 1]
    assert str(poincare_polynomial(projective_complex(5))) == "1 + q + q^2"
    assert poincare_polynomial(TRIANGLE) == [1, 1]
    assert poincare_polynomial(PENTAGON) == [1, 5, 1]
    assert betti_numbers(STAR) == [1, 1]
    assert betti_numbers(enumerate_asd(3)[0]) == [1]
    assert euler_characteristic(TRIANGLE) == 2
    assert euler_characteristic(enumerate_asd(3)[0]) == 1


@pytest.mark.parametrize("n", range(4, 10))
def test_projective_spaces(n):
    P = poincare_polynomial(projective_complex(n))
    assert P == [1] * (n - 2)
    assert euler_characteristic(projective_complex(n)) == n - 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_against_sympy_division(n):
    Ks = enumerate_asd(n)
    if n == 6:
        Ks = random.Random(0).sample(Ks, 100)
    for K in Ks:
        P = poincare_polynomial(K)
        assert list(P.coeffs) == poincare_by_definition(n, K.faces)
        assert P.reversed(n - 3) == P
        assert P.coeffs[0] == P.coeffs[-1] == 1
        assert all(c >= 0 for c in P.coeffs)
        assert P(1) == sum(P.coeffs)


def test_flip_recurrence():
    # P(K + B) - P(K + A) = P(P_{|A|+1}) - P(P_{|B|+1}) where B = A^c
    for K in enumerate_asd(5):
        for A in facets(K):
            a = bin(A).count("1")
            if a < 2:
                continue
            b = 5 - a
            lhs = poincare_polynomial(flip(K, A)) - poincare_polynomial(K)
            rhs = projective_poincare(a + 1) - projective_poincare(b + 1)
            assert lhs == rhs


def test_non_asd_rejected():
    with pytest.raises(NotASD):
        poincare_polynomial(complex_from_facets(5, [[1, 2]]))


def test_polynomial_type():
    p = IntegerPolynomial([1, -2, 0, 3, 0, 0])
    assert p.coeffs == (1, -2, 0, 3)
    assert p.degree == 3
    assert str(p) == "1 - 2q + 3q^3"
    assert str(-p) == "-1 + 2q - 3q^3"
    assert str(IntegerPolynomial([])) == "0"
    assert p(2) == 1 - 4 + 24
    assert (p + IntegerPolynomial([0, 2])) == [1, 0, 0, 3]
    assert p.reversed(3) == [3, 0, -2, 1]
    assert face_polynomial(projective_complex(5)) == [1, 5, 6, 4]
