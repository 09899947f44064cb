"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is echoed in the pytest terminal
summary.  Running this file directly executes all criteria and prints the
same lines.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from asdcomp.chowring import (  # noqa: E402
    cycle_class,
    degree1_group,
    edge_class,
    eq_via_pairing,
    evaluate_top,
    graded_group,
    multiply,
    psi_class,
    unit,
)
from asdcomp.complexes import (  # noqa: E402
    alexander_dual,
    contract,
    enumerate_asd,
    facets,
    flip,
    is_asd,
    projective_complex,
    relabel,
)
from asdcomp.intersection import (  # noqa: E402
    clear_caches,
    cross_check,
    intersection_formula,
    intersection_recursion,
    intersection_ring,
    top_monomials,
)
from asdcomp.invariants import betti_numbers, poincare_polynomial  # noqa: E402
from asdcomp.threshold import (  # noqa: E402
    LengthVector,
    find_realization,
    is_generic,
    realize_threshold,
    short_complex,
    verify_certificate,
)
from fixtures import K7, NON_THRESHOLD_6, PENTAGON, STAR, TRIANGLE  # noqa: E402

RESULTS: list[str] = []
SEED = 20240601


def record(num: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} ({detail})")


def random_threshold(rng: random.Random, n: int):
    while True:
        ls = [F(rng.randint(1, 60), rng.randint(1, 9)) for _ in range(n)]
        if 2 * max(ls) >= sum(ls):
            continue
        L = LengthVector(ls)
        if is_generic(L):
            return short_complex(L)


def distinct_threshold(rng: random.Random, n: int, count: int):
    seen, out = set(), []
    while len(out) < count:
        K = random_threshold(rng, n)
        if K.faces not in seen:
            seen.add(K.faces)
            out.append(K)
    return out


def test_criterion_01_base_values():
    clear_caches()
    t = time.perf_counter()
    methods = (intersection_recursion, intersection_formula, intersection_ring)
    got = {m.__name__: ([m(STAR, d) for d in top_monomials(4)],
                        [m(TRIANGLE, d) for d in top_monomials(4)]) for m in methods}
    elapsed = time.perf_counter() - t
    ok = all(v == ([0, 0, 0, 2], [-1, 1, 1, 1]) for v in got.values()) and elapsed < 1
    record(1, "base psi values on star and triangle, all three methods", ok, f"{elapsed:.3f}s")
    assert ok, got


def test_criterion_02_projective_poincare():
    t = time.perf_counter()
    polys = {n: poincare_polynomial(projective_complex(n)) for n in range(4, 10)}
    elapsed = time.perf_counter() - t
    ok = all(P == [1] * (n - 2) for n, P in polys.items()) and elapsed < 1
    record(2, "Poincare polynomial of P_n is 1 + q + ... + q^(n-3), n = 4..9", ok, f"{elapsed:.3f}s")
    assert ok, {n: str(P) for n, P in polys.items()}


def test_criterion_03_pentagon_betti():
    t = time.perf_counter()
    b = betti_numbers(PENTAGON)
    elapsed = time.perf_counter() - t
    ok = b == [1, 5, 1] and elapsed < 1
    record(3, "SHORT(1/5,1,1,1,1) has Betti numbers (1, 5, 1)", ok, f"{b}, {elapsed:.3f}s")
    assert ok


def test_criterion_04_three_way_agreement():
    clear_caches()
    t = time.perf_counter()
    rng = random.Random(SEED)
    complexes = enumerate_asd(5) + distinct_threshold(rng, 6, 25) + [projective_complex(7)]
    rows = bad = 0
    for K in complexes:
        report = cross_check(K)
        rows += len(report.rows)
        bad += len(report.disagreements)
    elapsed = time.perf_counter() - t
    ok = bad == 0 and elapsed < 600
    record(4, "recursion = formula = ring on all n=5, 25 random n=6 threshold, P_7", ok,
           f"{len(complexes)} complexes, {rows} monomials, {bad} disagreements, {elapsed:.1f}s")
    assert ok


def test_criterion_05_enumeration_counts():
    counts = (len(enumerate_asd(3)), len(enumerate_asd(4)), len(enumerate_asd(4, "up_to_relabeling")))
    ok = counts == (1, 8, 2)
    record(5, "ASD counts n=3: 1 labeled; n=4: 8 labeled, 2 up to relabeling", ok, f"{counts}")
    assert ok


def test_criterion_06_threshold_exhaustion_n5():
    t = time.perf_counter()
    failures = 0
    Ks = enumerate_asd(5)
    for K in Ks:
        W = realize_threshold(K)
        if W is None or short_complex(W) != K:
            failures += 1
    elapsed = time.perf_counter() - t
    ok = failures == 0 and elapsed < 60
    record(6, "every n=5 ASD complex is threshold and round-trips", ok,
           f"{len(Ks)} complexes, {failures} failures, {elapsed:.2f}s")
    assert ok


def test_criterion_07_non_threshold_n6():
    t = time.perf_counter()
    Ks = enumerate_asd(6)
    infeasible = [K for K in Ks if not find_realization(K).realizable]
    elapsed = time.perf_counter() - t
    fixture = find_realization(NON_THRESHOLD_6)
    ok = (len(infeasible) >= 1 and elapsed < 1800 and NON_THRESHOLD_6 in Ks
          and not fixture.realizable and verify_certificate(NON_THRESHOLD_6, fixture.certificate))
    record(7, "some n=6 ASD complex is not threshold", ok,
           f"{len(infeasible)} of {len(Ks)} infeasible, fixture certificate verified, {elapsed:.1f}s")
    assert ok


def test_criterion_08_linear_algebra():
    rng = random.Random(SEED + 8)
    sample = distinct_threshold(rng, 6, 25) + distinct_threshold(rng, 7, 25)
    complexes = enumerate_asd(4) + enumerate_asd(5) + sample
    problems = []
    graded_checked = 0
    for K in complexes:
        P = poincare_polynomial(K).coeffs
        rank, torsion = degree1_group(K)
        if (rank, torsion) != (P[1] if len(P) > 1 else 0, []):
            problems.append(("degree1", K, rank, torsion))
        if K.n <= 6:
            for d in range(K.n - 2):
                graded_checked += 1
                if graded_group(K, d) != (P[d], []):
                    problems.append(("graded", K, d))
    ok = not problems
    record(8, "degree-1 and graded ranks match Poincare coefficients, no torsion", ok,
           f"{len(complexes)} complexes, {graded_checked} graded pieces, {len(problems)} problems")
    assert ok, problems[:3]


def test_criterion_09_ring_fixtures():
    lhs = multiply(cycle_class(K7, [[1, 2, 3]]), cycle_class(K7, [[3, 4, 5]]))
    first = eq_via_pairing(lhs, cycle_class(K7, [[1, 2, 3, 4, 5]]))
    sq = edge_class(K7, 1, 2) ** 2
    rhs = (cycle_class(K7, [[1, 2, 3]]) + cycle_class(K7, [[1, 2, 4]])
           - cycle_class(K7, [[1, 2], [3, 4]]))
    second = eq_via_pairing(sq, rhs)
    ok = first and second and K7.is_face([1, 2, 3, 4, 5])
    record(9, "(123)(345) = (12345) and (12)^2 = (123)+(124)-(12)(34) on n=7", ok,
           f"{first}, {second}")
    assert ok


def _triples(K):
    full = (1 << K.n) - 1
    for A in range(1, full):
        if not A & 1 or A not in K.faces:
            continue
        rest = full & ~A
        B = rest
        while B:
            C = rest & ~B
            if C and (B & -B) < (C & -C) and B in K.faces and C in K.faces:
                yield A, B, C
            B = (B - 1) & rest


def property_suites(seed: int = SEED) -> dict[str, tuple[int, int]]:
    """Run every randomized property; returns name -> (cases, failures)."""
    rng = random.Random(seed)
    stats: dict[str, list[int]] = {}

    def check(name, ok):
        s = stats.setdefault(name, [0, 0])
        s[0] += 1
        s[1] += not ok

    pool = {n: enumerate_asd(n) for n in (4, 5, 6)}
    extra = [random_threshold(rng, rng.randint(7, 8)) for _ in range(40)]
    every = pool[4] + pool[5] + pool[6] + extra

    for _ in range(2500):
        K = rng.choice(every)
        check("dual involution", alexander_dual(alexander_dual(K)) == K and alexander_dual(K) == K)
        fs = [A for A in facets(K) if bin(A).count("1") >= 2]
        A = rng.choice(fs)
        L = flip(K, A)
        check("flip involution and ASD", is_asd(L) and flip(L, ((1 << K.n) - 1) ^ A) == K)
        faces = [f for f in K.faces if bin(f).count("1") >= 2]
        check("contraction ASD", is_asd(contract(K, rng.choice(faces))))
        P = poincare_polynomial(K)
        check("Poincare palindromic", P.reversed(K.n - 3) == P)

    for _ in range(600):
        K = rng.choice(pool[5] + pool[6])
        i, j, k, l = rng.sample(range(1, K.n + 1), 4)
        check("four-term identity",
              eq_via_pairing(edge_class(K, i, j) + edge_class(K, k, l),
                             edge_class(K, i, k) + edge_class(K, j, l)))
        i, j, k, j2, k2 = rng.sample(range(1, K.n + 1), 5)
        check("psi choice independence", eq_via_pairing(psi_class(K, i, j, k), psi_class(K, i, j2, k2)))

    monos = {n: list(top_monomials(n)) for n in (5, 6)}
    for _ in range(600):
        K = rng.choice(pool[5] + pool[6])
        d = rng.choice(monos[K.n])
        perm = list(range(1, K.n + 1))
        rng.shuffle(perm)
        sd = [0] * K.n
        for v in range(K.n):
            sd[perm[v] - 1] = d[v]
        check("closed formula permutation invariance",
              intersection_formula(relabel(K, perm), sd) == intersection_formula(K, d))

    for n in (3, 4, 5, 6):
        for K in enumerate_asd(n):
            for blocks in _triples(K):
                x = unit(K)
                for b in blocks:
                    if b & (b - 1):
                        x = multiply(x, cycle_class(K, [b]))
                check("triple partitions evaluate to 1", evaluate_top(x) == 1)

    return {name: (c, f) for name, (c, f) in stats.items()}


def test_criterion_10_property_suites():
    t = time.perf_counter()
    stats = property_suites()
    elapsed = time.perf_counter() - t
    total = sum(c for c, _ in stats.values())
    failures = sum(f for _, f in stats.values())
    ok = total >= 10_000 and failures == 0 and len(stats) == 8
    record(10, "randomized property suites", ok,
           f"{total} cases over {len(stats)} properties, {failures} failures, {elapsed:.1f}s")
    assert ok, stats


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
