"""Integer Smith normal form (invariant factors only).

Rows are first compressed into an integer echelon basis of the same lattice,
which keeps the dense SNF step at most ``ncols x ncols`` even when thousands
of relation rows are supplied.
"""

from __future__ import annotations

from collections.abc import Iterable


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def echelon_basis(rows: Iterable[Iterable[int]], ncols: int) -> list[list[int]]:
    """A row-echelon basis of the lattice spanned by ``rows``."""
    basis: dict[int, list[int]] = {}
    for r in rows:
        row = list(r)
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)}, expected {ncols}")
        while True:
            p = next((k for k, x in enumerate(row) if x), None)
            if p is None:
                break
            if p not in basis:
                if row[p] < 0:
                    row = [-x for x in row]
                basis[p] = row
                break
            b = basis[p]
            if row[p] % b[p] == 0:
                q = row[p] // b[p]
                row = [x - q * y for x, y in zip(row, b)]
                continue
            g, s, t = _xgcd(b[p], row[p])
            bp, rp = b[p] // g, row[p] // g
            new_b = [s * x + t * y for x, y in zip(b, row)]
            row = [rp * x - bp * y for x, y in zip(b, row)]
            if new_b[p] < 0:
                new_b = [-x for x in new_b]
            basis[p] = new_b
    return [basis[p] for p in sorted(basis)]


def invariant_factors(rows: Iterable[Iterable[int]], ncols: int) -> list[int]:
    """Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form."""
    M = echelon_basis(rows, ncols)
    m = len(M)
    out = []
    for t in range(m):
        while True:
            piv = None
            for i in range(t, m):
                for j in range(t, ncols):
                    if M[i][j] and (piv is None or abs(M[i][j]) < abs(M[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return out
            i, j = piv
            M[t], M[i] = M[i], M[t]
            for row in M:
                row[t], row[j] = row[j], row[t]
            p = M[t][t]
            clean = True
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[t])]
                if M[i][t]:
                    clean = False
            for j in range(t + 1, ncols):
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(x % p for x in M[i][t + 1:])), None)
            if bad is None:
                break
            M[t] = [x + y for x, y in zip(M[t], M[bad])]
        out.append(abs(M[t][t]))
    return out


def quotient_structure(rows: Iterable[Iterable[int]], ncols: int) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients) of Z^ncols modulo the span of ``rows``."""
    inv = invariant_factors(rows, ncols)
    return ncols - len(inv), [d for d in inv if d != 1]
