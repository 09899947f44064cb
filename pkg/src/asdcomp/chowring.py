"""Chow rings of ASD compactifications, presented by perfect cycles.

A perfect cycle is a set of pairwise disjoint blocks, each of size >= 2,
stored as a tuple of block masks sorted by smallest element.  Its degree is
the sum of ``|block| - 1``.  A :class:`ChowClass` is an integer combination
of perfect cycles in the quotient ring attached to a fixed ASD complex K:
cycles with a non-face block, or of degree above ``n - 3``, are zero there
and are dropped as soon as they appear.

Products are computed by splitting the right factor into elementary cycles
``(b1 b2)(b1 b3)...`` and multiplying them in one at a time:

* neither point covered: adjoin the block ``{i, j}``;
* one point in a block ``B``: ``B`` absorbs the other point;
* points in different blocks: the blocks merge;
* both points in the same block: rewrite ``(i j) = (i k) + (j l) - (k l)``
  with the lexicographically smallest admissible ``k, l`` and recurse.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator
from functools import lru_cache

from .complexes import (
    SimplicialComplex,
    as_mask,
    format_set,
    lowest,
    require_asd,
    size,
    vertices,
)
from .errors import (
    AmbientMismatch,
    BlocksOverlap,
    DegreeMismatch,
    EvenCycle,
    InternalNoRewritePair,
    NotDistinct,
    NotTopDegree,
    NotUnicycle,
    ParseError,
    TooSmall,
)
from .smith import quotient_structure

Cycle = tuple[int, ...]


def make_cycle(blocks: Iterable[int | Iterable[int]], n: int) -> Cycle:
    """Normalize a list of blocks (masks or vertex lists) into a cycle key."""
    bs = [as_mask(b, n) for b in blocks]
    seen = 0
    for b in bs:
        if size(b) < 2:
            raise TooSmall(f"block {format_set(b)} has fewer than two points")
        if b & seen:
            raise BlocksOverlap(f"block {format_set(b)} meets another block")
        seen |= b
    return tuple(sorted(bs, key=lowest))


def cycle_degree(c: Cycle) -> int:
    return sum(size(b) - 1 for b in c)


def format_cycle(c: Cycle) -> str:
    return "".join("(" + " ".join(map(str, vertices(b))) + ")" for b in c)


class ChowClass:
    """An element of the Chow ring of the compactification attached to K.

    ``terms`` maps cycles to nonzero integer coefficients.  ``==`` compares
    representations; use :func:`eq_via_pairing` for equality in the ring.
    """

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: SimplicialComplex, terms: dict[Cycle, int] | None = None):
        self.ambient = ambient
        self.terms = {c: v for c, v in (terms or {}).items() if v}

    @property
    def top(self) -> int:
        return self.ambient.n - 3

    def degrees(self) -> list[int]:
        return sorted({cycle_degree(c) for c in self.terms})

    def part(self, d: int) -> ChowClass:
        return ChowClass(self.ambient, {c: v for c, v in self.terms.items()
                                        if cycle_degree(c) == d})

    @property
    def degree(self) -> int | None:
        """The degree of a homogeneous class; None for zero; raises otherwise."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise DegreeMismatch(f"class is not homogeneous (degrees {ds})")
        return ds[0]

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: ChowClass) -> None:
        if other.ambient != self.ambient:
            raise AmbientMismatch("classes live in different Chow rings")

    def __add__(self, other: ChowClass) -> ChowClass:
        self._check(other)
        t = dict(self.terms)
        for c, v in other.terms.items():
            t[c] = t.get(c, 0) + v
        return ChowClass(self.ambient, t)

    def __neg__(self) -> ChowClass:
        return ChowClass(self.ambient, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other: ChowClass) -> ChowClass:
        return self + (-other)

    def __rmul__(self, k: int) -> ChowClass:
        if not isinstance(k, int):
            return NotImplemented
        return ChowClass(self.ambient, {c: k * v for c, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if isinstance(other, ChowClass):
            return multiply(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> ChowClass:
        out = unit(self.ambient)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c in sorted(self.terms, key=lambda c: (cycle_degree(c), c)):
            v = self.terms[c]
            body = format_cycle(c)
            mag = abs(v)
            if not body:
                s = str(mag)
            elif mag == 1:
                s = body
            else:
                s = f"{mag}*{body}"
            parts.append(("- " if v < 0 else "+ ") + s)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self) -> str:
        return f"ChowClass({self})"


def _admissible(K: SimplicialComplex, c: Cycle) -> bool:
    return cycle_degree(c) <= K.n - 3 and all(b in K.faces for b in c)


def unit(K: SimplicialComplex) -> ChowClass:
    return ChowClass(K, {(): 1})


def zero(K: SimplicialComplex) -> ChowClass:
    return ChowClass(K)


def cycle_class(K: SimplicialComplex, blocks: Iterable[int | Iterable[int]]) -> ChowClass:
    """The class of a perfect cycle; zero if a block is a non-face or the degree is too big."""
    c = make_cycle(blocks, K.n)
    return ChowClass(K, {c: 1} if _admissible(K, c) else {})


def edge_class(K: SimplicialComplex, i: int, j: int) -> ChowClass:
    """The elementary cycle (i j) for 1-based vertices."""
    return cycle_class(K, [(i, j)])


@lru_cache(maxsize=1 << 18)
def _times_edge(K: SimplicialComplex, c: Cycle, i: int, j: int) -> tuple[tuple[Cycle, int], ...]:
    """c * (i j) for 0-based i != j, as a tuple of (cycle, coefficient)."""
    bi = bj = None
    for b in c:
        if b >> i & 1:
            bi = b
        if b >> j & 1:
            bj = b
    if bi is not None and bi == bj:
        k, l = _rewrite_pair(K.n, c, bi)
        acc: dict[Cycle, int] = {}
        for (a, b), s in (((i, k), 1), ((j, l), 1), ((k, l), -1)):
            for cc, v in _times_edge(K, c, a, b):
                acc[cc] = acc.get(cc, 0) + s * v
        return tuple((cc, v) for cc, v in acc.items() if v)
    if cycle_degree(c) + 1 > K.n - 3:
        return ()
    if bi is None and bj is None:
        new = (1 << i) | (1 << j)
        rest = list(c)
    elif bj is None:
        new = bi | (1 << j)
        rest = [b for b in c if b != bi]
    elif bi is None:
        new = bj | (1 << i)
        rest = [b for b in c if b != bj]
    else:
        new = bi | bj
        rest = [b for b in c if b != bi and b != bj]
    if new not in K.faces:
        return ()
    rest.append(new)
    return ((tuple(sorted(rest, key=lowest)), 1),)


def _rewrite_pair(n: int, c: Cycle, B: int) -> tuple[int, int]:
    owner = {}
    for idx, b in enumerate(c):
        for v in range(n):
            if b >> v & 1:
                owner[v] = idx
    outside = [v for v in range(n) if not B >> v & 1]
    for k in outside:
        for l in outside:
            if l != k and (k not in owner or owner.get(l) != owner[k]):
                return k, l
    raise InternalNoRewritePair(
        f"no rewrite pair for block {format_set(B)} in {format_cycle(c)}")


def _elementary_factors(c: Cycle) -> Iterator[tuple[int, int]]:
    for b in c:
        first = lowest(b)
        rest = b & ~(1 << first)
        while rest:
            low = rest & -rest
            yield first, low.bit_length() - 1
            rest ^= low


def multiply(x: ChowClass, y: ChowClass) -> ChowClass:
    """The ring product of two classes over the same complex."""
    x._check(y)
    K = x.ambient
    top = K.n - 3
    out: dict[Cycle, int] = {}
    xdeg = min((cycle_degree(c) for c in x.terms), default=0)
    for cy, wy in y.terms.items():
        if xdeg + cycle_degree(cy) > top:
            continue
        cur = dict(x.terms)
        for i, j in _elementary_factors(cy):
            nxt: dict[Cycle, int] = {}
            for c, v in cur.items():
                for cc, w in _times_edge(K, c, i, j):
                    nxt[cc] = nxt.get(cc, 0) + v * w
            cur = {c: v for c, v in nxt.items() if v}
            if not cur:
                break
        for c, v in cur.items():
            out[c] = out.get(c, 0) + wy * v
    return ChowClass(K, out)


def psi_class(K: SimplicialComplex, i: int, j: int, k: int) -> ChowClass:
    """psi_i = (i j) + (i k) - (j k) for distinct 1-based vertices."""
    if len({i, j, k}) != 3:
        raise NotDistinct(f"psi class needs three distinct points, got {i}, {j}, {k}")
    return edge_class(K, i, j) + edge_class(K, i, k) - edge_class(K, j, k)


def evaluate_top(x: ChowClass) -> int:
    """Degree of a top-dimensional class: every surviving top cycle is one point."""
    top = x.top
    total = 0
    for c, v in x.terms.items():
        if cycle_degree(c) != top:
            raise NotTopDegree(f"term {format_cycle(c) or '1'} has degree "
                               f"{cycle_degree(c)}, expected {top}")
        total += v
    return total


def face_cycles(K: SimplicialComplex, d: int) -> Iterator[Cycle]:
    """All perfect cycles of degree ``d`` whose blocks are faces of K."""
    if d < 0:
        return
    big = sorted((f for f in K.faces if size(f) >= 2), key=lambda f: (lowest(f), f))
    by_low: dict[int, list[int]] = {}
    for f in big:
        by_low.setdefault(lowest(f), []).append(f)

    def rec(avail: int, left: int, acc: list[int]) -> Iterator[Cycle]:
        if left == 0:
            yield tuple(acc)
            return
        if size(avail) < 2:
            return
        v = lowest(avail)
        rest = avail & ~(1 << v)
        for f in by_low.get(v, ()):
            s = size(f) - 1
            if s <= left and f & avail == f:
                acc.append(f)
                yield from rec(avail & ~f, left - s, acc)
                acc.pop()
        yield from rec(rest, left, acc)

    yield from rec((1 << K.n) - 1, d, [])


def eq_via_pairing(x: ChowClass, y: ChowClass) -> bool:
    """Equality of homogeneous classes, tested against every complementary face cycle."""
    x._check(y)
    dx, dy = x.degree, y.degree
    if dx is not None and dy is not None and dx != dy:
        raise DegreeMismatch(f"degrees {dx} and {dy} differ")
    d = dx if dx is not None else dy
    if d is None:
        return True
    K = x.ambient
    if d > K.n - 3:
        raise DegreeMismatch(f"degree {d} exceeds the dimension {K.n - 3}")
    diff = x - y
    if diff.is_zero():
        return True
    for probe in face_cycles(K, K.n - 3 - d):
        if evaluate_top(multiply(diff, ChowClass(K, {probe: 1}))):
            return False
    return True


# -- degree one -------------------------------------------------------------

class Degree1Basis:
    """Basis of the degree-one group given by the edges of an odd unicycle on [n].

    ``express(a, b)`` writes the elementary cycle (a b) in this basis using
    the alternating relation along an even closed walk.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        es = []
        for a, b in edges:
            a, b = min(a, b), max(a, b)
            if not 1 <= a < b <= n:
                raise NotUnicycle(f"bad edge ({a}, {b}) on [{n}]")
            es.append((a, b))
        if len(set(es)) != len(es) or len(es) != n:
            raise NotUnicycle(f"a unicycle on [{n}] has exactly {n} distinct edges")
        adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for a, b in es:
            adj[a].append(b)
            adj[b].append(a)
        seen = {1}
        todo = [1]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != n:
            raise NotUnicycle("graph is not connected")
        # strip leaves; what remains is the unique cycle
        deg = {v: len(adj[v]) for v in adj}
        alive = set(adj)
        leaves = [v for v in alive if deg[v] == 1]
        while leaves:
            v = leaves.pop()
            alive.discard(v)
            for w in adj[v]:
                if w in alive:
                    deg[w] -= 1
                    if deg[w] == 1:
                        leaves.append(w)
        if len(alive) % 2 == 0:
            raise EvenCycle(f"the cycle through {sorted(alive)} has even length")
        self.n = n
        self.edges = sorted(es)
        self._index = {e: i for i, e in enumerate(self.edges)}
        self._adj = adj

    def cycles(self) -> list[Cycle]:
        return [make_cycle([e], self.n) for e in self.edges]

    def _odd_walk(self, a: int, b: int) -> list[int]:
        start = (a, 0)
        prev = {start: None}
        todo = [start]
        while todo:
            nxt = []
            for v, p in todo:
                for w in self._adj[v]:
                    st = (w, 1 - p)
                    if st not in prev:
                        prev[st] = (v, p)
                        nxt.append(st)
            todo = nxt
        st = (b, 1)
        walk = []
        while st is not None:
            walk.append(st[0])
            st = prev[st]
        return walk[::-1]

    def express(self, a: int, b: int) -> dict[tuple[int, int], int]:
        """Coefficients of (a b) on the basis edges."""
        if a == b:
            raise NotDistinct("an elementary cycle needs two distinct points")
        walk = self._odd_walk(a, b)
        out: dict[tuple[int, int], int] = {}
        for t, (u, v) in enumerate(zip(walk, walk[1:])):
            e = (min(u, v), max(u, v))
            out[e] = out.get(e, 0) + (1 if t % 2 == 0 else -1)
        return {e: c for e, c in out.items() if c}

    def vector(self, a: int, b: int) -> list[int]:
        vec = [0] * len(self.edges)
        for e, c in self.express(a, b).items():
            vec[self._index[e]] = c
        return vec


def degree1_basis(n: int, unicycle: Iterable[tuple[int, int]]) -> Degree1Basis:
    return Degree1Basis(n, unicycle)


def default_unicycle(n: int) -> list[tuple[int, int]]:
    """Triangle 1-2-3 plus the edges (1, v) for v > 3."""
    return [(1, 2), (2, 3), (1, 3)] + [(1, v) for v in range(4, n + 1)]


def degree1_group(K: SimplicialComplex) -> tuple[int, list[int]]:
    """(rank, torsion) of the degree-one Chow group."""
    require_asd(K)
    n = K.n
    if n < 3:
        raise TooSmall("need n >= 3")
    basis = Degree1Basis(n, default_unicycle(n))
    rows = [basis.vector(a, b) for a, b in itertools.combinations(range(1, n + 1), 2)
            if as_mask((a, b), n) not in K.faces]
    return quotient_structure(rows, n)


def graded_group(K: SimplicialComplex, d: int) -> tuple[int, list[int]]:
    """(rank, torsion) of the degree-d piece: face cycles modulo four-term multiples."""
    require_asd(K)
    n = K.n
    if not 0 <= d <= n - 3:
        raise DegreeMismatch(f"degree {d} outside [0, {n - 3}]")
    cols = list(face_cycles(K, d))
    if d == 0:
        return len(cols), []
    index = {c: i for i, c in enumerate(cols)}
    pairs = list(itertools.combinations(range(n), 2))
    rows = []
    seen = set()
    for Q in face_cycles(K, d - 1):
        prod = {}
        for a, b in pairs:
            prod[a, b] = dict(_times_edge(K, Q, a, b))
        for a, b, c, e in itertools.combinations(range(n), 4):
            pairings = [((a, b), (c, e)), ((a, c), (b, e)), ((a, e), (b, c))]
            sums = []
            for p, q in pairings:
                acc: dict[Cycle, int] = {}
                for part in (prod[p], prod[q]):
                    for cc, v in part.items():
                        acc[cc] = acc.get(cc, 0) + v
                sums.append(acc)
            for other in sums[1:]:
                vec = [0] * len(cols)
                for cc, v in sums[0].items():
                    vec[index[cc]] += v
                for cc, v in other.items():
                    vec[index[cc]] -= v
                key = tuple(vec)
                if any(vec) and key not in seen:
                    seen.add(key)
                    rows.append(vec)
    return quotient_structure(rows, len(cols))


def graded_rank(K: SimplicialComplex, d: int) -> int:
    return graded_group(K, d)[0]


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(\()|(\))|([+\-*]))")


def parse_class(K: SimplicialComplex, text: str) -> ChowClass:
    """Parse ``(1 2)(4 5) + 3*(2 3 4) - 2``.

    Juxtaposed blocks are multiplied in the ring, so overlapping blocks such
    as ``(1 2)(1 2)`` are allowed; a bare integer is a multiple of the unit.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, lp, rp, op = m.groups()
        tokens.append(("num", int(num)) if num else ("sym", lp or rp or op))
        pos = m.end()
    if not tokens:
        raise ParseError("empty expression")

    result = zero(K)
    k = 0
    sign = 1
    if tokens[0] == ("sym", "-"):
        sign, k = -1, 1
    elif tokens[0] == ("sym", "+"):
        k = 1
    while True:
        coef = 1
        term = unit(K)
        has_factor = False
        if k < len(tokens) and tokens[k][0] == "num":
            coef = tokens[k][1]
            k += 1
            has_factor = True
            if k < len(tokens) and tokens[k] == ("sym", "*"):
                k += 1
                if k >= len(tokens) or tokens[k] != ("sym", "("):
                    raise ParseError("expected a block after '*'")
        while k < len(tokens) and tokens[k] == ("sym", "("):
            k += 1
            verts = []
            while k < len(tokens) and tokens[k][0] == "num":
                verts.append(tokens[k][1])
                k += 1
            if k >= len(tokens) or tokens[k] != ("sym", ")"):
                raise ParseError("unclosed block")
            k += 1
            if len(set(verts)) != len(verts) or len(verts) < 2:
                raise ParseError(f"block {verts} needs at least two distinct points")
            if any(not 1 <= v <= K.n for v in verts):
                raise ParseError(f"block {verts} has a vertex outside [1, {K.n}]")
            term = multiply(term, cycle_class(K, [verts]))
            has_factor = True
        if not has_factor:
            raise ParseError("expected a term")
        result = result + (sign * coef) * term
        if k == len(tokens):
            return result
        tok = tokens[k]
        if tok not in (("sym", "+"), ("sym", "-")):
            raise ParseError(f"expected '+' or '-', got {tok[1]!r}")
        sign = 1 if tok[1] == "+" else -1
        k += 1
