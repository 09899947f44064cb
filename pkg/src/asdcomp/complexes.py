"""Simplicial complexes on the vertex set [n] = {1, ..., n}.

Subsets of [n] are plain ``int`` bit masks: vertex ``i`` (1-based) is bit
``i - 1``.  Faces of a complex are stored explicitly, so every membership
query is a set lookup.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from collections.abc import Iterable, Iterator
from fractions import Fraction

from .errors import (
    ASDError,
    DualNotComplex,
    InvalidPartition,
    NotAFace,
    NotAFacet,
    NotASD,
    NotHereditary,
    TooLarge,
    TooSmall,
    VertexOutOfRange,
)

MAX_N = 24

Mask = int


# -- subset masks -----------------------------------------------------------

def mask(vertices: Iterable[int]) -> Mask:
    """Mask of a collection of 1-based vertices."""
    m = 0
    for v in vertices:
        if v < 1:
            raise VertexOutOfRange(f"vertex {v} is not a positive label")
        m |= 1 << (v - 1)
    return m


def vertices(m: Mask) -> tuple[int, ...]:
    """Sorted 1-based vertices of a mask."""
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> Mask:
    return (1 << n) - 1


def complement(m: Mask, n: int) -> Mask:
    return ~m & full_mask(n)


def size(m: Mask) -> int:
    return m.bit_count()


def lowest(m: Mask) -> int:
    """Index (0-based) of the lowest set bit; ``m`` must be nonzero."""
    return (m & -m).bit_length() - 1


def as_mask(x: Mask | Iterable[int], n: int) -> Mask:
    """Accept either a mask or an iterable of 1-based vertices; range-check."""
    m = x if isinstance(x, int) else mask(x)
    if m < 0 or m >> n:
        raise VertexOutOfRange(f"{format_set(m)} is not a subset of [{n}]")
    return m


def format_set(m: Mask) -> str:
    return "{" + ",".join(map(str, vertices(m))) + "}"


def resource_limit(default: int) -> int:
    """Size guard, overridable through the ``ASD_MAX_N`` environment variable."""
    env = os.environ.get("ASD_MAX_N")
    return int(env) if env else default


def _check_n(n: int) -> None:
    if not 2 <= n <= MAX_N:
        raise TooLarge(f"vertex count must lie in [2, {MAX_N}], got {n}")


# -- the complex ------------------------------------------------------------

class SimplicialComplex:
    """A downward-closed family of subsets of [n] containing every vertex.

    The empty face and all singletons are inserted automatically.  Two
    complexes compare equal iff they have the same ``n`` and the same faces.
    """

    __slots__ = ("n", "faces", "_hash")

    def __init__(self, n: int, faces: Iterable[Mask | Iterable[int]]):
        _check_n(n)
        fs = {as_mask(f, n) for f in faces}
        fs.add(0)
        fs.update(1 << i for i in range(n))
        for f in fs:
            g = f
            while g:
                low = g & -g
                if f & ~low not in fs:
                    raise NotHereditary(
                        f"{format_set(f)} is a face but {format_set(f & ~low)} is not")
                g ^= low
        self.n = n
        self.faces = frozenset(fs)
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, faces: Iterable[Mask]) -> SimplicialComplex:
        obj = cls.__new__(cls)
        obj.n = n
        obj.faces = frozenset(faces)
        obj._hash = None
        return obj

    def __contains__(self, face: Mask) -> bool:
        return face in self.faces

    def __iter__(self) -> Iterator[Mask]:
        return iter(sorted(self.faces))

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.faces == other.faces

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.faces))
        return self._hash

    def __repr__(self) -> str:
        fs = [list(vertices(f)) for f in facets(self)]
        return f"SimplicialComplex(n={self.n}, facets={fs})"

    def canonical(self) -> tuple[Mask, ...]:
        """Faces sorted by mask value."""
        return tuple(sorted(self.faces))

    def is_face(self, x: Mask | Iterable[int]) -> bool:
        return as_mask(x, self.n) in self.faces


def complex_from_facets(n: int, facets_: Iterable[Mask | Iterable[int]]) -> SimplicialComplex:
    """Downward closure of a list of facets on [n]."""
    _check_n(n)
    faces = {0}
    faces.update(1 << i for i in range(n))
    for f in facets_:
        f = as_mask(f, n)
        if f in faces:
            continue
        # enumerate all submasks of f
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return SimplicialComplex._trusted(n, faces)


def projective_complex(n: int, point: int = 1) -> SimplicialComplex:
    """The complex pt + boundary of a simplex on the other n - 1 vertices.

    Its compactification is the projective space of dimension n - 3.
    """
    _check_n(n)
    if n < 3:
        raise TooSmall("need at least 3 vertices")
    rest = complement(1 << (point - 1), n)
    faces = [rest & ~(1 << i) for i in range(n) if rest >> i & 1]
    return complex_from_facets(n, faces)


def facets(K: SimplicialComplex) -> list[Mask]:
    """Inclusion-maximal faces, sorted by mask value."""
    out = []
    full = full_mask(K.n)
    for f in K.faces:
        free = full & ~f
        maximal = True
        while free:
            low = free & -free
            if f | low in K.faces:
                maximal = False
                break
            free ^= low
        if maximal:
            out.append(f)
    return sorted(out)


def minimal_nonfaces(K: SimplicialComplex) -> list[Mask]:
    """Inclusion-minimal subsets of [n] that are not faces."""
    out = []
    for a in range(1 << K.n):
        if a in K.faces:
            continue
        g = a
        minimal = True
        while g:
            low = g & -g
            if a & ~low not in K.faces:
                minimal = False
                break
            g ^= low
        if minimal:
            out.append(a)
    return out


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """The complex {A : complement(A) is not a face of K}."""
    n = K.n
    full = full_mask(n)
    dual = [a for a in range(1 << n) if full & ~a not in K.faces]
    dset = set(dual)
    missing = [1 << i for i in range(n) if 1 << i not in dset]
    if 0 not in dset or missing:
        raise DualNotComplex(
            "dual loses vertices " + ", ".join(format_set(m) for m in missing or [0]))
    return SimplicialComplex._trusted(n, dset)


def _pair_scan(K: SimplicialComplex) -> Iterator[tuple[bool, bool]]:
    full = full_mask(K.n)
    # each complementary pair once: the member containing vertex 1
    for a in range(1, 1 << K.n, 2):
        yield a in K.faces, (full & ~a) in K.faces


def is_asd(K: SimplicialComplex) -> bool:
    """Exactly one of A, complement(A) is a face, for every A."""
    return all(x != y for x, y in _pair_scan(K))


def is_pre_asd(K: SimplicialComplex) -> bool:
    """At most one of A, complement(A) is a face, for every A."""
    return not any(x and y for x, y in _pair_scan(K))


def require_asd(K: SimplicialComplex) -> None:
    if not is_asd(K):
        raise NotASD(f"{K!r} is not Alexander self-dual")


def flip(K: SimplicialComplex, A: Mask | Iterable[int]) -> SimplicialComplex:
    """Replace the facet ``A`` of an ASD complex by its complement."""
    A = as_mask(A, K.n)
    require_asd(K)
    if not is_facet(K, A):
        raise NotAFacet(f"{format_set(A)} is not a facet")
    if size(A) < 2:
        # the complement has n - 1 elements and the flip would drop vertex A
        raise TooSmall(f"flipping the singleton facet {format_set(A)} removes a vertex")
    faces = set(K.faces)
    faces.discard(A)
    faces.add(complement(A, K.n))
    return SimplicialComplex._trusted(K.n, faces)


def is_facet(K: SimplicialComplex, A: Mask) -> bool:
    if A not in K.faces:
        return False
    free = full_mask(K.n) & ~A
    while free:
        low = free & -free
        if A | low in K.faces:
            return False
        free ^= low
    return True


def contraction_map(n: int, I: Mask) -> list[int]:
    """Old 0-based vertex -> new 0-based vertex for contracting ``I``.

    The merged vertex takes the place of min(I); the other vertices keep
    their relative order.  Vertices of I other than min(I) map to -1.
    """
    keep = lowest(I)
    out = []
    j = 0
    for v in range(n):
        if I >> v & 1 and v != keep:
            out.append(-1)
        else:
            out.append(j)
            j += 1
    return out


def map_mask(m: Mask, table: list[int]) -> Mask:
    out = 0
    v = 0
    while m:
        if m & 1:
            out |= 1 << table[v]
        m >>= 1
        v += 1
    return out


def contract(K: SimplicialComplex, I: Mask | Iterable[int]) -> SimplicialComplex:
    """Freeze the vertices of the face ``I`` into one vertex."""
    I = as_mask(I, K.n)
    if size(I) < 2:
        raise TooSmall(f"contraction needs |I| >= 2, got {format_set(I)}")
    if I not in K.faces:
        raise NotAFace(f"{format_set(I)} is not a face")
    table = contraction_map(K.n, I)
    merged = 1 << lowest(I)
    faces = set()
    for f in K.faces:
        if not f & I:
            faces.add(map_mask(f, table))
        elif f & I == I:
            faces.add(map_mask((f & ~I) | merged, table))
    return SimplicialComplex._trusted(K.n - size(I) + 1, faces)


def relabel(K: SimplicialComplex, perm: dict[int, int] | list[int]) -> SimplicialComplex:
    """Apply a vertex permutation given as 1-based ``old -> new`` mapping.

    A list ``p`` is read as ``p[i - 1]`` = new label of old vertex ``i``.
    """
    n = K.n
    if isinstance(perm, dict):
        images = [perm.get(i, i) for i in range(1, n + 1)]
    else:
        images = list(perm)
    if sorted(images) != list(range(1, n + 1)):
        raise ASDError(f"not a permutation of [{n}]: {images}")
    table = [p - 1 for p in images]
    return SimplicialComplex._trusted(n, (map_mask(f, table) for f in K.faces))


def _perm_tables(n: int) -> Iterator[list[int]]:
    """Full mask-image lookup tables, one per permutation of [n]."""
    for perm in itertools.permutations(range(n)):
        table = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            table[m] = table[m ^ low] | (1 << perm[low.bit_length() - 1])
        yield table


def canonical_form(K: SimplicialComplex, up_to_relabeling: bool = False) -> tuple[Mask, ...]:
    """Sorted face list; with ``up_to_relabeling`` the minimum over all n! relabelings."""
    if not up_to_relabeling:
        return K.canonical()
    if K.n > 7:
        raise TooLarge("relabeling canonical form is limited to n <= 7")
    return min(tuple(sorted(t[f] for f in K.faces)) for t in _perm_tables(K.n))


def orbit(K: SimplicialComplex) -> set[frozenset[Mask]]:
    """Face sets of all relabelings of K."""
    if K.n > 7:
        raise TooLarge("orbit computation is limited to n <= 7")
    return {frozenset(t[f] for f in K.faces) for t in _perm_tables(K.n)}


def threshold_seed(n: int) -> SimplicialComplex:
    """SHORT(1, ..., 1, (2n - 5)/2): the point-plus-boundary complex with the point at n."""
    from .threshold import LengthVector, short_complex

    return short_complex(LengthVector([1] * (n - 1) + [Fraction(2 * n - 5, 2)]))


def enumerate_asd(n: int, mode: str = "labeled") -> list[SimplicialComplex]:
    """All ASD complexes on [n], by breadth-first search over the flip graph.

    ``mode`` is ``"labeled"`` or ``"up_to_relabeling"``; in the latter case one
    representative per relabeling orbit is returned (the one with the
    lexicographically smallest sorted face list).
    """
    if mode not in ("labeled", "up_to_relabeling"):
        raise ASDError(f"unknown enumeration mode {mode!r}")
    if n < 3:
        raise TooSmall("ASD complexes on [n] with all vertices need n >= 3")
    if n > resource_limit(6):
        raise TooLarge(f"enumeration guard: n={n} exceeds {resource_limit(6)}")
    seed = threshold_seed(n)
    seen = {seed.faces}
    found = [seed]
    queue = deque([seed])
    while queue:
        K = queue.popleft()
        for A in facets(K):
            if size(A) < 2:
                continue
            faces = set(K.faces)
            faces.discard(A)
            faces.add(complement(A, n))
            key = frozenset(faces)
            if key not in seen:
                seen.add(key)
                L = SimplicialComplex._trusted(n, key)
                found.append(L)
                queue.append(L)
    found.sort(key=SimplicialComplex.canonical)
    if mode == "labeled":
        return found
    covered: set[frozenset[Mask]] = set()
    reps = []
    for K in found:
        if K.faces in covered:
            continue
        orb = orbit(K)
        covered |= orb
        best = min(tuple(sorted(o)) for o in orb)
        reps.append(SimplicialComplex._trusted(n, best))
    reps.sort(key=SimplicialComplex.canonical)
    return reps


def equivalent_coarse(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """True iff the symmetric difference of the face sets has only 2-element sets."""
    if K.n != L.n:
        raise ASDError("complexes live on different vertex sets")
    if not (is_pre_asd(K) and is_pre_asd(L)):
        raise NotASD("coarse equivalence is defined for preASD complexes")
    return all(size(f) == 2 for f in K.faces ^ L.faces)


def is_stable_configuration(K: SimplicialComplex,
                            blocks: Iterable[Mask | Iterable[int]]) -> bool:
    """Whether a coincidence pattern of n points is allowed by K.

    ``blocks`` must partition [n]; every block of size >= 2 has to be a face.
    """
    bs = [as_mask(b, K.n) for b in blocks]
    seen = 0
    for b in bs:
        if not b or b & seen:
            raise InvalidPartition("blocks must be nonempty and pairwise disjoint")
        seen |= b
    if seen != full_mask(K.n):
        raise InvalidPartition(f"blocks do not cover [{K.n}]")
    return all(b in K.faces for b in bs if size(b) >= 2)
