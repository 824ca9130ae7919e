"""Facet-based simplicial complexes with orientations.

A complex is stored as its set of facets (maximal simplices); faces are
derived on demand.  A simplex is a strictly increasing tuple of integer
vertex labels.  Orientations are stored as a sign per facet: the sign is
the parity of the facet's sorted vertex order relative to the chosen
global orientation, so reversing an orientation is a constant-time
operation and induced orientations reduce to parity bookkeeping.
"""
from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Mapping

Vertex = int
Simplex = tuple

# Vertex-link orientation convention: a positively oriented facet written
# (v, w0, ..., w_{n-1}) induces the positively oriented facet
# (w0, ..., w_{n-1}) in the link of v.  Flipping this constant is used by
# the negative-control test suite; everything downstream must then fail.
LINK_SIGN = 1


class ComplexError(Exception):
    pass


class NotPure(ComplexError):
    pass


class DuplicateFacet(ComplexError):
    pass


class RidgeDegreeViolation(ComplexError):
    pass


class NonOrientable(ComplexError):
    pass


class SimplexNotInComplex(ComplexError):
    pass


class VertexCollision(ComplexError):
    pass


def simplex(vertices: Iterable[int]) -> Simplex:
    """Sorted vertex tuple; rejects repeated labels."""
    s = tuple(sorted(vertices))
    for a, b in zip(s, s[1:]):
        if a == b:
            raise ComplexError(f"repeated vertex in simplex {vertices!r}")
    return s


def sort_parity(seq) -> int:
    """Sign of the permutation sorting ``seq`` (no repeats)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def subsimplex_parity(facet: Simplex, sub: Simplex) -> int:
    """Sign of reordering sorted ``facet`` as (sub ascending, rest ascending)."""
    idx = [facet.index(v) for v in sub]
    shift = sum(idx) - len(idx) * (len(idx) - 1) // 2
    return -1 if shift % 2 else 1


class SimplicialComplex:
    """Pure facet-based complex.  Immutable and hashable."""

    __slots__ = ("facets", "dim", "_hash")

    def __init__(self, facets: Iterable[Simplex], validate: bool = True):
        fset = frozenset(facets)
        if not fset:
            raise ComplexError("empty facet list")
        dims = {len(f) - 1 for f in fset}
        if validate and len(dims) != 1:
            raise NotPure(f"facet dimensions {sorted(dims)}")
        object.__setattr__(self, "facets", fset)
        object.__setattr__(self, "dim", max(dims))
        object.__setattr__(self, "_hash", hash(fset))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, facets={len(self.facets)})"

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.facets for v in f}))

    def faces(self, d: int) -> frozenset:
        """All d-faces, derived from the facets."""
        out = set()
        for f in self.facets:
            out.update(itertools.combinations(f, d + 1))
        return frozenset(out)

    def has_simplex(self, s: Simplex) -> bool:
        return any(set(s) <= set(f) for f in self.facets)

    def ridge_degrees(self) -> dict:
        deg: dict = {}
        for f in self.facets:
            for r in itertools.combinations(f, len(f) - 1):
                deg[r] = deg.get(r, 0) + 1
        return deg

    def is_closed_pseudomanifold(self) -> bool:
        return all(d == 2 for d in self.ridge_degrees().values()) and self.is_connected()

    def is_connected(self) -> bool:
        """Connectivity of the facet-ridge adjacency graph."""
        ridge_map: dict = {}
        for f in self.facets:
            for r in itertools.combinations(f, len(f) - 1):
                ridge_map.setdefault(r, []).append(f)
        start = next(iter(self.facets))
        seen = {start}
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for r in itertools.combinations(f, len(f) - 1):
                for g in ridge_map[r]:
                    if g not in seen:
                        seen.add(g)
                        queue.append(g)
        return len(seen) == len(self.facets)

    def euler_characteristic(self) -> int:
        chi = 0
        for d in range(self.dim + 1):
            chi += (-1) ** d * len(self.faces(d))
        return chi


def build_complex(facet_list: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Validated pure complex from a list of vertex-label rows."""
    rows = [simplex(r) for r in facet_list]
    seen = set()
    for r in rows:
        if r in seen:
            raise DuplicateFacet(f"facet {r} repeated")
        seen.add(r)
    lens = {len(r) for r in rows}
    if len(lens) != 1:
        raise NotPure(f"rows of lengths {sorted(lens)}")
    return SimplicialComplex(rows)


def require_closed(K: SimplicialComplex) -> None:
    bad = {r: d for r, d in K.ridge_degrees().items() if d != 2}
    if bad:
        r, d = next(iter(bad.items()))
        raise RidgeDegreeViolation(f"ridge {r} lies in {d} facets")
    if not K.is_connected():
        raise ComplexError("complex is not connected")


def link(K: SimplicialComplex, s: Simplex) -> SimplicialComplex:
    """Link of a proper face, as a complex of facets {F \\ s : F >= s}."""
    s = tuple(sorted(s))
    facets = [tuple(v for v in f if v not in s)
              for f in K.facets if set(s) <= set(f)]
    facets = [f for f in facets if f]
    if not facets:
        raise SimplexNotInComplex(f"{s} has empty link in {K!r}")
    return SimplicialComplex(facets)


def star(K: SimplicialComplex, s: Simplex) -> SimplicialComplex:
    s = tuple(sorted(s))
    facets = [f for f in K.facets if set(s) <= set(f)]
    if not facets:
        raise SimplexNotInComplex(f"{s} not in {K!r}")
    return SimplicialComplex(facets)


def full_subcomplex(K: SimplicialComplex, V: Iterable[int]) -> SimplicialComplex:
    """Subcomplex of all simplices with vertices in V, by maximal simplices."""
    vs = set(V)
    pieces = {f_in for f in K.facets
              for n in range(1, len(f) + 1)
              for f_in in itertools.combinations(f, n)
              if set(f_in) <= vs}
    if not pieces:
        raise ComplexError("no simplices spanned by the given vertices")
    maximal = [p for p in pieces
               if not any(p != q and set(p) < set(q) for q in pieces)]
    return SimplicialComplex(maximal, validate=False)


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    if set(A.vertices) & set(B.vertices):
        raise VertexCollision(f"{set(A.vertices) & set(B.vertices)} shared")
    return SimplicialComplex(
        [tuple(sorted(f + g)) for f in A.facets for g in B.facets])


def cone(A: SimplicialComplex, apex: int) -> SimplicialComplex:
    return join(A, SimplicialComplex([(apex,)]))


class OrientedComplex:
    """Closed connected pseudomanifold with a consistent facet-sign map."""

    __slots__ = ("complex", "signs", "_hash")

    def __init__(self, K: SimplicialComplex, signs: Mapping[Simplex, int]):
        if set(signs) != set(K.facets):
            raise ComplexError("signs must cover exactly the facets")
        object.__setattr__(self, "complex", K)
        object.__setattr__(self, "signs", dict(signs))
        object.__setattr__(self, "_hash",
                           hash(frozenset(self.signs.items())))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("OrientedComplex is immutable")

    def __eq__(self, other):
        return (isinstance(other, OrientedComplex)
                and self.complex == other.complex
                and self.signs == other.signs)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"OrientedComplex(dim={self.dim}, facets={len(self.facets)})"

    @property
    def facets(self):
        return self.complex.facets

    @property
    def dim(self):
        return self.complex.dim

    @property
    def vertices(self):
        return self.complex.vertices

    def reverse(self) -> "OrientedComplex":
        """The same triangulation with the opposite orientation."""
        return OrientedComplex(self.complex, {f: -s for f, s in self.signs.items()})


def _ridge_map(facets):
    out: dict = {}
    for f in facets:
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            out.setdefault(r, []).append((f, i))
    return out


def extend_orientation(facets, seed_signs: Mapping[Simplex, int]) -> dict:
    """Propagate facet signs across ridges from the seeds; exact parity rule:
    adjacent facets F, G with F\\R at index i, G\\R at index j satisfy
    sign(G) = -sign(F) * (-1)**(i+j)."""
    facets = set(facets)
    ridge_map = _ridge_map(facets)
    signs = dict(seed_signs)
    queue = deque(signs)
    while queue:
        f = queue.popleft()
        sf = signs[f]
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            for g, j in ridge_map[r]:
                if g == f:
                    continue
                want = -sf * (-1) ** (i + j)
                old = signs.get(g)
                if old is None:
                    signs[g] = want
                    queue.append(g)
                elif old != want:
                    raise NonOrientable(f"parity conflict at ridge {r}")
    if len(signs) != len(facets):
        raise ComplexError("orientation did not reach all facets")
    return signs


def orient(K: SimplicialComplex, first_facet_sign: int = 1) -> OrientedComplex:
    """Globally consistent orientation found by ridge-adjacency traversal,
    seeded on the lexicographically least facet."""
    require_closed(K)
    seed = min(K.facets)
    signs = extend_orientation(K.facets, {seed: first_facet_sign})
    return OrientedComplex(K, signs)


def oriented_link(L: OrientedComplex, v: int) -> OrientedComplex:
    """Link of a vertex with the induced orientation."""
    return oriented_link_simplex(L, (v,))


def oriented_link_simplex(L: OrientedComplex, s: Simplex) -> OrientedComplex:
    s = tuple(sorted(s))
    facets = {}
    for f, sign in L.signs.items():
        if set(s) <= set(f):
            rest = tuple(v for v in f if v not in s)
            facets[rest] = sign * subsimplex_parity(f, s) * LINK_SIGN
    if not facets or () in facets:
        raise SimplexNotInComplex(f"{s} has no proper link")
    return OrientedComplex(SimplicialComplex(facets), facets)


def boundary_simplex(n: int) -> OrientedComplex:
    """The boundary of the n-simplex on vertices 0..n, canonically oriented."""
    verts = tuple(range(n + 1))
    signs = {}
    for i in range(n + 1):
        f = verts[:i] + verts[i + 1:]
        signs[f] = (-1) ** i
    return OrientedComplex(SimplicialComplex(signs), signs)


def suspension(L: OrientedComplex) -> OrientedComplex:
    """Join with a fresh 0-sphere, oriented by propagation."""
    m = max(L.vertices)
    a, b = m + 1, m + 2
    K = join(L.complex, SimplicialComplex([(a,), (b,)]))
    seed_facet = tuple(sorted(min(L.facets) + (a,)))
    seed_sign = L.signs[min(L.facets)] * subsimplex_parity(seed_facet, (a,)) * LINK_SIGN
    return OrientedComplex(K, extend_orientation(K.facets, {seed_facet: seed_sign}))


def parse_facet_text(text: str) -> OrientedComplex | SimplicialComplex:
    """Facet-list format: one facet per line, whitespace-separated positive
    integer labels; '#' starts a comment; optional 'dim=<n>' header; a leading
    'orient=explicit' header makes in-row order define facet signs."""
    explicit = False
    want_dim = None
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dim="):
            want_dim = int(line[4:])
            continue
        if line.startswith("orient="):
            explicit = line[7:].strip() == "explicit"
            continue
        rows.append([int(tok) for tok in line.split()])
    K = build_complex(rows)
    if want_dim is not None and K.dim != want_dim:
        raise ComplexError(f"declared dim={want_dim} but facets have dim {K.dim}")
    if not explicit:
        return K
    signs = {simplex(r): sort_parity(r) for r in rows}
    oc = OrientedComplex(K, signs)
    # explicit signs must already be a closed orientation
    extend_orientation(K.facets, signs)
    return oc


def load_facet_file(path) -> OrientedComplex | SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_facet_text(fh.read())
