"""Generator cycles on 2-spheres and their exact values.

Six families of short closed move loops (two commuting subdivisions, a
subdivision commuting with an edge flip, two commuting flips, a
subdivide-flip-remove triangle, and two pentagon loops) generate the cycle
space of the graph of 2-spheres.  Each loop, classified by the local
configuration of its anchors, carries a closed-form rational value; the
solver prices arbitrary cycles by exact decomposition over these.

Chirality conventions (which arc of a vertex star is counted as p, which
endpoint of a shared edge is x) are fixed here once and guarded by the
relation tests in the suite: the value table is rigid under the null
relations among overlapping loops, so any inconsistent choice breaks them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import canonical
from .complexes import ComplexError, OrientedComplex, Simplex, full_subcomplex
from .gamma2 import Chain1, is_cycle, loop_to_chain
from .moves import Move, MoveNotAdmissible, MoveSequence, apply_move, make_move


class AnchorConfigurationInvalid(ComplexError):
    pass


KINDS = ("S1_0", "S1_1", "S1_2", "S2_0", "S2_1", "S2_2",
         "S3_0", "S3_1", "S3_2", "S4", "S5", "S6")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": list(self.params)}


# Families whose value formula is not antisymmetric in the parameters are
# chiral: the same combinatorial anchors on mirror-image configurations
# carry opposite values.  Classification therefore records an orientation
# bit (the rotation order of the configuration's triangles), and these
# polarities decide which bit value gets the table value.  They are pinned
# by the null-relation suite: the table is rigid under the exact linear
# relations among overlapping generator loops, so only one polarity
# assignment (up to the global mirror) survives it.
CHIRALITY = {
    "S1_0": 1, "S1_1": 1, "S1_2": -1,
    "S2_0": 1, "S2_1": 1, "S2_2": -1,
    "S3_0": 1, "S3_1": 1, "S3_2": -1,
    "S4": 1, "S5": 1, "S6": 1,
}


@dataclass
class GeneratorChain:
    spec: GeneratorSpec
    bit: int
    chain: Chain1
    loop: MoveSequence
    registry: dict

    @property
    def value(self) -> Fraction:
        return c0_of(self.spec) * self.bit * CHIRALITY[self.spec.kind]


def _f3(n: int) -> Fraction:
    return Fraction(n, (n + 2) * (n + 3) * (n + 4))


def _f2(n: int) -> Fraction:
    return Fraction(1, (n + 2) * (n + 3))


def c0_of(spec: GeneratorSpec) -> Fraction:
    """Exact value of the pricing class on one generator family."""
    k, p = spec.kind, spec.params
    if k in ("S1_0", "S2_0", "S3_0"):
        return Fraction(0)
    if k in ("S1_1", "S2_1", "S3_1"):
        return Fraction(p[1] - p[0],
                        (p[0] + p[1] + 2) * (p[0] + p[1] + 3) * (p[0] + p[1] + 4))
    if k in ("S1_2", "S3_2"):
        return _f3(p[1]) - _f3(p[0])
    if k == "S2_2":
        return _f3(p[1]) + _f3(p[0])
    if k == "S4":
        return _f2(p[0]) - _f2(p[1]) + _f2(p[2]) - Fraction(1, 12)
    if k == "S5":
        return _f2(p[0]) - _f2(p[1]) - _f2(p[2]) + _f2(p[3])
    if k == "S6":
        return sum(map(_f2, p), Fraction(0)) - Fraction(1, 12)
    raise ValueError(f"unknown kind {k}")


# ---------------------------------------------------------------- anchors

def _degree(L: OrientedComplex, v) -> int:
    return sum(1 for f in L.facets if v in f)


def _positive_triple(L: OrientedComplex, f: Simplex):
    x, y, z = f
    return (x, y, z) if L.signs[f] > 0 else (x, z, y)


def _link_edge_at(L: OrientedComplex, f: Simplex, x):
    """Directed link edge (a, b) of the facet f at its vertex x."""
    t = _positive_triple(L, f)
    i = t.index(x)
    return (t[(i + 1) % 3], t[(i + 2) % 3])


def _head_of_edge(L: OrientedComplex, f: Simplex, e: Simplex):
    """Endpoint of e that the positive boundary cycle of f points at."""
    t = _positive_triple(L, f)
    for i in range(3):
        if {t[i], t[(i + 1) % 3]} == set(e):
            return t[(i + 1) % 3]
    raise AnchorConfigurationInvalid(f"{e} is not an edge of {f}")


def _arc_count(L: OrientedComplex, x, first: Simplex, second: Simplex) -> int:
    """Number of triangles at x strictly between ``first`` and ``second``,
    walking the star of x in the positive rotation direction."""
    rot = canonical.sphere_data(L).rot[x]
    a, _ = _link_edge_at(L, first, x)
    target, _ = _link_edge_at(L, second, x)
    count = 0
    cur = rot[a]
    while cur != target:
        count += 1
        cur = rot[cur]
        if count > len(rot):
            raise AnchorConfigurationInvalid("rotation walk did not close")
    return count


def _expect_flip(L: OrientedComplex, e, want) -> Move:
    m = make_move(L, e)
    if set(m.delta2) != set(want):
        raise AnchorConfigurationInvalid(
            f"flip of {e} creates {m.delta2}, expected {tuple(want)}")
    return m


def _consecutive(L: OrientedComplex, w, T, S) -> bool:
    """Whether triangle S follows triangle T in the positive rotation at w."""
    return _link_edge_at(L, T, w)[1] == _link_edge_at(L, S, w)[0]


def _triple_bit(L: OrientedComplex, w, T1, T2, T3) -> int:
    """+1 / -1 as the three triangles at w read forward / backward in the
    positive rotation; they must be consecutive."""
    if _consecutive(L, w, T1, T2) and _consecutive(L, w, T2, T3):
        return 1
    if _consecutive(L, w, T3, T2) and _consecutive(L, w, T2, T1):
        return -1
    raise AnchorConfigurationInvalid("triangles are not consecutive")


def _fan_bit(L: OrientedComplex, x, path) -> int:
    """+1 / -1 as the link path at x runs with / against the rotation."""
    rot = canonical.sphere_data(L).rot[x]
    if all(rot.get(a) == b for a, b in zip(path, path[1:])):
        return 1
    rev = path[::-1]
    if all(rot.get(a) == b for a, b in zip(rev, rev[1:])):
        return -1
    raise AnchorConfigurationInvalid("link path does not follow the rotation")


def _finish(L: OrientedComplex, moves, spec: GeneratorSpec, bit: int) -> GeneratorChain:
    chain, registry = loop_to_chain(L, moves)
    if not is_cycle(chain):
        raise AnchorConfigurationInvalid("generator loop is not a cycle")
    return GeneratorChain(spec, bit, chain, MoveSequence(L, moves), registry)


# ---------------------------------------------------------------- alpha 1

def classify_alpha1(L: OrientedComplex, t1: Simplex, t2: Simplex):
    common = set(t1) & set(t2)
    if not common:
        return GeneratorSpec("S1_0", ()), 1
    if len(common) == 1:
        x = next(iter(common))
        p = _arc_count(L, x, t1, t2)
        q = _degree(L, x) - p - 2
        return GeneratorSpec("S1_1", (p, q)), 1
    e = tuple(sorted(common))
    x = _head_of_edge(L, t1, e)
    y = e[0] if x == e[1] else e[1]
    return GeneratorSpec("S1_2", (_degree(L, x) - 2, _degree(L, y) - 2)), 1


def build_alpha1(L: OrientedComplex, t1, t2) -> GeneratorChain:
    """Subdivide t1, subdivide t2, remove the first new vertex, remove the
    second; a closed loop for any two distinct triangles."""
    t1, t2 = tuple(sorted(t1)), tuple(sorted(t2))
    if t1 not in L.facets or t2 not in L.facets or t1 == t2:
        raise AnchorConfigurationInvalid("need two distinct facets")
    v1 = max(L.vertices) + 1
    v2 = v1 + 1
    m1 = make_move(L, t1, new_vertex=v1)
    L1 = apply_move(L, m1)
    m2 = make_move(L1, t2, new_vertex=v2)
    L12 = apply_move(L1, m2)
    m3 = make_move(L12, (v1,))
    m4 = make_move(apply_move(L12, m3), (v2,))
    return _finish(L, [m1, m2, m3, m4], *classify_alpha1(L, t1, t2))


# ---------------------------------------------------------------- alpha 2

def classify_alpha2(L: OrientedComplex, t: Simplex, e: Simplex):
    tris = sorted(f for f in L.facets if set(e) <= set(f))
    if len(tris) != 2:
        return None
    (d1, i1), (d2, i2) = sorted(
        ((d, set(t) & set(d)) for d in tris), key=lambda p: -len(p[1]))
    if not i1:
        return GeneratorSpec("S2_0", ()), 1
    if len(i1) == 1 and not i2:
        x = next(iter(i1))
        p = _arc_count(L, x, t, d1)
        return GeneratorSpec("S2_1", (p, _degree(L, x) - p - 2)), 1
    if len(i1) == 2:
        e1 = tuple(sorted(i1))
        in_e = set(e1) & set(e)
        if len(in_e) != 1:
            return None
        y = next(iter(in_e))
        x = e1[0] if y == e1[1] else e1[1]
        if i2 != {y}:
            return None
        bit = _triple_bit(L, y, t, d1, d2)
        return GeneratorSpec("S2_2", (_degree(L, x) - 2, _degree(L, y) - 3)), bit
    return None


def build_alpha2(L: OrientedComplex, t, e) -> GeneratorChain:
    """Subdivide t, flip e, remove the new vertex, flip back."""
    t, e = tuple(sorted(t)), tuple(sorted(e))
    if t not in L.facets:
        raise AnchorConfigurationInvalid(f"{t} is not a facet")
    if set(e) <= set(t):
        raise AnchorConfigurationInvalid("edge lies in the subdivided triangle")
    classified = classify_alpha2(L, t, e)
    if classified is None:
        raise AnchorConfigurationInvalid("configuration is not a priced pattern")
    try:
        make_move(L, e)
    except MoveNotAdmissible as exc:
        raise AnchorConfigurationInvalid(str(exc))
    v = max(L.vertices) + 1
    m1 = make_move(L, t, new_vertex=v)
    L1 = apply_move(L, m1)
    m2 = make_move(L1, e)
    L2 = apply_move(L1, m2)
    m3 = make_move(L2, (v,))
    m4 = make_move(apply_move(L2, m3), m2.delta2)
    return _finish(L, [m1, m2, m3, m4], *classified)


# ---------------------------------------------------------------- alpha 3

def admissible_pair(L: OrientedComplex, e1, e2) -> bool:
    """No triangle contains both edges, both flips are legal, and the second
    stays legal after the first."""
    e1, e2 = tuple(sorted(e1)), tuple(sorted(e2))
    if e1 == e2 or L.complex.has_simplex(tuple(sorted(set(e1) | set(e2)))):
        return False
    try:
        m1 = make_move(L, e1)
        make_move(L, e2)
        make_move(apply_move(L, m1), e2)
    except MoveNotAdmissible:
        return False
    return True


def classify_alpha3(L: OrientedComplex, e1: Simplex, e2: Simplex):
    side1 = sorted(f for f in L.facets if set(e1) <= set(f))
    side2 = sorted(f for f in L.facets if set(e2) <= set(f))
    overlaps = [(d1, d2, set(d1) & set(d2)) for d1 in side1 for d2 in side2]
    nonempty = [(d1, d2, c) for d1, d2, c in overlaps if c]
    if not nonempty:
        return GeneratorSpec("S3_0", ()), 1
    if len(nonempty) == 1 and len(nonempty[0][2]) == 1:
        d1, d2, c = nonempty[0]
        x = next(iter(c))
        p = _arc_count(L, x, d1, d2)
        return GeneratorSpec("S3_1", (p, _degree(L, x) - p - 2)), 1
    shared = [(d1, d2, c) for d1, d2, c in nonempty if len(c) == 2]
    if len(shared) == 1:
        d1, d2, c = shared[0]
        xy = tuple(sorted(c))
        in1, in2 = set(xy) & set(e1), set(xy) & set(e2)
        if len(in1) == 1 and len(in2) == 1 and in1 != in2:
            y, x = next(iter(in1)), next(iter(in2))
            d3 = next(f for f in side1 if f != d1)
            bit = _triple_bit(L, y, d3, d1, d2)
            return (GeneratorSpec("S3_2", (_degree(L, x) - 3, _degree(L, y) - 3)),
                    bit)
    return None


def build_alpha3(L: OrientedComplex, e1, e2) -> GeneratorChain:
    """Flip e1, flip e2, flip the first new edge back, flip the second back."""
    e1, e2 = tuple(sorted(e1)), tuple(sorted(e2))
    if not admissible_pair(L, e1, e2):
        raise AnchorConfigurationInvalid(f"({e1}, {e2}) is not an admissible pair")
    classified = classify_alpha3(L, e1, e2)
    if classified is None:
        raise AnchorConfigurationInvalid("configuration is not a priced pattern")
    m1 = make_move(L, e1)
    L1 = apply_move(L, m1)
    m2 = make_move(L1, e2)
    L2 = apply_move(L1, m2)
    m3 = make_move(L2, m1.delta2)
    m4 = make_move(apply_move(L2, m3), m2.delta2)
    return _finish(L, [m1, m2, m3, m4], *classified)


# ---------------------------------------------------------------- alpha 4

def _hub_of(L: OrientedComplex, x, y, z):
    hubs = [u for u in L.vertices
            if u not in (x, y, z)
            and tuple(sorted((u, x, y))) in L.facets
            and tuple(sorted((u, y, z))) in L.facets
            and tuple(sorted((u, z, x))) in L.facets]
    if len(hubs) != 1:
        raise AnchorConfigurationInvalid(
            f"{len(hubs)} hub vertices for ({x},{y},{z})")
    return hubs[0]


def classify_alpha4(L: OrientedComplex, x, y, z):
    u = _hub_of(L, x, y, z)
    bit = _fan_bit(L, u, (x, y, z, x))
    return GeneratorSpec(
        "S4", (_degree(L, x) - 2, _degree(L, y) - 2, _degree(L, z) - 2)), bit


def build_alpha4(L: OrientedComplex, x, y, z) -> GeneratorChain:
    """Subdivide {u,y,z}, flip {u,z} onto the new vertex, remove u; closes up
    to the relabeling u -> new vertex."""
    classified = classify_alpha4(L, x, y, z)
    u = _hub_of(L, x, y, z)
    v = max(L.vertices) + 1
    m1 = make_move(L, tuple(sorted((u, y, z))), new_vertex=v)
    L1 = apply_move(L, m1)
    m2 = _expect_flip(L1, tuple(sorted((u, z))), (x, v))
    L2 = apply_move(L1, m2)
    m3 = make_move(L2, (u,))
    return _finish(L, [m1, m2, m3], *classified)


# ---------------------------------------------------------------- alpha 5

def _require_full(L: OrientedComplex, verts, triangles) -> None:
    sub = full_subcomplex(L.complex, verts)
    if set(sub.facets) != {tuple(sorted(t)) for t in triangles}:
        raise AnchorConfigurationInvalid(
            f"full subcomplex on {verts} is not the required triangles")


def classify_alpha5(L: OrientedComplex, x, y, z, u):
    _require_full(L, (x, y, z, u), [(x, y, z), (x, z, u)])
    bit = _fan_bit(L, x, (y, z, u))
    return GeneratorSpec("S5", (_degree(L, x) - 2, _degree(L, y) - 1,
                                _degree(L, z) - 2, _degree(L, u) - 1)), bit


def build_alpha5(L: OrientedComplex, x, y, z, u) -> GeneratorChain:
    """Pentagon loop: subdivide {x,z,u}, flip {x,z}, flip {w,z}, remove the
    new vertex, flip {y,u} back."""
    classified = classify_alpha5(L, x, y, z, u)
    w = max(L.vertices) + 1
    m1 = make_move(L, tuple(sorted((x, z, u))), new_vertex=w)
    L1 = apply_move(L, m1)
    m2 = _expect_flip(L1, tuple(sorted((x, z))), (y, w))
    L2 = apply_move(L1, m2)
    m3 = _expect_flip(L2, tuple(sorted((w, z))), (y, u))
    L3 = apply_move(L2, m3)
    m4 = make_move(L3, (w,))
    L4 = apply_move(L3, m4)
    m5 = _expect_flip(L4, tuple(sorted((y, u))), (x, z))
    return _finish(L, [m1, m2, m3, m4, m5], *classified)


# ---------------------------------------------------------------- alpha 6

def classify_alpha6(L: OrientedComplex, x, y, z, u, v):
    _require_full(L, (x, y, z, u, v), [(x, y, z), (x, z, u), (x, u, v)])
    bit = _fan_bit(L, x, (y, z, u, v))
    return GeneratorSpec("S6", (_degree(L, x) - 3, _degree(L, y) - 1,
                                _degree(L, z) - 2, _degree(L, u) - 2,
                                _degree(L, v) - 1)), bit


def build_alpha6(L: OrientedComplex, x, y, z, u, v) -> GeneratorChain:
    """Pentagon of five flips around the fan of three triangles at x."""
    classified = classify_alpha6(L, x, y, z, u, v)
    m1 = _expect_flip(L, tuple(sorted((x, z))), (y, u))
    L1 = apply_move(L, m1)
    m2 = _expect_flip(L1, tuple(sorted((x, u))), (y, v))
    L2 = apply_move(L1, m2)
    m3 = _expect_flip(L2, tuple(sorted((y, u))), (z, v))
    L3 = apply_move(L2, m3)
    m4 = _expect_flip(L3, tuple(sorted((y, v))), (x, z))
    L4 = apply_move(L3, m4)
    m5 = _expect_flip(L4, tuple(sorted((z, v))), (x, u))
    return _finish(L, [m1, m2, m3, m4, m5], *classified)


# ---------------------------------------------------------------- surveys

def _edges(L: OrientedComplex):
    return sorted(L.complex.faces(1))


def _admissible_edges(L: OrientedComplex):
    out = []
    for e in _edges(L):
        try:
            make_move(L, e)
        except MoveNotAdmissible:
            continue
        out.append(e)
    return out


def enumerate_at(L: OrientedComplex, kinds: Optional[Iterable[str]] = None):
    """All priced generator chains anchored at L, deduplicated by chain.

    ``kinds`` filters by family name prefix ("S1".."S6"); unclassifiable
    configurations are skipped since they carry no value.
    """
    want = set(kinds) if kinds is not None else {"S1", "S2", "S3", "S4", "S5", "S6"}
    want = {k[:2] for k in want}
    out = []
    seen = set()

    def push(builder, *anchor):
        try:
            g = builder(L, *anchor)
        except (AnchorConfigurationInvalid, MoveNotAdmissible):
            return
        rep, _ = g.chain.normalized()
        key = rep.frozen()
        if key and key not in seen:
            seen.add(key)
            out.append(g)

    facets = sorted(L.facets)
    adm = _admissible_edges(L)
    if "S1" in want:
        for t1, t2 in itertools.combinations(facets, 2):
            push(build_alpha1, t1, t2)
    if "S2" in want:
        for t in facets:
            for e in adm:
                if not set(e) <= set(t):
                    push(build_alpha2, t, e)
    if "S3" in want:
        for e1, e2 in itertools.combinations(adm, 2):
            if admissible_pair(L, e1, e2):
                push(build_alpha3, e1, e2)
    if "S4" in want:
        for u in L.vertices:
            if _degree(L, u) == 3:
                cyc = _link_cycle(L, u)
                for roll in range(3):
                    x, y, z = cyc[roll:] + cyc[:roll]
                    push(build_alpha4, x, y, z)
                    push(build_alpha4, x, z, y)
    if "S5" in want:
        for e in _edges(L):
            x0, z0 = e
            tips = sorted({v for f in L.facets if set(e) <= set(f)
                           for v in f if v not in e})
            if len(tips) != 2:
                continue
            for x, z in ((x0, z0), (z0, x0)):
                for y, u in (tips, tips[::-1]):
                    push(build_alpha5, x, y, z, u)
    if "S6" in want:
        for x in L.vertices:
            cyc = _link_cycle(L, x)
            if len(cyc) < 4:
                continue
            for ordered in (cyc, cyc[::-1]):
                for i in range(len(ordered)):
                    window = [ordered[(i + j) % len(ordered)] for j in range(4)]
                    push(build_alpha6, x, *window)
    return out


def _link_cycle(L: OrientedComplex, v) -> list:
    rot = canonical.sphere_data(L).rot[v]
    start = min(rot)
    cyc = [start]
    cur = rot[start]
    while cur != start:
        cyc.append(cur)
        cur = rot[cur]
    return cyc


def is_regular(L: OrientedComplex, marked: Iterable[int]) -> bool:
    """Diagnostic regularity of a generator configuration: the union of the
    marked vertices' stars is a full subcomplex, and any outside vertex seeing
    two marked vertices sees their joining triangle."""
    X = set(marked)
    star_facets = {f for f in L.facets if set(f) & X}
    verts = {v for f in star_facets for v in f}
    full = full_subcomplex(L.complex, verts)
    union = SimplexSet(star_facets)
    for f in full.facets:
        if not union.contains(f):
            return False
    edges = L.complex.faces(1)
    for w in L.vertices:
        if w in X:
            continue
        nbrs = {a for a in X if tuple(sorted((w, a))) in edges}
        for a, b in itertools.combinations(sorted(nbrs), 2):
            if tuple(sorted((w, a, b))) not in L.facets:
                return False
    return True


class SimplexSet:
    """Face membership for a set of facets."""

    def __init__(self, facets):
        self.facets = set(facets)

    def contains(self, s) -> bool:
        return any(set(s) <= set(f) for f in self.facets)
