"""Skew local functions on oriented 2-spheres and the maps they generate.

A local function of degree n assigns rationals to isomorphism classes of
oriented (n-1)-spheres, skew under orientation reversal (symmetric spheres
get 0 structurally).  Production tables live on 2-spheres (degree 3);
evaluation on higher spheres happens through vertex-link sums.  The chain
homotopy identity d = delta s + s delta is exposed as an executable check:
it exercises every orientation convention in the package at once.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable

from . import canonical
from .complexes import (ComplexError, OrientedComplex, Simplex,
                        oriented_link, oriented_link_simplex)
from .moves import (Move, apply_move, build_L_beta, induced_vertex_moves,
                    is_admissible, MoveNotAdmissible)


class DimensionMismatch(ComplexError):
    pass


class LocalFunction:
    """Finitely tabulated skew function on oriented 2-spheres (degree 3).

    The table is stored on one orientation representative per class; looking
    up the mirror negates, and symmetric classes are forced to zero.
    """

    def __init__(self, entries: Iterable = (), degree: int = 3):
        if degree != 3:
            raise DimensionMismatch("tables are only supported on 2-spheres")
        self.degree = degree
        self.table: Dict[bytes, Fraction] = {}
        for sphere_or_code, value in entries:
            self.set_value(sphere_or_code, value)

    def set_value(self, L, value) -> None:
        value = Fraction(value)
        if isinstance(L, OrientedComplex):
            code = canonical.code_bytes(L)
            mirror = canonical.mirror_code_bytes(L)
        else:
            code = bytes(L)
            mirror = canonical.mirror_code_bytes(canonical.complex_from_code(code))
        if code == mirror:
            if value:
                raise ComplexError("symmetric sphere must have value 0")
            return
        if mirror < code:
            code, value = mirror, -value
        if value:
            self.table[code] = value
        else:
            self.table.pop(code, None)

    def value(self, L: OrientedComplex) -> Fraction:
        code = canonical.code_bytes(L)
        mirror = canonical.mirror_code_bytes(L)
        if code == mirror:
            return Fraction(0)
        if mirror < code:
            return -self.table.get(mirror, Fraction(0))
        return self.table.get(code, Fraction(0))

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "entries": [{"code": c.hex(),
                             "value": f"{v.numerator}/{v.denominator}"}
                            for c, v in sorted(self.table.items())]}


def delta_eval(f: LocalFunction, L: OrientedComplex) -> Fraction:
    """(delta f)(L) = sum of f over the oriented vertex links of L."""
    if L.dim != f.degree:
        raise DimensionMismatch(f"need a {f.degree}-dimensional complex")
    return sum((f.value(oriented_link(L, v)) for v in L.vertices), Fraction(0))


def delta2_eval(f: LocalFunction, M: OrientedComplex) -> Fraction:
    """(delta delta f)(M) on a 4-dimensional complex; exactly zero for any
    skew table when the link orientation convention is coherent."""
    if M.dim != f.degree + 1:
        raise DimensionMismatch(f"need a {f.degree + 1}-dimensional complex")
    return sum((delta_eval(f, oriented_link(M, v)) for v in M.vertices),
               Fraction(0))


def f_sharp(f: LocalFunction, K: OrientedComplex) -> Dict[Simplex, Fraction]:
    """The chain whose coefficient at each (dim K - 3)-simplex is f of its
    oriented link; simplices carry their sorted-order reference orientation."""
    m, n = K.dim, f.degree
    if m < n:
        raise DimensionMismatch("manifold dimension below function degree")
    chain: Dict[Simplex, Fraction] = {}
    for s in K.complex.faces(m - n):
        v = f.value(oriented_link_simplex(K, s))
        if v:
            chain[s] = v
    return chain


def chain_boundary(chain: Dict[Simplex, Fraction]) -> Dict[Simplex, Fraction]:
    out: Dict[Simplex, Fraction] = {}
    for s, q in chain.items():
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            if not face:
                continue
            v = out.get(face, Fraction(0)) + q * (-1) ** i
            if v:
                out[face] = v
            else:
                out.pop(face, None)
    return out


def is_cycle_fsharp(f: LocalFunction, K: OrientedComplex) -> bool:
    return not chain_boundary(f_sharp(f, K))


def s_eval(f: LocalFunction, L1: OrientedComplex, m: Move) -> Fraction:
    """s(f) on the edge of a move between circles: f of the sphere glued
    from the two cones and the joined move simplices."""
    if L1.dim != f.degree - 2:
        raise DimensionMismatch("move must live two dimensions below f")
    return f.value(build_L_beta(L1, m))


def d_eval(f: LocalFunction, L1: OrientedComplex, m: Move) -> Fraction:
    """Graph-cochain differential: f(target) - f(source) of a move between
    2-spheres."""
    if L1.dim != f.degree - 1:
        raise DimensionMismatch("move must live on (degree-1)-spheres")
    if not is_admissible(L1, m):
        raise MoveNotAdmissible(f"{m} not admissible")
    return f.value(apply_move(L1, m)) - f.value(L1)


def prop_identity_residual(f: LocalFunction, L1: OrientedComplex, m: Move) -> Fraction:
    """Residual of d = delta s + s delta on one move between 2-spheres.

    d f(e) is f(L2) - f(L1); (delta(s f))(e) sums f over the glued spheres
    of the induced circle moves; (s(delta f))(e) sums f over the vertex
    links of the glued sphere of the move itself.  The residual is zero for
    every skew table exactly when the orientation conventions cohere.
    """
    if L1.dim != 2:
        raise DimensionMismatch("identity checked on 2-sphere moves")
    if not is_admissible(L1, m):
        raise MoveNotAdmissible(f"{m} not admissible")
    L2 = apply_move(L1, m)
    lhs = f.value(L2) - f.value(L1)
    delta_sf = Fraction(0)
    for rec in induced_vertex_moves(L1, m):
        if rec.essential:
            delta_sf += f.value(build_L_beta(rec.link_before, rec.induced))
    L_beta = build_L_beta(L1, m)
    s_delta_f = delta_eval(f, L_beta)
    return lhs - delta_sf - s_delta_f


def prop_identity_holds(f: LocalFunction, L1: OrientedComplex, m: Move) -> bool:
    return prop_identity_residual(f, L1, m) == 0
