"""The chain algebra of the graph of oriented 2-spheres.

Vertices of the graph are canonical codes of oriented 2-spheres; an edge is
an equivalence class of essential bistellar moves, identified by the codes
of its two endpoints together with the automorphism orbits of the move's
simplex on either side.  The key of a move and of its inverse coincide with
opposite signs; an inessential move (orbit data palindromic) yields no edge
at all.  Chains are sparse maps from edge keys to exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import canonical
from .complexes import ComplexError, OrientedComplex
from .moves import Move, MoveSequence, apply_move, is_admissible, MoveNotAdmissible


class LoopNotClosed(ComplexError):
    pass


@dataclass(frozen=True, order=True)
class EndPoint:
    """One endpoint of an edge: sphere code, move-simplex orbit, and the
    corresponding data on the orientation-reversed sphere."""
    code: bytes
    orbit: tuple
    mcode: bytes
    morbit: tuple

    def mirrored(self) -> "EndPoint":
        return EndPoint(self.mcode, self.morbit, self.code, self.orbit)


@dataclass(frozen=True, order=True)
class EdgeKey:
    """Canonicalized unoriented edge; ``a <= b`` fixes the stored direction."""
    a: EndPoint
    b: EndPoint

    def mirror(self):
        """The mirror edge with the sign relating stored directions."""
        ma, mb = self.a.mirrored(), self.b.mirrored()
        if (mb, ma) < (ma, mb):
            return EdgeKey(mb, ma), -1
        return EdgeKey(ma, mb), 1

    def to_json(self) -> dict:
        return {"from": self.a.code.hex(), "from_orbit": list(self.a.orbit),
                "to": self.b.code.hex(), "to_orbit": list(self.b.orbit)}


def endpoint(L: OrientedComplex, s) -> EndPoint:
    return EndPoint(canonical.code_bytes(L), canonical.canonical_orbit(L, s),
                    canonical.mirror_code_bytes(L), canonical.mirror_orbit(L, s))


def edge_of_move(L: OrientedComplex, m: Move,
                 L2: Optional[OrientedComplex] = None):
    """(EdgeKey, sign) of an essential move, or None when inessential.

    The sign is +1 when the move's direction is the stored canonical one;
    the inverse move returns the same key with the opposite sign.
    """
    if L2 is None:
        if not is_admissible(L, m):
            raise MoveNotAdmissible(f"{m} not admissible")
        L2 = apply_move(L, m)
    src = endpoint(L, m.delta1)
    dst = endpoint(L2, m.delta2)
    if src == dst:
        return None
    if (dst, src) < (src, dst):
        return EdgeKey(dst, src), -1
    return EdgeKey(src, dst), 1


class Chain1:
    """Sparse rational 1-chain on edge keys; zero coefficients are dropped."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=None):
        coeffs = {}
        if coefficients:
            for k, q in (coefficients.items()
                         if hasattr(coefficients, "items") else coefficients):
                q = Fraction(q)
                if q:
                    coeffs[k] = coeffs.get(k, Fraction(0)) + q
                    if not coeffs[k]:
                        del coeffs[k]
        self.coefficients = coeffs

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        return isinstance(other, Chain1) and self.coefficients == other.coefficients

    def __len__(self):
        return len(self.coefficients)

    def items(self):
        return self.coefficients.items()

    def __add__(self, other: "Chain1") -> "Chain1":
        out = dict(self.coefficients)
        for k, q in other.coefficients.items():
            s = out.get(k, Fraction(0)) + q
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        c = Chain1()
        c.coefficients = out
        return c

    def __sub__(self, other: "Chain1") -> "Chain1":
        return self + other.scale(-1)

    def __neg__(self) -> "Chain1":
        return self.scale(-1)

    def scale(self, q) -> "Chain1":
        q = Fraction(q)
        c = Chain1()
        if q:
            c.coefficients = {k: v * q for k, v in self.coefficients.items()}
        return c

    def normalized(self):
        """(representative, sign): the chain scaled so its least key has a
        positive coefficient; used to deduplicate candidate columns."""
        if not self.coefficients:
            return self, 1
        k0 = min(self.coefficients)
        if self.coefficients[k0] < 0:
            return self.scale(-1), -1
        return self, 1

    def frozen(self):
        return frozenset(self.coefficients.items())

    def to_json(self) -> list:
        out = []
        for k, q in sorted(self.coefficients.items()):
            out.append({"edge": k.to_json(), "coeff": f"{q.numerator}/{q.denominator}"})
        return out


def single_edge(key: EdgeKey, sign: int) -> Chain1:
    return Chain1({key: Fraction(sign)})


def mirror_chain(c: Chain1) -> Chain1:
    out = {}
    for k, q in c.coefficients.items():
        mk, s = k.mirror()
        v = out.get(mk, Fraction(0)) + q * s
        if v:
            out[mk] = v
        else:
            out.pop(mk, None)
    res = Chain1()
    res.coefficients = out
    return res


def boundary(c: Chain1) -> dict:
    """Sparse boundary on sphere codes; loop edges contribute nothing."""
    out: dict = {}
    for k, q in c.coefficients.items():
        for code, s in ((k.b.code, q), (k.a.code, -q)):
            v = out.get(code, Fraction(0)) + s
            if v:
                out[code] = v
            else:
                out.pop(code, None)
    return out


def is_cycle(c: Chain1) -> bool:
    return not boundary(c)


def chain_from_json(entries: Iterable[dict]):
    """Rebuild a chain (and representative spheres) from its JSON form.

    Endpoint complexes are reconstructed from their canonical codes, so the
    mirror data of each edge can be recomputed; returns (chain, registry)
    where registry maps codes to oriented complexes.
    """
    registry: dict = {}

    def end(code_hex: str, orbit) -> EndPoint:
        code = bytes.fromhex(code_hex)
        L = registry.get(code)
        if L is None:
            L = canonical.complex_from_code(code)
            registry[code] = L
        return EndPoint(code, tuple(orbit),
                        canonical.mirror_code_bytes(L),
                        _transport_orbit(L, tuple(orbit)))

    items = []
    for entry in entries:
        e = entry["edge"]
        a = end(e["from"], e["from_orbit"])
        b = end(e["to"], e["to_orbit"])
        num, den = entry["coeff"].split("/")
        items.append((EdgeKey(a, b), Fraction(int(num), int(den))))
    return Chain1(items), registry


def _transport_orbit(L: OrientedComplex, orbit: tuple) -> tuple:
    """Mirror orbit of a simplex given by canonical labels on L."""
    data = canonical.sphere_data(L)
    lab = data.labelings[0]
    inv = {lab[v]: v for v in lab}
    simplex = tuple(sorted(inv[i] for i in orbit))
    return canonical.mirror_orbit(L, simplex)


def loop_to_chain(L0: OrientedComplex, moves: Iterable[Move]):
    """Signed sum of the edges of a closed move loop, inessential steps
    dropped; raises LoopNotClosed unless the replay returns to a sphere
    orientation-preservingly isomorphic to the start."""
    seq = MoveSequence(L0, moves)
    chain = Chain1()
    registry = {}
    for state, m, nxt in seq.replay():
        registry[canonical.code_bytes(state)] = state
        registry[canonical.code_bytes(nxt)] = nxt
        e = edge_of_move(state, m, L2=nxt)
        if e is not None:
            chain = chain + single_edge(*e)
    final = seq.final()
    if canonical.code_bytes(final) != canonical.code_bytes(L0):
        raise LoopNotClosed("replay does not return to the initial sphere")
    return chain, registry
