"""Bistellar reduction of 2- and 3-spheres to the simplex boundary.

Greedy descent on the lexicographic objective (vertex count, facet count)
with Metropolis-accepted uphill moves when stuck, restarted from derived
seeds.  A run certifies only when the final complex has n+2 vertices and
facets and is isomorphic to the boundary of the (n+1)-simplex; failure to
certify within budget is an explicit error, never a wrong answer.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .canonical import iso_generic
from .complexes import ComplexError, OrientedComplex, boundary_simplex
from .moves import MoveSequence, admissible_moves, apply_move, make_move


class BudgetExhausted(ComplexError):
    pass


@dataclass
class ReductionConfig:
    seed: int = 0
    max_steps: int = 3000
    restarts: int = 8
    temp_init: Fraction = Fraction(3, 2)
    cooling: Fraction = Fraction(995, 1000)
    reheat_after: int = 60
    weight_vertices: int = 8
    weight_facets: int = 1

    def __post_init__(self):
        if self.max_steps <= 0:
            raise ValueError("max_steps must be positive")
        if not 0 < self.cooling < 1:
            raise ValueError("cooling factor must lie in (0, 1)")


def _is_target(L: OrientedComplex) -> bool:
    n = L.dim
    return (len(L.vertices) == n + 2 and len(L.facets) == n + 2
            and iso_generic(L, boundary_simplex(n + 1)) is not None)


def _objective(L: OrientedComplex, cfg: ReductionConfig) -> int:
    return cfg.weight_vertices * len(L.vertices) + cfg.weight_facets * len(L.facets)


def _one_run(L: OrientedComplex, cfg: ReductionConfig, seed: int):
    rng = random.Random(seed)
    state = L
    moves = []
    temp = float(cfg.temp_init)
    stagnant = 0
    best = _objective(L, cfg)
    fresh = max(L.vertices) + 1
    for _ in range(cfg.max_steps):
        if _is_target(state):
            return moves
        cands = admissible_moves(state)
        scored = []
        cur = _objective(state, cfg)
        for m in cands:
            dv = 1 if len(m.delta2) == 1 else (-1 if len(m.delta1) == 1 else 0)
            df = len(m.delta1) - len(m.delta2)
            scored.append((cfg.weight_vertices * dv + cfg.weight_facets * df, m))
        downhill = [(d, m) for d, m in scored if d < 0]
        if downhill:
            dmin = min(d for d, _ in downhill)
            pick = rng.choice([m for d, m in downhill if d == dmin])
        else:
            d, pick = scored[rng.randrange(len(scored))]
            if d > 0 and rng.random() >= math.exp(-d / max(temp, 1e-9)):
                temp *= float(cfg.cooling)
                stagnant += 1
                if stagnant >= cfg.reheat_after:
                    temp = float(cfg.temp_init)
                    stagnant = 0
                continue
        if len(pick.delta2) == 1:
            pick = make_move(state, pick.delta1, new_vertex=fresh)
            fresh += 1
        state = apply_move(state, pick)
        moves.append(pick)
        temp *= float(cfg.cooling)
        obj = _objective(state, cfg)
        if obj < best:
            best = obj
            stagnant = 0
        else:
            stagnant += 1
            if stagnant >= cfg.reheat_after:
                temp = float(cfg.temp_init)
                stagnant = 0
    if _is_target(state):
        return moves
    return None


def reduce_sphere(L: OrientedComplex, cfg: ReductionConfig | None = None) -> MoveSequence:
    """Certified move sequence from L to a simplex boundary; deterministic
    given the seed; raises BudgetExhausted when no restart certifies."""
    cfg = cfg or ReductionConfig()
    if L.dim not in (2, 3):
        raise ComplexError(f"reduction supports dimensions 2 and 3, not {L.dim}")
    for r in range(cfg.restarts):
        moves = _one_run(L, cfg, cfg.seed * 1_000_003 + r)
        if moves is not None:
            return MoveSequence(L, moves)
    raise BudgetExhausted(
        f"no certified reduction within {cfg.restarts} restarts of "
        f"{cfg.max_steps} steps (non-sphere input or insufficient budget)")


def verify_sequence(L: OrientedComplex, seq: MoveSequence) -> OrientedComplex:
    """Replay with admissibility checks; the failing step index is reported."""
    if seq.initial != L:
        raise ComplexError("sequence initial complex differs from the input")
    state = L
    for _, _, state in seq.replay():
        pass
    return state
