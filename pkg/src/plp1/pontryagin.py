"""First Pontryagin number of an oriented closed triangulated 4-manifold.

Every vertex link is certified a 3-sphere by bistellar reduction; replaying
each reduction backwards (simplex boundary to link) and collecting, per
step, the essential induced moves on the vertex links of the intermediate
3-spheres yields an equivariant cycle in the graph of 2-spheres.  Half the
value of the pricing class on that cycle is the Pontryagin number; the
result is an exact rational, independent of the reduction sequences used.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from . import canonical
from .complexes import ComplexError, OrientedComplex, oriented_link
from .gamma2 import Chain1, is_cycle, mirror_chain, edge_of_move, single_edge
from .moves import MoveSequence, induced_vertex_moves
from .reduction import BudgetExhausted, ReductionConfig, reduce_sphere
from .solver import SolverBudget, evaluate_c0


class LinkNotCertified(ComplexError):
    def __init__(self, vertex, reason):
        super().__init__(f"link of vertex {vertex}: {reason}")
        self.vertex = vertex


class AssembledChainNotACycle(ComplexError):
    pass


@dataclass
class Manifold4Input:
    complex: OrientedComplex
    provenance: str = ""

    def __post_init__(self):
        if self.complex.dim != 4:
            raise ComplexError(f"need a 4-complex, got dim {self.complex.dim}")


@dataclass
class VerificationReport:
    links: Dict[int, MoveSequence] = field(default_factory=dict)
    link_sizes: Dict[int, tuple] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"links": [
            {"vertex": v, "vertices": self.link_sizes[v][0],
             "facets": self.link_sizes[v][1],
             "reduction_moves": len(self.links[v])}
            for v in sorted(self.links)]}


def verify_4manifold(K: Manifold4Input,
                     cfg: Optional[ReductionConfig] = None,
                     jobs: int = 1) -> VerificationReport:
    """Certify every vertex link as a 3-sphere; raises LinkNotCertified."""
    cfg = cfg or ReductionConfig()
    oc = K.complex
    report = VerificationReport()
    links = {}
    for v in oc.vertices:
        lk = oriented_link(oc, v)
        links[v] = lk
        report.link_sizes[v] = (len(lk.vertices), len(lk.facets))
        if not lk.complex.is_closed_pseudomanifold():
            raise LinkNotCertified(v, "link is not a closed pseudomanifold")

    def reduce_one(v):
        try:
            return v, reduce_sphere(links[v], cfg)
        except BudgetExhausted as exc:
            raise LinkNotCertified(v, str(exc))

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for v, seq in pool.map(reduce_one, sorted(links)):
                report.links[v] = seq
    else:
        for v in sorted(links):
            report.links[v] = reduce_one(v)[1]
    return report


def assemble_p1_cycle(K: Manifold4Input,
                      reductions: Dict[int, MoveSequence]):
    """The equivariant move cycle of the manifold.

    Reductions run link -> simplex boundary; the sums of the formula run the
    other way, so each sequence is reversed (with the matching sign flip
    through edge orientation) before collecting the essential induced moves
    on the links of the intermediate 3-spheres.
    """
    oc = K.complex
    half = Chain1()
    registry: dict = {}
    for v in sorted(oc.vertices):
        seq = reductions[v]
        if seq.initial != oriented_link(oc, v):
            raise ComplexError(f"reduction for vertex {v} starts elsewhere")
        rev = seq.reversed()
        for state, m, _ in rev.replay():
            for rec in induced_vertex_moves(state, m):
                if not rec.essential:
                    continue
                key, sign = edge_of_move(rec.link_before, rec.induced,
                                         L2=rec.link_after)
                half = half + single_edge(key, sign)
                for lk in (rec.link_before, rec.link_after):
                    registry.setdefault(canonical.code_bytes(lk), lk)
                    rev_lk = lk.reverse()
                    registry.setdefault(canonical.code_bytes(rev_lk), rev_lk)
    gamma = half - mirror_chain(half)
    if not is_cycle(gamma):
        raise AssembledChainNotACycle("equivariant assembly has boundary")
    return gamma, registry


def pontryagin_number(K: Manifold4Input,
                      cfg: Optional[ReductionConfig] = None,
                      budget: Optional[SolverBudget] = None,
                      reductions: Optional[Dict[int, MoveSequence]] = None):
    """Exact first Pontryagin number plus the decomposition certificate."""
    report = None
    if reductions is None:
        report = verify_4manifold(K, cfg)
        reductions = report.links
    gamma, registry = assemble_p1_cycle(K, reductions)
    value, cert = evaluate_c0(gamma, registry, budget)
    return value / 2, cert, report, gamma
