"""Shipped data: the 9-vertex projective-plane triangulation, its vertex
link, the nine-move reduction of that link, and the 5-simplex boundary.

Set the P1_FIXTURES environment variable to load the files from another
directory instead of the packaged ones.
"""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .complexes import OrientedComplex, load_facet_file
from .moves import MoveSequence


def fixture_path(name: str) -> Path:
    override = os.environ.get("P1_FIXTURES")
    if override:
        return Path(override) / name
    return Path(str(resources.files("plp1") / "fixtures" / name))


def load_oriented(name: str) -> OrientedComplex:
    L = load_facet_file(fixture_path(name))
    if not isinstance(L, OrientedComplex):
        raise TypeError(f"fixture {name} lacks an explicit orientation")
    return L


def boundary_d5() -> OrientedComplex:
    return load_oriented("boundary_d5.facets")


def cp2_9() -> OrientedComplex:
    return load_oriented("cp2_9.facets")


def link_L() -> OrientedComplex:
    return load_oriented("link_L.facets")


def sequence_9() -> MoveSequence:
    with open(fixture_path("sequence_9.json"), "r", encoding="utf-8") as fh:
        return MoveSequence.from_json(link_L(), fh.read())
