"""Inscribed regular tetrahedra, the two chiral compounds of five, colour
class classification, and the distance-spread brute force."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .polytope import TOL, PolytopeModel, positions
from . import chroma

TETRA_EDGE = math.sqrt(8.0 / 3.0)

Tetra = tuple[int, int, int, int]


@dataclass(frozen=True)
class Compound:
    """Five vertex-disjoint tetrahedra covering all 20 vertices."""

    label: str  # "A" or "B"
    tetrahedra: tuple[Tetra, ...]

    def vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(t) for t in self.tetrahedra)


def is_regular_tetrahedron(model: PolytopeModel, members) -> bool:
    """All six pairwise distances equal the inscribed-tetrahedron edge."""
    pos = positions(model)
    return all(
        abs(float(np.linalg.norm(pos[a] - pos[b])) - TETRA_EDGE) < TOL
        for a, b in combinations(sorted(members), 2)
    )


@lru_cache(maxsize=2)
def inscribed_tetrahedra(model: PolytopeModel) -> tuple[Tetra, ...]:
    """The regular tetrahedra with vertices among the dodecahedron's.

    Built from the tetrahedron-distance graph: for each vertex, triangles
    among the vertices at tetrahedron-edge distance from it.
    """
    pos = positions(model)
    far = []
    for v in range(20):
        d = np.linalg.norm(pos - pos[v], axis=1)
        far.append([u for u in range(20) if abs(float(d[u]) - TETRA_EDGE) < TOL])
    found = set()
    for v in range(20):
        for trio in combinations(far[v], 3):
            members = tuple(sorted((v,) + trio))
            if members in found:
                continue
            if is_regular_tetrahedron(model, members):
                found.add(members)
    tets = tuple(sorted(found))
    assert len(tets) == 10, f"expected 10 tetrahedra, found {len(tets)}"
    for v in range(20):
        assert sum(v in t for t in tets) == 2
    return tets


@lru_cache(maxsize=2)
def compounds(model: PolytopeModel) -> tuple[Compound, Compound]:
    """The two compounds of five vertex-disjoint tetrahedra.

    Compound A is the one whose tetrahedron at vertex 0 has the
    lexicographically smaller member tuple.  Raises if the ten tetrahedra
    do not split into exactly two such partitions.
    """
    tets = inscribed_tetrahedra(model)
    partitions: list[tuple[Tetra, ...]] = []

    def extend(chosen: list[Tetra], covered: frozenset[int]) -> None:
        if len(chosen) == 5:
            assert covered == frozenset(range(20))
            partitions.append(tuple(sorted(chosen)))
            return
        v = min(set(range(20)) - covered)
        for t in tets:
            if v in t and not (set(t) & covered):
                extend(chosen + [t], covered | frozenset(t))

    extend([], frozenset())
    if len(partitions) != 2:
        raise AssertionError(f"expected 2 compounds, found {len(partitions)}")

    def tetra_at_zero(p):
        return next(t for t in p if 0 in t)

    partitions.sort(key=tetra_at_zero)
    return (
        Compound("A", partitions[0]),
        Compound("B", partitions[1]),
    )


def classify_colouring(model: PolytopeModel, c) -> tuple[Compound, dict[int, Tetra]]:
    """Match the five colour classes to the tetrahedra of one compound.

    Returns the compound they form and the colour -> tetrahedron map.
    Raises ValueError if the colouring is invalid or the classes are not
    the tetrahedra of a single compound.
    """
    if not chroma.is_valid(model, c):
        raise ValueError("colouring is not face-rainbow")
    classes = {
        colour: tuple(sorted(vs))
        for colour, vs in chroma.colour_classes(tuple(c)).items()
    }
    class_set = set(classes.values())
    for comp in compounds(model):
        if class_set == set(comp.tetrahedra):
            return comp, classes
    raise ValueError("colour classes do not form a compound")


@dataclass(frozen=True)
class SpreadReport:
    """Result of the brute-force scan for well-spread vertex subsets."""

    threshold: float
    max_size: int
    maximal_subsets: tuple[Tetra, ...]
    four_subsets_checked: int
    five_extension_possible: bool


def spread_subsets(model: PolytopeModel) -> SpreadReport:
    """Scan all 4-subsets whose pairwise distances reach the tetrahedron edge.

    Checks every C(20,4) subset against the threshold and then tries to
    extend each survivor by a fifth vertex; no extension can succeed, so
    well-spread subsets have at most four vertices.
    """
    pos = positions(model)
    threshold = TETRA_EDGE - TOL
    dist = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=2)
    ok = dist >= threshold

    survivors = []
    checked = 0
    for quad in combinations(range(20), 4):
        checked += 1
        a, b, c, d = quad
        if ok[a, b] and ok[a, c] and ok[a, d] and ok[b, c] and ok[b, d] and ok[c, d]:
            survivors.append(quad)

    extension = False
    for quad in survivors:
        for e in range(20):
            if e in quad:
                continue
            if all(ok[e, v] for v in quad):
                extension = True

    return SpreadReport(
        threshold=threshold,
        max_size=5 if extension else (4 if survivors else 3),
        maximal_subsets=tuple(survivors),
        four_subsets_checked=checked,
        five_extension_possible=extension,
    )


# ---------------------------------------------------------------------------
# serialization

_PALETTE = (
    (230, 230, 230),
    (240, 200, 40),
    (200, 40, 40),
    (40, 80, 200),
    (30, 30, 30),
)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def compound_to_off(model: PolytopeModel, comp: Compound) -> str:
    """OFF mesh of a compound: 20 vertices, 4 coloured triangles per
    tetrahedron, faces oriented outward from each tetrahedron's centre."""
    pos = positions(model)
    lines = ["OFF", "20 20 30"]
    for v in model.vertices:
        lines.append(" ".join(_fmt(x) for x in v.position))
    for i, tet in enumerate(comp.tetrahedra):
        centre = pos[list(tet)].mean(axis=0)
        r, g, b = _PALETTE[i]
        for tri in combinations(tet, 3):
            a, bb, cc = tri
            normal = np.cross(pos[bb] - pos[a], pos[cc] - pos[a])
            if float(normal @ (pos[a] - centre)) < 0.0:
                tri = (a, cc, bb)
            lines.append("3 " + " ".join(str(v) for v in tri) + f" {r} {g} {b}")
    return "\n".join(lines) + "\n"


def compound_to_json(comp: Compound) -> str:
    doc = {"compound": comp.label, "tetrahedra": [list(t) for t in comp.tetrahedra]}
    return json.dumps(doc, separators=(",", ":")) + "\n"
