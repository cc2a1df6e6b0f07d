"""Canonical model of the regular dodecahedron inscribed in the unit sphere.

The vertex set is the golden-ratio coordinate family, normalised to the unit
sphere and rotated so that one vertex lands exactly on the north pole
(0, 0, 1).  Vertex ids are assigned deterministically: 0 is the north pole,
19 the south pole, and the four latitude bands between them (C1, C2, C3, C4)
are numbered top to bottom, each band ordered by azimuth.

All combinatorial structure (edges, faces, antipode, dual icosahedron) is
derived from the coordinates once, validated, and frozen as integer tuples,
so every downstream enumeration is exact.  Faces are stored counterclockwise
as seen from outside the sphere, rotated so the smallest vertex id comes
first.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

TOL = 1e-9

NORTH_POLE = "north_pole"
C1 = "C1"
C2 = "C2"
C3 = "C3"
C4 = "C4"
SOUTH_POLE = "south_pole"
BANDS = (NORTH_POLE, C1, C2, C3, C4, SOUTH_POLE)
BAND_SIZES = (1, 3, 6, 6, 3, 1)

_PHI = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class Vertex:
    id: int
    position: tuple[float, float, float]
    latitude: str


@dataclass(frozen=True)
class PolytopeModel:
    """Immutable labelled dodecahedron.

    ``faces`` are oriented pentagons (positive sense = counterclockwise seen
    from outside), ``adjacency[v]`` holds the 3 neighbours of v, and
    ``vertex_faces[v]`` the 3 faces through v.  ``icosa_faces`` lists the 20
    faces of the dual icosahedron as sorted triples of dodecahedron face ids
    (icosahedron vertex i is the centre of dodecahedron face i);
    ``dual_faces[k]`` is the dodecahedron vertex corresponding to
    icosahedron face k.
    """

    vertices: tuple[Vertex, ...]
    faces: tuple[tuple[int, int, int, int, int], ...]
    edges: tuple[tuple[int, int], ...]
    antipode: tuple[int, ...]
    adjacency: tuple[tuple[int, int, int], ...]
    vertex_faces: tuple[tuple[int, int, int], ...]
    icosa_faces: tuple[tuple[int, int, int], ...]
    dual_faces: tuple[int, ...]

    def position(self, v: int) -> tuple[float, float, float]:
        return self.vertices[v].position


def _raw_coordinates() -> np.ndarray:
    """The 20 classical dodecahedron vertices, normalised to the unit sphere."""
    p = _PHI
    q = 1.0 / _PHI
    pts = []
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                pts.append((sx, sy, sz))
    for sa in (1, -1):
        for sb in (1, -1):
            pts.append((0.0, sa * q, sb * p))
            pts.append((sa * q, sb * p, 0.0))
            pts.append((sb * p, 0.0, sa * q))
    arr = np.array(pts, dtype=float)
    assert arr.shape == (20, 3)
    return arr / math.sqrt(3.0)


def _pole_rotation() -> np.ndarray:
    """Rotation taking (1,1,1)/sqrt(3) onto (0,0,1) along the shortest arc."""
    u = np.array([1.0, 1.0, 1.0]) / math.sqrt(3.0)
    v = np.array([0.0, 0.0, 1.0])
    w = np.cross(u, v)
    c = float(u @ v)
    k = np.array([[0.0, -w[2], w[1]], [w[2], 0.0, -w[0]], [-w[1], w[0], 0.0]])
    r = np.eye(3) + k + (k @ k) * ((1.0 - c) / float(w @ w))
    assert np.allclose(r @ r.T, np.eye(3), atol=TOL)
    assert np.allclose(r @ u, v, atol=TOL)
    return r


def _band_partition(pos: np.ndarray) -> list[list[int]]:
    """Group vertex indices into latitude bands, top to bottom."""
    order = sorted(range(20), key=lambda i: -pos[i, 2])
    bands: list[list[int]] = [[order[0]]]
    for i in order[1:]:
        if abs(pos[i, 2] - pos[bands[-1][0], 2]) < 1e-6:
            bands[-1].append(i)
        else:
            bands.append([i])
    assert [len(b) for b in bands] == list(BAND_SIZES), "latitude bands malformed"
    return bands


def _azimuth(p) -> float:
    return math.atan2(p[1], p[0]) % (2.0 * math.pi)


def _canon_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to the smallest id and pick the lexicographically smaller direction."""
    i = cycle.index(min(cycle))
    fwd = cycle[i:] + cycle[:i]
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, rev)


def _face_cycles(adj: list[set[int]]) -> list[tuple[int, ...]]:
    found = set()
    for a in range(20):
        for b in adj[a]:
            for c in adj[b]:
                if c == a:
                    continue
                for d in adj[c]:
                    if d in (a, b):
                        continue
                    for e in adj[d]:
                        if e in (a, b, c):
                            continue
                        if a in adj[e]:
                            found.add(_canon_cycle((a, b, c, d, e)))
    return sorted(found)


def _orient_outward(cycle: tuple[int, ...], pos: np.ndarray) -> tuple[int, ...]:
    """Orient a face cycle counterclockwise as seen from outside the sphere."""
    pts = pos[list(cycle)]
    normal = np.zeros(3)
    for i in range(5):
        normal += np.cross(pts[i], pts[(i + 1) % 5])
    centre = pts.mean(axis=0)
    # coplanarity: all vertices at the same offset along the face normal
    unit = normal / np.linalg.norm(normal)
    offsets = pts @ unit
    assert offsets.max() - offsets.min() < TOL, "face vertices not coplanar"
    if float(normal @ centre) < 0.0:
        cycle = (cycle[0],) + tuple(reversed(cycle[1:]))
    return cycle


def build_polytope() -> PolytopeModel:
    """Construct the canonical dodecahedron model.

    Deterministic: every call yields identical data.  Any internal
    inconsistency raises rather than returning a partial model.
    """
    pos = _raw_coordinates() @ _pole_rotation().T
    norms = np.linalg.norm(pos, axis=1)
    assert np.all(np.abs(norms - 1.0) < TOL), "vertices not on the unit sphere"

    bands = _band_partition(pos)
    ids_in_order: list[int] = []
    latitudes: list[str] = []
    for band, raw_ids in zip(BANDS, bands):
        raw_ids.sort(key=lambda i: _azimuth(pos[i]))
        ids_in_order.extend(raw_ids)
        latitudes.extend([band] * len(raw_ids))
    pos = pos[ids_in_order]
    assert np.linalg.norm(pos[0] - np.array([0.0, 0.0, 1.0])) < TOL

    vertices = tuple(
        Vertex(i, (float(pos[i, 0]), float(pos[i, 1]), float(pos[i, 2])), latitudes[i])
        for i in range(20)
    )

    # adjacency: the 3 vertices at minimal distance
    d2 = np.sum((pos[:, None, :] - pos[None, :, :]) ** 2, axis=2)
    np.fill_diagonal(d2, np.inf)
    edge2 = d2.min()
    adj = [set(np.flatnonzero(d2[v] < edge2 + TOL).tolist()) for v in range(20)]
    assert all(len(a) == 3 for a in adj), "graph is not 3-regular"
    edges = tuple(sorted((v, u) for v in range(20) for u in adj[v] if v < u))
    assert len(edges) == 30

    cycles = _face_cycles(adj)
    assert len(cycles) == 12, f"expected 12 pentagonal faces, found {len(cycles)}"
    faces = tuple(sorted(_orient_outward(c, pos) for c in cycles))

    # every directed edge appears in exactly one oriented face, so the two
    # faces sharing an edge traverse it in opposite directions
    directed = [(f[i], f[(i + 1) % 5]) for f in faces for i in range(5)]
    assert len(directed) == len(set(directed)) == 60
    assert set(directed) == {(u, v) for u, v in edges} | {(v, u) for u, v in edges}

    antipode = []
    for v in range(20):
        m = np.flatnonzero(np.linalg.norm(pos + pos[v], axis=1) < TOL)
        assert m.size == 1, "antipodal vertex not found"
        antipode.append(int(m[0]))
    assert all(antipode[antipode[v]] == v and antipode[v] != v for v in range(20))

    vf: list[list[int]] = [[] for _ in range(20)]
    for fid, f in enumerate(faces):
        for v in f:
            vf[v].append(fid)
    assert all(len(x) == 3 for x in vf)
    vertex_faces = tuple(tuple(sorted(x)) for x in vf)

    icosa_faces = tuple(sorted(vertex_faces))
    assert len(set(icosa_faces)) == 20
    by_triple = {t: v for v, t in enumerate(vertex_faces)}
    dual_faces = tuple(by_triple[t] for t in icosa_faces)

    return PolytopeModel(
        vertices=vertices,
        faces=faces,
        edges=edges,
        antipode=tuple(antipode),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        vertex_faces=vertex_faces,
        icosa_faces=icosa_faces,
        dual_faces=dual_faces,
    )


def positions(model: PolytopeModel) -> np.ndarray:
    return np.array([v.position for v in model.vertices])


def _check_vertex_id(v: int) -> None:
    if not isinstance(v, int) or not 0 <= v <= 19:
        raise ValueError(f"vertex id out of range: {v!r}")


def neighbours(model: PolytopeModel, v: int) -> frozenset[int]:
    """The 3 vertices joined to v by an edge."""
    _check_vertex_id(v)
    return frozenset(model.adjacency[v])


def distance_spectrum(model: PolytopeModel) -> tuple[tuple[float, int], ...]:
    """All distinct pairwise vertex distances with multiplicities.

    Distances equal within TOL are merged; the result is sorted ascending
    and the multiplicities sum to C(20,2) = 190.
    """
    pos = positions(model)
    groups: list[list] = []
    for i in range(20):
        for j in range(i + 1, 20):
            d = float(np.linalg.norm(pos[i] - pos[j]))
            for g in groups:
                if abs(g[0] - d) <= TOL:
                    g[1] += 1
                    break
            else:
                groups.append([d, 1])
    return tuple(sorted((d, c) for d, c in groups))


def dual_face_of(model: PolytopeModel, icosa_face: int) -> int:
    """The dodecahedron vertex corresponding to a face of the dual icosahedron."""
    if not isinstance(icosa_face, int) or not 0 <= icosa_face <= 19:
        raise ValueError(f"icosahedron face id out of range: {icosa_face!r}")
    return model.dual_faces[icosa_face]


def _fmt(x: float) -> str:
    return format(x, ".17g")


def model_to_off(model: PolytopeModel) -> str:
    """OFF mesh of the dodecahedron; byte-stable across runs."""
    lines = ["OFF", "20 12 30"]
    for v in model.vertices:
        lines.append(" ".join(_fmt(c) for c in v.position))
    for f in model.faces:
        lines.append("5 " + " ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def model_to_json(model: PolytopeModel) -> str:
    """JSON document with vertices, faces and the antipodal map; byte-stable."""
    doc = {
        "vertices": [list(v.position) for v in model.vertices],
        "faces": [list(f) for f in model.faces],
        "antipode": list(model.antipode),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"
