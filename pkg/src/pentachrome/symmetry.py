"""Symmetry machinery: vertex-permutation groups of the dodecahedron and
the colour-side group.

Vertex permutations are plain tuples of 20 images.  The rotation group (60
elements) is generated from two explicit rotations realized as orthogonal
matrices and converted to permutations by nearest-vertex matching, which is
self-validating: the matching must be a bijection within tolerance.  The
full group adds the central inversion.  Groups are returned sorted
lexicographically on image tuples so set equality is bit-exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .polytope import TOL, PolytopeModel, positions

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# vertex permutations

def identity_perm(n: int = 20) -> Perm:
    return tuple(range(n))


def is_permutation(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p . q)(v) = p[q[v]]."""
    return tuple(p[q[v]] for v in range(len(p)))


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for v, img in enumerate(p):
        inv[img] = v
    return tuple(inv)


def perm_cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    cycles = []
    for v in range(len(p)):
        if seen[v]:
            continue
        cyc = [v]
        seen[v] = True
        w = p[v]
        while w != v:
            cyc.append(w)
            seen[w] = True
            w = p[w]
        cycles.append(tuple(cyc))
    return cycles


def perm_parity(p: Perm) -> int:
    """+1 for even, -1 for odd, computed from the cycle type."""
    swaps = sum(len(c) - 1 for c in perm_cycles(p))
    return 1 if swaps % 2 == 0 else -1


def perm_order(p: Perm) -> int:
    order = 1
    for c in perm_cycles(p):
        order = math.lcm(order, len(c))
    return order


def close_under_composition(generators) -> frozenset:
    """Closure of a set of permutations (finite, so inverses come free)."""
    gens = list(generators)
    if not gens:
        return frozenset()
    n = len(gens[0])
    group = {identity_perm(n)}
    frontier = [g for g in gens if g not in group]
    group.update(frontier)
    while frontier:
        fresh = []
        for g in frontier:
            for h in gens:
                for prod in (compose(g, h), compose(h, g)):
                    if prod not in group:
                        group.add(prod)
                        fresh.append(prod)
        frontier = fresh
    return frozenset(group)


# ---------------------------------------------------------------------------
# rotations of the dodecahedron

def _axis_rotation(axis, angle: float) -> np.ndarray:
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    k = np.array([[0.0, -a[2], a[1]], [a[2], 0.0, -a[0]], [-a[1], a[0], 0.0]])
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def rotation_permutation(model: PolytopeModel, axis, angle: float) -> Perm:
    """Vertex permutation induced by the rotation about axis by angle.

    Raises if the rotated vertex set does not match the vertex set within
    tolerance (i.e. the rotation is not a symmetry).
    """
    pos = positions(model)
    rotated = pos @ _axis_rotation(axis, angle).T
    images = []
    for v in range(20):
        d = np.linalg.norm(pos - rotated[v], axis=1)
        w = int(np.argmin(d))
        if d[w] >= TOL:
            raise ValueError("rotation is not a symmetry of the vertex set")
        images.append(w)
    p = tuple(images)
    if not is_permutation(p, 20):
        raise ValueError("rotation does not induce a bijection on vertices")
    return p


def rotation_group(model: PolytopeModel) -> tuple[Perm, ...]:
    """The 60 orientation-preserving symmetries as vertex permutations.

    Generated by an order-3 rotation about the vertex-0 axis and an order-5
    rotation about the axis through the centre of the first face at vertex 0.
    """
    r3 = rotation_permutation(model, (0.0, 0.0, 1.0), 2.0 * math.pi / 3.0)
    face = model.faces[model.vertex_faces[0][0]]
    centre = positions(model)[list(face)].mean(axis=0)
    r5 = rotation_permutation(model, centre, 2.0 * math.pi / 5.0)
    group = close_under_composition([r3, r5])
    assert len(group) == 60, f"rotation group has {len(group)} elements"
    return tuple(sorted(group))


def full_group(model: PolytopeModel) -> tuple[Perm, ...]:
    """All 120 symmetries: rotations plus the central inversion coset."""
    rot = rotation_group(model)
    inv = model.antipode
    mirrored = [compose(inv, g) for g in rot]
    group = set(rot) | set(mirrored)
    assert len(group) == 120, f"full group has {len(group)} elements"
    return tuple(sorted(group))


def realization_matrix(model: PolytopeModel, p: Perm) -> np.ndarray:
    """The orthogonal 3x3 matrix taking every vertex position to its image.

    Raises if p is not induced by a linear isometry of the coordinates.
    """
    pos = positions(model)
    base = pos[[0, 1, 4]].T
    assert abs(np.linalg.det(base)) > TOL
    image = pos[[p[0], p[1], p[4]]].T
    mat = image @ np.linalg.inv(base)
    if not np.allclose(mat @ mat.T, np.eye(3), atol=1e-8):
        raise ValueError("permutation is not realized by an orthogonal map")
    if not np.allclose(pos @ mat.T, pos[list(p)], atol=1e-8):
        raise ValueError("matrix does not map all vertices to their images")
    return mat


def spatial_determinant(model: PolytopeModel, p: Perm) -> int:
    """+1 for rotations, -1 for orientation-reversing symmetries."""
    det = float(np.linalg.det(realization_matrix(model, p)))
    assert abs(abs(det) - 1.0) < 1e-8
    return 1 if det > 0 else -1


def tetra_action(model: PolytopeModel, g: Perm, tetrahedra) -> Perm:
    """The permutation a symmetry induces on the 5 tetrahedra of a compound.

    ``tetrahedra`` is an ordered sequence of five 4-tuples of vertex ids.
    Returns images as a 5-tuple on indices 0..4.  Raises if g does not map
    the compound to itself setwise.
    """
    tets = [frozenset(t) for t in tetrahedra]
    images = []
    for t in tets:
        img = frozenset(g[v] for v in t)
        if img not in tets:
            raise ValueError("symmetry does not stabilize the compound")
        images.append(tets.index(img))
    p = tuple(images)
    assert is_permutation(p, 5)
    return p


def group_to_json(group) -> str:
    """JSON dump of a permutation group: a list of 20-image arrays."""
    return json.dumps([list(p) for p in sorted(group)], separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# the colour-side group: permutations of {1..5} with a sign

@dataclass(frozen=True, order=True)
class ColourSymmetry:
    """A colour permutation together with a sign.

    ``perm[i-1]`` is the image of colour i.  Sign +1 relabels colours only;
    sign -1 additionally exchanges the colours of antipodal vertices.
    """

    perm: tuple[int, int, int, int, int]
    sign: int = 1

    def __post_init__(self):
        if sorted(self.perm) != [1, 2, 3, 4, 5]:
            raise ValueError(f"not a colour permutation: {self.perm!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1: {self.sign!r}")

    def apply(self, colour: int) -> int:
        return self.perm[colour - 1]

    def __mul__(self, other: "ColourSymmetry") -> "ColourSymmetry":
        """self after other."""
        return ColourSymmetry(
            tuple(self.perm[other.perm[i] - 1] for i in range(5)),
            self.sign * other.sign,
        )

    def inverse(self) -> "ColourSymmetry":
        inv = [0] * 5
        for i, img in enumerate(self.perm):
            inv[img - 1] = i + 1
        return ColourSymmetry(tuple(inv), self.sign)

    def parity(self) -> int:
        return perm_parity(tuple(v - 1 for v in self.perm))


COLOUR_IDENTITY = ColourSymmetry((1, 2, 3, 4, 5), 1)
COLOUR_SWAP = ColourSymmetry((1, 2, 3, 4, 5), -1)


def generate_subgroup(generators) -> frozenset[ColourSymmetry]:
    """Closure of colour symmetries under composition and inverse."""
    group = {COLOUR_IDENTITY}
    gens = [g for g in generators]
    frontier = [g for g in gens if g not in group]
    group.update(frontier)
    while frontier:
        fresh = []
        for g in frontier:
            for h in gens:
                for prod in (g * h, h * g):
                    if prod not in group:
                        group.add(prod)
                        fresh.append(prod)
        frontier = fresh
    assert 240 % len(group) == 0
    return frozenset(group)


def colour_group() -> frozenset[ColourSymmetry]:
    """The full colour-side group: all 5! permutations times both signs."""
    return frozenset(
        ColourSymmetry(p, s) for p in permutations((1, 2, 3, 4, 5)) for s in (1, -1)
    )


_SUBGROUP_BUILDERS = {
    "trivial": lambda: frozenset({COLOUR_IDENTITY}),
    "C2": lambda: frozenset({COLOUR_IDENTITY, COLOUR_SWAP}),
    "S5": lambda: frozenset(
        ColourSymmetry(p, 1) for p in permutations((1, 2, 3, 4, 5))
    ),
    "A5": lambda: frozenset(
        ColourSymmetry(p, 1)
        for p in permutations((1, 2, 3, 4, 5))
        if ColourSymmetry(p, 1).parity() == 1
    ),
    "A5xC2": lambda: frozenset(
        ColourSymmetry(p, s)
        for p in permutations((1, 2, 3, 4, 5))
        for s in (1, -1)
        if ColourSymmetry(p, 1).parity() == 1
    ),
    "S5xC2": colour_group,
}


def named_subgroup(name: str) -> frozenset[ColourSymmetry]:
    """One of the named subgroups: trivial, C2, S5, A5, A5xC2, S5xC2."""
    try:
        return _SUBGROUP_BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown subgroup name: {name!r}") from None
