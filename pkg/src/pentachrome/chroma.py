"""Face-rainbow colourings: validity, enumeration, the colour-group action,
orbit partitioning, zigzag traces and cyclic-order parities.

A colouring is a plain tuple of 20 colours in {1..5}, indexed by vertex id.
Two independent enumerators are provided: a brute-force backtracking search
(`enumerate_colourings`) and a constraint-propagation replay
(`enumerate_by_propagation`) that fixes the colours of the north pole and
its neighbours, branches on the two completions of the first face, and
forces everything else.  The two must produce identical sets.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations

import numpy as np

from .polytope import PolytopeModel, positions
from .symmetry import ColourSymmetry

Colouring = tuple[int, ...]

COLOURS = (1, 2, 3, 4, 5)
LEFT = "left"
RIGHT = "right"
LABELLING = "canonical-v1"


class PropagationError(RuntimeError):
    """Constraint propagation contradicted itself or stalled."""


def check_colouring(c) -> Colouring:
    """Validate shape and colour range; returns the colouring as a tuple."""
    c = tuple(c)
    if len(c) != 20:
        raise ValueError(f"colouring must assign 20 vertices, got {len(c)}")
    for v, x in enumerate(c):
        if not isinstance(x, int) or x not in COLOURS:
            raise ValueError(f"vertex {v} has colour {x!r}, expected 1..5")
    return c


def is_valid(model: PolytopeModel, c) -> bool:
    """True iff every face carries all five colours."""
    c = check_colouring(c)
    return all(len({c[v] for v in f}) == 5 for f in model.faces)


def first_violated_face(model: PolytopeModel, c) -> int | None:
    c = check_colouring(c)
    for fid, f in enumerate(model.faces):
        if len({c[v] for v in f}) != 5:
            return fid
    return None


def colour_classes(c: Colouring) -> dict[int, frozenset[int]]:
    return {
        colour: frozenset(v for v in range(20) if c[v] == colour)
        for colour in COLOURS
    }


# ---------------------------------------------------------------------------
# enumeration, route one: depth-first backtracking

def enumerate_colourings(model: PolytopeModel) -> tuple[Colouring, ...]:
    """Every face-rainbow colouring, in lexicographic order.

    Vertices are assigned in id order, colours tried ascending; a colour is
    rejected as soon as it repeats on any face through the vertex.  No
    symmetry assumptions are made, so this is the assumption-free oracle.
    """
    vertex_faces = model.vertex_faces
    face_used = [0] * 12
    col = [0] * 20
    out: list[Colouring] = []

    def extend(v: int) -> None:
        if v == 20:
            out.append(tuple(col))
            return
        f0, f1, f2 = vertex_faces[v]
        used = face_used[f0] | face_used[f1] | face_used[f2]
        for colour in COLOURS:
            bit = 1 << colour
            if used & bit:
                continue
            col[v] = colour
            face_used[f0] |= bit
            face_used[f1] |= bit
            face_used[f2] |= bit
            extend(v + 1)
            face_used[f0] &= ~bit
            face_used[f1] &= ~bit
            face_used[f2] &= ~bit
        col[v] = 0

    extend(0)
    return tuple(out)


# ---------------------------------------------------------------------------
# enumeration, route two: propagation replay

def colour_frames():
    """The 120 ways to colour the north pole and its three neighbours.

    A frame fixes the colour of vertex 0 and an ordered assignment of three
    of the remaining colours to vertices 1, 2, 3 (the C1 band in azimuth
    order).
    """
    for pole in COLOURS:
        rest = [x for x in COLOURS if x != pole]
        for triple in permutations(rest, 3):
            yield pole, triple


def _propagate(model: PolytopeModel, col: list[int]) -> None:
    """Run singles propagation to a fixpoint, in place.

    Candidate colours for a vertex are those not yet used on any face
    through it.  Assigns forced vertices (single candidate) and forced
    face slots (a missing colour with a single possible vertex on that
    face).  Raises PropagationError on contradiction.
    """
    faces = model.faces
    vertex_faces = model.vertex_faces

    def candidates(v: int) -> set[int]:
        used = set()
        for f in vertex_faces[v]:
            used.update(col[u] for u in faces[f])
        used.discard(0)
        return set(COLOURS) - used

    changed = True
    while changed:
        changed = False
        for v in range(20):
            if col[v]:
                continue
            cand = candidates(v)
            if not cand:
                raise PropagationError(f"no colour left for vertex {v}")
            if len(cand) == 1:
                col[v] = cand.pop()
                changed = True
        for f in faces:
            present = [col[v] for v in f if col[v]]
            if len(present) != len(set(present)):
                raise PropagationError("face carries a colour twice")
            for missing in set(COLOURS) - set(present):
                slots = [v for v in f if not col[v] and missing in candidates(v)]
                if not slots:
                    raise PropagationError("missing colour has no slot on face")
                if len(slots) == 1 and not col[slots[0]]:
                    col[slots[0]] = missing
                    changed = True


def frame_completions(model: PolytopeModel, pole: int, triple) -> tuple[Colouring, Colouring]:
    """The exactly-two colourings extending a frame.

    Branches on the two ways to finish the first face at the north pole;
    each branch then propagates to a unique full colouring.
    """
    base = [0] * 20
    base[0] = pole
    base[1], base[2], base[3] = triple

    first_face = model.faces[model.vertex_faces[0][0]]
    open_vs = sorted(v for v in first_face if not base[v])
    assert len(open_vs) == 2
    missing = sorted(set(COLOURS) - {base[v] for v in first_face if base[v]})
    assert len(missing) == 2

    results = []
    for pair in (missing, missing[::-1]):
        col = list(base)
        col[open_vs[0]], col[open_vs[1]] = pair
        _propagate(model, col)
        if 0 in col:
            raise PropagationError("propagation stalled before completion")
        done = tuple(col)
        if not is_valid(model, done):
            raise PropagationError("propagation produced an invalid colouring")
        results.append(done)
    assert results[0] != results[1]
    return results[0], results[1]


def enumerate_by_propagation(model: PolytopeModel) -> tuple[Colouring, ...]:
    """All colourings via frame-by-frame propagation, sorted lexicographically."""
    out = []
    for pole, triple in colour_frames():
        out.extend(frame_completions(model, pole, triple))
    out.sort()
    assert len(out) == len(set(out)), "frames produced a duplicate colouring"
    return tuple(out)


def seed_colourings(model: PolytopeModel) -> tuple[Colouring, Colouring]:
    """The two canonical colourings: north pole 1, neighbours 2, 3, 4.

    Seed A is the branch whose face cyclic orders are even; under the
    canonical embedding its colour classes form compound A of the inscribed
    tetrahedra and its zigzags work left-handed (both pairings are fixed by
    the embedding and asserted in tests).
    """
    a, b = frame_completions(model, 1, (2, 3, 4))
    if parity_class(model, a) != 1:
        a, b = b, a
    assert parity_class(model, a) == 1 and parity_class(model, b) == -1
    return a, b


# ---------------------------------------------------------------------------
# the colour-group action

def act(g: ColourSymmetry, c: Colouring, model: PolytopeModel) -> Colouring:
    """Apply a colour symmetry: relabel colours, then for sign -1 take each
    vertex's colour from its antipode."""
    c = check_colouring(c)
    if not is_valid(model, c):
        raise ValueError("colouring is not face-rainbow")
    relabelled = [g.perm[x - 1] for x in c]
    if g.sign == -1:
        relabelled = [relabelled[model.antipode[v]] for v in range(20)]
    return tuple(relabelled)


def _check_subgroup(H) -> list[ColourSymmetry]:
    elems = sorted(set(H))
    if ColourSymmetry((1, 2, 3, 4, 5), 1) not in elems:
        raise ValueError("subgroup must contain the identity")
    members = set(elems)
    for g in elems:
        for h in elems:
            if g * h not in members:
                raise ValueError("generator set is not closed under composition")
    return elems


def orbit_partition(colourings, H, model: PolytopeModel) -> tuple[tuple[Colouring, ...], ...]:
    """Partition colourings into orbits of the subgroup H.

    Computed by explicit union-find over images of the action, so the orbit
    count formula is something this function's callers can check, not an
    assumption baked in.
    """
    elems = _check_subgroup(H)
    pool = [check_colouring(c) for c in colourings]
    index = {c: i for i, c in enumerate(pool)}
    if len(index) != len(pool):
        raise ValueError("duplicate colourings in input")

    parent = list(range(len(pool)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, c in enumerate(pool):
        for g in elems:
            img = act(g, c, model)
            j = index.get(img)
            if j is None:
                raise ValueError("subgroup action leaves the given colouring set")
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj

    orbits: dict[int, list[Colouring]] = {}
    for i, c in enumerate(pool):
        orbits.setdefault(find(i), []).append(c)
    return tuple(
        tuple(sorted(orbit))
        for orbit in sorted(orbits.values(), key=lambda o: min(o))
    )


def stabilizer(c: Colouring, H, model: PolytopeModel) -> list[ColourSymmetry]:
    return [g for g in sorted(set(H)) if act(g, c, model) == c]


# ---------------------------------------------------------------------------
# zigzag walks (property P1)

@lru_cache(maxsize=4)
def _turn_table(model: PolytopeModel) -> dict:
    """For each directed edge (u, w): the left and right outgoing edges at w.

    Left is the candidate whose direction has positive component along
    (incoming direction x outward normal at w).
    """
    pos = positions(model)
    table = {}
    for u in range(20):
        for w in model.adjacency[u]:
            d = pos[w] - pos[u]
            d = d / np.linalg.norm(d)
            ref = np.cross(d, pos[w])
            scored = []
            for x in model.adjacency[w]:
                if x == u:
                    continue
                e = pos[x] - pos[w]
                scored.append((float(e / np.linalg.norm(e) @ ref), x))
            scored.sort()
            # the two candidates must fall on opposite sides
            assert scored[0][0] < -1e-6 and scored[1][0] > 1e-6
            table[(u, w)] = {LEFT: scored[1][1], RIGHT: scored[0][1]}
    return table


def _check_handedness(handedness: str) -> str:
    if handedness not in (LEFT, RIGHT):
        raise ValueError(f"handedness must be 'left' or 'right': {handedness!r}")
    return handedness


def zigzag_walk(model: PolytopeModel, start: int, first: int, handedness: str) -> tuple[int, ...]:
    """The closed zigzag walk from ``start`` leaving along the edge to ``first``.

    Each three-edge block turns to the handedness side and then to the
    opposite side; the connecting turn at the block boundaries alternates
    sides, which closes the walk after 12 edges.  Returns the vertex
    sequence with both endpoints equal to ``start``.
    """
    handedness = _check_handedness(handedness)
    other = RIGHT if handedness == LEFT else LEFT
    word = (handedness, other, handedness, handedness, other, other)
    table = _turn_table(model)
    if first not in model.adjacency[start]:
        raise ValueError(f"{first} is not a neighbour of {start}")
    seq = [start, first]
    prev, cur = start, first
    i = 1
    while True:
        nxt = table[(prev, cur)][word[(i - 1) % 6]]
        seq.append(nxt)
        prev, cur = cur, nxt
        i += 1
        if (prev, cur) == (start, first) and (i - 1) % 6 == 0:
            break
        assert i <= 60, "zigzag walk failed to close"
    return tuple(seq[:-1])


def zigzag_trace(model: PolytopeModel, c: Colouring, v: int, handedness: str) -> frozenset[int]:
    """Checkpoint set of the zigzag from v: every 3rd vertex of the closed walk.

    For exactly one handedness (fixed by the chirality class of the
    colouring) this set is the colour class of v.  The set is independent
    of the outgoing edge, so the walk leaves along the lowest-id neighbour.
    """
    c = check_colouring(c)
    if not is_valid(model, c):
        raise ValueError("colouring is not face-rainbow")
    walk = zigzag_walk(model, v, min(model.adjacency[v]), handedness)
    return frozenset(walk[::3])


def working_handedness(model: PolytopeModel, c: Colouring) -> str:
    """The handedness whose zigzag checkpoints reproduce colour classes."""
    classes = colour_classes(c)
    hits = [
        h for h in (LEFT, RIGHT)
        if zigzag_trace(model, c, 0, h) == classes[c[0]]
    ]
    assert len(hits) == 1, "exactly one handedness must reproduce the class"
    return hits[0]


# ---------------------------------------------------------------------------
# face cyclic orders and their parity (property P2)

def cyclic_order_parity(order) -> int:
    """Parity of a cyclic colour order, +1 even / -1 odd.

    The order is rotated to start at colour 1; the parity is that of the
    permutation sending position i to the i-th colour of the rotated tuple.
    Rotation does not change it, so this is a class function of the cyclic
    order.
    """
    order = tuple(order)
    if sorted(order) != [1, 2, 3, 4, 5]:
        raise ValueError(f"not a colour cycle: {order!r}")
    canon = canonical_cycle(order)
    images = tuple(x - 1 for x in canon)
    swaps = 0
    seen = [False] * 5
    for s in range(5):
        if seen[s]:
            continue
        length = 0
        w = s
        while not seen[w]:
            seen[w] = True
            w = images[w]
            length += 1
        swaps += length - 1
    return 1 if swaps % 2 == 0 else -1


def canonical_cycle(order) -> tuple[int, ...]:
    """Rotate a cyclic colour order so it starts at colour 1."""
    order = tuple(order)
    i = order.index(1)
    return order[i:] + order[:i]


def inverse_cycle(order) -> tuple[int, ...]:
    """The same cyclic order traversed backwards, canonically rotated."""
    return canonical_cycle(tuple(reversed(order)))


def face_parity_signature(model: PolytopeModel, c: Colouring):
    """Per face: (face id, canonical cyclic colour order, parity).

    The cyclic order reads the face in the positive sense (counterclockwise
    from outside).  For a valid colouring all 12 parities agree and the 12
    orders are pairwise distinct.
    """
    c = check_colouring(c)
    if not is_valid(model, c):
        raise ValueError("colouring is not face-rainbow")
    out = []
    for fid, f in enumerate(model.faces):
        order = canonical_cycle(tuple(c[v] for v in f))
        out.append((fid, order, cyclic_order_parity(order)))
    return tuple(out)


def parity_class(model: PolytopeModel, c: Colouring) -> int:
    """The shared parity of all 12 face cyclic orders (+1 even, -1 odd)."""
    parities = {p for _, _, p in face_parity_signature(model, c)}
    assert len(parities) == 1, "face parities are not uniform"
    return parities.pop()


def opposite_face(model: PolytopeModel, fid: int) -> int:
    """The face antipodal to fid."""
    target = frozenset(model.antipode[v] for v in model.faces[fid])
    for gid, g in enumerate(model.faces):
        if frozenset(g) == target:
            return gid
    raise AssertionError("no antipodal face found")


def antipodal_rule_holds(model: PolytopeModel, c: Colouring) -> bool:
    """Each antipode carries the one colour missing from a vertex and its
    three neighbours."""
    c = check_colouring(c)
    for v in range(20):
        local = {c[v]} | {c[u] for u in model.adjacency[v]}
        if len(local) != 4:
            return False
        (missing,) = set(COLOURS) - local
        if c[model.antipode[v]] != missing:
            return False
    return True


# ---------------------------------------------------------------------------
# serialization

def colouring_to_json(c: Colouring) -> str:
    doc = {"labelling": LABELLING, "colours": list(check_colouring(c))}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def colouring_from_json(text: str) -> Colouring:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("labelling") != LABELLING:
        raise ValueError(f"expected a colouring document with labelling {LABELLING!r}")
    return check_colouring(doc["colours"])


def enumeration_to_json(colourings) -> str:
    docs = [{"labelling": LABELLING, "colours": list(c)} for c in colourings]
    return json.dumps(docs, separators=(",", ":")) + "\n"


_PALETTE = (
    (230, 230, 230),
    (240, 200, 40),
    (200, 40, 40),
    (40, 80, 200),
    (30, 30, 30),
)


def colouring_to_off(model: PolytopeModel, c: Colouring) -> str:
    """COFF mesh: the dodecahedron with per-vertex colours from a palette."""
    c = check_colouring(c)
    lines = ["COFF", "20 12 30"]
    for v in model.vertices:
        r, g, b = _PALETTE[c[v.id] - 1]
        coords = " ".join(format(x, ".17g") for x in v.position)
        lines.append(f"{coords} {r} {g} {b} 255")
    for f in model.faces:
        lines.append("5 " + " ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"
