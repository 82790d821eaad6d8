"""Schnyder woods of 3-connected plane graphs, orthogonal-surface coordinates,
flats and rigidity, the induced flat angle assignment on the medial graph,
and primal-dual triangle contact representations.

A wood orients and labels the edges with colors 1, 2, 3 so that every vertex
has one outgoing edge per color in the clockwise pattern
out-1, in-3*, out-2, in-1*, out-3, in-2*, with no monochromatic directed
cycle; the suspensions carry outward half-edges of their own color.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator, Mapping, Sequence

from .errors import (
    AmbiguousFlatMembership,
    BudgetExceeded,
    Not3Connected,
    SurfaceNotRigid,
)
from .faa import DEFAULT_BUDGET, FlatAngleAssignment
from .harmonic import (
    DEFAULT_POLE_TRIANGLE,
    DEFAULT_TOLERANCE,
    Drawing,
    assemble,
    check_solvability,
    pseudosegments_of,
    solve,
    verify_drawing,
)
from .planar import (
    MedialGraph,
    SuspendedGraph,
    Vertex,
    _sorted,
    augmented_rotation,
    edge_key,
    is_3connected,
    medial_graph,
)

COLORS = (1, 2, 3)


def _nxt(color: int) -> int:
    return color % 3 + 1


def _prv(color: int) -> int:
    return (color - 2) % 3 + 1


@dataclass(eq=False)
class SchnyderWood:
    """Edge orientation and labeling; ``out`` gives each vertex's outgoing
    neighbor per color (None marks the half-edge at suspension i)."""

    graph: SuspendedGraph
    out: dict[Vertex, dict[int, Vertex | None]]

    def arc_color(self, u: Vertex, v: Vertex) -> int | None:
        for color, w in self.out[u].items():
            if w == v:
                return color
        return None

    def edge_labels(self, u: Vertex, v: Vertex) -> tuple[int | None, int | None]:
        """(color of u->v, color of v->u); at least one is set for wood edges."""
        return (self.arc_color(u, v), self.arc_color(v, u))

    def arcs(self) -> Iterator[tuple[Vertex, Vertex, int]]:
        for u in _sorted(self.out):
            for color in COLORS:
                v = self.out[u].get(color)
                if v is not None:
                    yield (u, v, color)


def _oriented_tokens(sg: SuspendedGraph) -> dict[Vertex, tuple[Any, ...]]:
    """Augmented token lists, oriented so that (s1, s2, s3) reads clockwise.

    The angular pattern is chiral; when the given triple runs counter-
    clockwise along the boundary, the mirrored embedding is used instead.
    """
    aug = augmented_rotation(sg)
    seq = [a for a, _ in sg.graph.outer_walk()]
    pos = {v: i for i, v in enumerate(seq)}
    p = [pos[s] for s in sg.suspensions]
    n = len(seq)
    if (p[1] - p[0]) % n < (p[2] - p[0]) % n:
        return {v: tuple(reversed(t)) for v, t in aug.items()}
    return aug


def _local_patterns(
    tokens: Sequence[Any], fixed: Mapping[Any, int]
) -> list[dict[Any, int]]:
    """All role maps token -> signed color for one vertex.

    ``tokens`` is the clockwise cyclic token list.  Positive roles are
    outgoing colors, negative incoming.  Valid patterns are rotations of
    out-1 (in-3)* out-2 (in-1)* out-3 (in-2)*; after out-i the incoming
    block carries color i-1.  ``fixed`` pins roles (the half-edge token).
    """
    d = len(tokens)
    patterns = []
    for combo in itertools.combinations(range(d), 3):
        for shift in range(3):
            outs = {
                combo[shift % 3]: 1,
                combo[(shift + 1) % 3]: 2,
                combo[(shift + 2) % 3]: 3,
            }
            roles: dict[Any, int] = {}
            ok = True
            for pos in range(d):
                tok = tokens[pos]
                if pos in outs:
                    roles[tok] = outs[pos]
                else:
                    j = pos
                    while j not in outs:
                        j = (j - 1) % d
                    roles[tok] = -_prv(outs[j])
            for tok, want in fixed.items():
                if roles.get(tok) != want:
                    ok = False
                    break
            if ok:
                patterns.append(roles)
    return patterns


def enumerate_schnyder_woods(
    sg: SuspendedGraph, budget: int = DEFAULT_BUDGET
) -> Iterator[SchnyderWood]:
    """All Schnyder woods in deterministic backtracking order.

    Backtracks over per-vertex angular patterns and rejects monochromatic
    directed cycles at the leaves.
    """
    if not is_3connected(sg.graph.rotation):
        raise Not3Connected("Schnyder woods require a 3-connected graph")
    tokens_cw = _oriented_tokens(sg)

    fixed_roles: dict[Vertex, dict[Any, int]] = {v: {} for v in tokens_cw}
    for i, s in enumerate(sg.suspensions, start=1):
        fixed_roles[s][("h", i)] = i
    pattern_lists = {
        v: _local_patterns(tokens_cw[v], fixed_roles[v]) for v in tokens_cw
    }

    order = []
    seen = set(sg.suspensions)
    queue = list(sg.suspensions)
    while queue:
        v = queue.pop(0)
        order.append(v)
        for u in sg.graph.rotation[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)

    chosen: dict[Vertex, dict[Any, int]] = {}
    nodes = 0

    def compatible(v: Vertex, roles: dict[Any, int]) -> bool:
        for tok, role in roles.items():
            if tok[0] == "h":
                continue
            a, b = tok[1], tok[2]
            u = b if a == v else a
            if u not in chosen:
                continue
            other = chosen[u][tok]
            if role > 0 and other > 0:
                if role == other:
                    return False  # bidirected labels must differ
            elif role > 0 and other != -role:
                return False
            elif role < 0 and other != -role:
                return False
        return True

    def acyclic(out: dict[Vertex, dict[int, Vertex | None]]) -> bool:
        for color in COLORS:
            state: dict[Vertex, int] = {}
            for root in out:
                if state.get(root):
                    continue
                chain = []
                v: Vertex | None = root
                while v is not None and not state.get(v):
                    state[v] = 1
                    chain.append(v)
                    v = out[v][color]
                if v is not None and state.get(v) == 1:
                    return False
                for u in chain:
                    state[u] = 2
        return True

    def to_wood() -> SchnyderWood:
        out: dict[Vertex, dict[int, Vertex | None]] = {}
        for v, roles in chosen.items():
            out[v] = {}
            for tok, role in roles.items():
                if role > 0:
                    if tok[0] == "h":
                        out[v][role] = None
                    else:
                        a, b = tok[1], tok[2]
                        out[v][role] = b if a == v else a
        return SchnyderWood(graph=sg, out=out)

    def recurse(i: int) -> Iterator[SchnyderWood]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget)
        if i == len(order):
            wood = to_wood()
            if acyclic(wood.out):
                yield wood
            return
        v = order[i]
        for roles in pattern_lists[v]:
            if compatible(v, roles):
                chosen[v] = roles
                yield from recurse(i + 1)
                del chosen[v]

    yield from recurse(0)


def compute_schnyder_wood(
    sg: SuspendedGraph, budget: int = DEFAULT_BUDGET
) -> SchnyderWood:
    """First Schnyder wood in deterministic order."""
    for wood in enumerate_schnyder_woods(sg, budget=budget):
        return wood
    raise Not3Connected("no Schnyder wood found")


@dataclass(frozen=True)
class WoodReport:
    ok: bool
    violations: tuple[str, ...]


def verify_schnyder(wood: SchnyderWood) -> WoodReport:
    """Check the four wood axioms exactly."""
    sg = wood.graph
    g = sg.graph
    violations: list[str] = []

    for u, v in g.edges:
        cu, cv = wood.edge_labels(u, v)
        if cu is None and cv is None:
            violations.append(f"edge {edge_key(u, v)} is unoriented")
        elif cu is not None and cv is not None and cu == cv:
            violations.append(f"bidirected edge {edge_key(u, v)} repeats label {cu}")

    suspension_color = {s: i for i, s in enumerate(sg.suspensions, start=1)}
    for s, i in suspension_color.items():
        if wood.out.get(s, {}).get(i, "missing") is not None:
            violations.append(f"suspension {s!r} lacks the half-edge of color {i}")

    tokens_cw = _oriented_tokens(sg)
    for v in _sorted(g.rotation):
        outs = wood.out.get(v, {})
        if sorted(outs) != [1, 2, 3]:
            violations.append(f"vertex {v!r} lacks outdegree one per label")
            continue
        roles: list[tuple[str, int]] = []
        for tok in tokens_cw[v]:
            if tok[0] == "h":
                roles.append(("out", tok[1]))
                continue
            a, b = tok[1], tok[2]
            u = b if a == v else a
            color = wood.arc_color(v, u)
            if color is not None:
                roles.append(("out", color))
            else:
                incoming = wood.arc_color(u, v)
                roles.append(("in", incoming if incoming is not None else 0))
        d = len(roles)
        start = next(
            (k for k, (kind, c) in enumerate(roles) if kind == "out" and c == 1), None
        )
        if start is None or sum(1 for kind, _ in roles if kind == "out") != 3:
            violations.append(f"vertex {v!r} violates the angular pattern")
            continue
        pos = start
        ok = True
        for out_color in (1, 2, 3):
            if roles[pos] != ("out", out_color):
                ok = False
                break
            pos = (pos + 1) % d
            while roles[pos][0] == "in":
                if roles[pos][1] != _prv(out_color):
                    ok = False
                    break
                pos = (pos + 1) % d
            if not ok:
                break
        if not ok or pos != start:
            violations.append(f"vertex {v!r} violates the clockwise angular pattern")

    for color in COLORS:
        state: dict[Vertex, int] = {}
        for root in _sorted(wood.out):
            if state.get(root):
                continue
            chain = []
            v: Vertex | None = root
            while v is not None and not state.get(v):
                state[v] = 1
                chain.append(v)
                v = wood.out[v].get(color)
            if v is not None and state.get(v) == 1:
                violations.append(f"monochromatic cycle in color {color} through {v!r}")
            for u in chain:
                state[u] = 2

    return WoodReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# Orthogonal surfaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Flat:
    """Maximal surface patch constant in coordinate ``color`` at ``level``;
    its saddles form the path ``hvertices`` in the medial graph."""

    color: int
    level: Any
    hvertices: tuple
    hedges: tuple
    left_end: Any
    right_end: Any
    bounded: bool


@dataclass(eq=False)
class OrthogonalSurface:
    """Integer coordinates of the geodesic embedding: graph vertices are the
    local minima, edge saddles are coordinatewise joins, flats partition the
    medial edges."""

    wood: SchnyderWood
    medial: MedialGraph
    vertex_coords: dict[Vertex, tuple]
    saddle_coords: dict[Any, tuple]
    flats: tuple[Flat, ...]
    hedge_flat: dict[tuple, tuple]  # medial edge -> (color, level, component)
    perturbed: bool = False


def suspension_paths(wood: SchnyderWood, v: Vertex) -> dict[int, list[Vertex]]:
    """The three outgoing color paths from ``v`` to the suspensions."""
    paths = {}
    for color in COLORS:
        path = [v]
        seen = {v}
        while True:
            w = wood.out[path[-1]][color]
            if w is None:
                break
            if w in seen:
                raise Not3Connected(f"color-{color} cycle through {w!r}")
            seen.add(w)
            path.append(w)
        paths[color] = path
    return paths


def _outer_stretch(
    walk: tuple, pos: Mapping[Vertex, int], a: Vertex, b: Vertex
) -> tuple[frozenset, set]:
    """Edges and interior vertices of the outer walk from ``a`` to ``b``."""
    keys = []
    interior = set()
    idx = pos[a]
    n = len(walk)
    while True:
        u, v = walk[idx]
        keys.append(edge_key(u, v))
        if v == b:
            break
        interior.add(v)
        idx = (idx + 1) % n
    return frozenset(keys), interior


def _outer_arcs(sg: SuspendedGraph) -> dict[int, frozenset]:
    """outer_arcs[i]: edge set of the outer stretch between the other two
    suspensions that avoids suspension i."""
    g = sg.graph
    walk = g.outer_walk()
    pos = {a: idx for idx, (a, _) in enumerate(walk)}
    arcs = {}
    for i, avoid in enumerate(sg.suspensions, start=1):
        a = sg.suspensions[_nxt(i) - 1]
        b = sg.suspensions[_prv(i) - 1]
        keys, interior = _outer_stretch(walk, pos, a, b)
        if avoid in interior:
            keys, interior = _outer_stretch(walk, pos, b, a)
            if avoid in interior:
                raise Not3Connected("could not extract the outer stretch")
        arcs[i] = keys
    return arcs


def _region_face_count(
    g, outer_arc: frozenset, paths: dict[int, list[Vertex]], color: int
) -> int:
    """Faces cut off from the outer face by the two neighboring suspension
    paths together with the far outer stretch."""
    cut = set(outer_arc)
    for c in (_nxt(color), _prv(color)):
        path = paths[c]
        cut.update(edge_key(x, y) for x, y in zip(path, path[1:]))

    parent = list(range(len(g.faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key in g.edges:
        if key not in cut:
            f1, f2 = g.edge_faces(key)
            r1, r2 = find(f1), find(f2)
            if r1 != r2:
                parent[r1] = r2
    outside = find(g.outer_face)
    return sum(1 for f in range(len(g.faces)) if find(f) != outside)


def region_coordinates(wood: SchnyderWood) -> dict[Vertex, tuple]:
    """Face-count coordinates: coordinate i of v is the number of faces in
    the region opposite suspension i with respect to v's suspension paths."""
    sg = wood.graph
    g = sg.graph
    arcs = _outer_arcs(sg)
    coords = {}
    bounded = len(g.faces) - 1
    for v in _sorted(g.rotation):
        paths = suspension_paths(wood, v)
        triple = tuple(
            _region_face_count(g, arcs[color], paths, color) for color in COLORS
        )
        if sum(triple) != bounded:
            raise SurfaceNotRigid(
                f"regions of {v!r} cover {sum(triple)} of {bounded} faces"
            )
        coords[v] = triple
    return coords


def _half_coords(
    sg: SuspendedGraph, vertex_coords: Mapping[Vertex, tuple]
) -> dict[Any, tuple]:
    """Pseudo-coordinates of the half-edge rays: the suspension's coordinates
    with its own color pushed above every finite value."""
    big = max(max(c) for c in vertex_coords.values()) + 1
    out = {}
    for i, s in enumerate(sg.suspensions, start=1):
        triple = list(vertex_coords[s])
        triple[i - 1] = big
        out[("h", i)] = tuple(triple)
    return out


def _classify_hedges(
    medial: MedialGraph,
    saddles: Mapping[Any, tuple],
    vertex_coords: Mapping[Vertex, tuple],
    dominance_fallback: bool,
) -> dict[tuple, tuple[int, Any]]:
    """Flat (color, level) of each medial edge: the unique coordinate shared
    by its two saddles.

    With ``dominance_fallback`` a tie between shared coordinates is broken in
    favor of the coordinate attained by the angle's own vertex (the patch at
    that vertex's level), then by smallest color.
    """
    out: dict[tuple, tuple[int, Any]] = {}
    for a, b in medial.graph.graph.edges:
        ca, cb = saddles[a], saddles[b]
        shared = [i for i in range(3) if ca[i] == cb[i]]
        if len(shared) != 1:
            if not dominance_fallback or not shared:
                raise AmbiguousFlatMembership(
                    f"medial edge {a!r}-{b!r} shares coordinates {shared}"
                )
            gv = medial.angle_of[tuple(_sorted((a, b)))][0]
            dominant = [i for i in shared if ca[i] == vertex_coords[gv][i]]
            shared = dominant or shared
        i = shared[0]
        out[edge_key(a, b)] = (i + 1, ca[i])
    return out


def _assemble_flats(
    hedge_tags: Mapping[tuple, tuple[int, Any]], saddles: Mapping[Any, tuple]
) -> tuple[tuple[Flat, ...], dict[tuple, tuple]]:
    groups: dict[tuple, list[tuple]] = {}
    for key, tag in hedge_tags.items():
        groups.setdefault(tag, []).append(key)
    flats = []
    full_tag: dict[tuple, tuple] = {}
    for (color, level), keys in sorted(groups.items(), key=repr):
        adjacency: dict[Any, list[Any]] = {}
        for a, b in keys:
            adjacency.setdefault(a, []).append(b)
            adjacency.setdefault(b, []).append(a)
        remaining = set(adjacency)
        comp_index = 0
        while remaining:
            start = _sorted(remaining)[0]
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adjacency[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            remaining -= comp
            comp_edges = [k for k in keys if k[0] in comp or k[1] in comp]
            if any(len(adjacency[x]) > 2 for x in comp):
                raise AmbiguousFlatMembership(
                    f"flat ({color},{level}) saddles do not form a path"
                )
            ends = _sorted(x for x in comp if len(adjacency[x]) <= 1)
            if len(ends) != 2:
                raise AmbiguousFlatMembership(f"flat ({color},{level}) closes a cycle")
            path = [ends[0]]
            prev = None
            while True:
                nxt = [y for y in adjacency[path[-1]] if y != prev]
                if not nxt:
                    break
                prev = path[-1]
                path.append(nxt[0])
            bounded = not any(x[0] == "h" for x in comp)
            c_right = _nxt(color) - 1
            c_left = _prv(color) - 1
            left_end = max(path, key=lambda x: (saddles[x][c_left], repr(x)))
            right_end = max(path, key=lambda x: (saddles[x][c_right], repr(x)))
            flats.append(
                Flat(
                    color=color,
                    level=level,
                    hvertices=tuple(path),
                    hedges=tuple(_sorted(comp_edges)),
                    left_end=left_end,
                    right_end=right_end,
                    bounded=bounded,
                )
            )
            for k in comp_edges:
                full_tag[k] = (color, level, comp_index)
            comp_index += 1
    return tuple(flats), full_tag


@dataclass(frozen=True)
class RigidityReport:
    ok: bool
    offending_flat: Flat | None


def check_rigidity(
    surface_or_flats: "OrthogonalSurface | Sequence[Flat]",
    coords: Mapping[Any, tuple] | None = None,
) -> RigidityReport:
    """A bounded flat of color i is rigid when its saddle path is strictly
    monotone in coordinates i-1 and i+1."""
    if isinstance(surface_or_flats, OrthogonalSurface):
        flats = surface_or_flats.flats
        coords = surface_or_flats.saddle_coords
    else:
        flats = tuple(surface_or_flats)
        if coords is None:
            raise ValueError("coordinates required when passing bare flats")
    for flat in flats:
        if not flat.bounded or len(flat.hvertices) < 2:
            continue
        for c in (_prv(flat.color) - 1, _nxt(flat.color) - 1):
            seq = [coords[x][c] for x in flat.hvertices]
            inc = all(a < b for a, b in zip(seq, seq[1:]))
            dec = all(a > b for a, b in zip(seq, seq[1:]))
            if not (inc or dec):
                return RigidityReport(False, flat)
    return RigidityReport(True, None)


def surface_coordinates(wood: SchnyderWood) -> OrthogonalSurface:
    """Orthogonal surface of a wood: face-count vertex coordinates, saddles
    as coordinatewise joins, flats from the shared-coordinate rule.

    When the plain rule is ambiguous or the flats come out non-rigid, one
    deterministic retry breaks ties toward the angle vertex's own level;
    failing that, SurfaceNotRigid is raised.
    """
    sg = wood.graph
    vertex_coords = region_coordinates(wood)
    verts = _sorted(vertex_coords)
    for a, b in itertools.combinations(verts, 2):
        ca, cb = vertex_coords[a], vertex_coords[b]
        if all(x <= y for x, y in zip(ca, cb)) or all(x >= y for x, y in zip(ca, cb)):
            raise SurfaceNotRigid(f"coordinates of {a!r} and {b!r} are comparable")

    medial = medial_graph(sg)
    saddles: dict[Any, tuple] = dict(_half_coords(sg, vertex_coords))
    for u, v in sg.graph.edges:
        cu, cv = vertex_coords[u], vertex_coords[v]
        saddles[("e",) + edge_key(u, v)] = tuple(max(x, y) for x, y in zip(cu, cv))

    def build(dominance: bool) -> OrthogonalSurface:
        tags = _classify_hedges(medial, saddles, vertex_coords, dominance)
        flats, full_tag = _assemble_flats(tags, saddles)
        surface = OrthogonalSurface(
            wood=wood,
            medial=medial,
            vertex_coords=dict(vertex_coords),
            saddle_coords=saddles,
            flats=flats,
            hedge_flat=full_tag,
            perturbed=dominance,
        )
        report = check_rigidity(surface)
        if not report.ok:
            raise SurfaceNotRigid(f"non-rigid flat {report.offending_flat}")
        return surface

    try:
        return build(dominance=False)
    except (AmbiguousFlatMembership, SurfaceNotRigid):
        return build(dominance=True)


def medial_faa(
    sg: SuspendedGraph,
    wood: SchnyderWood | None = None,
    surface: OrthogonalSurface | None = None,
) -> tuple[MedialGraph, FlatAngleAssignment]:
    """Assignment on the medial graph: each non-suspension medial vertex goes
    to the face of its unique corner whose two medial edges share a flat."""
    if surface is None:
        wood = wood or compute_schnyder_wood(sg)
        surface = surface_coordinates(wood)
    medial = surface.medial
    h = medial.graph.graph
    assignments: dict[Any, int] = {}
    for s in _sorted(h.rotation):
        if s[0] == "h":
            continue
        nbrs = h.rotation[s]
        corner_faces = []
        for j, a in enumerate(nbrs):
            b = nbrs[(j + 1) % len(nbrs)]
            if surface.hedge_flat[edge_key(s, a)] == surface.hedge_flat[edge_key(s, b)]:
                corner_faces.append(h.face_of[(s, a)])
        if len(corner_faces) != 1:
            raise AmbiguousFlatMembership(
                f"medial vertex {s!r} has {len(corner_faces)} flat corners"
            )
        assignments[s] = corner_faces[0]
    return medial, FlatAngleAssignment(medial.graph, assignments)


# ---------------------------------------------------------------------------
# Primal-dual triangle contact representation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DissectionTriangle:
    origin: tuple[str, Any]  # ("vertex", v) or ("face", f) of the source graph
    corners: tuple[tuple[float, float], ...]
    boundary: tuple[tuple[float, float], ...]  # corner and contact points in face order


@dataclass(eq=False)
class Dissection:
    """Dissection of a triangle into triangles, one per vertex and bounded
    face of the source graph; point contacts realize primal and dual edges,
    side contacts vertex-face incidences."""

    source: SuspendedGraph
    enclosing: tuple[tuple[float, float], ...]
    triangles: tuple[DissectionTriangle, ...]
    point_contacts: tuple  # (medial vertex, primal edge, dual face pair)
    side_contacts: tuple  # (g vertex, g face index)
    drawing: Drawing
    medial: MedialGraph
    assignment: FlatAngleAssignment


def primal_dual_representation(
    sg: SuspendedGraph,
    pole_triangle: Sequence[tuple[float, float]] = DEFAULT_POLE_TRIANGLE,
    tol: float = DEFAULT_TOLERANCE,
) -> Dissection:
    """Wood, surface, medial assignment, harmonic drawing of the medial
    graph, then one triangle per bounded medial face."""
    wood = compute_schnyder_wood(sg)
    surface = surface_coordinates(wood)
    medial, assignment = medial_faa(sg, wood=wood, surface=surface)
    h = medial.graph.graph
    family = pseudosegments_of(assignment)
    system = assemble(assignment, family=family, pole_triangle=pole_triangle)
    if not check_solvability(system):
        raise SurfaceNotRigid("medial harmonic system is unsolvable")
    drawing = solve(system)
    report = verify_drawing(drawing, assignment, family, tol=tol)
    if not report.all_pass:
        failed = [c.name for c in report.checks if not c.passed]
        raise SurfaceNotRigid(f"medial drawing failed checks: {failed}")

    triangles = []
    for f in range(len(h.faces)):
        if f == h.outer_face:
            continue
        walk_vertices = [u for u, _ in h.faces[f]]
        corners = [
            drawing.coords[u]
            for u in walk_vertices
            if assignment.assignments.get(u) != f
        ]
        if len(corners) != 3:
            raise SurfaceNotRigid(f"medial face {f} has {len(corners)} corners")
        triangles.append(
            DissectionTriangle(
                origin=medial.face_origin[f],
                corners=tuple(corners),
                boundary=tuple(drawing.coords[u] for u in walk_vertices),
            )
        )

    g = sg.graph
    point_contacts = []
    for s in _sorted(h.rotation):
        if s[0] == "h":
            continue
        u, v = s[1], s[2]
        point_contacts.append((s, (u, v), g.edge_faces(edge_key(u, v))))
    side_contacts = tuple(sorted(set(medial.angle_of.values()), key=repr))
    return Dissection(
        source=sg,
        enclosing=tuple(tuple(map(float, p)) for p in pole_triangle),
        triangles=tuple(triangles),
        point_contacts=tuple(point_contacts),
        side_contacts=side_contacts,
        drawing=drawing,
        medial=medial,
        assignment=assignment,
    )
