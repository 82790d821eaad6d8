"""Flat angle assignments and the combinatorial machinery around them:
assignment validation, exhaustive enumeration, pseudosegment extraction,
outline cycles with combinatorially convex corners, and free/extremal points
of pseudosegment subsets.

A flat angle assignment marks angles that will have size pi in the drawing:
a partial map from non-suspension vertices to incident faces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ArcClosesCycle, ArcTouchesSelf, BudgetExceeded, InvalidArrangement
from .planar import (
    EdgeKey,
    PlaneGraph,
    SuspendedGraph,
    Vertex,
    _sorted,
    connected_components,
    edge_key,
)

DEFAULT_BUDGET = 10_000_000


@dataclass(eq=False)
class FlatAngleAssignment:
    """Partial map vertex -> incident face index over a suspended graph."""

    suspended: SuspendedGraph
    assignments: dict[Vertex, int]

    def __post_init__(self) -> None:
        g = self.suspended.graph
        for v, f in self.assignments.items():
            if v in self.suspended.suspensions:
                raise ValueError(f"suspension {v!r} cannot be assigned")
            if v not in set(g.face_vertices(f)):
                raise ValueError(f"vertex {v!r} is not incident to face {f}")

    @property
    def graph(self) -> PlaneGraph:
        return self.suspended.graph

    def assigned_count(self, face: int) -> int:
        return sum(1 for f in self.assignments.values() if f == face)


@dataclass(frozen=True)
class FaceCornerSpec:
    """Per-face targets for the number of assigned (flat) vertices.

    In ``exact`` mode every face, the outer one included, must receive
    precisely ``len(face) - 3`` assigned vertices, which makes every face a
    triangle.  In ``budget`` mode each face takes at most ``len(face) - 3``
    (or exactly the prescribed target when one is given) and no outer-face
    vertex may be assigned to an inner face.
    """

    mode: str = "exact"
    targets: Mapping[int, int] | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("exact", "budget"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def allowed_counts(self, g: PlaneGraph, face: int) -> range:
        cap = g.face_size(face) - 3
        if self.mode == "exact":
            return range(cap, cap + 1)
        if self.targets is not None and face in self.targets:
            t = self.targets[face]
            if t > cap:
                raise ValueError(f"target {t} exceeds |f|-3 for face {face}")
            return range(t, t + 1)
        return range(0, cap + 1)


@dataclass(frozen=True)
class AssignmentReport:
    cv_ok: bool
    cf_ok: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.cv_ok and self.cf_ok


def check_assignment_conditions(
    assignment: FlatAngleAssignment, spec: FaceCornerSpec
) -> AssignmentReport:
    """Report whether the vertex condition and the face targets hold."""
    sg = assignment.suspended
    g = sg.graph
    violations: list[str] = []
    cv_ok = True
    for v in assignment.assignments:
        if v in sg.suspensions:
            cv_ok = False
            violations.append(f"suspension {v!r} assigned")
    counts = {f: 0 for f in range(len(g.faces))}
    for f in assignment.assignments.values():
        counts[f] += 1
    cf_ok = True
    for f in range(len(g.faces)):
        if counts[f] not in spec.allowed_counts(g, f):
            cf_ok = False
            violations.append(
                f"face {f} has {counts[f]} assigned, allowed {spec.allowed_counts(g, f)}"
            )
    if spec.mode == "budget":
        outer = set(g.outer_vertices())
        for v, f in assignment.assignments.items():
            if v in outer and f != g.outer_face:
                cf_ok = False
                violations.append(f"outer vertex {v!r} assigned to inner face {f}")
    return AssignmentReport(cv_ok, cf_ok, tuple(violations))


def enumerate_faas(
    sg: SuspendedGraph,
    spec: FaceCornerSpec | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[FlatAngleAssignment]:
    """Yield every assignment satisfying the vertex and face conditions.

    Deterministic: faces in index order, per-face vertex choices in sorted
    combinations.  Counts backtracking nodes against ``budget``.
    """
    spec = spec or FaceCornerSpec()
    g = sg.graph
    suspensions = set(sg.suspensions)
    faces = list(range(len(g.faces)))
    candidates = {
        f: _sorted(set(g.face_vertices(f)) - suspensions) for f in faces
    }
    outer_vertices = set(g.outer_vertices())
    nodes = 0

    def recurse(i: int, used: set, acc: dict) -> Iterator[FlatAngleAssignment]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget)
        if i == len(faces):
            yield FlatAngleAssignment(sg, dict(acc))
            return
        f = faces[i]
        pool = [v for v in candidates[f] if v not in used]
        if spec.mode == "budget" and f != g.outer_face:
            pool = [v for v in pool if v not in outer_vertices]
        for k in spec.allowed_counts(g, f):
            if k > len(pool):
                continue
            for combo in itertools.combinations(pool, k):
                for v in combo:
                    used.add(v)
                    acc[v] = f
                yield from recurse(i + 1, used, acc)
                for v in combo:
                    used.remove(v)
                    del acc[v]

    yield from recurse(0, set(), {})


# ---------------------------------------------------------------------------
# Pseudosegments
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class PseudosegmentFamily:
    """Partition of the edge set into simple paths drawn collinear later.

    ``segments`` is a sorted tuple of vertex paths.  Contact incidences are
    derived: an endpoint of one path touching a vertex of another is a
    contact point.
    """

    graph: PlaneGraph
    segments: tuple[tuple[Vertex, ...], ...]
    endpoint_of: dict[Vertex, tuple[int, ...]] = field(default_factory=dict, repr=False)
    interior_of: dict[Vertex, tuple[int, ...]] = field(default_factory=dict, repr=False)
    segment_of_edge: dict[EdgeKey, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        ends: dict[Vertex, list[int]] = {}
        inner: dict[Vertex, list[int]] = {}
        for i, path in enumerate(self.segments):
            if len(path) < 2 or len(set(path)) != len(path):
                raise InvalidArrangement(f"segment {i} is not a simple path: {path}")
            ends.setdefault(path[0], []).append(i)
            ends.setdefault(path[-1], []).append(i)
            for v in path[1:-1]:
                inner.setdefault(v, []).append(i)
            for u, v in zip(path, path[1:]):
                key = edge_key(u, v)
                if key in self.segment_of_edge:
                    raise InvalidArrangement(f"edge {key} in two segments")
                self.segment_of_edge[key] = i
        self.endpoint_of = {v: tuple(s) for v, s in ends.items()}
        self.interior_of = {v: tuple(s) for v, s in inner.items()}

    def edges_of(self, index: int) -> list[EdgeKey]:
        path = self.segments[index]
        return [edge_key(u, v) for u, v in zip(path, path[1:])]

    def segments_through(self, v: Vertex) -> tuple[int, ...]:
        return tuple(
            _sorted(set(self.endpoint_of.get(v, ())) | set(self.interior_of.get(v, ())))
        )

    def contact_records(self) -> tuple[tuple[int, Vertex, int, str], ...]:
        """(segment, endpoint vertex, touched segment, 'endpoint'|'interior')."""
        records = []
        for i, path in enumerate(self.segments):
            for p in (path[0], path[-1]):
                for j in self.endpoint_of.get(p, ()):
                    if j != i:
                        records.append((i, p, j, "endpoint"))
                for j in self.interior_of.get(p, ()):
                    if j != i:
                        records.append((i, p, j, "interior"))
        return tuple(sorted(set(records), key=repr))


def contact_family_violations(family: PseudosegmentFamily) -> tuple[str, ...]:
    """Pairwise contact axioms: two segments share at most one point, and a
    shared point is an endpoint of at least one of them."""
    issues = []
    vertex_sets = [set(path) for path in family.segments]
    for i, j in itertools.combinations(range(len(family.segments)), 2):
        common = vertex_sets[i] & vertex_sets[j]
        if len(common) > 1:
            issues.append(f"segments {i} and {j} share {_sorted(common)}")
        elif len(common) == 1:
            p = next(iter(common))
            ends_i = (family.segments[i][0], family.segments[i][-1])
            ends_j = (family.segments[j][0], family.segments[j][-1])
            if p not in ends_i and p not in ends_j:
                issues.append(f"segments {i} and {j} cross at {p!r}")
    return tuple(issues)


def _corner_edges(g: PlaneGraph, v: Vertex, face: int) -> tuple[EdgeKey, EdgeKey]:
    """The two edges forming the corner of ``face`` at ``v``."""
    walk = g.faces[face]
    for k, (a, b) in enumerate(walk):
        if b == v:
            c, d = walk[(k + 1) % len(walk)]
            return edge_key(a, v), edge_key(v, d)
    raise ValueError(f"vertex {v!r} has no corner in face {face}")


def pseudosegments_of(assignment: FlatAngleAssignment) -> PseudosegmentFamily:
    """Edge partition induced by the assignment: the two corner edges of an
    assigned vertex merge, and classes are closed transitively.

    Raises ArcClosesCycle/ArcTouchesSelf when a class is not a simple path
    (such an assignment violates the outline-corner condition).
    """
    g = assignment.graph
    parent: dict[EdgeKey, EdgeKey] = {e: e for e in g.edges}

    def find(x: EdgeKey) -> EdgeKey:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: EdgeKey, b: EdgeKey) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v, f in assignment.assignments.items():
        e1, e2 = _corner_edges(g, v, f)
        union(e1, e2)

    classes: dict[EdgeKey, list[EdgeKey]] = {}
    for e in g.edges:
        classes.setdefault(find(e), []).append(e)

    paths = []
    for edges in classes.values():
        incidence: dict[Vertex, list[Vertex]] = {}
        for u, v in edges:
            incidence.setdefault(u, []).append(v)
            incidence.setdefault(v, []).append(u)
        if any(len(nbrs) > 2 for nbrs in incidence.values()):
            raise ArcTouchesSelf(edges)
        endpoints = _sorted(v for v, nbrs in incidence.items() if len(nbrs) == 1)
        if not endpoints:
            raise ArcClosesCycle(edges)
        start = endpoints[0]
        path = [start]
        prev = None
        while True:
            nxt = [u for u in incidence[path[-1]] if u != prev]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
        paths.append(tuple(path))
    return PseudosegmentFamily(graph=g, segments=tuple(_sorted(paths)))


def family_from_paths(
    g: PlaneGraph, paths: Sequence[Sequence[Vertex]]
) -> PseudosegmentFamily:
    """Family from explicit vertex paths; must partition the edge set."""
    family = PseudosegmentFamily(
        graph=g, segments=tuple(_sorted(tuple(p) for p in paths))
    )
    if set(family.segment_of_edge) != set(g.edges):
        missing = set(g.edges) - set(family.segment_of_edge)
        raise InvalidArrangement(f"segments do not cover edges {_sorted(missing)}")
    return family


# ---------------------------------------------------------------------------
# Outline cycles
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class OutlineCycle:
    """Outer boundary walk of a connected subgraph, with its enclosure.

    ``interior_*`` contain everything of G inside or on the walk, the
    subgraph included.
    """

    graph: PlaneGraph
    walk: tuple[tuple[Vertex, Vertex], ...]
    subgraph_edges: frozenset[EdgeKey]
    interior_vertices: frozenset[Vertex]
    interior_edges: frozenset[EdgeKey]
    interior_faces: frozenset[int]

    def walk_vertices(self) -> tuple[Vertex, ...]:
        return tuple(u for u, _ in self.walk)


def outline_of(g: PlaneGraph, edges: Iterable[EdgeKey]) -> OutlineCycle:
    """Outline cycle of the connected subgraph spanned by ``edges``.

    Faces of G merge across every edge not in the subgraph; the merged region
    holding the outer face is the outside, everything else is enclosed.
    """
    subgraph = frozenset(edge_key(u, v) for u, v in edges)
    if not subgraph:
        raise ValueError("subgraph needs at least one edge")
    sub_vertices = {u for e in subgraph for u in e}
    if len(connected_components(sub_vertices, subgraph)) != 1:
        raise ValueError("subgraph is not connected")

    parent = list(range(len(g.faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key in g.edges:
        if key not in subgraph:
            f1, f2 = g.edge_faces(key)
            r1, r2 = find(f1), find(f2)
            if r1 != r2:
                parent[r1] = r2

    outside = find(g.outer_face)
    interior_faces = frozenset(f for f in range(len(g.faces)) if find(f) != outside)
    interior_edges = frozenset(
        key
        for key in g.edges
        if key in subgraph or find(g.edge_faces(key)[0]) != outside
    )
    interior_vertices = frozenset(
        v
        for v in g.rotation
        if v in sub_vertices or all(find(f) != outside for f in g.faces_at(v))
    )

    # Trace the outer face of the subgraph: start from a directed edge whose
    # left face in G lies in the outside region.
    start = None
    for u, v in _sorted(subgraph):
        if find(g.face_of[(u, v)]) == outside:
            start = (u, v)
            break
        if find(g.face_of[(v, u)]) == outside:
            start = (v, u)
            break
    if start is None:
        raise ValueError("subgraph has no edge on its outer boundary")

    position = {v: {u: i for i, u in enumerate(g.rotation[v])} for v in sub_vertices}
    walk = []
    e = start
    while True:
        walk.append(e)
        a, b = e
        nbrs = g.rotation[b]
        j = (position[b][a] - 1) % len(nbrs)
        while edge_key(b, nbrs[j]) not in subgraph:
            j = (j - 1) % len(nbrs)
        e = (b, nbrs[j])
        if e == start:
            break
    return OutlineCycle(
        graph=g,
        walk=tuple(walk),
        subgraph_edges=subgraph,
        interior_vertices=interior_vertices,
        interior_edges=interior_edges,
        interior_faces=interior_faces,
    )


def convex_corners(
    outline: OutlineCycle, assignment: FlatAngleAssignment
) -> frozenset[Vertex]:
    """Vertices of the walk that are combinatorially convex: a suspension, or
    unassigned with an edge outside the enclosure, or assigned to an outside
    face while having an edge outside the enclosure."""
    g = outline.graph
    suspensions = set(assignment.suspended.suspensions)
    corners = set()
    for v in set(outline.walk_vertices()):
        if v in suspensions:
            corners.add(v)
            continue
        has_outside_edge = any(
            edge_key(v, u) not in outline.interior_edges for u in g.rotation[v]
        )
        if not has_outside_edge:
            continue
        f = assignment.assignments.get(v)
        if f is None or f not in outline.interior_faces:
            corners.add(v)
    return frozenset(corners)


def _subgraph_is_path(edges: Sequence[EdgeKey]) -> bool:
    deg: dict[Vertex, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d > 2 for d in deg.values()):
        return False
    return sum(1 for d in deg.values() if d == 1) == 2


def _connected_edge_subsets(
    edges: tuple[EdgeKey, ...], budget: int
) -> Iterator[tuple[EdgeKey, ...]]:
    """All connected edge subsets in canonical order (size, then lexicographic)."""
    count = 0
    for k in range(1, len(edges) + 1):
        for combo in itertools.combinations(edges, k):
            count += 1
            if count > budget:
                raise BudgetExceeded(budget)
            verts = {u for e in combo for u in e}
            if len(connected_components(verts, combo)) == 1:
                yield combo


def _simple_cycles(g: PlaneGraph, budget: int) -> Iterator[tuple[EdgeKey, ...]]:
    """All simple cycles as canonical edge tuples, smallest first."""
    verts = _sorted(g.rotation)
    order = {v: i for i, v in enumerate(verts)}
    cycles = []
    count = 0
    for root in verts:
        stack = [(root, [root], {root})]
        while stack:
            v, path, onpath = stack.pop()
            count += 1
            if count > budget:
                raise BudgetExceeded(budget)
            for u in g.rotation[v]:
                if order[u] < order[root]:
                    continue
                if u == root and len(path) >= 3:
                    if order[path[1]] < order[path[-1]]:
                        cycles.append(
                            tuple(
                                _sorted(
                                    edge_key(a, b)
                                    for a, b in zip(path, path[1:] + [root])
                                )
                            )
                        )
                elif u not in onpath:
                    stack.append((u, path + [u], onpath | {u}))
    yield from sorted(set(cycles), key=lambda c: (len(c), c))


@dataclass(frozen=True)
class OutlineReport:
    ok: bool
    witness: OutlineCycle | None
    checked: int


def check_outline_convexity(
    assignment: FlatAngleAssignment,
    mode: str = "full",
    budget: int = DEFAULT_BUDGET,
) -> OutlineReport:
    """Check that every outline cycle has at least three convex corners.

    ``full`` enumerates the outline cycles of all connected subgraphs (paths
    exempt); ``simple-cycles`` enumerates only the simple cycles of the
    graph, which suffices.  On failure the first witness in canonical order
    (minimal edge count, lexicographic ties) is returned.
    """
    g = assignment.graph
    if mode == "full":
        subsets: Iterable[tuple[EdgeKey, ...]] = _connected_edge_subsets(
            g.edges, budget
        )
    elif mode == "simple-cycles":
        subsets = _simple_cycles(g, budget)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    checked = 0
    for combo in subsets:
        if mode == "full" and _subgraph_is_path(combo):
            continue
        outline = outline_of(g, combo)
        checked += 1
        if len(convex_corners(outline, assignment)) < 3:
            return OutlineReport(False, outline, checked)
    return OutlineReport(True, None, checked)


# ---------------------------------------------------------------------------
# Free and extremal points
# ---------------------------------------------------------------------------


def _outline_vertices_per_component(
    family: PseudosegmentFamily, subset: Sequence[int]
) -> dict[Vertex, frozenset[Vertex]]:
    """For every vertex of the subset union: the walk vertices of the outline
    of its connected component."""
    union_edges = [e for i in subset for e in family.edges_of(i)]
    verts = {u for e in union_edges for u in e}
    out: dict[Vertex, frozenset[Vertex]] = {}
    for comp in connected_components(verts, union_edges):
        comp_edges = [e for e in union_edges if e[0] in comp]
        outline = outline_of(family.graph, comp_edges)
        boundary = frozenset(outline.walk_vertices())
        for v in comp:
            out[v] = boundary
    return out


def _candidate_points(
    family: PseudosegmentFamily, subset: Sequence[int]
) -> Iterator[Vertex]:
    seen = set()
    for i in subset:
        for p in (family.segments[i][0], family.segments[i][-1]):
            if p not in seen:
                seen.add(p)
                yield p


def extremal_points(
    family: PseudosegmentFamily, subset: Sequence[int]
) -> frozenset[Vertex]:
    """Endpoints of subset segments, interior to none of them, incident to the
    unbounded region of the subset (combinatorially: on the outline walk of
    their component of the union subgraph)."""
    subset = list(subset)
    in_subset = set(subset)
    boundary = _outline_vertices_per_component(family, subset)
    points = set()
    for p in _candidate_points(family, subset):
        if any(i in in_subset for i in family.interior_of.get(p, ())):
            continue
        if p in boundary[p]:
            points.add(p)
    return frozenset(points)


def free_points(
    family: PseudosegmentFamily, subset: Sequence[int]
) -> frozenset[Vertex]:
    """Extremal points that additionally touch a segment outside the subset or
    lie on the unbounded region of the whole family."""
    subset = list(subset)
    in_subset = set(subset)
    full = list(range(len(family.segments)))
    family_boundary = _outline_vertices_per_component(family, full)
    points = set()
    for p in extremal_points(family, subset):
        if any(i not in in_subset for i in family.segments_through(p)):
            points.add(p)
        elif p in family_boundary.get(p, frozenset()):
            points.add(p)
    return frozenset(points)


@dataclass(frozen=True)
class PointConditionReport:
    ok: bool
    witness_subset: tuple[int, ...] | None
    checked: int


def check_point_condition(
    family: PseudosegmentFamily,
    kind: str = "free",
    connected_only: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> PointConditionReport:
    """Check that every subset of two or more segments has at least three
    points of the requested kind ('free' or 'extremal').

    Subsets are visited in canonical order (size then lexicographic), so the
    returned witness is minimal.  By default only subsets with a connected
    union are examined; set ``connected_only=False`` for all subsets.
    """
    if kind == "free":
        point_set = free_points
    elif kind == "extremal":
        point_set = extremal_points
    else:
        raise ValueError(f"unknown point kind {kind!r}")
    n = len(family.segments)
    adjacency = {i: set() for i in range(n)}
    touched: dict[Vertex, list[int]] = {}
    for i, path in enumerate(family.segments):
        for v in path:
            touched.setdefault(v, []).append(i)
    for members in touched.values():
        for i in members:
            adjacency[i].update(m for m in members if m != i)
    checked = 0
    for k in range(2, n + 1):
        for combo in itertools.combinations(range(n), k):
            checked += 1
            if checked > budget:
                raise BudgetExceeded(budget)
            if connected_only:
                comps = connected_components(
                    combo, [(i, j) for i in combo for j in adjacency[i] if j in combo]
                )
                if len(comps) != 1:
                    continue
            if len(point_set(family, combo)) < 3:
                return PointConditionReport(False, combo, checked)
    return PointConditionReport(True, None, checked)
