"""Stretching contact systems of pseudosegments.

A combinatorial arrangement (embedded graph plus a pseudosegment partition of
its edges) is stretchable exactly when every subset of two or more segments
has at least three extremal points.  The constructive route encloses the
arrangement in a triangle whose sides absorb the extremal points, protects
every region with one helper point per visible segment side plus a central
triangulation point, solves the harmonic system of the augmented graph, and
strips the helpers off the straight-line solution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import geometry
from .errors import (
    AugmentationError,
    InvalidArrangement,
    NotStretchable,
)
from .faa import (
    DEFAULT_BUDGET,
    PointConditionReport,
    PseudosegmentFamily,
    check_point_condition,
    contact_family_violations,
    extremal_points,
    family_from_paths,
)
from .harmonic import (
    DEFAULT_TOLERANCE,
    Drawing,
    assemble,
    check_solvability,
    solve,
    verify_drawing,
)
from .planar import (
    PlaneGraph,
    SuspendedGraph,
    Vertex,
    build_plane_graph,
    check_internally_3connected,
    edge_key,
)

CORNER_IDS = ("+t1", "+t2", "+t3")


@dataclass(eq=False)
class PseudosegmentArrangement:
    """Embedded contact family: plane graph plus segment partition."""

    graph: PlaneGraph
    family: PseudosegmentFamily

    def __post_init__(self) -> None:
        if self.family.graph is not self.graph:
            self.family = family_from_paths(
                self.graph, self.family.segments
            )
        issues = contact_family_violations(self.family)
        if issues:
            raise InvalidArrangement("; ".join(issues))
        for v, segs in self.family.interior_of.items():
            if self.graph.degree(v) < 3 and not segs:
                continue
            if segs and self.graph.degree(v) < 3:
                raise InvalidArrangement(
                    f"interior vertex {v!r} is a subdivision point, not a contact"
                )

    def region_segment_counts(self) -> dict[int, int]:
        """Distinct bounding pseudosegments per face."""
        counts = {}
        for f in range(len(self.graph.faces)):
            segs = {
                self.family.segment_of_edge[edge_key(u, v)]
                for u, v in self.graph.faces[f]
            }
            counts[f] = len(segs)
        return counts


def arrangement_from_paths(
    rotation, outer_hint, paths: Sequence[Sequence[Vertex]]
) -> PseudosegmentArrangement:
    graph = build_plane_graph(rotation, outer_hint)
    return PseudosegmentArrangement(graph, family_from_paths(graph, paths))


def check_stretchable(
    arrangement: PseudosegmentArrangement,
    connected_only: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> PointConditionReport:
    """Every subset of two or more segments needs three extremal points."""
    return check_point_condition(
        arrangement.family, kind="extremal", connected_only=connected_only, budget=budget
    )


# ---------------------------------------------------------------------------
# Augmentation
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class AugmentedArrangement:
    """Arrangement enclosed by a triangle with all regions triangulated.

    Every bounded region of ``graph`` is bounded by exactly three
    pseudosegments; the corner vertices are the suspensions of the harmonic
    system.  ``added_vertices``/``added_edges`` drive the strip-back."""

    base: PseudosegmentArrangement
    graph: SuspendedGraph
    family: PseudosegmentFamily
    added_vertices: frozenset[Vertex]
    added_edges: frozenset[tuple]
    side_segments: tuple[tuple[Vertex, ...], ...]


def _ordered_extremal_points(arr: PseudosegmentArrangement) -> list[Vertex]:
    """Extremal points of the whole family, in first-visit order along the
    outer walk."""
    points = extremal_points(
        arr.family, list(range(len(arr.family.segments)))
    )
    ordered = []
    seen = set()
    for a, _ in arr.graph.outer_walk():
        if a in points and a not in seen:
            seen.add(a)
            ordered.append(a)
    return ordered


def _choose_cuts(
    arr: PseudosegmentArrangement, points: list[Vertex]
) -> tuple[list[Vertex], list[Vertex], list[Vertex]]:
    """Split the cyclic point order into three blocks, one per triangle side,
    so that no segment has both of its endpoints on the same side (two
    contacts between a side and one segment would collapse in the drawing)."""
    paired = []
    index = {p: i for i, p in enumerate(points)}
    for path in arr.family.segments:
        a, b = path[0], path[-1]
        if a in index and b in index:
            paired.append((index[a], index[b]))
    n = len(points)
    for cuts in itertools.combinations_with_replacement(range(n), 3):
        c1, c2, c3 = cuts
        blocks = (points[c1:c2], points[c2:c3], points[c3:] + points[:c1])
        ok = True
        for i, j in paired:
            for block in blocks:
                bset = {index[p] for p in block}
                if i in bset and j in bset:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return blocks
    raise AugmentationError(
        "no triangle-side split separates every segment's extremal endpoints"
    )


def _visible_stretches(
    walk: Sequence[tuple], segment_of_edge
) -> list[tuple[int, Vertex, Vertex, tuple]]:
    """Maximal runs of the face walk on one side of one segment.

    Runs break when the segment changes or the walk reverses at a dangling
    tip, so a segment visible from both sides yields two runs.  Returns
    (segment id, entry vertex, exit vertex, last directed edge) per run, in
    walk order.
    """
    n = len(walk)
    seg = [segment_of_edge[edge_key(u, v)] for u, v in walk]

    def breaks_before(k: int) -> bool:
        pu, pv = walk[(k - 1) % n]
        u, v = walk[k]
        if seg[(k - 1) % n] != seg[k]:
            return True
        return (u, v) == (pv, pu)  # reversal at a tip

    starts = [k for k in range(n) if breaks_before(k)]
    if not starts:
        raise InvalidArrangement("region bounded by a single pseudosegment")
    runs = []
    for idx, s in enumerate(starts):
        end = starts[(idx + 1) % len(starts)]
        length = (end - s) % n or n
        last = walk[(s + length - 1) % n]
        runs.append((seg[s], walk[s][0], last[1], last))
    return runs


def augment(arr: PseudosegmentArrangement) -> AugmentedArrangement:
    """Enclose in a triangle whose sides pass through the extremal points,
    then add one protection point per visible segment side and a central
    triangulation point in every region not already bounded by three
    pseudosegments."""
    report = check_stretchable(arr)
    if not report.ok:
        raise NotStretchable(report.witness_subset)

    for t in CORNER_IDS:
        if t in arr.graph.rotation:
            raise InvalidArrangement(f"vertex id {t!r} is reserved")

    rotation = {v: list(nbrs) for v, nbrs in arr.graph.rotation.items()}
    added_vertices: set[Vertex] = set()
    added_edges: set[tuple] = set()

    def add_edge(u: Vertex, v: Vertex) -> None:
        added_edges.add(edge_key(u, v))

    points = _ordered_extremal_points(arr)
    blocks = _choose_cuts(arr, points)
    cycle: list[Vertex] = []
    for k in range(3):
        cycle.append(CORNER_IDS[k])
        cycle.extend(blocks[k])
    m = len(cycle)

    # corner of each vertex's first visit, indexed like the extremal-point
    # ordering (by the position where the walk leaves the vertex)
    first_visit: dict[Vertex, tuple[Vertex, Vertex]] = {}
    walk = arr.graph.outer_walk()
    for k, (x, b) in enumerate(walk):
        a = walk[k - 1][0]  # the previous walk edge ends at x
        if x not in first_visit:
            first_visit[x] = (a, b)  # incoming from a, outgoing to b

    for idx, x in enumerate(cycle):
        nxt = cycle[(idx + 1) % m]
        prv = cycle[(idx - 1) % m]
        add_edge(x, nxt)
        if x in CORNER_IDS:
            rotation[x] = [prv, nxt]
            added_vertices.add(x)
        else:
            a, _ = first_visit[x]
            pos = rotation[x].index(a)
            rotation[x][pos:pos] = [nxt, prv]

    side_segments = tuple(
        tuple([CORNER_IDS[k]] + blocks[k] + [CORNER_IDS[(k + 1) % 3]])
        for k in range(3)
    )

    outer_hint = (cycle[0], cycle[1])
    spliced = build_plane_graph({v: tuple(n) for v, n in rotation.items()}, outer_hint)
    if set(spliced.outer_vertices()) != set(cycle):
        spliced = build_plane_graph(
            {v: tuple(n) for v, n in rotation.items()}, (cycle[1], cycle[0])
        )
        if set(spliced.outer_vertices()) != set(cycle):
            raise AugmentationError("enclosing triangle did not become the outer face")

    segment_of_edge = dict(arr.family.segment_of_edge)
    paths = [tuple(p) for p in arr.family.segments]
    for side in side_segments:
        sid = len(paths)
        paths.append(side)
        for u, v in zip(side, side[1:]):
            segment_of_edge[edge_key(u, v)] = sid

    # protect every region that is not yet bounded by three pseudosegments
    rotation = {v: list(nbrs) for v, nbrs in spliced.rotation.items()}
    counter = itertools.count()
    singles: list[tuple[Vertex, Vertex]] = []
    for f in range(len(spliced.faces)):
        if f == spliced.outer_face:
            continue
        face_walk = spliced.faces[f]
        runs = _visible_stretches(face_walk, segment_of_edge)
        if len(runs) == 3 and len({r[0] for r in runs}) == 3:
            continue
        if len(runs) < 3:
            raise InvalidArrangement(f"region {f} bounded by {len(runs)} sides")
        protection = [f"+p{next(counter)}" for _ in runs]
        hub = f"+T{next(counter)}"
        added_vertices.update(protection)
        added_vertices.add(hub)
        for i, (_, entry, exit_, last_edge) in enumerate(runs):
            p = protection[i]
            p_prev = protection[(i - 1) % len(runs)]
            p_next = protection[(i + 1) % len(runs)]
            rotation[p] = [exit_, p_next, hub, p_prev, entry]
            for u, v in ((p, entry), (p, exit_), (p, p_next), (hub, p)):
                singles.append((u, v))
                add_edge(u, v)
            # the junction between run i and run i+1 gains [p_next, p] in the
            # corner right before the run's last incoming neighbor
            a, w = last_edge
            pos = rotation[w].index(a)
            rotation[w][pos:pos] = [p_next, p]
        rotation[hub] = list(protection)

    final = build_plane_graph(
        {v: tuple(nbrs) for v, nbrs in rotation.items()},
        (cycle[0], cycle[1])
        if spliced.face_of.get((cycle[0], cycle[1])) == spliced.outer_face
        else (cycle[1], cycle[0]),
    )
    for u, v in singles:
        paths.append((u, v) if _le(u, v) else (v, u))
    family = family_from_paths(final, paths)
    suspended = SuspendedGraph(final, CORNER_IDS)

    for f in range(len(final.faces)):
        if f == final.outer_face:
            continue
        runs = _visible_stretches(final.faces[f], family.segment_of_edge)
        if len(runs) != 3:
            raise AugmentationError(f"augmented region {f} has {len(runs)} sides")
    if not check_internally_3connected(suspended):
        raise AugmentationError("augmented graph is not internally 3-connected")

    return AugmentedArrangement(
        base=arr,
        graph=suspended,
        family=family,
        added_vertices=frozenset(added_vertices),
        added_edges=frozenset(added_edges),
        side_segments=side_segments,
    )


def _le(a, b) -> bool:
    try:
        return a <= b
    except TypeError:
        return repr(a) <= repr(b)


def strip(aug: AugmentedArrangement) -> PseudosegmentArrangement:
    """Remove the helper structure; must reproduce the base arrangement."""
    rotation = {}
    for v, nbrs in aug.graph.graph.rotation.items():
        if v in aug.added_vertices:
            continue
        rotation[v] = tuple(
            u
            for u in nbrs
            if u not in aug.added_vertices
            and edge_key(u, v) not in aug.added_edges
        )
    base_hint = aug.base.graph.outer_walk()[0]
    graph = build_plane_graph(rotation, base_hint)
    family = family_from_paths(graph, aug.base.family.segments)
    stripped = PseudosegmentArrangement(graph, family)
    if stripped.graph.rotation != aug.base.graph.rotation:
        raise AugmentationError("strip did not restore the base rotation system")
    if stripped.family.segments != aug.base.family.segments:
        raise AugmentationError("strip did not restore the base segments")
    return stripped


# ---------------------------------------------------------------------------
# Stretching
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class StretchResult:
    """Straight-line contact system homeomorphic to the input arrangement."""

    arrangement: PseudosegmentArrangement
    coords: dict[Vertex, tuple[float, float]]
    straightness: dict[int, float]  # per segment, max deviation from its chord
    contacts: tuple  # (segment, endpoint vertex, touched segment, kind)
    augmented: AugmentedArrangement
    drawing: Drawing

    def segment_chord(self, index: int) -> tuple:
        path = self.arrangement.family.segments[index]
        return (self.coords[path[0]], self.coords[path[-1]])


def stretch(
    arrangement: PseudosegmentArrangement, tol: float = DEFAULT_TOLERANCE
) -> StretchResult:
    """Stretch a contact family to straight segments.

    Raises NotStretchable (with a witness subset) when the extremal-point
    condition fails; otherwise the returned coordinates draw every
    pseudosegment straight and preserve every contact incidence.
    """
    aug = augment(arrangement)  # re-checks the condition, raises NotStretchable
    system = assemble(
        None,
        family=aug.family,
        poles=aug.graph.suspensions,
        graph=aug.graph.graph,
    )
    if not check_solvability(system):
        raise AugmentationError("augmented harmonic system is unsolvable")
    drawing = solve(system)
    report = verify_drawing(drawing, family=aug.family, tol=tol)
    if not report.all_pass:
        failed = [c.name for c in report.checks if not c.passed]
        raise AugmentationError(f"augmented drawing failed checks: {failed}")

    coords = {v: drawing.coords[v] for v in arrangement.graph.rotation}
    straightness = {}
    scale = drawing.scale()
    for i, path in enumerate(arrangement.family.segments):
        a, b = coords[path[0]], coords[path[-1]]
        straightness[i] = max(
            (geometry.point_line_distance(coords[v], a, b) for v in path[1:-1]),
            default=0.0,
        )

    contacts = arrangement.family.contact_records()
    _certify_contacts(arrangement.family, coords, tol, scale)
    return StretchResult(
        arrangement=arrangement,
        coords=coords,
        straightness=straightness,
        contacts=contacts,
        augmented=aug,
        drawing=drawing,
    )


def _certify_contacts(
    family: PseudosegmentFamily, coords, tol: float, scale: float
) -> None:
    """Any two stretched segments may meet only at their recorded shared
    vertex; endpoint contacts must land on the host segment."""
    eps = tol * scale
    chords = [(coords[path[0]], coords[path[-1]]) for path in family.segments]
    for i, path in enumerate(family.segments):
        for j in range(i + 1, len(family.segments)):
            common = set(path) & set(family.segments[j])
            (p1, p2), (q1, q2) = chords[i], chords[j]
            meets = geometry.segments_intersect(p1, p2, q1, q2, eps * scale)
            if meets and not common:
                raise AugmentationError(
                    f"stretched segments {i} and {j} intersect without a contact"
                )
            for p in common:
                if geometry.point_segment_distance(coords[p], q1, q2) > eps:
                    raise AugmentationError(
                        f"contact {p!r} of segments {i},{j} left segment {j}"
                    )
