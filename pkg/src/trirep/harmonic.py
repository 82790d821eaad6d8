"""Harmonic linear systems and drawing verification.

Every vertex interior to a pseudosegment is constrained to a convex
combination of its two path neighbors; every other non-pole vertex sits at a
weighted barycenter of all its neighbors.  The three suspensions are the
poles and carry fixed coordinates.  A solved drawing is accepted as a
straight-line triangle representation only when seven independent geometric
checks pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import geometry
from .errors import (
    ArcClosesCycle,
    ArcTouchesSelf,
    AssignedVertexWithoutSegmentNeighbors,
    DegeneratePoleTriangle,
    SingularSystem,
)
from .faa import FlatAngleAssignment, PseudosegmentFamily, pseudosegments_of
from .planar import PlaneGraph, Vertex, _sorted

Point = tuple[float, float]

DEFAULT_POLE_TRIANGLE: tuple[Point, Point, Point] = (
    (0.0, 0.0),
    (1.0, 0.0),
    (0.5, math.sqrt(3.0) / 2.0),
)
DEFAULT_TOLERANCE = 1e-7
RESIDUAL_LIMIT = 1e-9


@dataclass(eq=False)
class HarmonicWeights:
    """Convex-combination parameters: one scalar in (0,1) per segment-interior
    vertex, and positive neighbor weights summing to one per other vertex."""

    segment_weight: dict[Vertex, float]
    neighbor_weights: dict[Vertex, dict[Vertex, float]]

    def validate(self) -> None:
        for v, lam in self.segment_weight.items():
            if not 0.0 < lam < 1.0:
                raise ValueError(f"segment weight of {v!r} not in (0,1): {lam}")
        for v, ws in self.neighbor_weights.items():
            if any(w <= 0.0 for w in ws.values()):
                raise ValueError(f"non-positive neighbor weight at {v!r}")
            if abs(sum(ws.values()) - 1.0) > 1e-12:
                raise ValueError(f"neighbor weights of {v!r} do not sum to 1")


def default_weights(
    graph: PlaneGraph, family: PseudosegmentFamily
) -> HarmonicWeights:
    """Midpoint weight for segment-interior vertices, uniform otherwise."""
    interior = set(family.interior_of)
    return HarmonicWeights(
        segment_weight={v: 0.5 for v in interior},
        neighbor_weights={
            v: {u: 1.0 / len(nbrs) for u in nbrs}
            for v, nbrs in graph.rotation.items()
            if v not in interior
        },
    )


def random_weights(
    graph: PlaneGraph, family: PseudosegmentFamily, rng: np.random.Generator
) -> HarmonicWeights:
    """Admissible random draw: segment weights in [0.1, 0.9], neighbor weights
    positive and normalized."""
    interior = set(family.interior_of)
    neighbor = {}
    for v, nbrs in graph.rotation.items():
        if v in interior:
            continue
        raw = rng.uniform(0.1, 1.0, size=len(nbrs))
        raw /= raw.sum()
        neighbor[v] = {u: float(w) for u, w in zip(nbrs, raw)}
    return HarmonicWeights(
        segment_weight={v: float(rng.uniform(0.1, 0.9)) for v in interior},
        neighbor_weights=neighbor,
    )


@dataclass(eq=False)
class HarmonicSystem:
    """One pair of scalar equations per non-pole vertex plus fixed poles.

    ``equations`` maps a vertex either to ("segment", u, w, lam) with
    x = lam*x_u + (1-lam)*x_w, or to ("barycenter", ((u, w_u), ...)).
    """

    graph: PlaneGraph
    poles: tuple[Vertex, Vertex, Vertex]
    pole_coords: dict[Vertex, Point]
    equations: dict[Vertex, tuple]
    family: PseudosegmentFamily

    def dependencies(self, v: Vertex) -> tuple[Vertex, ...]:
        eq = self.equations[v]
        if eq[0] == "segment":
            return (eq[1], eq[2])
        return tuple(u for u, _ in eq[1])


def assemble(
    assignment: FlatAngleAssignment | None,
    weights: HarmonicWeights | None = None,
    pole_triangle: Sequence[Point] = DEFAULT_POLE_TRIANGLE,
    family: PseudosegmentFamily | None = None,
    poles: tuple[Vertex, Vertex, Vertex] | None = None,
    graph: PlaneGraph | None = None,
) -> HarmonicSystem:
    """Build the harmonic system for an assignment (or directly for a family).

    Exactly one of ``assignment`` or (``family`` + ``poles`` + ``graph``)
    determines the constraints; the assignment route derives the family from
    the flat-angle relation.
    """
    if assignment is not None:
        graph = assignment.graph
        poles = assignment.suspended.suspensions
        if family is None:
            family = pseudosegments_of(assignment)
    if graph is None or poles is None or family is None:
        raise ValueError("need an assignment or an explicit family/poles/graph")

    a, b, c = (tuple(map(float, p)) for p in pole_triangle)
    if geometry.triangle_area(a, b, c) <= 1e-12:
        raise DegeneratePoleTriangle(f"pole triangle {pole_triangle!r} has no area")
    pole_coords = dict(zip(poles, (a, b, c)))

    if weights is None:
        weights = default_weights(graph, family)
    weights.validate()

    if assignment is not None:
        for v in assignment.assignments:
            if v not in family.interior_of:
                raise AssignedVertexWithoutSegmentNeighbors(
                    f"assigned vertex {v!r} is interior to no pseudosegment"
                )

    equations: dict[Vertex, tuple] = {}
    for v in graph.rotation:
        if v in pole_coords:
            continue
        if v in family.interior_of:
            seg = family.segments[family.interior_of[v][0]]
            i = seg.index(v)
            lam = weights.segment_weight.get(v, 0.5)
            equations[v] = ("segment", seg[i - 1], seg[i + 1], lam)
        else:
            ws = weights.neighbor_weights.get(v)
            if ws is None:
                ws = {u: 1.0 / graph.degree(v) for u in graph.rotation[v]}
            equations[v] = ("barycenter", tuple(sorted(ws.items(), key=repr)))
    return HarmonicSystem(
        graph=graph,
        poles=tuple(poles),
        pole_coords=pole_coords,
        equations=equations,
        family=family,
    )


def check_solvability(system: HarmonicSystem) -> bool:
    """True iff every non-pole vertex reaches a pole along its dependency
    edges, which guarantees a unique solution."""
    incoming: dict[Vertex, list[Vertex]] = {v: [] for v in system.graph.rotation}
    for v in system.equations:
        for u in system.dependencies(v):
            incoming[u].append(v)
    reached = set(system.poles)
    stack = list(system.poles)
    while stack:
        u = stack.pop()
        for v in incoming[u]:
            if v not in reached:
                reached.add(v)
                stack.append(v)
    return len(reached) == len(system.graph.rotation)


@dataclass(eq=False)
class Drawing:
    """Solved coordinates, unit-free, with the realized structure attached."""

    coords: dict[Vertex, Point]
    graph: PlaneGraph
    pole_coords: dict[Vertex, Point]
    family: PseudosegmentFamily | None = None
    residual: float = 0.0

    def scale(self) -> float:
        pts = list(self.pole_coords.values()) or list(self.coords.values())
        return max(
            geometry.dist(p, q) for p in pts for q in pts if p != q
        ) if len(pts) > 1 else 1.0


def solve(system: HarmonicSystem) -> Drawing:
    """Solve both coordinates against the shared matrix (dense LU)."""
    order = _sorted(system.graph.rotation)
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    mat = np.zeros((n, n))
    rhs = np.zeros((n, 2))
    for v, i in index.items():
        if v in system.pole_coords:
            mat[i, i] = 1.0
            rhs[i] = system.pole_coords[v]
            continue
        eq = system.equations[v]
        mat[i, i] = 1.0
        if eq[0] == "segment":
            _, u, w, lam = eq
            mat[i, index[u]] -= lam
            mat[i, index[w]] -= 1.0 - lam
        else:
            for u, wgt in eq[1]:
                mat[i, index[u]] -= wgt
    try:
        solution = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(str(exc)) from exc
    residual = float(np.abs(mat @ solution - rhs).max())
    pts = list(system.pole_coords.values())
    diameter = max(geometry.dist(p, q) for p in pts for q in pts if p != q)
    if residual > RESIDUAL_LIMIT * diameter:
        raise SingularSystem(f"residual {residual} exceeds limit")
    coords = {v: (float(solution[i, 0]), float(solution[i, 1])) for v, i in index.items()}
    return Drawing(
        coords=coords,
        graph=system.graph,
        pole_coords=dict(system.pole_coords),
        family=system.family,
        residual=residual / diameter,
    )


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witnesses: tuple = ()
    marginal: bool = False  # failed within tolerance of the cutoff


@dataclass(eq=False)
class VerificationReport:
    checks: tuple[CheckResult, ...]
    vertex_angles: dict[Vertex, float]
    face_angles: dict[int, float]
    tolerance: float

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def degenerate_within_tolerance(self) -> bool:
        return any(c.marginal for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def angle_sums(
    drawing: Drawing,
) -> tuple[dict[Vertex, float], dict[int, float]]:
    """Corner angles accumulated per vertex and, independently, per face."""
    g = drawing.graph
    coords = drawing.coords
    by_vertex: dict[Vertex, float] = {v: 0.0 for v in g.rotation}
    by_face: dict[int, float] = {}
    for f, walk in enumerate(g.faces):
        total = 0.0
        for k, (a, v) in enumerate(walk):
            _, d = walk[(k + 1) % len(walk)]
            total += geometry.angle_at(coords[v], coords[a], coords[d])
        by_face[f] = total
    for v, nbrs in g.rotation.items():
        acc = 0.0
        for i, u in enumerate(nbrs):
            w = nbrs[(i + 1) % len(nbrs)]
            acc += geometry.angle_at(coords[v], coords[u], coords[w])
        by_vertex[v] = acc
    return by_vertex, by_face


def verify_drawing(
    drawing: Drawing,
    assignment: FlatAngleAssignment | None = None,
    family: PseudosegmentFamily | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """Run the seven acceptance checks on a solved drawing.

    1. pseudosegments straight  2. outer face equals the pole triangle
    3. no concave angles        4. no vertex collinear with three neighbors
    5. rotation preserved       6. no crossings
    7. no zero-length edges or zero angles.
    """
    g = drawing.graph
    coords = drawing.coords
    family = family or drawing.family
    scale = drawing.scale()
    eps = tol * scale

    checks: list[CheckResult] = []

    # 1. segments straight
    bad = []
    if family is not None:
        for i, path in enumerate(family.segments):
            a, b = coords[path[0]], coords[path[-1]]
            dev = max(
                (geometry.point_line_distance(coords[v], a, b) for v in path[1:-1]),
                default=0.0,
            )
            if dev > eps:
                bad.append((i, dev))
    checks.append(CheckResult("segments-straight", not bad, tuple(bad)))

    # 2. outer face equals the pole triangle
    bad = []
    corners = list(drawing.pole_coords.values())
    for v, p in drawing.pole_coords.items():
        if geometry.dist(coords[v], p) > eps:
            bad.append((v, geometry.dist(coords[v], p)))
    if len(corners) == 3:
        for u, _ in g.outer_walk():
            d = min(
                geometry.point_segment_distance(coords[u], corners[i], corners[(i + 1) % 3])
                for i in range(3)
            )
            if d > eps:
                bad.append((u, d))
    checks.append(CheckResult("outer-triangle", not bad, tuple(bad)))

    # 3. every non-pole vertex inside/on the convex hull of its neighbors
    bad = []
    for v, nbrs in g.rotation.items():
        if v in drawing.pole_coords:
            continue
        angles = sorted(
            math.atan2(coords[u][1] - coords[v][1], coords[u][0] - coords[v][0])
            for u in nbrs
        )
        gap = max(
            (angles[(i + 1) % len(angles)] - angles[i]) % (2 * math.pi)
            for i in range(len(angles))
        )
        if gap > math.pi + tol:
            bad.append((v, gap))
    checks.append(CheckResult("no-concave-angles", not bad, tuple(bad)))

    # 4. no vertex collinear with three or more of its neighbors
    bad = []
    for v, nbrs in g.rotation.items():
        if len(nbrs) < 3:
            continue
        dirs = []
        for u in nbrs:
            dx, dy = coords[u][0] - coords[v][0], coords[u][1] - coords[v][1]
            dirs.append(math.atan2(dy, dx) % math.pi)
        dirs.sort()
        doubled = dirs + [d + math.pi for d in dirs]
        for i in range(len(dirs)):
            j = i
            while j + 1 < i + len(dirs) and doubled[j + 1] - doubled[i] <= tol:
                j += 1
            if j - i + 1 >= 3:
                bad.append((v, j - i + 1))
                break
    checks.append(CheckResult("no-degenerate-vertex", not bad, tuple(bad)))

    # 5. rotation preserved: interior vertex angles sum to 2*pi
    by_vertex, by_face = angle_sums(drawing)
    outer = set(g.outer_vertices())
    bad = []
    for v, total in by_vertex.items():
        if v in outer:
            continue
        if abs(total - 2 * math.pi) > max(tol, 1e-9):
            bad.append((v, total))
    checks.append(CheckResult("rotation-preserved", not bad, tuple(bad)))

    # 6. no crossings between edges that do not share an endpoint
    bad = []
    edges = g.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            a, b = edges[i]
            c, d = edges[j]
            if len({a, b, c, d}) < 4:
                continue
            if geometry.segments_intersect(
                coords[a], coords[b], coords[c], coords[d], eps * scale
            ):
                bad.append((edges[i], edges[j]))
    checks.append(CheckResult("no-crossings", not bad, tuple(bad)))

    # 7. no zero-length edge, no zero angle
    bad = []
    marginal = False
    for u, v in edges:
        length = geometry.dist(coords[u], coords[v])
        if length < eps:
            bad.append(("edge", (u, v), length))
            marginal = marginal or length > 0.0
    for f, walk in enumerate(g.faces):
        for k, (a, v) in enumerate(walk):
            _, d = walk[(k + 1) % len(walk)]
            ang = geometry.angle_at(coords[v], coords[a], coords[d])
            if ang < tol:
                bad.append(("angle", (f, v), ang))
                marginal = marginal or ang > 0.0
    checks.append(CheckResult("no-degeneracy", not bad, tuple(bad), marginal and bool(bad)))

    return VerificationReport(
        checks=tuple(checks),
        vertex_angles=by_vertex,
        face_angles=by_face,
        tolerance=tol,
    )


def is_gfaa(assignment: FlatAngleAssignment, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Polynomial-time test: solve with default weights and verify.

    True exactly when the assignment induces a straight-line triangle
    representation.
    """
    report = evaluate_assignment(assignment, tol=tol)
    return report is not None and report.all_pass


def evaluate_assignment(
    assignment: FlatAngleAssignment,
    weights: HarmonicWeights | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> VerificationReport | None:
    """Solve-and-verify pipeline; None when the induced edge classes are not
    simple paths or the system is unsolvable (both refute goodness)."""
    try:
        family = pseudosegments_of(assignment)
    except (ArcClosesCycle, ArcTouchesSelf):
        return None
    system = assemble(assignment, weights=weights, family=family)
    if not check_solvability(system):
        return None
    drawing = solve(system)
    return verify_drawing(drawing, assignment, family, tol=tol)
