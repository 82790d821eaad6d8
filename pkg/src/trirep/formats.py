"""Line-oriented text formats: graph documents, arrangement documents, and
the drawing/dissection report serializations.

Every document starts with ``format <kind> 1``.  Vertex ids are bare tokens
(letters, digits, ``_ . -``); ids starting with ``+`` are reserved for
augmentation helpers.  Serialization is the exact inverse of parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError
from .faa import FlatAngleAssignment, PseudosegmentFamily, family_from_paths
from .harmonic import Drawing, HarmonicWeights, VerificationReport
from .planar import PlaneGraph, SuspendedGraph, build_plane_graph
from .stretching import PseudosegmentArrangement, StretchResult

FORMAT_VERSION = 1
_ID_RE = re.compile(r"^[A-Za-z0-9_.\-]+$")


def _check_id(token: str, line: int) -> str:
    if not _ID_RE.match(token):
        raise ParseError(line, f"invalid vertex id {token!r}")
    return token


@dataclass(eq=False)
class GraphDocument:
    """Parsed graph file: ordered vertices, rotations, suspensions, outer
    hint, plus optional assignment, weight, and pole-triangle blocks."""

    vertices: tuple[str, ...]
    rotations: dict[str, tuple[str, ...]]
    suspensions: tuple[str, str, str]
    outer: tuple[str, str]
    faa: tuple[tuple[str, str], ...] | None = None  # (vertex, face key)
    segment_weights: tuple[tuple[str, float], ...] = ()
    neighbor_weights: tuple[tuple[str, str, float], ...] = ()
    poles: tuple[tuple[float, float], ...] | None = None

    def to_suspended_graph(self) -> SuspendedGraph:
        graph = build_plane_graph(self.rotations, self.outer)
        return SuspendedGraph(graph, self.suspensions)


def face_key(graph: PlaneGraph, face: int) -> str:
    """Canonical name of a face: the lexicographically smallest rotation of
    its boundary vertex sequence."""
    verts = [str(v) for v in graph.face_vertices(face)]
    rotations = [tuple(verts[i:] + verts[:i]) for i in range(len(verts))]
    return ",".join(min(rotations))


def face_by_key(graph: PlaneGraph, key: str) -> int:
    for f in range(len(graph.faces)):
        if face_key(graph, f) == key:
            return f
    raise KeyError(f"no face with key {key!r}")


def parse_graph(text: str) -> GraphDocument:
    vertices: list[str] = []
    rotations: dict[str, tuple[str, ...]] = {}
    suspensions: tuple[str, str, str] | None = None
    outer: tuple[str, str] | None = None
    faa: list[tuple[str, str]] = []
    seg_weights: list[tuple[str, float]] = []
    nbr_weights: list[tuple[str, str, float]] = []
    poles: tuple[tuple[float, float], ...] | None = None
    saw_header = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        if not saw_header:
            if kind != "format" or len(args) != 2 or args[0] != "graph":
                raise ParseError(lineno, "expected header 'format graph 1'")
            if args[1] != str(FORMAT_VERSION):
                raise ParseError(lineno, f"unsupported format version {args[1]!r}")
            saw_header = True
            continue
        if kind == "vertex":
            if len(args) != 1:
                raise ParseError(lineno, "vertex takes one id")
            vertices.append(_check_id(args[0], lineno))
        elif kind == "rot":
            if len(args) < 2:
                raise ParseError(lineno, "rot needs a vertex and neighbors")
            v = _check_id(args[0], lineno)
            rotations[v] = tuple(_check_id(a, lineno) for a in args[1:])
        elif kind == "suspensions":
            if len(args) != 3:
                raise ParseError(lineno, "suspensions takes three ids")
            suspensions = (args[0], args[1], args[2])
        elif kind == "outer":
            if len(args) != 2:
                raise ParseError(lineno, "outer takes a directed edge")
            outer = (args[0], args[1])
        elif kind == "faa":
            if len(args) != 2:
                raise ParseError(lineno, "faa takes a vertex and a face key")
            faa.append((args[0], args[1]))
        elif kind == "lambda":
            try:
                seg_weights.append((args[0], float(args[1])))
            except (IndexError, ValueError):
                raise ParseError(lineno, "lambda takes a vertex and a number")
        elif kind == "lambda-n":
            try:
                nbr_weights.append((args[0], args[1], float(args[2])))
            except (IndexError, ValueError):
                raise ParseError(lineno, "lambda-n takes two vertices and a number")
        elif kind == "poles":
            try:
                vals = [float(a) for a in args]
            except ValueError:
                raise ParseError(lineno, "poles takes six numbers")
            if len(vals) != 6:
                raise ParseError(lineno, "poles takes six numbers")
            poles = ((vals[0], vals[1]), (vals[2], vals[3]), (vals[4], vals[5]))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")

    if not saw_header:
        raise ParseError(1, "empty document")
    if suspensions is None or outer is None:
        raise ParseError(1, "missing suspensions or outer directive")
    missing = [v for v in vertices if v not in rotations]
    if missing or set(rotations) != set(vertices):
        raise ParseError(1, f"vertex list and rotations disagree: {missing}")
    return GraphDocument(
        vertices=tuple(vertices),
        rotations=rotations,
        suspensions=suspensions,
        outer=outer,
        faa=tuple(faa) if faa else None,
        segment_weights=tuple(seg_weights),
        neighbor_weights=tuple(nbr_weights),
        poles=poles,
    )


def serialize_graph(doc: GraphDocument) -> str:
    lines = [f"format graph {FORMAT_VERSION}"]
    for v in doc.vertices:
        lines.append(f"vertex {v}")
    for v in doc.vertices:
        lines.append("rot " + " ".join([v] + list(doc.rotations[v])))
    lines.append("suspensions " + " ".join(doc.suspensions))
    lines.append("outer " + " ".join(doc.outer))
    if doc.faa:
        for v, key in doc.faa:
            lines.append(f"faa {v} {key}")
    for v, w in doc.segment_weights:
        lines.append(f"lambda {v} {w!r}")
    for v, u, w in doc.neighbor_weights:
        lines.append(f"lambda-n {v} {u} {w!r}")
    if doc.poles:
        flat = " ".join(repr(c) for p in doc.poles for c in p)
        lines.append(f"poles {flat}")
    return "\n".join(lines) + "\n"


def document_from_graph(
    sg: SuspendedGraph, assignment: FlatAngleAssignment | None = None
) -> GraphDocument:
    g = sg.graph
    vertices = tuple(str(v) for v in g.vertices)
    rotations = {str(v): tuple(str(u) for u in g.rotation[v]) for v in g.rotation}
    outer = g.outer_walk()[0]
    faa = None
    if assignment is not None:
        faa = tuple(
            sorted(
                (str(v), face_key(g, f)) for v, f in assignment.assignments.items()
            )
        )
    return GraphDocument(
        vertices=vertices,
        rotations=rotations,
        suspensions=tuple(str(s) for s in sg.suspensions),
        outer=(str(outer[0]), str(outer[1])),
        faa=faa,
    )


def resolve_assignment(
    doc: GraphDocument, sg: SuspendedGraph
) -> FlatAngleAssignment | None:
    if doc.faa is None:
        return None
    assignments = {}
    for v, key in doc.faa:
        assignments[v] = face_by_key(sg.graph, key)
    return FlatAngleAssignment(sg, assignments)


def parse_faa(text: str, sg: SuspendedGraph) -> FlatAngleAssignment:
    """Standalone assignment document: one ``faa <vertex> <face-key>`` line
    per pair.  A full graph document carrying an faa block is accepted too."""
    pairs: list[tuple[str, str]] = []
    saw_header = False
    kind_seen = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        if not saw_header:
            if kind != "format" or len(args) != 2 or args[0] not in ("faa", "graph"):
                raise ParseError(lineno, "expected header 'format faa 1'")
            if args[1] != str(FORMAT_VERSION):
                raise ParseError(lineno, f"unsupported format version {args[1]!r}")
            kind_seen = args[0]
            saw_header = True
            continue
        if kind == "faa":
            if len(args) != 2:
                raise ParseError(lineno, "faa takes a vertex and a face key")
            pairs.append((args[0], args[1]))
        elif kind_seen == "faa":
            raise ParseError(lineno, f"unknown directive {kind!r}")
    if not saw_header:
        raise ParseError(1, "empty document")
    assignments = {v: face_by_key(sg.graph, key) for v, key in pairs}
    return FlatAngleAssignment(sg, assignments)


def serialize_faa(assignment: FlatAngleAssignment) -> str:
    g = assignment.graph
    lines = [f"format faa {FORMAT_VERSION}"]
    for v, f in sorted(assignment.assignments.items(), key=lambda kv: str(kv[0])):
        lines.append(f"faa {v} {face_key(g, f)}")
    return "\n".join(lines) + "\n"


def resolve_weights(
    doc: GraphDocument, graph: PlaneGraph, family: PseudosegmentFamily
) -> HarmonicWeights | None:
    if not doc.segment_weights and not doc.neighbor_weights:
        return None
    from .harmonic import default_weights

    weights = default_weights(graph, family)
    for v, w in doc.segment_weights:
        weights.segment_weight[v] = w
    by_vertex: dict[str, dict[str, float]] = {}
    for v, u, w in doc.neighbor_weights:
        by_vertex.setdefault(v, {})[u] = w
    for v, ws in by_vertex.items():
        weights.neighbor_weights[v] = ws
    return weights


# ---------------------------------------------------------------------------
# Arrangements
# ---------------------------------------------------------------------------


def parse_arrangement(text: str) -> PseudosegmentArrangement:
    rotations: dict[str, tuple[str, ...]] = {}
    outer: tuple[str, str] | None = None
    segments: list[tuple[str, ...]] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        if not saw_header:
            if kind != "format" or args[:1] != ["arrangement"]:
                raise ParseError(lineno, "expected header 'format arrangement 1'")
            if args[1:] != [str(FORMAT_VERSION)]:
                raise ParseError(lineno, "unsupported format version")
            saw_header = True
            continue
        if kind == "vertex":
            _check_id(args[0], lineno)
        elif kind == "rot":
            v = _check_id(args[0], lineno)
            rotations[v] = tuple(_check_id(a, lineno) for a in args[1:])
        elif kind == "outer":
            if len(args) != 2:
                raise ParseError(lineno, "outer takes a directed edge")
            outer = (args[0], args[1])
        elif kind == "segment":
            path = _path_from_edge_ids(args, lineno)
            segments.append(path)
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    if not saw_header:
        raise ParseError(1, "empty document")
    if outer is None:
        raise ParseError(1, "missing outer directive")
    graph = build_plane_graph(rotations, outer)
    return PseudosegmentArrangement(graph, family_from_paths(graph, segments))


def _path_from_edge_ids(tokens: Sequence[str], lineno: int) -> tuple[str, ...]:
    """A segment line lists edge ids u-v in path order."""
    if not tokens:
        raise ParseError(lineno, "segment needs at least one edge")
    pairs = []
    for tok in tokens:
        parts = tok.split("-")
        if len(parts) != 2:
            raise ParseError(lineno, f"bad edge id {tok!r}")
        pairs.append((parts[0], parts[1]))
    if len(pairs) == 1:
        return (pairs[0][0], pairs[0][1])
    path = []
    first, second = pairs[0], pairs[1]
    shared = set(first) & set(second)
    if len(shared) != 1:
        raise ParseError(lineno, "segment edges are not a path")
    pivot = shared.pop()
    path = [first[0] if first[1] == pivot else first[1], pivot]
    for u, v in pairs[1:]:
        if path[-1] == u:
            path.append(v)
        elif path[-1] == v:
            path.append(u)
        else:
            raise ParseError(lineno, "segment edges are not a path")
    return tuple(path)


def serialize_arrangement(arr: PseudosegmentArrangement) -> str:
    g = arr.graph
    lines = [f"format arrangement {FORMAT_VERSION}"]
    for v in g.vertices:
        lines.append(f"vertex {v}")
    for v in g.vertices:
        lines.append("rot " + " ".join([str(v)] + [str(u) for u in g.rotation[v]]))
    u, w = g.outer_walk()[0]
    lines.append(f"outer {u} {w}")
    for path in arr.family.segments:
        edges = " ".join(f"{a}-{b}" for a, b in zip(path, path[1:]))
        lines.append(f"segment {edges}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def serialize_drawing(
    drawing: Drawing, report: VerificationReport | None = None
) -> str:
    lines = [f"format drawing {FORMAT_VERSION}"]
    for v in sorted(drawing.coords, key=str):
        x, y = drawing.coords[v]
        lines.append(f"coord {v} {x!r} {y!r}")
    lines.append(f"residual {drawing.residual!r}")
    if report is not None:
        for c in report.checks:
            lines.append(f"check {c.name} {'pass' if c.passed else 'fail'}")
        lines.append(f"verified {'true' if report.all_pass else 'false'}")
    return "\n".join(lines) + "\n"


def serialize_stretch(result: StretchResult) -> str:
    lines = [f"format drawing {FORMAT_VERSION}"]
    for v in sorted(result.coords, key=str):
        x, y = result.coords[v]
        lines.append(f"coord {v} {x!r} {y!r}")
    for i, dev in sorted(result.straightness.items()):
        lines.append(f"segment-deviation {i} {dev!r}")
    for seg, p, other, kind in result.contacts:
        lines.append(f"contact {seg} {p} {other} {kind}")
    return "\n".join(lines) + "\n"


def serialize_dissection(dissection) -> str:
    lines = [f"format dissection {FORMAT_VERSION}"]
    ex = " ".join(f"{c!r}" for p in dissection.enclosing for c in p)
    lines.append(f"enclosing {ex}")
    g = dissection.source.graph
    for t in dissection.triangles:
        kind, ident = t.origin
        name = str(ident) if kind == "vertex" else face_key(g, ident)
        corners = " ".join(f"{c!r}" for p in t.corners for c in p)
        lines.append(f"triangle {kind} {name} {corners}")
    for s, (u, v), (f1, f2) in dissection.point_contacts:
        lines.append(
            f"point-contact {u}-{v} dual {face_key(g, f1)} {face_key(g, f2)}"
        )
    for v, f in dissection.side_contacts:
        lines.append(f"side-contact {v} {face_key(g, f)}")
    return "\n".join(lines) + "\n"
