"""Combinatorial plane graphs: rotation systems, face tracing, suspensions,
connectivity tests, degree-two reduction, and the medial construction.

A plane graph is given purely combinatorially: every vertex carries the
counterclockwise cyclic list of its neighbors.  Faces are traced with the
face-on-the-left rule, so bounded faces come out counterclockwise and the
outer face clockwise.  The outer face is selected by a directed-edge hint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Mapping, Sequence

from .errors import (
    DisconnectedGraph,
    FacesNotBipartite,
    InconsistentRotation,
    NotAlmost4Regular,
    ReductionCreatesMultiEdge,
)

Vertex = Hashable
DirectedEdge = tuple[Vertex, Vertex]
EdgeKey = tuple[Vertex, Vertex]


def edge_key(u: Vertex, v: Vertex) -> EdgeKey:
    """Canonical (sorted) key of the undirected edge {u, v}."""
    return (u, v) if _lt(u, v) else (v, u)


def _lt(a: Any, b: Any) -> bool:
    try:
        return a < b
    except TypeError:
        return repr(a) < repr(b)


def _sorted(items: Iterable[Any]) -> list[Any]:
    items = list(items)  # the fallback must not see an exhausted iterator
    try:
        return sorted(items)
    except TypeError:
        return sorted(items, key=repr)


def trace_faces(
    rotation: Mapping[Vertex, Sequence[Vertex]],
) -> tuple[list[tuple[DirectedEdge, ...]], dict[DirectedEdge, int]]:
    """Trace all face walks of a rotation system.

    The successor of directed edge (u, v) is (v, w) with w the predecessor of
    u in v's counterclockwise list, which keeps the traced face on the left.
    """
    position = {
        v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()
    }
    faces: list[tuple[DirectedEdge, ...]] = []
    face_of: dict[DirectedEdge, int] = {}
    for u in _sorted(rotation):
        for v in rotation[u]:
            if (u, v) in face_of:
                continue
            walk: list[DirectedEdge] = []
            e = (u, v)
            while e not in face_of:
                face_of[e] = len(faces)
                walk.append(e)
                a, b = e
                nbrs = rotation[b]
                i = position[b][a]
                e = (b, nbrs[(i - 1) % len(nbrs)])
            if e != walk[0]:
                raise InconsistentRotation(f"face walk through {walk[0]} does not close")
            faces.append(tuple(walk))
    return faces, face_of


@dataclass(eq=False)
class PlaneGraph:
    """Immutable plane embedding: rotation system plus traced faces."""

    rotation: dict[Vertex, tuple[Vertex, ...]]
    faces: tuple[tuple[DirectedEdge, ...], ...]
    outer_face: int
    face_of: dict[DirectedEdge, int] = field(repr=False)
    edges: tuple[EdgeKey, ...] = field(repr=False)

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(_sorted(self.rotation))

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        return self.rotation[v]

    def degree(self, v: Vertex) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self.face_of

    def next_ccw(self, v: Vertex, u: Vertex) -> Vertex:
        nbrs = self.rotation[v]
        return nbrs[(nbrs.index(u) + 1) % len(nbrs)]

    def prev_ccw(self, v: Vertex, u: Vertex) -> Vertex:
        nbrs = self.rotation[v]
        return nbrs[(nbrs.index(u) - 1) % len(nbrs)]

    def face_vertices(self, index: int) -> tuple[Vertex, ...]:
        return tuple(u for u, _ in self.faces[index])

    def face_size(self, index: int) -> int:
        return len(self.faces[index])

    def face_edge_keys(self, index: int) -> frozenset[EdgeKey]:
        return frozenset(edge_key(u, v) for u, v in self.faces[index])

    def edge_faces(self, key: EdgeKey) -> tuple[int, int]:
        u, v = key
        return (self.face_of[(u, v)], self.face_of[(v, u)])

    def outer_walk(self) -> tuple[DirectedEdge, ...]:
        return self.faces[self.outer_face]

    def outer_vertices(self) -> tuple[Vertex, ...]:
        return self.face_vertices(self.outer_face)

    def faces_at(self, v: Vertex) -> tuple[int, ...]:
        return tuple(self.face_of[(v, u)] for u in self.rotation[v])


def build_plane_graph(
    rotation: Mapping[Vertex, Sequence[Vertex]], outer_hint: DirectedEdge
) -> PlaneGraph:
    """Realize a rotation system as a plane graph.

    The hint is a directed edge whose left face is the outer face.  The input
    must be a connected simple graph whose rotation lists are reciprocal, and
    the traced embedding must satisfy Euler's formula (genus zero).
    """
    rot = {v: tuple(nbrs) for v, nbrs in rotation.items()}
    if not rot:
        raise InconsistentRotation("empty graph")
    for v, nbrs in rot.items():
        if len(set(nbrs)) != len(nbrs):
            raise InconsistentRotation(f"duplicate neighbor in rotation of {v!r}")
        if v in nbrs:
            raise InconsistentRotation(f"self-loop at {v!r}")
        for u in nbrs:
            if u not in rot:
                raise InconsistentRotation(f"unknown neighbor {u!r} of {v!r}")
            if v not in rot[u]:
                raise InconsistentRotation(f"missing reciprocal entry {v!r} in {u!r}")
    vertices = _sorted(rot)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for u in rot[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(vertices):
        raise DisconnectedGraph(f"{len(vertices) - len(seen)} vertices unreachable")

    faces, face_of = trace_faces(rot)
    n = len(vertices)
    m = sum(len(nbrs) for nbrs in rot.values()) // 2
    if n - m + len(faces) != 2:
        raise InconsistentRotation("rotation system does not embed in the sphere")
    if tuple(outer_hint) not in face_of:
        raise InconsistentRotation(f"outer hint {outer_hint!r} is not a directed edge")
    edges = tuple(_sorted({edge_key(u, v) for u, v in face_of}))
    return PlaneGraph(
        rotation=rot,
        faces=tuple(faces),
        outer_face=face_of[tuple(outer_hint)],
        face_of=face_of,
        edges=edges,
    )


@dataclass(eq=False)
class SuspendedGraph:
    """Plane graph with an ordered triple of outer-face suspension vertices."""

    graph: PlaneGraph
    suspensions: tuple[Vertex, Vertex, Vertex]

    def __post_init__(self) -> None:
        if len(set(self.suspensions)) != 3:
            raise ValueError("suspensions must be three distinct vertices")
        outer = set(self.graph.outer_vertices())
        for s in self.suspensions:
            if s not in outer:
                raise ValueError(f"suspension {s!r} is not on the outer face")


def connected_components(
    vertices: Iterable[Vertex], edges: Iterable[EdgeKey]
) -> list[frozenset[Vertex]]:
    """Connected components of an abstract graph (isolated vertices allowed)."""
    adj: dict[Vertex, set[Vertex]] = {v: set() for v in vertices}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    components = []
    remaining = set(adj)
    while remaining:
        start = _sorted(remaining)[0]
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        remaining -= comp
        components.append(frozenset(comp))
    return components


def _is_connected_after_removal(adj: dict[Vertex, set[Vertex]], removed: set[Vertex]) -> bool:
    alive = [v for v in adj if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(alive)


def is_3connected(adjacency: Mapping[Vertex, Iterable[Vertex]]) -> bool:
    """Brute-force 3-connectivity of an abstract simple graph.

    Enumerates all vertex pairs; fine at corpus scale (O(n^2 (n+m))).
    """
    adj = {v: set(nbrs) for v, nbrs in adjacency.items()}
    if len(adj) < 4:
        return False
    if not _is_connected_after_removal(adj, set()):
        return False
    verts = _sorted(adj)
    for i, a in enumerate(verts):
        for b in verts[i + 1 :]:
            if not _is_connected_after_removal(adj, {a, b}):
                return False
    return True


def check_internally_3connected(sg: SuspendedGraph) -> bool:
    """True iff the graph plus a vertex adjacent to the suspensions is 3-connected."""
    aug: dict[Vertex, set[Vertex]] = {
        v: set(nbrs) for v, nbrs in sg.graph.rotation.items()
    }
    vinf = ("vinf", object())  # cannot collide with user ids
    aug[vinf] = set(sg.suspensions)
    for s in sg.suspensions:
        aug[s].add(vinf)
    return is_3connected(aug)


@dataclass(eq=False)
class DegreeTwoReduction:
    """Result of suppressing degree-two vertices, with the suppression trail."""

    reduced: SuspendedGraph
    suppressed: tuple[tuple[Vertex, Vertex, Vertex], ...]  # (vertex, nbr_a, nbr_b)

    def expand_coordinates(self, coords: Mapping[Vertex, tuple[float, float]]) -> dict:
        """Place suppressed vertices back on their carrier segments (midpoints)."""
        out = dict(coords)
        for v, a, b in reversed(self.suppressed):
            (xa, ya), (xb, yb) = out[a], out[b]
            out[v] = ((xa + xb) / 2.0, (ya + yb) / 2.0)
        return out


def reduce_degree_two(sg: SuspendedGraph) -> DegreeTwoReduction:
    """Suppress every non-suspension degree-two vertex, preserving the embedding."""
    rot = {v: list(nbrs) for v, nbrs in sg.graph.rotation.items()}
    hint = sg.graph.outer_walk()[0]
    suspensions = set(sg.suspensions)
    trail: list[tuple[Vertex, Vertex, Vertex]] = []
    while True:
        target = None
        for v in _sorted(rot):
            if v not in suspensions and len(rot[v]) == 2:
                target = v
                break
        if target is None:
            break
        a, b = rot[target]
        if a == b:
            raise ReductionCreatesMultiEdge(f"both edges of {target!r} lead to {a!r}")
        if b in rot[a]:
            raise ReductionCreatesMultiEdge(
                f"suppressing {target!r} would duplicate edge {edge_key(a, b)}"
            )
        rot[a][rot[a].index(target)] = b
        rot[b][rot[b].index(target)] = a
        del rot[target]
        p, q = hint
        if q == target:
            hint = (p, a if p == b else b)
        elif p == target:
            hint = (a if q == b else b, q)
        trail.append((target, a, b))
    graph = build_plane_graph({v: tuple(ns) for v, ns in rot.items()}, hint)
    return DegreeTwoReduction(
        reduced=SuspendedGraph(graph, sg.suspensions), suppressed=tuple(trail)
    )


# ---------------------------------------------------------------------------
# Medial graph
# ---------------------------------------------------------------------------

# Medial vertex ids: ("e", u, v) for the edge {u, v} of G, ("h", i) for the
# half-edge at suspension i (1-based).  Half-edge vertices are the medial
# graph's suspensions.

HALF_TOKENS = (("h", 1), ("h", 2), ("h", 3))


@dataclass(eq=False)
class MedialGraph:
    """Medial graph of a suspended plane graph.

    ``face_origin`` maps each medial face index to ("vertex", v) or
    ("face", f) of the source graph; it is a bijection onto V(G) + F(G).
    ``angle_of`` maps each medial edge (as a canonical pair) to the angle
    (vertex of G, face index of G) it represents.
    """

    graph: SuspendedGraph
    source: SuspendedGraph
    face_origin: dict[int, tuple[str, Any]]
    angle_of: dict[tuple, tuple[Vertex, int]]

    def origin_face(self, origin: tuple[str, Any]) -> int:
        for index, tag in self.face_origin.items():
            if tag == origin:
                return index
        raise KeyError(origin)


def augmented_rotation(sg: SuspendedGraph) -> dict[Vertex, tuple[Any, ...]]:
    """Rotation lists with edge tokens, plus a half-edge token inserted in the
    outer corner of each suspension."""
    g = sg.graph
    tokens: dict[Vertex, list[Any]] = {
        v: [("e",) + edge_key(v, u) for u in g.rotation[v]] for v in g.rotation
    }
    walk = g.outer_walk()
    for i, s in enumerate(sg.suspensions, start=1):
        visits = [(a, b) for a, b in walk if b == s]
        if len(visits) != 1:
            raise InconsistentRotation(
                f"suspension {s!r} appears {len(visits)} times on the outer walk"
            )
        a = visits[0][0]
        lst = tokens[s]
        lst.insert(lst.index(("e",) + edge_key(s, a)), ("h", i))
    return {v: tuple(lst) for v, lst in tokens.items()}


def medial_graph(sg: SuspendedGraph) -> MedialGraph:
    """Medial graph H: one vertex per edge of G plus three half-edge vertices;
    one H-edge per angle of G.  Faces of H biject to vertices and faces of G."""
    g = sg.graph
    tokens = augmented_rotation(sg)

    def other_end(v: Vertex, token: Any) -> Vertex | None:
        if token[0] == "h":
            return None
        a, b = token[1], token[2]
        return b if a == v else a

    # angle (= H-edge) of each consecutive token pair, with its G-face
    angle_of: dict[tuple, tuple[Vertex, int]] = {}
    for v in g.rotation:
        lst = tokens[v]
        d = len(lst)
        for j in range(d):
            t1, t2 = lst[j], lst[(j + 1) % d]
            pair = tuple(_sorted((t1, t2)))
            if t1[0] == "h" or t2[0] == "h":
                face = g.outer_face
            else:
                face = g.face_of[(v, other_end(v, t1))]
            if pair in angle_of:
                raise InconsistentRotation(f"medial multi-edge at angle {pair!r}")
            angle_of[pair] = (v, face)

    rotation: dict[Any, tuple[Any, ...]] = {}
    for u, v in g.edges:
        tok = ("e", u, v)

        def side(x: Vertex) -> tuple[Any, Any]:
            lst = tokens[x]
            i = lst.index(tok)
            return lst[(i + 1) % len(lst)], lst[(i - 1) % len(lst)]

        nxt_u, prv_u = side(u)
        nxt_v, prv_v = side(v)
        rotation[tok] = (nxt_u, prv_u, nxt_v, prv_v)
    for i, s in enumerate(sg.suspensions, start=1):
        lst = tokens[s]
        j = lst.index(("h", i))
        rotation[("h", i)] = (lst[(j + 1) % len(lst)], lst[(j - 1) % len(lst)])

    faces, face_of = trace_faces(rotation)

    face_origin: dict[int, tuple[str, Any]] = {}
    for index, walk in enumerate(faces):
        verts = set()
        gfaces = set()
        for a, b in walk:
            gv, gf = angle_of[tuple(_sorted((a, b)))]
            verts.add(gv)
            gfaces.add(gf)
        if len(verts) == 1:
            face_origin[index] = ("vertex", next(iter(verts)))
        elif len(gfaces) == 1:
            face_origin[index] = ("face", next(iter(gfaces)))
        else:
            raise InconsistentRotation("medial face with mixed angle origins")

    origins = list(face_origin.values())
    if len(set(origins)) != len(origins):
        raise InconsistentRotation("medial face origins are not a bijection")

    outer_index = next(
        i for i, tag in face_origin.items() if tag == ("face", g.outer_face)
    )
    medial_plane = PlaneGraph(
        rotation=rotation,
        faces=tuple(faces),
        outer_face=outer_index,
        face_of=face_of,
        edges=tuple(_sorted({edge_key(a, b) for a, b in face_of})),
    )
    suspended = SuspendedGraph(medial_plane, HALF_TOKENS)
    return MedialGraph(
        graph=suspended, source=sg, face_origin=face_origin, angle_of=angle_of
    )


def check_almost_4_regular(g: PlaneGraph) -> bool:
    """Three degree-2 vertices on the outer face; every other vertex degree 4."""
    two = [v for v in g.rotation if g.degree(v) == 2]
    rest = [v for v in g.rotation if g.degree(v) != 2]
    if len(two) != 3:
        return False
    outer = set(g.outer_vertices())
    if any(v not in outer for v in two):
        return False
    return all(g.degree(v) == 4 for v in rest)


def invert_medial(h: SuspendedGraph) -> SuspendedGraph:
    """Recover G from an almost-4-regular plane graph H with medial structure.

    Bounded faces are 2-colored; the white class (the one holding the three
    degree-2 suspensions) gives the vertices of G, and each degree-4 vertex
    of H turns into the edge between its two white faces.
    """
    g = h.graph
    if not check_almost_4_regular(g):
        raise NotAlmost4Regular("degree profile is not almost 4-regular")
    degree_two = {v for v in g.rotation if g.degree(v) == 2}
    if set(h.suspensions) != degree_two:
        raise ValueError("suspensions of H must be its three degree-2 vertices")
    if len(g.rotation) == len(degree_two):
        raise ValueError("H = C3 has no medial preimage")

    # 2-color all faces; outer face is black, whites become vertices of G.
    color: dict[int, int] = {g.outer_face: 0}
    queue = [g.outer_face]
    while queue:
        f = queue.pop()
        for key in g.face_edge_keys(f):
            f1, f2 = g.edge_faces(key)
            nxt = f2 if f1 == f else f1
            if nxt in color:
                if color[nxt] == color[f]:
                    raise FacesNotBipartite(f"odd face cycle through edge {key}")
            else:
                color[nxt] = 1 - color[f]
                queue.append(nxt)
    whites = {f for f, c in color.items() if c == 1}

    def white_faces_at(x: Vertex) -> list[int]:
        return [f for f in g.faces_at(x) if f in whites]

    gprime_edge: dict[Vertex, tuple[int, int]] = {}
    for x in g.rotation:
        if g.degree(x) != 4:
            continue
        wf = sorted(set(white_faces_at(x)))
        if len(wf) != 2:
            raise FacesNotBipartite(f"vertex {x!r} does not join two white faces")
        gprime_edge[x] = (wf[0], wf[1])

    rotation: dict[int, tuple[int, ...]] = {}
    for w in sorted(whites):
        nbrs = []
        for x, _ in g.faces[w]:
            if g.degree(x) == 4:
                a, b = gprime_edge[x]
                nbrs.append(b if a == w else a)
        rotation[w] = tuple(nbrs)

    suspensions = []
    for d in h.suspensions:
        wf = white_faces_at(d)
        if len(set(wf)) != 1:
            raise FacesNotBipartite(f"degree-2 vertex {d!r} lacks a unique white face")
        suspensions.append(wf[0])

    # Outer hint: walk the outer (black) face of H; the white face right of
    # each directed H-edge is the G-vertex passed at that angle.
    outer_whites: list[int] = []
    for a, b in g.outer_walk():
        f = g.face_of[(b, a)]
        if f in whites and (not outer_whites or outer_whites[-1] != f):
            outer_whites.append(f)
    if outer_whites and outer_whites[0] == outer_whites[-1]:
        outer_whites.pop()
    if len(outer_whites) < 2:
        raise NotAlmost4Regular("outer walk of H visits fewer than two white faces")
    hint = (outer_whites[0], outer_whites[1])

    boundary_edges = {edge_key(*gprime_edge[x]) for x, _ in g.outer_walk() if g.degree(x) == 4}
    graph = build_plane_graph(rotation, hint)
    if graph.face_edge_keys(graph.outer_face) != boundary_edges:
        graph = build_plane_graph(rotation, (hint[1], hint[0]))
        if graph.face_edge_keys(graph.outer_face) != boundary_edges:
            raise NotAlmost4Regular("could not identify the outer face of the preimage")
    return SuspendedGraph(graph, tuple(suspensions))


def rotations_isomorphic(
    g1: PlaneGraph, g2: PlaneGraph, mapping: Mapping[Vertex, Vertex]
) -> bool:
    """Check that ``mapping`` is an isomorphism of labeled embeddings
    (edges preserved and rotation lists equal up to cyclic shift)."""
    if set(mapping) != set(g1.rotation) or set(mapping.values()) != set(g2.rotation):
        return False
    mapped_edges = {edge_key(mapping[u], mapping[v]) for u, v in g1.edges}
    if mapped_edges != set(g2.edges):
        return False
    for v, nbrs in g1.rotation.items():
        a = tuple(mapping[u] for u in nbrs)
        b = g2.rotation[mapping[v]]
        if len(a) != len(b):
            return False
        if len(a) == 0:
            continue
        doubled = b + b
        if not any(doubled[i : i + len(a)] == a for i in range(len(b))):
            return False
    return True
