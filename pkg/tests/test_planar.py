from __future__ import annotations

import pytest

from conftest import abstract_isomorphic
from trirep import fixtures
from trirep.errors import (
    DisconnectedGraph,
    InconsistentRotation,
    NotAlmost4Regular,
    ReductionCreatesMultiEdge,
)
from trirep.planar import (
    SuspendedGraph,
    build_plane_graph,
    check_almost_4_regular,
    check_internally_3connected,
    invert_medial,
    medial_graph,
    reduce_degree_two,
    rotations_isomorphic,
)


def test_k4_faces_are_triangles():
    g = fixtures.load_graph("k4").graph
    assert len(g.faces) == 4
    assert all(len(walk) == 3 for walk in g.faces)


def test_cube_faces_are_quadrilaterals():
    g = fixtures.load_graph("cube").graph
    assert len(g.faces) == 6
    assert all(len(walk) == 4 for walk in g.faces)


def test_face_walk_lengths_sum_to_twice_edges(graphs):
    for sg in graphs.values():
        g = sg.graph
        assert sum(len(walk) for walk in g.faces) == 2 * len(g.edges)


def test_missing_reciprocal_entry_rejected():
    with pytest.raises(InconsistentRotation):
        build_plane_graph({"a": ("b",), "b": ()}, ("a", "b"))


def test_disconnected_rejected():
    rot = {"a": ("b",), "b": ("a",), "c": ("d",), "d": ("c",)}
    with pytest.raises(DisconnectedGraph):
        build_plane_graph(rot, ("a", "b"))


def test_nonplanar_rotation_rejected():
    # K5 is not planar, so no rotation system of it satisfies Euler's formula
    verts = list(range(5))
    rot = {v: tuple(u for u in verts if u != v) for v in verts}
    with pytest.raises(InconsistentRotation):
        build_plane_graph(rot, (0, 1))


def test_internally_3connected_examples(graphs):
    assert check_internally_3connected(graphs["k4"])
    assert check_internally_3connected(graphs["cube"])
    for sg in graphs.values():
        assert check_internally_3connected(sg)


def test_two_triangles_sharing_a_vertex_not_internally_3connected():
    rot = {
        1: ("c", 2),
        2: ("c", 1),
        3: ("c", 4),
        4: (3, "c"),
        "c": (3, 1, 2, 4),
    }
    g = build_plane_graph(rot, (1, "c"))
    sg = SuspendedGraph(g, (1, 2, 3))
    assert not check_internally_3connected(sg)


def test_reduce_subdivided_k4():
    rot = {
        1: (9, 4, 3),
        2: (3, 4, 9),
        3: (1, 4, 2),
        4: (3, 1, 2),
        9: (1, 2),
    }
    sg = SuspendedGraph(build_plane_graph(rot, (1, 3)), (1, 2, 3))
    result = reduce_degree_two(sg)
    assert result.suppressed == ((9, 1, 2),)
    expected = fixtures.load_graph("k4").graph
    mapping = {v: str(v) for v in result.reduced.graph.rotation}
    assert rotations_isomorphic(result.reduced.graph, expected, mapping)


def test_reduce_is_identity_without_degree_two_vertices(graphs):
    sg = graphs["prism3"]
    result = reduce_degree_two(sg)
    assert result.suppressed == ()
    assert result.reduced.graph.rotation == sg.graph.rotation


def test_reduce_c5_to_triangle():
    rot = {i: ((i % 5) + 1, ((i - 2) % 5) + 1) for i in range(1, 6)}
    sg = SuspendedGraph(build_plane_graph(rot, (1, 5)), (1, 2, 3))
    result = reduce_degree_two(sg)
    assert len(result.suppressed) == 2
    assert sorted(result.reduced.graph.rotation) == [1, 2, 3]
    # suppressed vertices land on their carrier segments
    coords = {1: (0.0, 0.0), 2: (1.0, 0.0), 3: (0.5, 1.0)}
    full = result.expand_coordinates(coords)
    assert set(full) == {1, 2, 3, 4, 5}


def test_reduction_creating_multi_edge_rejected():
    rot = {1: (2, 3, 4), 2: (3, 1, 4), 3: (1, 2), 4: (2, 1)}
    sg = SuspendedGraph(build_plane_graph(rot, (1, 3)), (1, 2, 3))
    with pytest.raises(ReductionCreatesMultiEdge):
        reduce_degree_two(sg)


def test_medial_k4_counts():
    sg = fixtures.load_graph("k4")
    m = medial_graph(sg)
    h = m.graph.graph
    assert len(h.rotation) == 6 + 3
    assert len(h.faces) == 4 + 4  # vertices plus faces of K4
    origins = set(m.face_origin.values())
    assert len(origins) == len(m.face_origin)
    assert {tag[0] for tag in origins} == {"vertex", "face"}


def test_medial_is_almost_4_regular(graphs):
    for sg in graphs.values():
        m = medial_graph(sg)
        assert check_almost_4_regular(m.graph.graph)


def test_medial_k4_without_half_edges_is_octahedron():
    sg = fixtures.load_graph("k4")
    h = medial_graph(sg).graph.graph
    adj = {v: set(h.rotation[v]) for v in h.rotation}
    for i in (1, 2, 3):
        a, b = adj.pop(("h", i))
        adj[a].discard(("h", i))
        adj[b].discard(("h", i))
        adj[a].add(b)
        adj[b].add(a)
    oct_graph = fixtures.load_graph("octahedron").graph
    oct_adj = {v: set(oct_graph.rotation[v]) for v in oct_graph.rotation}
    assert abstract_isomorphic(adj, oct_adj)


def test_almost_4_regular_profile():
    assert not check_almost_4_regular(fixtures.load_graph("cube").graph)
    # C3 matches the profile (three degree-2 outer vertices, no others)
    rot = {1: (2, 3), 2: (3, 1), 3: (1, 2)}
    assert check_almost_4_regular(build_plane_graph(rot, (1, 3)))


def test_invert_medial_round_trip(graphs):
    for name, sg in graphs.items():
        m = medial_graph(sg)
        back = invert_medial(m.graph)
        # natural mapping: vertex v of G <-> the white medial face around v
        vertex_face = {
            tag[1]: idx for idx, tag in m.face_origin.items() if tag[0] == "vertex"
        }
        mapping = {v: vertex_face[v] for v in sg.graph.rotation}
        assert rotations_isomorphic(sg.graph, back.graph, mapping), name
        assert tuple(mapping[s] for s in sg.suspensions) == back.suspensions


def test_invert_medial_rejects_wrong_degrees():
    sg = fixtures.load_graph("cube")
    with pytest.raises(NotAlmost4Regular):
        invert_medial(sg)


def test_invert_medial_rejects_c3():
    rot = {1: (2, 3), 2: (3, 1), 3: (1, 2)}
    sg = SuspendedGraph(build_plane_graph(rot, (1, 3)), (1, 2, 3))
    with pytest.raises(ValueError):
        invert_medial(sg)


def test_invert_medial_rejects_odd_degree_profile():
    # degree-6 style violation: wheel5 has a degree-5 hub
    sg = fixtures.load_graph("wheel5")
    with pytest.raises(NotAlmost4Regular):
        invert_medial(sg)
