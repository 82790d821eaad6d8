from __future__ import annotations

import pytest

from trirep import fixtures
from trirep.errors import ArcClosesCycle, BudgetExceeded
from trirep.faa import (
    FaceCornerSpec,
    FlatAngleAssignment,
    check_assignment_conditions,
    check_outline_convexity,
    check_point_condition,
    contact_family_violations,
    convex_corners,
    enumerate_faas,
    extremal_points,
    family_from_paths,
    free_points,
    outline_of,
    pseudosegments_of,
)
from trirep.planar import build_plane_graph, edge_key


def empty_assignment(sg):
    return FlatAngleAssignment(sg, {})


def face_index(g, vertices):
    want = frozenset(vertices)
    for f in range(len(g.faces)):
        if frozenset(g.face_vertices(f)) == want and g.face_size(f) == len(vertices):
            return f
    raise AssertionError(f"no face on {vertices}")


# ---------------------------------------------------------------------------
# conditions and enumeration
# ---------------------------------------------------------------------------


def test_octahedron_empty_assignment_satisfies_conditions():
    sg = fixtures.load_graph("octahedron")
    report = check_assignment_conditions(empty_assignment(sg), FaceCornerSpec())
    assert report.cv_ok and report.cf_ok


def test_cube_admits_no_assignment():
    sg = fixtures.load_graph("cube")
    assert list(enumerate_faas(sg)) == []


def test_octahedron_has_exactly_the_empty_assignment():
    sg = fixtures.load_graph("octahedron")
    faas = list(enumerate_faas(sg))
    assert len(faas) == 1 and faas[0].assignments == {}


def test_prism_assignment_count_frozen():
    # regression constant fixed by the enumerator: one distinct inner vertex
    # per quadrilateral, two ways round
    sg = fixtures.load_graph("prism3")
    faas = list(enumerate_faas(sg))
    assert len(faas) == 2
    for a in faas:
        report = check_assignment_conditions(a, FaceCornerSpec())
        assert report.ok


def test_enumeration_is_deterministic():
    sg = fixtures.load_graph("twisted_pentagon")
    first = [tuple(sorted(a.assignments.items())) for a in enumerate_faas(sg)]
    second = [tuple(sorted(a.assignments.items())) for a in enumerate_faas(sg)]
    assert first == second and len(first) == 6


def test_enumeration_budget():
    sg = fixtures.load_graph("twisted_pentagon")
    with pytest.raises(BudgetExceeded):
        list(enumerate_faas(sg, budget=3))


def test_budget_mode_accepts_partial_assignments():
    sg = fixtures.load_graph("prism3")
    partial = list(enumerate_faas(sg, FaceCornerSpec(mode="budget")))
    exact = list(enumerate_faas(sg, FaceCornerSpec()))
    assert len(partial) > len(exact)
    for a in partial:
        assert check_assignment_conditions(a, FaceCornerSpec(mode="budget")).ok


def test_budget_mode_outer_restriction():
    sg = fixtures.load_graph("wheel5")
    g = sg.graph
    triangle = face_index(g, ("0", "4", "5"))
    # rim vertex 4 lies on the outer pentagon; assigning it inward is refused
    a = FlatAngleAssignment(sg, {"4": triangle})
    report = check_assignment_conditions(a, FaceCornerSpec(mode="budget"))
    assert not report.cf_ok
    # but assigning it along the outer face is allowed
    b = FlatAngleAssignment(sg, {"4": g.outer_face})
    assert check_assignment_conditions(b, FaceCornerSpec(mode="budget")).ok


# ---------------------------------------------------------------------------
# pseudosegments
# ---------------------------------------------------------------------------


def test_k4_empty_assignment_gives_singletons():
    sg = fixtures.load_graph("k4")
    family = pseudosegments_of(empty_assignment(sg))
    assert len(family.segments) == 6
    assert all(len(path) == 2 for path in family.segments)


def test_prism_merge_trace():
    sg = fixtures.load_graph("prism3")
    a = next(iter(enumerate_faas(sg)))
    family = pseudosegments_of(a)
    lengths = sorted(len(path) - 1 for path in family.segments)
    assert lengths == [1, 1, 1, 2, 2, 2]
    assert sum(len(p) - 1 for p in family.segments) == len(sg.graph.edges)
    assert contact_family_violations(family) == ()


def test_arc_closing_cycle_detected():
    # assign every vertex of the inner quadrilateral to it: the relation
    # closes the 4-cycle
    sg = fixtures.load_graph("twisted_quad")
    g = sg.graph
    inner = face_index(g, ("4", "5", "6", "7"))
    a = FlatAngleAssignment(sg, {v: inner for v in ("4", "5", "6", "7")})
    with pytest.raises(ArcClosesCycle):
        pseudosegments_of(a)


def test_bad_assignment_family_violates_contact_axioms():
    sg = fixtures.load_graph("twisted_quad")
    bad = [
        a
        for a in enumerate_faas(sg)
        if not check_outline_convexity(a, mode="simple-cycles").ok
    ]
    assert bad
    family = pseudosegments_of(bad[0])
    assert contact_family_violations(family) != ()


def test_family_partitions_edges(graphs):
    for sg in graphs.values():
        for a in enumerate_faas(sg):
            family = pseudosegments_of(a)
            covered = sorted(
                edge_key(u, v) for p in family.segments for u, v in zip(p, p[1:])
            )
            assert covered == sorted(sg.graph.edges)


# ---------------------------------------------------------------------------
# outline cycles and convex corners
# ---------------------------------------------------------------------------


def test_whole_graph_outline_has_exactly_the_suspensions():
    sg = fixtures.load_graph("prism3")
    a = next(iter(enumerate_faas(sg)))
    outline = outline_of(sg.graph, sg.graph.edges)
    corners = convex_corners(outline, a)
    assert corners == frozenset(sg.suspensions)


def test_k4_outer_triangle_outline():
    sg = fixtures.load_graph("k4")
    g = sg.graph
    triangle = [edge_key("1", "2"), edge_key("2", "3"), edge_key("1", "3")]
    outline = outline_of(g, triangle)
    assert outline.interior_vertices == frozenset(["1", "2", "3", "4"])
    assert outline.interior_faces == frozenset(
        f for f in range(len(g.faces)) if f != g.outer_face
    )
    corners = convex_corners(outline, empty_assignment(sg))
    assert corners == frozenset(["1", "2", "3"])


def test_unassigned_vertex_with_all_edges_inside_is_not_a_corner():
    sg = fixtures.load_graph("k4")
    outline = outline_of(sg.graph, sg.graph.edges)
    corners = convex_corners(outline, empty_assignment(sg))
    assert "4" not in corners


def test_twisted_quad_witness_is_the_drawn_bad_cycle():
    sg = fixtures.load_graph("twisted_quad")
    bad = [
        a
        for a in enumerate_faas(sg)
        if not check_outline_convexity(a, mode="full").ok
    ]
    assert len(bad) == 2
    report = check_outline_convexity(bad[0], mode="full")
    witness = report.witness
    assert len(convex_corners(witness, bad[0])) < 3


def test_modes_agree_on_corpus(graphs):
    for name, sg in graphs.items():
        for a in enumerate_faas(sg):
            full = check_outline_convexity(a, mode="full").ok
            simple = check_outline_convexity(a, mode="simple-cycles").ok
            assert full == simple, name


def test_outline_budget():
    sg = fixtures.load_graph("octahedron")
    with pytest.raises(BudgetExceeded):
        check_outline_convexity(empty_assignment(sg), mode="full", budget=10)


# ---------------------------------------------------------------------------
# free and extremal points
# ---------------------------------------------------------------------------


def l_contact_family():
    # s2's endpoint b sits in the interior of s1 = a-b-c
    rot = {"a": ("b",), "b": ("c", "a", "d"), "c": ("b",), "d": ("b",)}
    g = build_plane_graph(rot, ("a", "b"))
    return family_from_paths(g, [("a", "b", "c"), ("b", "d")])


def test_l_contact_free_points():
    family = l_contact_family()
    pts = free_points(family, [0, 1])
    assert pts == frozenset(["a", "c", "d"])  # the contact point b is interior


def test_single_segment_subset_endpoints():
    family = l_contact_family()
    assert extremal_points(family, [1]) == frozenset(["b", "d"])
    pts = free_points(family, [0])
    assert pts == frozenset(["a", "c"])


def test_every_free_point_is_extremal():
    sg = fixtures.load_graph("prism3")
    a = next(iter(enumerate_faas(sg)))
    family = pseudosegments_of(a)
    n = len(family.segments)
    import itertools

    for k in (2, 3):
        for subset in itertools.combinations(range(n), k):
            assert free_points(family, subset) <= extremal_points(family, subset)


def test_extremal_but_not_free():
    # three segments meeting at a center inside a surrounding triangle: the
    # center is on the subset's outline but touches nothing outside it
    rot = {
        "p": ("x1", "x2", "x3"),
        "x1": ("x2", "p", "x3"),
        "x2": ("x3", "p", "x1"),
        "x3": ("x1", "p", "x2"),
    }
    g = build_plane_graph(rot, ("x1", "x3"))
    family = family_from_paths(
        g,
        [("p", "x1"), ("p", "x2"), ("p", "x3"),
         ("x1", "x2"), ("x2", "x3"), ("x3", "x1")],
    )
    star = [0, 1, 2]
    assert "p" in extremal_points(family, star)
    assert "p" not in free_points(family, star)


def test_gfaa_subsets_have_three_free_points():
    sg = fixtures.load_graph("prism3")
    for a in enumerate_faas(sg):
        family = pseudosegments_of(a)
        report = check_point_condition(family, kind="free", connected_only=False)
        assert report.ok


def test_point_condition_witness_is_minimal():
    rot = {
        "m1": ("m2", "f1", "m3"),
        "m2": ("m3", "f2", "m1"),
        "m3": ("m1", "f3", "m2"),
        "f1": ("m1",), "f2": ("m2",), "f3": ("m3",),
    }
    g = build_plane_graph(rot, ("m1", "m3"))
    family = family_from_paths(
        g, [("f1", "m1", "m2"), ("f2", "m2", "m3"), ("f3", "m3", "m1")]
    )
    report = check_point_condition(family, kind="extremal")
    assert not report.ok
    assert report.witness_subset == (0, 1, 2)
    assert extremal_points(family, report.witness_subset) == frozenset()


def test_prism_inner_triangle_corners_are_k3():
    # inner vertices assigned to quadrilaterals outside the inner triangle,
    # with their vertical edges outside as well: all three are corners
    sg = fixtures.load_graph("prism3")
    g = sg.graph
    a = next(iter(enumerate_faas(sg)))
    triangle = [edge_key("4", "5"), edge_key("5", "6"), edge_key("4", "6")]
    outline = outline_of(g, triangle)
    corners = convex_corners(outline, a)
    assert corners == frozenset(["4", "5", "6"])
    for v in corners:
        assert a.assignments[v] not in outline.interior_faces


def test_witnesses_are_deterministic():
    sg = fixtures.load_graph("twisted_quad")
    bad = [
        a
        for a in enumerate_faas(sg)
        if not check_outline_convexity(a, mode="full").ok
    ]
    for a in bad:
        w1 = check_outline_convexity(a, mode="full").witness
        w2 = check_outline_convexity(a, mode="full").witness
        assert w1.walk == w2.walk
        assert w1.subgraph_edges == w2.subgraph_edges


def test_single_segment_touching_outside_has_two_free_points():
    arr = fixtures.load_arrangement("chain")
    family = arr.family
    # segment 2 = d-e-b: both endpoints touch other segments
    idx = family.segments.index(("d", "e", "b"))
    pts = free_points(family, [idx])
    assert pts == frozenset(["d", "b"])


def _geometric_corners(outline, coords, tol=1e-7):
    """Vertices with a strictly convex corner on the enclosure side.

    The enclosure side of the walk is recognized as the one whose corner
    angles sum to the smaller total.
    """
    import math

    walk = outline.walk
    n = len(walk)

    def corner_angles(sign):
        out = []
        for k in range(n):
            a, v = walk[k]
            _, w = walk[(k + 1) % n]
            ru = math.atan2(coords[a][1] - coords[v][1], coords[a][0] - coords[v][0])
            rw = math.atan2(coords[w][1] - coords[v][1], coords[w][0] - coords[v][0])
            out.append((v, (sign * (rw - ru)) % (2 * math.pi)))
        return out

    right = corner_angles(1)
    left = corner_angles(-1)
    angles = right if sum(a for _, a in right) <= sum(a for _, a in left) else left
    return frozenset(v for v, a in angles if a < math.pi - tol)


def test_geometric_corners_are_combinatorial(graphs):
    # every geometrically convex corner of a drawn outline cycle is also a
    # combinatorially convex corner
    from trirep.faa import _simple_cycles
    from trirep.harmonic import assemble, evaluate_assignment, solve

    for name, sg in graphs.items():
        for a in enumerate_faas(sg):
            report = evaluate_assignment(a)
            if report is None or not report.all_pass:
                continue
            drawing = solve(assemble(a))
            g = sg.graph
            for cycle in _simple_cycles(g, 10**6):
                outline = outline_of(g, cycle)
                geo = _geometric_corners(outline, drawing.coords)
                assert geo <= convex_corners(outline, a), (name, cycle)
            outline = outline_of(g, g.edges)
            geo = _geometric_corners(outline, drawing.coords)
            assert geo <= convex_corners(outline, a), name
