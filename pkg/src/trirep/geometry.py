"""Small planar geometry helpers used by the solver checks and renderers."""

from __future__ import annotations

import math

Point = tuple[float, float]


def cross(o: Point, a: Point, b: Point) -> float:
    """Signed area of the parallelogram spanned by o->a and o->b."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def triangle_area(a: Point, b: Point, c: Point) -> float:
    return abs(cross(a, b, c)) / 2.0


def polygon_area(points: list[Point]) -> float:
    """Signed shoelace area (positive for counterclockwise polygons)."""
    total = 0.0
    for (x1, y1), (x2, y2) in zip(points, points[1:] + points[:1]):
        total += x1 * y2 - x2 * y1
    return total / 2.0


def point_segment_distance(p: Point, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    if denom == 0.0:
        return dist(p, a)
    t = ((px - ax) * dx + (py - ay) * dy) / denom
    t = min(1.0, max(0.0, t))
    return dist(p, (ax + t * dx, ay + t * dy))


def point_line_distance(p: Point, a: Point, b: Point) -> float:
    d = dist(a, b)
    if d == 0.0:
        return dist(p, a)
    return abs(cross(a, b, p)) / d


def angle_at(center: Point, a: Point, b: Point) -> float:
    """Smaller angle (in [0, pi]) between rays center->a and center->b."""
    ax, ay = a[0] - center[0], a[1] - center[1]
    bx, by = b[0] - center[0], b[1] - center[1]
    na = math.hypot(ax, ay)
    nb = math.hypot(bx, by)
    if na == 0.0 or nb == 0.0:
        return 0.0
    c = (ax * bx + ay * by) / (na * nb)
    c = min(1.0, max(-1.0, c))
    return math.acos(c)


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point, eps: float) -> bool:
    """True when the closed segments p1p2 and q1q2 share a point.

    Orientation signs are compared against eps so that clearances below eps
    count as contact.
    """
    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    ):
        return True
    scale = max(dist(p1, p2), dist(q1, q2), 1e-300)
    lin_eps = eps / scale if scale else eps
    if abs(d1) <= eps and point_segment_distance(p1, q1, q2) <= lin_eps:
        return True
    if abs(d2) <= eps and point_segment_distance(p2, q1, q2) <= lin_eps:
        return True
    if abs(d3) <= eps and point_segment_distance(q1, p1, p2) <= lin_eps:
        return True
    if abs(d4) <= eps and point_segment_distance(q2, p1, p2) <= lin_eps:
        return True
    return False
