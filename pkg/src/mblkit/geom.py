"""Millimetre-precision 2D rectilinear geometry.

Everything here is axis-aligned. Rectangles and polygons are closed sets and
all coincidence tests share the tolerance ``TOL`` (mm). Regions made of
several rectangles are plain tuples of interior-disjoint :class:`Rect`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

TOL = 0.5


class GeometryError(ValueError):
    pass


class NotRectilinear(GeometryError):
    pass


class Disconnected(GeometryError):
    pass


class HasHole(GeometryError):
    pass


class ContractViolation(GeometryError):
    pass


class Point(NamedTuple):
    x: float
    y: float


def _clean(v: float) -> float:
    # kills float fuzz such as 2064.0000000000002 and negative zero
    return round(v, 6) + 0.0


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle given by its bottom-left corner and extents."""

    x: float
    y: float
    length: float  # X extent
    width: float  # Y extent

    def __post_init__(self):
        for v in (self.x, self.y, self.length, self.width):
            if not math.isfinite(v):
                raise GeometryError(f"non-finite rect value {v!r}")
        if self.length <= 0 or self.width <= 0:
            raise GeometryError(f"degenerate rect {self.length} x {self.width}")

    @classmethod
    def from_bounds(cls, x0: float, y0: float, x1: float, y1: float) -> "Rect":
        return cls(_clean(x0), _clean(y0), _clean(x1 - x0), _clean(y1 - y0))

    @property
    def min(self) -> Point:
        return Point(self.x, self.y)

    @property
    def x1(self) -> float:
        return _clean(self.x + self.length)

    @property
    def y1(self) -> float:
        return _clean(self.y + self.width)

    @property
    def area(self) -> float:
        return self.length * self.width

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.x1, self.y1)

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """Clockwise from the bottom-left corner."""
        return (Point(self.x, self.y), Point(self.x, self.y1),
                Point(self.x1, self.y1), Point(self.x1, self.y))

    def translate(self, dx: float, dy: float) -> "Rect":
        return Rect(_clean(self.x + dx), _clean(self.y + dy), self.length, self.width)

    def inset(self, d: float) -> "Rect":
        return Rect.from_bounds(self.x + d, self.y + d, self.x1 - d, self.y1 - d)

    def contains_rect(self, other: "Rect", tol: float = TOL) -> bool:
        return (other.x >= self.x - tol and other.y >= self.y - tol
                and other.x1 <= self.x1 + tol and other.y1 <= self.y1 + tol)


@dataclass(frozen=True)
class Contour:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 4:
            raise NotRectilinear(f"contour needs at least 4 vertices, got {len(vs)}")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if a == b:
                raise NotRectilinear(f"repeated consecutive vertex {a}")
            if a.x != b.x and a.y != b.y:
                raise NotRectilinear(f"edge {a}->{b} is not axis-aligned")

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return list(zip(vs, vs[1:] + vs[:1]))

    @property
    def area(self) -> float:
        return abs(signed_area(self.vertices))


def signed_area(vs: Sequence[Point]) -> float:
    """Shoelace area; negative for clockwise order (y axis up)."""
    s = 0.0
    n = len(vs)
    for i in range(n):
        x0, y0 = vs[i]
        x1, y1 = vs[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2.0


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)


def midpoint_rect(r: Rect) -> Point:
    return Point(_clean(r.x + r.length / 2.0), _clean(r.y + r.width / 2.0))


def point_in_rect(p: Point, r: Rect, tol: float = TOL) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return (r.x - tol <= p.x <= r.x1 + tol) and (r.y - tol <= p.y <= r.y1 + tol)


def snap_values(values: Iterable[float], tol: float = TOL) -> dict[float, float]:
    """Map each value to the smallest value of its tolerance cluster."""
    out: dict[float, float] = {}
    rep = None
    prev = None
    for v in sorted(set(values)):
        if prev is None or v - prev > tol:
            rep = v
        out[v] = rep
        prev = v
    return out


def snap_points(points: Iterable[Point], tol: float = TOL) -> list[Point]:
    pts = list(points)
    sx = snap_values((p.x for p in pts), tol)
    sy = snap_values((p.y for p in pts), tol)
    return [Point(sx[p.x], sy[p.y]) for p in pts]


def _start_normalized(vs: list[Point]) -> tuple[Point, ...]:
    if signed_area(vs) > 0:
        vs = vs[::-1]
    k = vs.index(min(vs))
    return tuple(vs[k:] + vs[:k])


def clockwise_order(points: Iterable[Point], tol: float = 0.0) -> Contour:
    """Order the vertex set of a rectilinear simple polygon clockwise.

    Each column (equal x) and row (equal y) of a collinear-free rectilinear
    polygon holds an even number of vertices, paired off in sorted order by
    the polygon's vertical and horizontal edges.
    """
    pts = list(dict.fromkeys(points))
    if tol > 0:
        pts = list(dict.fromkeys(snap_points(pts, tol)))
    if len(pts) < 4:
        raise NotRectilinear(f"{len(pts)} points cannot form a rectilinear polygon")
    cols: dict[float, list[Point]] = {}
    rows: dict[float, list[Point]] = {}
    for p in pts:
        cols.setdefault(p.x, []).append(p)
        rows.setdefault(p.y, []).append(p)
    vnext: dict[Point, Point] = {}
    hnext: dict[Point, Point] = {}
    for group, link, key in ((cols, vnext, lambda p: p.y), (rows, hnext, lambda p: p.x)):
        for members in group.values():
            if len(members) % 2:
                raise NotRectilinear("odd vertex count on an axis line")
            members.sort(key=key)
            for a, b in zip(members[::2], members[1::2]):
                link[a] = b
                link[b] = a
    start = min(pts)
    order = [start]
    cur, vertical = start, True
    while True:
        cur = (vnext if vertical else hnext)[cur]
        vertical = not vertical
        if cur == start:
            break
        order.append(cur)
        if len(order) > len(pts):
            raise NotRectilinear("edge walk does not close")
    if len(order) != len(pts):
        raise NotRectilinear("points form more than one cycle")
    if not _is_simple(order):
        raise NotRectilinear("edges self-intersect")
    return Contour(_start_normalized(order))


def _is_simple(vs: list[Point]) -> bool:
    edges = list(zip(vs, vs[1:] + vs[:1]))
    hs = [(min(a.x, b.x), max(a.x, b.x), a.y) for a, b in edges if a.y == b.y]
    ver = [(min(a.y, b.y), max(a.y, b.y), a.x) for a, b in edges if a.x == b.x]
    for x0, x1, y in hs:
        for y0, y1, x in ver:
            if x0 < x < x1 and y0 < y < y1:
                return False
    return True


def normalize_contour(c: Contour) -> Contour:
    return Contour(_start_normalized(list(c.vertices)))


def remove_collinear(c: Contour) -> Contour:
    vs = list(c.vertices)
    changed = True
    while changed and len(vs) > 4:
        changed = False
        for i in range(len(vs)):
            a, b, d = vs[i - 1], vs[i], vs[(i + 1) % len(vs)]
            if (a.x == b.x == d.x) or (a.y == b.y == d.y):
                del vs[i]
                changed = True
                break
    return Contour(tuple(vs))


def is_concave(c: Contour, vertex_index: int) -> bool:
    """Interior angle > 180 degrees at a vertex of a clockwise contour."""
    vs = c.vertices
    n = len(vs)
    a, b, d = vs[vertex_index - 1], vs[vertex_index % n], vs[(vertex_index + 1) % n]
    cross = (b.x - a.x) * (d.y - b.y) - (b.y - a.y) * (d.x - b.x)
    if cross == 0:
        raise ContractViolation(f"vertex {vertex_index} is collinear with its neighbours")
    if signed_area(vs) > 0:
        cross = -cross
    # clockwise walk: convex corners turn right (negative cross product)
    return cross > 0


def min_bounding_rect(region) -> Rect:
    """Smallest axis-aligned rect around a Contour, a point list or a rect sequence."""
    if isinstance(region, Contour):
        pts = region.vertices
    elif isinstance(region, Rect):
        return region
    else:
        items = list(region)
        if items and isinstance(items[0], Rect):
            pts = [p for r in items for p in (r.min, Point(r.x1, r.y1))]
        else:
            pts = items
    if not pts:
        raise GeometryError("empty region")
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return Rect.from_bounds(min(xs), min(ys), max(xs), max(ys))


def rect_intersection(a: Rect, b: Rect) -> Rect | None:
    x0, y0 = max(a.x, b.x), max(a.y, b.y)
    x1, y1 = min(a.x1, b.x1), min(a.y1, b.y1)
    if x1 <= x0 or y1 <= y0:
        return None
    return Rect.from_bounds(x0, y0, x1, y1)


def intersection_area(a: Rect, b: Rect) -> float:
    # unrounded far edges keep the ratio exact to float precision
    w = min(a.x + a.length, b.x + b.length) - max(a.x, b.x)
    h = min(a.y + a.width, b.y + b.width) - max(a.y, b.y)
    return w * h if w > 0 and h > 0 else 0.0


def rect_iou(a: Rect, b: Rect) -> float:
    inter = intersection_area(a, b)
    union = a.area + b.area - inter
    return inter / union if union > 0 else 0.0


def contact_length(a: Rect, b: Rect, tol: float = TOL) -> float:
    """Length of shared boundary between two interior-disjoint rects."""
    if abs(a.x1 - b.x) <= tol or abs(b.x1 - a.x) <= tol:
        ov = min(a.y1, b.y1) - max(a.y, b.y)
        if ov > 0:
            return ov
    if abs(a.y1 - b.y) <= tol or abs(b.y1 - a.y) <= tol:
        ov = min(a.x1, b.x1) - max(a.x, b.x)
        if ov > 0:
            return ov
    return 0.0


def shared_segments(a: Rect, b: Rect, tol: float = TOL):
    """Shared boundary segments as ``(axis, coord, lo, hi)``.

    ``axis`` is ``"v"`` for a vertical segment at x=coord, ``"h"`` for a
    horizontal one at y=coord.
    """
    out = []
    for xa, xb in ((a.x1, b.x), (b.x1, a.x)):
        if abs(xa - xb) <= tol:
            lo, hi = max(a.y, b.y), min(a.y1, b.y1)
            if hi - lo > tol:
                out.append(("v", xa, lo, hi))
    for ya, yb in ((a.y1, b.y), (b.y1, a.y)):
        if abs(ya - yb) <= tol:
            lo, hi = max(a.x, b.x), min(a.x1, b.x1)
            if hi - lo > tol:
                out.append(("h", ya, lo, hi))
    return out


# -- regions: tuples of interior-disjoint rects ------------------------------

def _grid(rects: Sequence[Rect], tol: float):
    xs = snap_values([v for r in rects for v in (r.x, r.x1)], tol)
    ys = snap_values([v for r in rects for v in (r.y, r.y1)], tol)
    gx = sorted(set(xs.values()))
    gy = sorted(set(ys.values()))
    return xs, ys, gx, gy


def _cells(rects, xs, ys, gx, gy):
    ix = {v: i for i, v in enumerate(gx)}
    iy = {v: i for i, v in enumerate(gy)}
    cells = set()
    for r in rects:
        for i in range(ix[xs[r.x]], ix[xs[r.x1]]):
            for j in range(iy[ys[r.y]], iy[ys[r.y1]]):
                cells.add((i, j))
    return cells


def _cells_to_rects(cells, gx, gy) -> tuple[Rect, ...]:
    # horizontal runs per row, then stack identical runs vertically
    runs: dict[tuple[int, int], list[int]] = {}
    for j in range(len(gy) - 1):
        i = 0
        while i < len(gx) - 1:
            if (i, j) in cells:
                k = i
                while (k + 1, j) in cells:
                    k += 1
                runs.setdefault((i, k), []).append(j)
                i = k + 1
            else:
                i += 1
    out = []
    for (i, k), js in runs.items():
        start = prev = js[0]
        for j in js[1:] + [None]:
            if j is not None and j == prev + 1:
                prev = j
                continue
            out.append(Rect.from_bounds(gx[i], gy[start], gx[k + 1], gy[prev + 1]))
            if j is not None:
                start = prev = j
    out.sort(key=lambda r: (r.y, r.x))
    return tuple(out)


def region_union(rects: Sequence[Rect], tol: float = TOL) -> tuple[Rect, ...]:
    rects = list(rects)
    if not rects:
        return ()
    xs, ys, gx, gy = _grid(rects, tol)
    return _cells_to_rects(_cells(rects, xs, ys, gx, gy), gx, gy)


def region_difference(a: Sequence[Rect], b: Sequence[Rect], tol: float = TOL) -> tuple[Rect, ...]:
    a, b = list(a), list(b)
    if not a:
        return ()
    xs, ys, gx, gy = _grid(a + b, tol)
    keep = _cells(a, xs, ys, gx, gy) - _cells(b, xs, ys, gx, gy)
    return _cells_to_rects(keep, gx, gy)


def region_intersection(a: Sequence[Rect], b: Sequence[Rect], tol: float = TOL) -> tuple[Rect, ...]:
    a, b = list(a), list(b)
    if not a or not b:
        return ()
    xs, ys, gx, gy = _grid(a + b, tol)
    keep = _cells(a, xs, ys, gx, gy) & _cells(b, xs, ys, gx, gy)
    return _cells_to_rects(keep, gx, gy)


def region_area(rects: Iterable[Rect]) -> float:
    return sum(r.area for r in rects)


def regions_overlap_area(a: Sequence[Rect], b: Sequence[Rect]) -> float:
    return sum(intersection_area(p, q) for p in a for q in b)


def region_contact_length(a: Sequence[Rect], b: Sequence[Rect], tol: float = TOL) -> float:
    return sum(contact_length(p, q, tol) for p in a for q in b)


def is_edge_connected(rects: Sequence[Rect], tol: float = TOL) -> bool:
    rects = list(rects)
    if len(rects) <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(len(rects)):
            if j not in seen and (contact_length(rects[i], rects[j], tol) > tol
                                  or intersection_area(rects[i], rects[j]) > 0):
                seen.add(j)
                stack.append(j)
    return len(seen) == len(rects)


def rectilinear_union_outline(rects: Sequence[Rect], tol: float = TOL) -> Contour:
    """Outer boundary of a simply connected union of interior-disjoint rects."""
    rects = list(rects)
    if not rects:
        raise GeometryError("no rectangles")
    if not is_edge_connected(rects, tol):
        raise Disconnected("union of rectangles is not edge-connected")
    xs, ys, gx, gy = _grid(rects, tol)
    cells = _cells(rects, xs, ys, gx, gy)
    # directed unit edges with the interior on the right (clockwise, y up)
    nxt: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def add(a, b):
        nxt.setdefault(a, []).append(b)

    for (i, j) in cells:
        if (i - 1, j) not in cells:
            add((i, j), (i, j + 1))
        if (i, j + 1) not in cells:
            add((i, j + 1), (i + 1, j + 1))
        if (i + 1, j) not in cells:
            add((i + 1, j + 1), (i + 1, j))
        if (i, j - 1) not in cells:
            add((i + 1, j), (i, j))
    total = sum(len(v) for v in nxt.values())
    start = min(nxt)
    loop = [start]
    prev, cur = None, start
    used = 0
    while True:
        outs = nxt[cur]
        if len(outs) == 1:
            nb = outs.pop()
        else:
            # pinch vertex: take the sharpest right turn relative to incoming
            din = (cur[0] - prev[0], cur[1] - prev[1]) if prev else (0, 1)
            right = (din[1], -din[0])
            nb = next((o for o in outs if (o[0] - cur[0], o[1] - cur[1]) == right), outs[0])
            outs.remove(nb)
        used += 1
        prev, cur = cur, nb
        if cur == start:
            break
        loop.append(cur)
    if used != total:
        raise HasHole("union boundary has more than one loop")
    pts = [Point(gx[i], gy[j]) for i, j in loop]
    return remove_collinear(normalize_contour(Contour(tuple(pts))))


def contour_to_rects(c: Contour) -> tuple[Rect, ...]:
    """Decompose a rectilinear contour into interior-disjoint rects."""
    gx = sorted({p.x for p in c.vertices})
    gy = sorted({p.y for p in c.vertices})
    cells = set()
    for i in range(len(gx) - 1):
        for j in range(len(gy) - 1):
            cx = (gx[i] + gx[i + 1]) / 2
            cy = (gy[j] + gy[j + 1]) / 2
            if _point_in_polygon(cx, cy, c.vertices):
                cells.add((i, j))
    return _cells_to_rects(cells, gx, gy)


def _point_in_polygon(x: float, y: float, vs: Sequence[Point]) -> bool:
    inside = False
    n = len(vs)
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        if (a.y > y) != (b.y > y):
            xc = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x < xc:
                inside = not inside
    return inside


def point_in_region(p: Point, rects: Iterable[Rect], tol: float = TOL) -> bool:
    return any(point_in_rect(p, r, tol) for r in rects)


def rect_contour(r: Rect) -> Contour:
    return Contour(r.corners())


def region_boundary_segments(rects: Sequence[Rect], tol: float = TOL):
    """Boundary of a region as maximal ``(axis, coord, lo, hi)`` segments."""
    rects = list(rects)
    if not rects:
        return []
    xs, ys, gx, gy = _grid(rects, tol)
    cells = _cells(rects, xs, ys, gx, gy)
    units = []
    for (i, j) in cells:
        if (i - 1, j) not in cells:
            units.append(("v", gx[i], gy[j], gy[j + 1]))
        if (i + 1, j) not in cells:
            units.append(("v", gx[i + 1], gy[j], gy[j + 1]))
        if (i, j - 1) not in cells:
            units.append(("h", gy[j], gx[i], gx[i + 1]))
        if (i, j + 1) not in cells:
            units.append(("h", gy[j + 1], gx[i], gx[i + 1]))
    return merge_segments(units)


def merge_segments(segs):
    by_line: dict[tuple[str, float], list[tuple[float, float]]] = {}
    for axis, c, lo, hi in segs:
        by_line.setdefault((axis, c), []).append((lo, hi))
    out = []
    for (axis, c), ivs in sorted(by_line.items()):
        for lo, hi in merge_intervals(ivs):
            out.append((axis, c, lo, hi))
    return out


def merge_intervals(ivs, tol: float = 0.0):
    ivs = sorted(ivs)
    out: list[list[float]] = []
    for lo, hi in ivs:
        if out and lo <= out[-1][1] + tol:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return [(lo, hi) for lo, hi in out]


def subtract_intervals(base, cuts, tol: float = 0.0):
    """``base`` minus the union of ``cuts``; intervals as (lo, hi) pairs."""
    out = []
    for lo, hi in base:
        pieces = [(lo, hi)]
        for clo, chi in cuts:
            nxt = []
            for a, b in pieces:
                if chi <= a + tol or clo >= b - tol:
                    nxt.append((a, b))
                    continue
                if clo > a:
                    nxt.append((a, clo))
                if chi < b:
                    nxt.append((chi, b))
            pieces = nxt
        out.extend(p for p in pieces if p[1] - p[0] > tol)
    return out
