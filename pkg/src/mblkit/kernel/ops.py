"""Geometric semantics of every design action.

Each function mutates a :class:`LayoutDocument` and either returns the new
entity or raises :class:`ExecError`. A failed call may leave partial edits
behind; callers that need atomicity take a snapshot first.
"""
from __future__ import annotations

from dataclasses import replace

from .. import geom
from ..geom import Point, Rect
from .document import (OPPOSITE, SIDES, Door, ExecError, Floor, Hole, LayoutDocument, ModuleEntity,
                       RoomEntity, UnitEntity, room_label, side_segment)


def _interiors_overlap(a, b, tol: float) -> bool:
    for p in a:
        for q in b:
            if min(p.x1, q.x1) - max(p.x, q.x) > tol and min(p.y1, q.y1) - max(p.y, q.y) > tol:
                return True
    return False


def _rect(x, y, length, width, what: str) -> Rect:
    if length <= 0 or width <= 0:
        raise ExecError("degenerate-dimension", f"{what} has non-positive extent {length:g} x {width:g}")
    return Rect(geom._clean(x), geom._clean(y), geom._clean(length), geom._clean(width))


def place_relative(ref: Rect, direction: str, length: float, width: float, alignment: str,
                   offset_direction: str, offset: float) -> tuple[float, float]:
    """Bottom-left corner of a length x width box placed flush against ``ref``."""
    if direction == "north":
        y = ref.y1
    elif direction == "south":
        y = ref.y - width
    elif direction == "east":
        x = ref.x1
    else:
        x = ref.x - length
    if direction in ("north", "south"):
        if alignment == "east":
            x = ref.x1 - length
        elif alignment == "west":
            x = ref.x
        else:
            x = ref.x + (ref.length - length) / 2
    else:
        if alignment == "north":
            y = ref.y1 - width
        elif alignment == "south":
            y = ref.y
        else:
            y = ref.y + (ref.width - width) / 2
    dx, dy = _shift(offset_direction, offset)
    return x + dx, y + dy


def _shift(direction: str, amount: float) -> tuple[float, float]:
    return {"north": (0, amount), "south": (0, -amount), "east": (amount, 0),
            "west": (-amount, 0)}.get(direction, (0.0, 0.0))


def _log(doc: LayoutDocument, op: str, created=(), retired=()):
    doc.log.append({"op": op, "created": list(created), "retired": list(retired)})


# -- modules -----------------------------------------------------------------

def _add_module(doc: LayoutDocument, name: str, region: tuple[Rect, ...], mid: str | None = None) -> ModuleEntity:
    tol = doc.config.tol
    for other in doc.modules.values():
        if other.id != mid and _interiors_overlap(region, other.region, tol):
            raise ExecError("overlap", f"module {name!r} overlaps module {other.name!r}")
    m = ModuleEntity(mid or doc.new_id("m"), name, region, doc.config.level)
    doc.modules[m.id] = m
    doc.ensure_region_walls(region)
    f = Floor(doc.new_id("f"), m.id, region)
    doc.floors[f.id] = f
    return m


def _drop_floor(doc: LayoutDocument, module_id: str):
    for fid in [f.id for f in doc.floors.values() if f.module_id == module_id]:
        del doc.floors[fid]


def create_module_absolute(doc, name: str, anchor: Point, length: float, width: float) -> ModuleEntity:
    r = _rect(anchor[0], anchor[1], length, width, f"module {name!r}")
    m = _add_module(doc, name, (r,))
    _log(doc, "module-absolute", [m.id])
    return m


def create_module_relative(doc, name: str, ref: ModuleEntity, direction: str, length: float, width: float,
                           alignment: str = "none", offset_direction: str = "none",
                           offset: float = 0.0) -> ModuleEntity:
    x, y = place_relative(ref.rect, direction, length, width, alignment, offset_direction, offset)
    m = _add_module(doc, name, (_rect(x, y, length, width, f"module {name!r}"),))
    _log(doc, "module-relative", [m.id])
    return m


def _rebind(doc: LayoutDocument, old_ids: set[str], new_ids: list[str]):
    """Point units and rooms that referenced ``old_ids`` at the new modules they touch."""
    tol = doc.config.tol
    for u in list(doc.units.values()):
        if old_ids & set(u.module_ids):
            ids = []
            for mid in u.module_ids:
                if mid in old_ids:
                    ids += [n for n in new_ids if _interiors_overlap(doc.modules[n].region, u.region, tol)]
                else:
                    ids.append(mid)
            doc.units[u.id] = replace(u, module_ids=tuple(dict.fromkeys(ids)))
    for r in list(doc.rooms.values()):
        if old_ids & set(r.host_module_ids):
            ids = []
            for mid in r.host_module_ids:
                if mid in old_ids:
                    ids += [n for n in new_ids if _interiors_overlap(doc.modules[n].region, r.region, tol)]
                else:
                    ids.append(mid)
            doc.rooms[r.id] = replace(r, host_module_ids=tuple(dict.fromkeys(ids)))


def split_module(doc, m: ModuleEntity, direction: str, ratio: float) -> tuple[ModuleEntity, ModuleEntity]:
    if not 0 < ratio < 1:
        raise ExecError("bad-ratio", f"split ratio {ratio:g} is outside (0, 1)")
    cfg = doc.config
    b = m.rect
    if direction == "west-east":
        cut = geom._clean(b.y1 - ratio * b.width)
        halves = (Rect.from_bounds(b.x, cut, b.x1, b.y1), Rect.from_bounds(b.x, b.y, b.x1, cut))
        sizes = (b.y1 - cut, cut - b.y)
        labels = ("North", "South")
        axis = "h"
    elif direction == "north-south":
        cut = geom._clean(b.x + ratio * b.length)
        halves = (Rect.from_bounds(b.x, b.y, cut, b.y1), Rect.from_bounds(cut, b.y, b.x1, b.y1))
        sizes = (cut - b.x, b.x1 - cut)
        labels = ("West", "East")
        axis = "v"
    else:
        raise ExecError("degenerate-dimension", f"unknown split direction {direction!r}")
    if min(sizes) < cfg.min_wall:
        raise ExecError("degenerate-dimension", f"split of {m.name!r} leaves a piece of {min(sizes):g} mm")
    regions = [geom.region_intersection(m.region, (h,), cfg.tol) for h in halves]
    if not all(regions):
        raise ExecError("degenerate-dimension", f"split of {m.name!r} leaves an empty piece")
    del doc.modules[m.id]
    _drop_floor(doc, m.id)
    pieces = []
    for reg, label in zip(regions, labels):
        pieces.append(_add_module(doc, f"{m.name} {label}", reg))
    for r in m.region:
        if axis == "h" and r.y < cut < r.y1:
            doc.add_wall_segment("h", cut, r.x, r.x1)
        elif axis == "v" and r.x < cut < r.x1:
            doc.add_wall_segment("v", cut, r.y, r.y1)
    _rebind(doc, {m.id}, [p.id for p in pieces])
    _log(doc, "split", [p.id for p in pieces], [m.id])
    return pieces[0], pieces[1]


def merge_modules(doc, ms: list[ModuleEntity]) -> ModuleEntity:
    if len(ms) < 2:
        raise ExecError("merge-not-adjacent", "merging needs at least two modules")
    tol = doc.config.tol
    rects = [r for m in ms for r in m.region]
    if not geom.is_edge_connected(rects, tol):
        raise ExecError("merge-not-adjacent", "modules do not share an edge")
    try:
        geom.rectilinear_union_outline(rects, tol)
    except geom.HasHole:
        raise ExecError("has-hole", "merged outline would enclose a hole") from None
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            for p in a.region:
                for q in b.region:
                    for axis, c, lo, hi in geom.shared_segments(p, q, tol):
                        doc.remove_wall_segment(axis, c, lo, hi)
    region = geom.region_union(rects, tol)
    first = ms[0]
    for m in ms:
        del doc.modules[m.id]
        _drop_floor(doc, m.id)
    merged = _add_module(doc, first.name, region, mid=first.id)
    _rebind(doc, {m.id for m in ms[1:]}, [merged.id])
    _log(doc, "merge", [merged.id], [m.id for m in ms[1:]])
    return merged


# -- units -------------------------------------------------------------------

def _check_unit_region(name: str, region, tol: float):
    try:
        geom.rectilinear_union_outline(region, tol)
    except geom.Disconnected:
        raise ExecError("disconnected", f"unit {name!r} is not connected") from None
    except geom.HasHole:
        raise ExecError("has-hole", f"unit {name!r} encloses a hole") from None


def create_unit_from_modules(doc, name: str, ms: list[ModuleEntity]) -> UnitEntity:
    tol = doc.config.tol
    region = geom.region_union([r for m in ms for r in m.region], tol)
    _check_unit_region(name, region, tol)
    u = UnitEntity(doc.new_id("u"), name, tuple(m.id for m in ms), region, doc.config.level)
    doc.units[u.id] = u
    _log(doc, "unit-from-modules", [u.id])
    return u


def _slab(b: Rect, direction: str, depth: float) -> Rect:
    if direction == "north":
        return Rect.from_bounds(b.x, b.y1 - depth, b.x1, b.y1)
    if direction == "south":
        return Rect.from_bounds(b.x, b.y, b.x1, b.y + depth)
    if direction == "east":
        return Rect.from_bounds(b.x1 - depth, b.y, b.x1, b.y1)
    return Rect.from_bounds(b.x, b.y, b.x + depth, b.y1)


def _extent(b: Rect, direction: str) -> float:
    return b.width if direction in ("north", "south") else b.length


def create_unit_directional(doc, name: str, ms: list[ModuleEntity], direction: str,
                            dims: list[float]) -> UnitEntity:
    tol = doc.config.tol
    if len(ms) != len(dims):
        raise ExecError("degenerate-dimension", f"{len(ms)} modules but {len(dims)} dimensions")
    rects = []
    for m, d in zip(ms, dims):
        b = m.rect
        if d > _extent(b, direction) + tol:
            raise ExecError("host-too-small", f"depth {d:g} exceeds module {m.name!r} ({_extent(b, direction):g})")
        d = min(d, _extent(b, direction))
        rects += geom.region_intersection(m.region, (_slab(b, direction, d),), tol)
    region = geom.region_union(rects, tol)
    _check_unit_region(name, region, tol)
    u = UnitEntity(doc.new_id("u"), name, tuple(m.id for m in ms), region, doc.config.level)
    doc.units[u.id] = u
    doc.ensure_region_walls(region)
    _log(doc, "unit-directional", [u.id])
    return u


# -- rooms -------------------------------------------------------------------

def _inset(nominal: Rect, doc: LayoutDocument, name: str) -> Rect:
    half = doc.config.wall_thickness / 2
    if nominal.length <= 2 * half or nominal.width <= 2 * half:
        raise ExecError("degenerate-dimension", f"room {name!r} is thinner than its walls")
    return nominal.inset(half)


def _add_room(doc: LayoutDocument, name: str, unit: UnitEntity, region: tuple[Rect, ...], inner: Rect,
              center: Point | None = None, open_sides=(), regular=True, walls=True) -> RoomEntity:
    cfg = doc.config
    tol = cfg.tol
    outside = geom.region_difference(region, unit.region, tol)
    nominal = geom.min_bounding_rect(region)
    if geom.region_area(outside) > tol * 2 * (nominal.length + nominal.width):
        raise ExecError("containment-violation", f"room {name!r} extends outside unit {unit.name!r}")
    for other in doc.rooms.values():
        if _interiors_overlap(region, other.region, tol):
            raise ExecError("overlap", f"room {name!r} overlaps room {other.name!r}")
    hosts = tuple(m.id for m in doc.modules.values() if _interiors_overlap(region, m.region, tol))
    room = RoomEntity(doc.new_id("r"), name, room_label(name), inner, center or geom.midpoint_rect(inner),
                      unit.id, hosts, tuple(region), tuple(s for s in SIDES if s in open_sides), regular,
                      cfg.level)
    doc.rooms[room.id] = room
    if walls:
        doc.ensure_rect_walls(nominal, skip_sides=open_sides)
    return room


def _host_region(host, unit: UnitEntity, name: str):
    if host is None:
        return unit.region
    if isinstance(host, ModuleEntity) and host.id not in unit.module_ids:
        raise ExecError("containment-violation", f"module {host.name!r} is not part of unit {unit.name!r}")
    return host.region


def create_room_in_container(doc, name: str, host, unit: UnitEntity, regular: bool = True) -> RoomEntity:
    tol = doc.config.tol
    region = _host_region(host, unit, name)
    if regular:
        box = geom.min_bounding_rect(region)
        if abs(geom.region_area(region) - box.area) > tol * 2 * (box.length + box.width):
            raise ExecError("containment-violation", f"container of {name!r} is not rectangular")
        room = _add_room(doc, name, unit, (box,), _inset(box, doc, name), walls=False)
        _log(doc, "room-container", [room.id])
        return room
    taken = [r for other in doc.rooms.values() for r in other.region]
    residual = geom.region_intersection(geom.region_difference(region, taken, tol), unit.region, tol)
    residual = tuple(r for r in residual if r.length > tol and r.width > tol)
    if geom.region_area(residual) <= tol * tol:
        raise ExecError("no-residual-space", f"no free space left for {name!r}")
    box = geom.min_bounding_rect(residual)
    inner = _inset(box, doc, name)
    center = geom.midpoint_rect(inner)
    if not geom.point_in_region(center, residual, 0.0) or any(
            geom.point_in_rect(center, o.rect, 0.0) for o in doc.rooms.values()):
        biggest = max(residual, key=lambda r: (r.area, -r.y, -r.x))
        center = geom.midpoint_rect(biggest)
    room = _add_room(doc, name, unit, residual, inner, center, regular=False, walls=False)
    _log(doc, "room-container", [room.id])
    return room


def create_room_directional(doc, name: str, host, unit: UnitEntity, direction: str, dimension: float,
                            open: bool = False) -> RoomEntity:
    b = geom.min_bounding_rect(_host_region(host, unit, name))
    tol = doc.config.tol
    if dimension > _extent(b, direction) + tol:
        raise ExecError("host-too-small", f"depth {dimension:g} exceeds host extent {_extent(b, direction):g}")
    nominal = _slab(b, direction, min(dimension, _extent(b, direction)))
    open_sides = (OPPOSITE[direction],) if open else ()
    room = _add_room(doc, name, unit, (nominal,), _inset(nominal, doc, name), open_sides=open_sides)
    _log(doc, "room-directional", [room.id])
    return room


def create_room_corner(doc, name: str, host, unit: UnitEntity, corner: str, length: float, width: float,
                       offset_direction: str = "none", offset: float = 0.0, open: bool = False) -> RoomEntity:
    tol = doc.config.tol
    b = geom.min_bounding_rect(_host_region(host, unit, name))
    x = b.x if "west" in corner else b.x1 - length
    y = b.y if corner.startswith("south") else b.y1 - width
    dx, dy = _shift(offset_direction, offset)
    nominal = _rect(x + dx, y + dy, length, width, f"room {name!r}")
    if not b.contains_rect(nominal, tol):
        raise ExecError("containment-violation", f"room {name!r} does not fit in its host")
    open_sides = ()
    if open:
        flush = {"north": abs(nominal.y1 - b.y1) <= tol, "south": abs(nominal.y - b.y) <= tol,
                 "east": abs(nominal.x1 - b.x1) <= tol, "west": abs(nominal.x - b.x) <= tol}
        open_sides = tuple(s for s in SIDES if not flush[s])
    room = _add_room(doc, name, unit, (nominal,), _inset(nominal, doc, name), open_sides=open_sides)
    _log(doc, "room-corner", [room.id])
    return room


def create_room_relative(doc, name: str, unit: UnitEntity, ref: RoomEntity, direction: str, length: float,
                         width: float, alignment: str = "none", offset_direction: str = "none",
                         offset: float = 0.0, open: bool = False) -> RoomEntity:
    x, y = place_relative(ref.nominal, direction, length, width, alignment, offset_direction, offset)
    nominal = _rect(x, y, length, width, f"room {name!r}")
    open_sides = (OPPOSITE[direction],) if open else ()
    room = _add_room(doc, name, unit, (nominal,), _inset(nominal, doc, name), open_sides=open_sides)
    _log(doc, "room-relative", [room.id])
    return room


def create_room_at_point(doc, name: str, unit: UnitEntity, center: Point, length: float,
                         width: float) -> RoomEntity:
    inner = _rect(center[0] - length / 2, center[1] - width / 2, length, width, f"room {name!r}")
    nominal = inner.inset(-doc.config.wall_thickness / 2)
    room = _add_room(doc, name, unit, (nominal,), inner, Point(center[0], center[1]))
    _log(doc, "room-at-point", [room.id])
    return room


# -- openings ----------------------------------------------------------------

def _host_box(doc, host) -> tuple[Rect, tuple[str, ...]]:
    if isinstance(host, RoomEntity):
        return host.nominal, host.open_sides
    return host.rect, ()


def _place_opening(doc: LayoutDocument, host, direction: str, alignment: str, offset: float,
                   dimension: float, what: str):
    cfg = doc.config
    tol = cfg.tol
    box, open_sides = _host_box(doc, host)
    if direction in open_sides:
        raise ExecError("wall-not-found", f"{host.name!r} has no wall on its open {direction} side")
    axis, coord, lo, hi = side_segment(box, direction)
    lo, hi = lo + cfg.wall_thickness / 2, hi - cfg.wall_thickness / 2
    candidates = [w for w in doc.line_walls(axis, coord) if min(w.end, hi) - max(w.start, lo) > tol]
    if not candidates:
        raise ExecError("wall-not-found", f"{host.name!r} has no wall on its {direction} side")
    if dimension >= hi - lo:
        raise ExecError("host-too-small", f"{what} of {dimension:g} mm does not fit a {hi - lo:g} mm side")
    low_end = "south" if axis == "v" else "west"
    if alignment == "none":
        center = (lo + hi) / 2
    elif alignment == low_end:
        center = lo + offset + dimension / 2
    else:
        center = hi - offset - dimension / 2
    a, b = center - dimension / 2, center + dimension / 2
    if a < lo - tol or b > hi + tol:
        raise ExecError("host-too-small", f"{what} offset {offset:g} runs past the end of the wall")
    wall = next((w for w in candidates if w.start - tol <= a and b <= w.end + tol), None)
    if wall is None:
        raise ExecError("host-too-small", f"no single wall on the {direction} side of {host.name!r} spans the {what}")
    for o in list(doc.doors.values()) + list(doc.holes.values()):
        if o.wall_id == wall.id and min(b, o.position + o.dimension / 2) - max(a, o.position - o.dimension / 2) > tol:
            raise ExecError("host-too-small", f"{what} collides with an existing opening")
    return wall, geom._clean(center)


def create_door(doc, host, direction: str, alignment: str = "none", offset: float = 0.0, set_mode: str = "in",
                set_dimension: float = 0.0, dimension: float | None = None) -> Door:
    dimension = doc.config.door_dimension if dimension is None else dimension
    wall, center = _place_opening(doc, host, direction, alignment, offset, dimension, "door")
    d = Door(doc.new_id("d"), wall.id, host.id, direction, center, dimension, set_mode, set_dimension)
    doc.doors[d.id] = d
    _log(doc, "door", [d.id])
    return d


def create_hole(doc, module: ModuleEntity, direction: str, alignment: str = "none", offset: float = 0.0,
                dimension: float = 900.0) -> Hole:
    wall, center = _place_opening(doc, module, direction, alignment, offset, dimension, "hole")
    h = Hole(doc.new_id("h"), wall.id, module.id, direction, center, dimension)
    doc.holes[h.id] = h
    _log(doc, "hole", [h.id])
    return h
