"""Layout document: entities, walls and openings.

Entities are frozen; the document swaps them out as operations run, which
makes snapshots (for rollback during synthesis) shallow dict copies.
Module and room geometry is kept on wall centrelines ("nominal" regions);
rooms additionally carry their inner rectangle, inset by half a wall.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .. import geom
from ..geom import Point, Rect

SIDES = ("north", "south", "east", "west")
OPPOSITE = {"north": "south", "south": "north", "east": "west", "west": "east"}


@dataclass(frozen=True)
class Config:
    wall_thickness: float = 100.0
    tol: float = geom.TOL
    min_wall: float = 200.0
    door_dimension: float = 900.0
    level: str = "Level 1"


class ExecError(Exception):
    """Runtime failure of an action; ``category`` is a fixed vocabulary."""

    CATEGORIES = ("containment-violation", "overlap", "wall-not-found", "bad-ratio",
                  "merge-not-adjacent", "host-too-small", "degenerate-dimension",
                  "disconnected", "has-hole", "no-residual-space", "not-compiled")

    def __init__(self, category: str, message: str, index: int | None = None):
        assert category in self.CATEGORIES, category
        self.category = category
        self.message = message
        self.index = index
        where = f"statement {index + 1}: " if index is not None else ""
        super().__init__(f"{where}{category}: {message}")


@dataclass(frozen=True)
class Wall:
    id: str
    axis: str  # "h" (runs along x at y=coord) or "v" (runs along y at x=coord)
    coord: float
    start: float
    end: float
    thickness: float
    room_bounding: bool = True

    @property
    def length(self) -> float:
        return self.end - self.start

    @property
    def centerline(self) -> tuple[Point, Point]:
        if self.axis == "h":
            return Point(self.start, self.coord), Point(self.end, self.coord)
        return Point(self.coord, self.start), Point(self.coord, self.end)


@dataclass(frozen=True)
class ModuleEntity:
    id: str
    name: str
    region: tuple[Rect, ...]
    level: str = "Level 1"

    @property
    def rect(self) -> Rect:
        return geom.min_bounding_rect(self.region)

    @property
    def outline(self) -> geom.Contour:
        return geom.rectilinear_union_outline(self.region)


@dataclass(frozen=True)
class UnitEntity:
    id: str
    name: str
    module_ids: tuple[str, ...]
    region: tuple[Rect, ...]
    level: str = "Level 1"

    @property
    def rect(self) -> Rect:
        return geom.min_bounding_rect(self.region)

    @property
    def boundary(self) -> geom.Contour:
        return geom.rectilinear_union_outline(self.region)


@dataclass(frozen=True)
class RoomEntity:
    id: str
    name: str
    label: str
    rect: Rect  # inner boundary
    center: Point
    unit_id: str
    host_module_ids: tuple[str, ...]
    region: tuple[Rect, ...]  # nominal (centreline) footprint
    open_sides: tuple[str, ...] = ()
    regular: bool = True
    level: str = "Level 1"

    @property
    def nominal(self) -> Rect:
        return geom.min_bounding_rect(self.region)


@dataclass(frozen=True)
class Door:
    id: str
    wall_id: str
    host_id: str
    side: str
    position: float  # centre, measured along the wall axis
    dimension: float
    set_mode: str = "in"
    set_dimension: float = 0.0


@dataclass(frozen=True)
class Hole:
    id: str
    wall_id: str
    host_id: str
    side: str
    position: float
    dimension: float


@dataclass(frozen=True)
class Floor:
    id: str
    module_id: str
    region: tuple[Rect, ...]


def room_label(name: str) -> str:
    """Semantic label of a room name: 'Bedroom 2' -> 'bedroom'."""
    return re.sub(r"[\s_]*\d+$", "", name.strip()).strip().lower()


@dataclass
class LayoutDocument:
    config: Config = field(default_factory=Config)
    modules: dict[str, ModuleEntity] = field(default_factory=dict)
    units: dict[str, UnitEntity] = field(default_factory=dict)
    rooms: dict[str, RoomEntity] = field(default_factory=dict)
    walls: dict[str, Wall] = field(default_factory=dict)
    floors: dict[str, Floor] = field(default_factory=dict)
    doors: dict[str, Door] = field(default_factory=dict)
    holes: dict[str, Hole] = field(default_factory=dict)
    log: list[dict] = field(default_factory=list)
    counters: dict[str, int] = field(default_factory=dict)

    _COLLECTIONS = ("modules", "units", "rooms", "walls", "floors", "doors", "holes")

    def new_id(self, prefix: str) -> str:
        n = self.counters.get(prefix, 0) + 1
        self.counters[prefix] = n
        return f"{prefix}{n}"

    def snapshot(self) -> dict:
        snap = {name: dict(getattr(self, name)) for name in self._COLLECTIONS}
        snap["log"] = list(self.log)
        snap["counters"] = dict(self.counters)
        return snap

    def restore(self, snap: dict):
        for name in self._COLLECTIONS:
            setattr(self, name, dict(snap[name]))
        self.log = list(snap["log"])
        self.counters = dict(snap["counters"])

    def copy(self) -> "LayoutDocument":
        doc = LayoutDocument(self.config)
        doc.restore(self.snapshot())
        return doc

    def entity(self, eid: str):
        for name in ("modules", "units", "rooms"):
            coll = getattr(self, name)
            if eid in coll:
                return coll[eid]
        raise KeyError(eid)

    def rooms_of_unit(self, unit_id: str) -> list[RoomEntity]:
        return [r for r in self.rooms.values() if r.unit_id == unit_id]

    def counts(self) -> dict[str, int]:
        out = {"module": len(self.modules), "unit": len(self.units), "room": len(self.rooms),
               "element": len(self.doors) + len(self.holes)}
        for label in ("living room", "bathroom", "bedroom", "kitchen"):
            out[label] = sum(1 for r in self.rooms.values() if r.label == label)
        return out

    # -- walls -------------------------------------------------------------

    def line_walls(self, axis: str, coord: float) -> list[Wall]:
        tol = self.config.tol
        return sorted((w for w in self.walls.values() if w.axis == axis and abs(w.coord - coord) <= tol),
                      key=lambda w: w.start)

    def _rebuild_line(self, axis: str, coord: float, intervals):
        cfg = self.config
        old = self.line_walls(axis, coord)
        coord = old[0].coord if old else coord
        old_ids = {w.id for w in old}
        riders = [(coll, o) for coll in (self.doors, self.holes) for o in coll.values() if o.wall_id in old_ids]
        kept = {(w.start, w.end): w for w in old}
        for w in old:
            del self.walls[w.id]
        fresh = []
        for lo, hi in geom.merge_intervals(intervals, cfg.tol):
            if hi - lo < cfg.min_wall - cfg.tol:
                continue  # short walls are dropped
            lo, hi = geom._clean(lo), geom._clean(hi)
            w = kept.get((lo, hi)) or Wall(self.new_id("w"), axis, coord, lo, hi, cfg.wall_thickness)
            self.walls[w.id] = w
            fresh.append(w)
        # openings follow their absolute position onto the rebuilt walls
        for coll, o in riders:
            a, b = o.position - o.dimension / 2, o.position + o.dimension / 2
            host = next((w for w in fresh if w.start - cfg.tol <= a and b <= w.end + cfg.tol), None)
            if host is None:
                del coll[o.id]
            elif host.id != o.wall_id:
                coll[o.id] = replace(o, wall_id=host.id)

    def add_wall_segment(self, axis: str, coord: float, lo: float, hi: float):
        if hi - lo <= self.config.tol:
            return
        existing = [(w.start, w.end) for w in self.line_walls(axis, coord)]
        self._rebuild_line(axis, coord, existing + [(lo, hi)])

    def remove_wall_segment(self, axis: str, coord: float, lo: float, hi: float):
        existing = [(w.start, w.end) for w in self.line_walls(axis, coord)]
        if not existing:
            return
        self._rebuild_line(axis, coord, geom.subtract_intervals(existing, [(lo, hi)], self.config.tol))

    def ensure_rect_walls(self, r: Rect, skip_sides=()):
        for side in SIDES:
            if side not in skip_sides:
                self.add_wall_segment(*side_segment(r, side))

    def ensure_region_walls(self, region):
        for seg in geom.region_boundary_segments(region, self.config.tol):
            self.add_wall_segment(*seg)

    def walls_on_side(self, rect: Rect, side: str) -> list[Wall]:
        axis, coord, lo, hi = side_segment(rect, side)
        tol = self.config.tol
        return [w for w in self.line_walls(axis, coord) if min(w.end, hi) - max(w.start, lo) > tol]

    def opening_geometry(self, o) -> tuple[str, float, float, float]:
        """(axis, coord, lo, hi) of a door or hole."""
        w = self.walls[o.wall_id]
        return w.axis, w.coord, o.position - o.dimension / 2, o.position + o.dimension / 2

    def opening_offset(self, o) -> float:
        """Distance from the start of the host wall to the opening's centre."""
        return o.position - self.walls[o.wall_id].start


def side_segment(r: Rect, side: str) -> tuple[str, float, float, float]:
    if side == "north":
        return "h", r.y1, r.x, r.x1
    if side == "south":
        return "h", r.y, r.x, r.x1
    if side == "east":
        return "v", r.x1, r.y, r.y1
    if side == "west":
        return "v", r.x, r.y, r.y1
    raise ValueError(side)
