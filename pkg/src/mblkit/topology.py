"""Relations between the spaces of an executed layout.

All tests run on centreline (nominal) regions, so two rooms separated by a
single wall touch along that wall's centreline.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from . import geom
from .kernel import LayoutDocument, side_segment


@dataclass(frozen=True)
class RelationMatrix:
    ids: tuple[str, ...]
    names: tuple[str, ...]
    values: tuple[tuple, ...]

    def __len__(self):
        return len(self.ids)

    def index(self, key) -> int:
        if isinstance(key, int):
            return key
        if key in self.ids:
            return self.ids.index(key)
        return self.names.index(key)

    def __getitem__(self, pair):
        i, j = pair
        return self.values[self.index(i)][self.index(j)]

    def mask(self) -> "RelationMatrix":
        """Boolean view: nonzero entries become True."""
        return RelationMatrix(self.ids, self.names, tuple(tuple(bool(v) for v in row) for row in self.values))

    def pairs(self):
        """Upper-triangle (i, j, value) triples with a truthy value."""
        n = len(self.ids)
        return [(i, j, self.values[i][j]) for i in range(n) for j in range(i + 1, n) if self.values[i][j]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + list(self.names))
        for name, row in zip(self.names, self.values):
            w.writerow([name] + [int(v) if isinstance(v, bool) else round(v, 6) for v in row])
        return buf.getvalue()


def _entities(doc: LayoutDocument, level: str):
    if level in ("modules", "module"):
        return list(doc.modules.values())
    if level in ("rooms", "room"):
        return list(doc.rooms.values())
    raise ValueError(f"level must be 'modules' or 'rooms', not {level!r}")


def _matrix(ents, fn, zero) -> RelationMatrix:
    n = len(ents)
    vals = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            vals[i][j] = vals[j][i] = fn(ents[i], ents[j])
    return RelationMatrix(tuple(e.id for e in ents), tuple(e.name for e in ents), tuple(map(tuple, vals)))


def _shared(a, b, tol):
    return [s for p in a.region for q in b.region for s in geom.shared_segments(p, q, tol)]


def adjacency(doc: LayoutDocument, level: str = "rooms") -> RelationMatrix:
    """Shared boundary length in mm for every pair."""
    tol = doc.config.tol
    return _matrix(_entities(doc, level), lambda a, b: geom._clean(geom.region_contact_length(a.region, b.region, tol)),
                   0.0)


def _opening_spans(doc: LayoutDocument):
    return [doc.opening_geometry(o) for o in list(doc.doors.values()) + list(doc.holes.values())]


def _open_side_spans(e):
    return [side_segment(e.nominal, s) for s in getattr(e, "open_sides", ())]


def _touches(seg, spans, tol) -> bool:
    axis, c, lo, hi = seg
    return any(ax == axis and abs(cc - c) <= tol and min(hi, h) - max(lo, l) > tol for ax, cc, l, h in spans)


def connectivity(doc: LayoutDocument, level: str = "rooms") -> RelationMatrix:
    """True where a door, hole or open side lies on the common boundary."""
    tol = doc.config.tol
    openings = _opening_spans(doc)

    def linked(a, b):
        spans = openings + _open_side_spans(a) + _open_side_spans(b)
        return any(_touches(seg, spans, tol) for seg in _shared(a, b, tol))

    return _matrix(_entities(doc, level), linked, False)


def conjoint(doc: LayoutDocument) -> RelationMatrix:
    """True where two rooms both occupy part of one module."""
    tol = doc.config.tol
    modules = list(doc.modules.values())

    def together(a, b):
        for m in modules:
            if (geom.region_area(geom.region_intersection(a.region, m.region, tol)) > tol * tol
                    and geom.region_area(geom.region_intersection(b.region, m.region, tol)) > tol * tol):
                return True
        return False

    return _matrix(_entities(doc, "rooms"), together, False)


@dataclass(frozen=True)
class Verdict:
    kind: str  # unit | room | room-overlap
    id: str
    name: str
    ok: bool
    excess: float  # mm^2 outside the container, or overlapping area


def validate_containment(doc: LayoutDocument) -> list[Verdict]:
    """Per-unit and per-room containment checks, plus any room overlaps."""
    tol = doc.config.tol
    out = []
    for u in doc.units.values():
        members = [r for mid in u.module_ids if mid in doc.modules for r in doc.modules[mid].region]
        excess = geom.region_area(geom.region_difference(u.region, members, tol))
        out.append(Verdict("unit", u.id, u.name, excess <= _slack(u.region, tol), excess))
    for r in doc.rooms.values():
        unit = doc.units.get(r.unit_id)
        excess = geom.region_area(geom.region_difference(r.region, unit.region if unit else (), tol))
        out.append(Verdict("room", r.id, r.name, excess <= _slack(r.region, tol), excess))
    rooms = list(doc.rooms.values())
    for i, a in enumerate(rooms):
        for b in rooms[i + 1:]:
            area = geom.region_area(geom.region_intersection(a.region, b.region, tol))
            if area > _slack(a.region, tol):
                out.append(Verdict("room-overlap", f"{a.id}|{b.id}", f"{a.name}|{b.name}", False, area))
    return out


def _slack(region, tol: float) -> float:
    box = geom.min_bounding_rect(region) if region else None
    return tol * 2 * (box.length + box.width) if box else 0.0


@dataclass(frozen=True)
class TopologyReport:
    module_adjacency: RelationMatrix
    room_adjacency: RelationMatrix
    module_connectivity: RelationMatrix
    room_connectivity: RelationMatrix
    room_conjoint: RelationMatrix
    containment: list[Verdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.containment)


def analyze(doc: LayoutDocument) -> TopologyReport:
    return TopologyReport(adjacency(doc, "modules"), adjacency(doc, "rooms"), connectivity(doc, "modules"),
                          connectivity(doc, "rooms"), conjoint(doc), validate_containment(doc))
