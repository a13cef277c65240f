"""Canonical JSON form of a layout document.

Key order is fixed and every number is rounded to 6 decimals, so equal
documents always serialise to identical bytes.
"""
from __future__ import annotations

import json

from ..geom import Point, Rect
from ..kernel import Config, Door, Floor, Hole, LayoutDocument, ModuleEntity, RoomEntity, UnitEntity, Wall
from ..topology import analyze

SCHEMA_VERSION = 1


def _n(v: float) -> float | int:
    v = round(float(v), 6) + 0.0
    return int(v) if v.is_integer() and abs(v) < 2 ** 53 else v


def _rect(r: Rect) -> dict:
    return {"x": _n(r.x), "y": _n(r.y), "length": _n(r.length), "width": _n(r.width)}


def _region(rs) -> list:
    return [_rect(r) for r in rs]


def _pt(p) -> list:
    return [_n(p[0]), _n(p[1])]


def _matrix(m) -> dict:
    return {"ids": list(m.ids), "names": list(m.names),
            "values": [[v if isinstance(v, bool) else _n(v) for v in row] for row in m.values]}


def layout_to_dict(doc: LayoutDocument, topology: bool = False) -> dict:
    cfg = doc.config
    openings: dict[str, list[str]] = {}
    for o in list(doc.doors.values()) + list(doc.holes.values()):
        openings.setdefault(o.wall_id, []).append(o.id)
    out = {
        "schema_version": SCHEMA_VERSION,
        "config": {"wall_thickness": _n(cfg.wall_thickness), "tol": _n(cfg.tol), "min_wall": _n(cfg.min_wall),
                   "door_dimension": _n(cfg.door_dimension), "level": cfg.level},
        "modules": [{"id": m.id, "name": m.name, "level": m.level, "rect": _rect(m.rect), "region": _region(m.region)}
                    for m in doc.modules.values()],
        "units": [{"id": u.id, "name": u.name, "level": u.level, "module_ids": list(u.module_ids),
                   "rect": _rect(u.rect), "region": _region(u.region),
                   "room_ids": [r.id for r in doc.rooms_of_unit(u.id)]} for u in doc.units.values()],
        "rooms": [{"id": r.id, "name": r.name, "label": r.label, "level": r.level, "unit_id": r.unit_id,
                   "host_module_ids": list(r.host_module_ids), "rect": _rect(r.rect), "center": _pt(r.center),
                   "region": _region(r.region), "open_sides": list(r.open_sides), "regular": r.regular}
                  for r in doc.rooms.values()],
        "walls": [{"id": w.id, "axis": w.axis, "coord": _n(w.coord), "start": _n(w.start), "end": _n(w.end),
                   "centerline": [_pt(p) for p in w.centerline], "thickness": _n(w.thickness),
                   "room_bounding": w.room_bounding, "openings": openings.get(w.id, [])}
                  for w in doc.walls.values()],
        "floors": [{"id": f.id, "module_id": f.module_id, "region": _region(f.region)} for f in doc.floors.values()],
        "doors": [{"id": d.id, "wall_id": d.wall_id, "host_id": d.host_id, "side": d.side,
                   "position": _n(d.position), "offset": _n(doc.opening_offset(d)), "dimension": _n(d.dimension),
                   "set_mode": d.set_mode, "set_dimension": _n(d.set_dimension)} for d in doc.doors.values()],
        "holes": [{"id": h.id, "wall_id": h.wall_id, "host_id": h.host_id, "side": h.side,
                   "position": _n(h.position), "offset": _n(doc.opening_offset(h)), "dimension": _n(h.dimension)}
                  for h in doc.holes.values()],
        "log": [{k: (list(v) if isinstance(v, (list, tuple)) else v) for k, v in sorted(e.items())} for e in doc.log],
        "counters": dict(sorted(doc.counters.items())),
    }
    if topology:
        rep = analyze(doc)
        out["topology"] = {
            "module_adjacency": _matrix(rep.module_adjacency), "room_adjacency": _matrix(rep.room_adjacency),
            "module_connectivity": _matrix(rep.module_connectivity),
            "room_connectivity": _matrix(rep.room_connectivity), "room_conjoint": _matrix(rep.room_conjoint),
        }
    return out


def export_layout(doc: LayoutDocument, topology: bool = False) -> str:
    return json.dumps(layout_to_dict(doc, topology), indent=2, ensure_ascii=False) + "\n"


def _r(d) -> Rect:
    return Rect(float(d["x"]), float(d["y"]), float(d["length"]), float(d["width"]))


def _reg(ds) -> tuple[Rect, ...]:
    return tuple(_r(d) for d in ds)


def import_layout(text: str) -> LayoutDocument:
    data = json.loads(text)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
    c = data["config"]
    doc = LayoutDocument(Config(float(c["wall_thickness"]), float(c["tol"]), float(c["min_wall"]),
                                float(c["door_dimension"]), c["level"]))
    for m in data["modules"]:
        doc.modules[m["id"]] = ModuleEntity(m["id"], m["name"], _reg(m["region"]), m["level"])
    for u in data["units"]:
        doc.units[u["id"]] = UnitEntity(u["id"], u["name"], tuple(u["module_ids"]), _reg(u["region"]), u["level"])
    for r in data["rooms"]:
        doc.rooms[r["id"]] = RoomEntity(r["id"], r["name"], r["label"], _r(r["rect"]), Point(*map(float, r["center"])),
                                        r["unit_id"], tuple(r["host_module_ids"]), _reg(r["region"]),
                                        tuple(r["open_sides"]), bool(r["regular"]), r["level"])
    for w in data["walls"]:
        doc.walls[w["id"]] = Wall(w["id"], w["axis"], float(w["coord"]), float(w["start"]), float(w["end"]),
                                  float(w["thickness"]), bool(w["room_bounding"]))
    for f in data["floors"]:
        doc.floors[f["id"]] = Floor(f["id"], f["module_id"], _reg(f["region"]))
    for d in data["doors"]:
        doc.doors[d["id"]] = Door(d["id"], d["wall_id"], d["host_id"], d["side"], float(d["position"]),
                                  float(d["dimension"]), d["set_mode"], float(d["set_dimension"]))
    for h in data["holes"]:
        doc.holes[h["id"]] = Hole(h["id"], h["wall_id"], h["host_id"], h["side"], float(h["position"]),
                                  float(h["dimension"]))
    doc.log = [dict(e) for e in data["log"]]
    doc.counters = {k: int(v) for k, v in data["counters"].items()}
    return doc
