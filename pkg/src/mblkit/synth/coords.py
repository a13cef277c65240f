"""Coordinate-sequence text: each entity as its bottom-left corner and extents."""
from __future__ import annotations

import re

from ..geom import Point, Rect, midpoint_rect
from ..kernel import Config, LayoutDocument, ModuleEntity, RoomEntity, UnitEntity, room_label

HEADERS = ("MODULE:", "Unit:", "Room:")
_NUM = r"-?\d+(?:\.\d+)?"
_ENTRY = re.compile(rf"^\[(?P<name>[^|\[\]]+)\|x=(?P<x>{_NUM})\|y=(?P<y>{_NUM})"
                    rf"\|length=(?P<length>{_NUM})\|width=(?P<width>{_NUM})\]$")


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _corner(v: float) -> str:
    v = round(v, 1) + 0.0
    return str(int(v)) if v.is_integer() else f"{v:.1f}"


def _entry(name: str, r: Rect) -> str:
    return f"[{name}|x={_corner(r.x)}|y={_corner(r.y)}|length={r.length:.1f}|width={r.width:.1f}]"


def to_coordinate_seq(doc: LayoutDocument) -> str:
    lines = ["MODULE:"]
    lines += [_entry(m.name, m.rect) for m in doc.modules.values()]
    lines.append("Unit:")
    lines += [_entry(u.name, u.rect) for u in doc.units.values()]
    lines.append("Room:")
    lines += [_entry(r.name, r.rect) for r in doc.rooms.values()]
    return "\n".join(lines)


def _entries(text: str):
    """Yield (section, name, rect, line number)."""
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    section = -1
    for no, raw in enumerate(lines, 1):
        line = raw.strip()
        if section + 1 < len(HEADERS) and line == HEADERS[section + 1]:
            section += 1
            continue
        if line in HEADERS:
            raise FormatError(no, f"header {line!r} out of order")
        if section < 0:
            raise FormatError(no, "text must start with 'MODULE:'")
        m = _ENTRY.match(line)
        if not m:
            raise FormatError(no, f"malformed entry {line!r}")
        length, width = float(m["length"]), float(m["width"])
        if length <= 0 or width <= 0:
            raise FormatError(no, "extents must be positive")
        yield section, m["name"].strip(), Rect(float(m["x"]), float(m["y"]), length, width), no
    if section != len(HEADERS) - 1:
        raise FormatError(len(lines) + 1, f"missing header {HEADERS[section + 1]!r}")


def parse_coordinate_seq(text: str, config: Config | None = None) -> LayoutDocument:
    """Skeleton document holding only named rectangles."""
    doc = LayoutDocument(config or Config())
    half = doc.config.wall_thickness / 2
    for section, name, r, _ in _entries(text):
        if section == 0:
            m = ModuleEntity(doc.new_id("m"), name, (r,))
            doc.modules[m.id] = m
        elif section == 1:
            u = UnitEntity(doc.new_id("u"), name, (), (r,))
            doc.units[u.id] = u
        else:
            room = RoomEntity(doc.new_id("r"), name, room_label(name), r, midpoint_rect(r), "", (),
                              (r.inset(-half),))
            doc.rooms[room.id] = room
    return doc


def boxes_from_text(text: str) -> dict:
    """Labelled rectangles per category, ready for IoU scoring."""
    out = {"module": [], "unit": [], "room": []}
    for section, name, r, _ in _entries(text):
        cat = ("module", "unit", "room")[section]
        out[cat].append((room_label(name) if cat == "room" else cat, r))
    return out


__all__ = ["FormatError", "to_coordinate_seq", "parse_coordinate_seq", "boxes_from_text", "Point"]
