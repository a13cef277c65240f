"""Frozen parameter tables for every action form.

Parameter order is the order shown in the reference snippets; positional
parsing and canonical printing both use it.
"""
from __future__ import annotations

from dataclasses import dataclass

DIRECTIONS = ("north", "south", "east", "west")
CORNERS = ("northeast", "northwest", "southeast", "southwest")
ALIGNMENTS = DIRECTIONS + ("none",)
SPLIT_DIRECTIONS = ("west-east", "north-south")
SET_MODES = ("in", "out", "none")

ENUMS: dict[str, tuple[str, ...]] = {
    "direction": DIRECTIONS,
    "corner": CORNERS,
    "alignment": ALIGNMENTS,
    "offset_direction": ALIGNMENTS,
    "split_direction": SPLIT_DIRECTIONS,
    "set_mode": SET_MODES,
}

# parameter types that hold entity references, mapped to the declared C#-ish type
REF_TYPES = {"module": "Module", "unit": "Unit", "room": "Room"}

OP_KINDS = (
    "module-absolute", "module-relative", "split", "merge",
    "unit-from-modules", "unit-directional",
    "room-container", "room-directional", "room-corner", "room-relative", "room-at-point",
    "door-for-room", "door-for-module", "door-midpoint", "hole",
)

_NO_DEFAULT = object()


@dataclass(frozen=True)
class Param:
    name: str
    type: str
    required: bool = True
    default: object = _NO_DEFAULT

    @property
    def has_default(self) -> bool:
        return self.default is not _NO_DEFAULT


@dataclass(frozen=True)
class Signature:
    key: str
    op_kind: str
    callee: str
    result: str | None  # declared type of the bound value; None for element actions
    params: tuple[Param, ...]

    def param(self, name: str) -> Param | None:
        for p in self.params:
            if p.name == name:
                return p
        return None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    @property
    def required(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params if p.required)

    @property
    def category(self) -> str:
        return category_of(self.op_kind)


def _p(name, type_, default=_NO_DEFAULT, required=None):
    if required is None:
        required = default is _NO_DEFAULT
    return Param(name, type_, required, default)


_OPTIONAL_MODULE = _p("module", "module", required=False)

SIGNATURES: tuple[Signature, ...] = (
    Signature("module-absolute", "module-absolute", "new Module", "Module", (
        _p("name", "text"), _p("point", "point"), _p("length", "length"), _p("width", "length"))),
    Signature("module-relative", "module-relative", "new Module", "Module", (
        _p("name", "text"), _p("module", "module"), _p("direction", "direction"),
        _p("length", "length"), _p("width", "length"),
        _p("alignment", "alignment", "none"), _p("offset_direction", "offset_direction", "none"),
        _p("offset", "offset", 0.0))),
    Signature("split", "split", "Utils.SplitModule", "List<Module>", (
        _p("module", "module"), _p("direction", "split_direction"), _p("ratio", "ratio"))),
    Signature("merge", "merge", "Utils.MergeModules", "Module", (
        _p("modules", "modules"),)),
    Signature("unit-from-modules", "unit-from-modules", "new Unit", "Unit", (
        _p("name", "text"), _p("modules", "modules"))),
    Signature("unit-directional", "unit-directional", "new Unit", "Unit", (
        _p("name", "text"), _p("modules", "modules"), _p("direction", "direction"),
        _p("dimensions", "dims"))),
    Signature("room-container", "room-container", "new Room", "Room", (
        _p("name", "text"), _OPTIONAL_MODULE, _p("unit", "unit"), _p("regular", "bool", True))),
    Signature("room-directional", "room-directional", "new Room", "Room", (
        _p("name", "text"), _OPTIONAL_MODULE, _p("unit", "unit"), _p("direction", "direction"),
        _p("dimension", "length"), _p("open", "bool", False))),
    Signature("room-corner", "room-corner", "new Room", "Room", (
        _p("name", "text"), _OPTIONAL_MODULE, _p("unit", "unit"), _p("corner", "corner"),
        _p("length", "length"), _p("width", "length"),
        _p("offset_direction", "offset_direction", "none"), _p("offset", "offset", 0.0),
        _p("open", "bool", False))),
    Signature("room-relative", "room-relative", "new Room", "Room", (
        _p("name", "text"), _p("unit", "unit"), _p("room", "room"), _p("direction", "direction"),
        _p("length", "length"), _p("width", "length"),
        _p("alignment", "alignment", "none"), _p("offset_direction", "offset_direction", "none"),
        _p("offset", "offset", 0.0), _p("open", "bool", False))),
    Signature("room-at-point", "room-at-point", "new Room", "Room", (
        _p("name", "text"), _p("unit", "unit"), _p("point", "point"),
        _p("length", "length"), _p("width", "length"))),
    Signature("door-for-room", "door-for-room", "Utils.CreateDoorForRoom", None, (
        _p("room", "room"), _p("direction", "direction"),
        _p("alignment", "alignment", "none"), _p("offset", "offset", 0.0),
        _p("set", "set_mode", "in"), _p("set_dimension", "offset", 0.0),
        _p("dimension", "length", 900.0))),
    Signature("door-for-module", "door-for-module", "Utils.CreateDoorForModule", None, (
        _p("module", "module"), _p("direction", "direction"),
        _p("alignment", "alignment", "none"), _p("offset", "offset", 0.0),
        _p("set", "set_mode", "in"), _p("set_dimension", "offset", 0.0),
        _p("dimension", "length", 900.0))),
    Signature("door-midpoint-room", "door-midpoint", "Utils.CreateDoorOnMidpointForRoom", None, (
        _p("room", "room"), _p("direction", "direction"), _p("dimension", "length", 900.0))),
    Signature("door-midpoint-module", "door-midpoint", "Utils.CreateDoorOnMidpointForModule", None, (
        _p("module", "module"), _p("direction", "direction"), _p("dimension", "length", 900.0))),
    Signature("hole", "hole", "Utils.CreateHole", None, (
        _p("module", "module"), _p("direction", "direction"),
        _p("alignment", "alignment", "none"), _p("offset", "offset", 0.0),
        _p("dimension", "length"))),
)

BY_KEY = {s.key: s for s in SIGNATURES}
BY_CALLEE: dict[str, list[Signature]] = {}
for _s in SIGNATURES:
    BY_CALLEE.setdefault(_s.callee, []).append(_s)

CALLEES = tuple(BY_CALLEE)


def category_of(op_kind: str) -> str:
    if op_kind.startswith("module") or op_kind in ("split", "merge"):
        return "module"
    if op_kind.startswith("unit"):
        return "unit"
    if op_kind.startswith("room"):
        return "room"
    return "element"


def perpendicular(direction: str) -> tuple[str, ...]:
    if direction in ("north", "south"):
        return ("east", "west")
    if direction in ("east", "west"):
        return ("north", "south")
    return ()


def signature_table() -> list[dict]:
    """Machine-readable dump of the parameter tables."""
    return [
        {
            "key": s.key, "op_kind": s.op_kind, "callee": s.callee, "result": s.result,
            "params": [
                {"name": p.name, "type": p.type, "required": p.required,
                 **({"default": p.default} if p.has_default else {})}
                for p in s.params
            ],
        }
        for s in SIGNATURES
    ]
