"""Geometry kernel: executes design programs into layout documents."""
from .document import (OPPOSITE, SIDES, Config, Door, ExecError, Floor, Hole, LayoutDocument, ModuleEntity,
                       RoomEntity, UnitEntity, Wall, room_label, side_segment)
from .executor import Interpreter, execute
from .ops import (create_door, create_hole, create_module_absolute, create_module_relative, create_room_at_point,
                  create_room_corner, create_room_directional, create_room_in_container, create_room_relative,
                  create_unit_directional, create_unit_from_modules, merge_modules, place_relative, split_module)

__all__ = [
    "OPPOSITE", "SIDES", "Config", "Door", "ExecError", "Floor", "Hole", "LayoutDocument", "ModuleEntity",
    "RoomEntity", "UnitEntity", "Wall", "room_label", "side_segment", "Interpreter", "execute",
    "create_door", "create_hole", "create_module_absolute", "create_module_relative", "create_room_at_point",
    "create_room_corner", "create_room_directional", "create_room_in_container", "create_room_relative",
    "create_unit_directional", "create_unit_from_modules", "merge_modules", "place_relative", "split_module",
]
