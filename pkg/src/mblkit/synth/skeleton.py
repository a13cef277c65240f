"""Count-only instructions: how many of each component a layout has."""
from __future__ import annotations

import re

from ..kernel import LayoutDocument

FIELDS = ("module", "unit", "living room", "bathroom", "bedroom", "kitchen")
_PATTERN = re.compile(
    r"^Generate a layout with (\d+) module, (\d+) unit, (\d+) living room, (\d+) bathroom, "
    r"(\d+) bedroom, (\d+) kitchen\.$")


def skeleton_instruction(doc: LayoutDocument | dict) -> str:
    counts = doc.counts() if isinstance(doc, LayoutDocument) else doc
    n = [counts.get(f, 0) for f in FIELDS]
    return (f"Generate a layout with {n[0]} module, {n[1]} unit, {n[2]} living room, {n[3]} bathroom, "
            f"{n[4]} bedroom, {n[5]} kitchen.")


def parse_skeleton(text: str) -> dict[str, int]:
    m = _PATTERN.match(text.strip())
    if not m:
        raise ValueError(f"not a skeleton instruction: {text!r}")
    return dict(zip(FIELDS, map(int, m.groups())))
