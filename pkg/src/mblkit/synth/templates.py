"""Sentence templates that verbalise design actions.

Every scenario (an action form, plus whether an optional host module is
given) owns five templates. Slots are written ``{param}`` and every slot value
can be read back out of a sentence with :func:`extract_slots`.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass

from ..dsl import Program
from ..dsl.ast import INITIAL_POINT, ActionStatement, ListLit, PointLit, Ref
from ..dsl.printer import fmt_num


class MissingTemplate(KeyError):
    pass


BANK: dict[str, tuple[str, ...]] = {
    "module-absolute": (
        "Create {name} at {point}, {length} mm long and {width} mm wide.",
        "Start with {name}: a {length} by {width} mm module whose bottom-left corner sits at {point}.",
        "Place a module named {name} with its lower-left corner at {point}; it measures {length} mm along x and {width} mm along y.",
        "Begin the layout by placing {name} at {point} with a length of {length} mm and a width of {width} mm.",
        "{name} is anchored at {point} and spans {length} mm by {width} mm.",
    ),
    "module-relative": (
        "Attach {name} to the {direction} side of {module}, {length} mm long and {width} mm wide, {alignment}, shifted {offset} mm toward {offset_direction}.",
        "Put {name} ({length} x {width} mm) {direction} of {module}, {alignment}, then move it {offset} mm toward {offset_direction}.",
        "Next to {module} on its {direction} side, add {name} measuring {length} by {width} mm; it is {alignment} and offset {offset} mm toward {offset_direction}.",
        "{name} sits against the {direction} edge of {module} with a size of {length} by {width} mm, {alignment}, and an offset of {offset} mm toward {offset_direction}.",
        "Extend {module} to the {direction} with {name}, {length} mm by {width} mm, {alignment}, displaced {offset} mm toward {offset_direction}.",
    ),
    "split": (
        "Split {module} with a {direction} cut, giving the first piece a share of {ratio}.",
        "Divide {module} along a {direction} line at ratio {ratio}.",
        "Cut {module} into two modules ({direction} cut, ratio {ratio}).",
        "{module} is split by a {direction} cut; the first piece takes {ratio} of it.",
        "Break {module} in two with a {direction} division at ratio {ratio}.",
    ),
    "merge": (
        "Merge {modules} into one module.",
        "Combine {modules} by removing the walls between them.",
        "Join {modules} into a single module.",
        "{modules} are merged together.",
        "Fuse {modules} so they form one module.",
    ),
    "unit-from-modules": (
        "Form {name} from {modules}.",
        "{name} is made up of {modules}.",
        "Group {modules} into a unit called {name}.",
        "Define {name} covering {modules}.",
        "Create the unit {name} using {modules}.",
    ),
    "unit-directional": (
        "Form {name} from {modules}, taking bands on the {direction} side with depths {dimensions} mm.",
        "{name} covers the {direction} part of {modules}, with depths of {dimensions} mm.",
        "Create {name} across {modules}, measured from their {direction} edges with depths {dimensions} mm.",
        "Define {name} as the {direction} strips of {modules} ({dimensions} mm deep).",
        "Group the {direction} bands of {modules} into {name}, using depths {dimensions} mm.",
    ),
    "room-container+module": (
        "Add {name} filling {module} in {unit} as a {regular} room.",
        "{name} is a {regular} room occupying {module} within {unit}.",
        "Assign {module} of {unit} to {name}, laid out as a {regular} room.",
        "Use {module} in {unit} for {name}, which is {regular}.",
        "Make {name} a {regular} room taking up {module} of {unit}.",
    ),
    "room-container": (
        "Add {name} filling {unit} as a {regular} room.",
        "{name} is a {regular} room occupying {unit}.",
        "Assign {unit} to {name}, laid out as a {regular} room.",
        "Use {unit} for {name}, which is {regular}.",
        "Make {name} a {regular} room taking up {unit}.",
    ),
    "room-directional+module": (
        "Place {name} along the {direction} side of {module} in {unit}, {dimension} mm deep and {open}.",
        "{name} runs along the {direction} edge of {module} within {unit}; it is {dimension} mm deep and {open}.",
        "In {unit}, put {name} on the {direction} side of {module} with a depth of {dimension} mm, {open}.",
        "Add {name} as a {dimension} mm band on the {direction} of {module} in {unit}; the room is {open}.",
        "Along the {direction} wall of {module} in {unit}, {name} takes a {dimension} mm strip and is {open}.",
    ),
    "room-directional": (
        "Place {name} along the {direction} side of {unit}, {dimension} mm deep and {open}.",
        "{name} runs along the {direction} edge of {unit}; it is {dimension} mm deep and {open}.",
        "In {unit}, put {name} on the {direction} side with a depth of {dimension} mm, {open}.",
        "Add {name} as a {dimension} mm band on the {direction} of {unit}; the room is {open}.",
        "Along the {direction} wall of {unit}, {name} takes a {dimension} mm strip and is {open}.",
    ),
    "room-corner+module": (
        "Put {name} in the {corner} corner of {module} in {unit}, {length} by {width} mm, shifted {offset} mm toward {offset_direction}, {open}.",
        "{name} ({length} x {width} mm) occupies the {corner} corner of {module} within {unit}, offset {offset} mm toward {offset_direction} and {open}.",
        "In {unit}, tuck {name} into the {corner} corner of {module}: {length} mm long, {width} mm wide, moved {offset} mm toward {offset_direction}, {open}.",
        "Add {name} at the {corner} corner of {module} in {unit} measuring {length} by {width} mm, with {offset} mm offset toward {offset_direction}; it is {open}.",
        "The {corner} corner of {module} in {unit} holds {name}, {length} by {width} mm, displaced {offset} mm toward {offset_direction} and {open}.",
    ),
    "room-corner": (
        "Put {name} in the {corner} corner of {unit}, {length} by {width} mm, shifted {offset} mm toward {offset_direction}, {open}.",
        "{name} ({length} x {width} mm) occupies the {corner} corner of {unit}, offset {offset} mm toward {offset_direction} and {open}.",
        "In {unit}, tuck {name} into the {corner} corner: {length} mm long, {width} mm wide, moved {offset} mm toward {offset_direction}, {open}.",
        "Add {name} at the {corner} corner of {unit} measuring {length} by {width} mm, with {offset} mm offset toward {offset_direction}; it is {open}.",
        "The {corner} corner of {unit} holds {name}, {length} by {width} mm, displaced {offset} mm toward {offset_direction} and {open}.",
    ),
    "room-relative": (
        "In {unit}, place {name} {direction} of {room}, {length} by {width} mm, {alignment}, shifted {offset} mm toward {offset_direction}, {open}.",
        "{name} ({length} x {width} mm) sits {direction} of {room} in {unit}, {alignment}, offset {offset} mm toward {offset_direction} and {open}.",
        "Next to {room} on its {direction} side in {unit}, add {name} measuring {length} by {width} mm; it is {alignment}, moved {offset} mm toward {offset_direction}, {open}.",
        "Add {name} to the {direction} of {room} within {unit}: {length} mm long and {width} mm wide, {alignment}, with {offset} mm offset toward {offset_direction}; it is {open}.",
        "Within {unit}, {name} adjoins {room} on the {direction}, {length} by {width} mm, {alignment}, displaced {offset} mm toward {offset_direction} and {open}.",
    ),
    "room-at-point": (
        "Place {name} in {unit} centred at {point}, {length} by {width} mm.",
        "{name} is centred on {point} within {unit} and measures {length} by {width} mm.",
        "In {unit}, add {name} around the point {point}, {length} mm long and {width} mm wide.",
        "Create {name} in {unit} with its centre at {point} and a size of {length} by {width} mm.",
        "Centre {name} at {point} in {unit}; it is {length} mm by {width} mm.",
    ),
    "door-for-room": (
        "Add a {dimension} mm door on the {direction} wall of {room}, {alignment}, {offset} mm from the end, {set} by {set_dimension} mm.",
        "{room} gets a {dimension} mm door in its {direction} wall, {alignment} with an offset of {offset} mm and {set} by {set_dimension} mm.",
        "Put a door ({dimension} mm) into the {direction} wall of {room}: {alignment}, offset {offset} mm, {set} by {set_dimension} mm.",
        "On the {direction} side of {room}, place a {dimension} mm door, {alignment}, {offset} mm in, {set} by {set_dimension} mm.",
        "A {dimension} mm door opens the {direction} wall of {room}; it is {alignment}, offset {offset} mm and {set} by {set_dimension} mm.",
    ),
    "door-for-module": (
        "Add a {dimension} mm door on the {direction} wall of {module}, {alignment}, {offset} mm from the end, {set} by {set_dimension} mm.",
        "{module} gets a {dimension} mm door in its {direction} wall, {alignment} with an offset of {offset} mm and {set} by {set_dimension} mm.",
        "Put a door ({dimension} mm) into the {direction} wall of {module}: {alignment}, offset {offset} mm, {set} by {set_dimension} mm.",
        "On the {direction} side of {module}, place a {dimension} mm door, {alignment}, {offset} mm in, {set} by {set_dimension} mm.",
        "A {dimension} mm door opens the {direction} wall of {module}; it is {alignment}, offset {offset} mm and {set} by {set_dimension} mm.",
    ),
    "door-midpoint-room": (
        "Put a {dimension} mm door in the middle of the {direction} wall of {room}.",
        "{room} has a {dimension} mm door centred on its {direction} wall.",
        "Centre a door of {dimension} mm on the {direction} wall of {room}.",
        "Add a door ({dimension} mm) at the midpoint of {room}'s {direction} wall.",
        "The {direction} wall of {room} gets a {dimension} mm door at its midpoint.",
    ),
    "door-midpoint-module": (
        "Put a {dimension} mm door in the middle of the {direction} wall of {module}.",
        "{module} has a {dimension} mm door centred on its {direction} wall.",
        "Centre a door of {dimension} mm on the {direction} wall of {module}.",
        "Add a door ({dimension} mm) at the midpoint of {module}'s {direction} wall.",
        "The {direction} wall of {module} gets a {dimension} mm door at its midpoint.",
    ),
    "hole": (
        "Open a {dimension} mm passage in the {direction} wall of {module}, {alignment}, {offset} mm from the end.",
        "{module} gets a {dimension} mm opening in its {direction} wall, {alignment} with an offset of {offset} mm.",
        "Cut a hole of {dimension} mm into the {direction} wall of {module}: {alignment}, offset {offset} mm.",
        "On the {direction} side of {module}, make a {dimension} mm opening, {alignment}, {offset} mm in.",
        "A {dimension} mm void pierces the {direction} wall of {module}; it is {alignment} and offset {offset} mm.",
    ),
}

# enum and flag values are verbalised through fixed, invertible phrases
PHRASES = {
    "alignment": {"north": "north-aligned", "south": "south-aligned", "east": "east-aligned",
                  "west": "west-aligned", "none": "centred"},
    "offset_direction": {"north": "north", "south": "south", "east": "east", "west": "west", "none": "no direction"},
    "open": {True: "open", False: "closed"},
    "regular": {True: "regular", False: "irregular"},
    "set": {"in": "recessed", "out": "protruding", "none": "flush"},
}

_SLOT = re.compile(r"\{(\w+)\}")


def scenario_of(st: ActionStatement) -> str:
    key = st.sig.key
    if key in ("room-container", "room-directional", "room-corner") and "module" in st.arguments():
        return key + "+module"
    return key


@dataclass
class TemplateBank:
    templates: dict[str, tuple[str, ...]]

    def __post_init__(self):
        for k, v in self.templates.items():
            if len(v) != 5:
                raise ValueError(f"scenario {k!r} has {len(v)} templates, expected 5")

    def get(self, scenario: str) -> tuple[str, ...]:
        try:
            return self.templates[scenario]
        except KeyError:
            raise MissingTemplate(scenario) from None


DEFAULT_BANK = TemplateBank(BANK)


def _point_text(x: float, y: float) -> str:
    return f"({fmt_num(x)}, {fmt_num(y)})"


def _join(names: list[str]) -> str:
    return names[0] if len(names) == 1 else ", ".join(names[:-1]) + " and " + names[-1]


class _Names:
    """Tracks the display name behind every variable."""

    def __init__(self):
        self.names: dict[str, str] = {}

    def update(self, st: ActionStatement):
        args = st.arguments()
        if st.op_kind == "split":
            base = self.names.get(args["module"].name, args["module"].name)
            tags = ("North", "South") if args["direction"] == "west-east" else ("West", "East")
            for var, tag in zip(st.parts, tags):
                if var:
                    self.names[var] = f"{base} {tag}"
        elif st.op_kind == "merge":
            first = args["modules"].items[0].name
            if st.binding:
                self.names[st.binding[1]] = self.names.get(first, first)
        elif st.binding and "name" in args:
            self.names[st.binding[1]] = args["name"]

    def of(self, v) -> str:
        return self.names.get(v.name, v.name)


def verbalize(st: ActionStatement, names: _Names) -> dict[str, str]:
    """Slot text for every argument of a statement (defaults included)."""
    out = {}
    for k, v in st.full_arguments().items():
        if k in PHRASES:
            out[k] = PHRASES[k][v]
        elif isinstance(v, Ref):
            out[k] = _point_text(0, 0) if v.name == INITIAL_POINT else names.of(v)
        elif isinstance(v, PointLit):
            out[k] = _point_text(v.x, v.y)
        elif isinstance(v, ListLit):
            items = [names.of(i) if isinstance(i, Ref) else fmt_num(i) for i in v.items]
            out[k] = _join(items) if v.elem_type == "Module" else ", ".join(items)
        elif isinstance(v, bool):
            out[k] = str(v).lower()
        elif isinstance(v, (int, float)):
            out[k] = fmt_num(v)
        else:
            out[k] = str(v)
    return out


def fill(template: str, slots: dict[str, str]) -> str:
    return _SLOT.sub(lambda m: slots[m.group(1)], template)


_NUM = r"-?\d+(?:\.\d+)?"
SLOT_PATTERNS = {
    **{k: _NUM for k in ("length", "width", "offset", "dimension", "ratio", "set_dimension")},
    "point": rf"\({_NUM}, {_NUM}\)",
    "dimensions": rf"{_NUM}(?:, {_NUM})*",
    "direction": r"[a-z]+(?:-[a-z]+)?",
    "corner": r"[a-z]+",
    **{k: "|".join(re.escape(t) for t in sorted(map(str, v.values()), key=len, reverse=True))
       for k, v in PHRASES.items()},
}


def template_regex(template: str) -> re.Pattern:
    parts, pos = [], 0
    for m in _SLOT.finditer(template):
        parts.append(re.escape(template[pos:m.start()]))
        parts.append(f"(?P<{m.group(1)}>{SLOT_PATTERNS.get(m.group(1), '.+?')})")
        pos = m.end()
    parts.append(re.escape(template[pos:]))
    return re.compile("^" + "".join(parts) + "$")


def extract_slots(sentence: str, template: str) -> dict[str, str] | None:
    m = template_regex(template).match(sentence)
    return m.groupdict() if m else None


def narrative_order(program: Program, rng: random.Random) -> list[int]:
    """A random statement order that still mentions every entity after its creation."""
    n = len(program.statements)
    made: dict[str, int] = {}
    deps: list[set[int]] = []
    last_room = None
    for i, st in enumerate(program.statements):
        d = set()
        for v in st.arguments().values():
            items = v.items if isinstance(v, ListLit) else (v,)
            for r in items:
                if isinstance(r, Ref) and r.name in made:
                    d.add(made[r.name])
        if st.op_kind and st.op_kind.startswith("room"):
            if last_room is not None:
                d.add(last_room)
            last_room = i
        deps.append(d)
        for _, var in st.declared():
            made[var] = i
        if st.op_kind == "merge" and not st.binding:
            first = st.arguments()["modules"].items[0].name
            made[first] = i
    order, done = [], set()
    while len(order) < n:
        ready = [i for i in range(n) if i not in done and deps[i] <= done]
        pick = rng.choice(ready)
        order.append(pick)
        done.add(pick)
    return order


def describe_sentences(program: Program, bank: TemplateBank = DEFAULT_BANK, seed=0,
                       shuffle: bool = False) -> list[tuple[int, str, int, str]]:
    """(statement index, scenario, template index, sentence) per statement."""
    rng = random.Random(f"describe/{seed}")
    names = _Names()
    slots = []
    for st in program.statements:
        slots.append(verbalize(st, names))
        names.update(st)
    order = narrative_order(program, rng) if shuffle else range(len(program.statements))
    out = []
    for i in order:
        st = program.statements[i]
        scen = scenario_of(st)
        options = bank.get(scen)
        k = rng.randrange(len(options))
        out.append((i, scen, k, fill(options[k], slots[i])))
    return out


def describe_program(program: Program, bank: TemplateBank = DEFAULT_BANK, seed=0, shuffle: bool = False) -> str:
    """A template-generated description, one sentence per action."""
    return " ".join(s for *_, s in describe_sentences(program, bank, seed, shuffle))
