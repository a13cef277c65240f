"""Deterministic corruptions of gold programs, one family per common model error."""
from __future__ import annotations

import random
import re
from pathlib import Path

from mblkit.dsl import errors, parse_program, static_check, to_source

GOLD_DIR = Path(__file__).parent / "data" / "gold"
FAMILIES = ("argument-order", "sequencing", "invalid-argument", "unknown-function", "wrong-function")


def gold_sources() -> dict[str, str]:
    return {p.stem: p.read_text(encoding="utf-8") for p in sorted(GOLD_DIR.glob("*.cs"))}


def _positional_lines(src: str) -> list[str]:
    return to_source(parse_program(src), "positional").splitlines()


def _split_args(line: str) -> tuple[str, list[str], str] | None:
    """Top-level comma split of the outermost call's argument list."""
    start = line.find("(")
    end = line.rfind(")")
    if start < 0 or end < start:
        return None
    body, depth, cur, parts = line[start + 1:end], 0, "", []
    for ch in body:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur.strip())
            cur = ""
        else:
            cur += ch
    parts.append(cur.strip())
    return line[:start + 1], parts, line[end:]


def argument_order(src: str, rng: random.Random) -> str | None:
    lines = _positional_lines(src)
    order = list(range(len(lines)))
    rng.shuffle(order)
    for i in order:
        split = _split_args(lines[i])
        if not split or len(split[1]) < 3:
            continue
        head, parts, tail = split
        pairs = [(a, a + 1) for a in range(1, len(parts) - 1)]
        rng.shuffle(pairs)
        for a, b in pairs:
            if parts[a] == parts[b]:
                continue
            new = parts[:]
            new[a], new[b] = new[b], new[a]
            cand = lines[:i] + [head + ", ".join(new) + tail] + lines[i + 1:]
            text = "\n".join(cand) + "\n"
            if errors(static_check(parse_program(text))):
                return text
    return None


def sequencing(src: str, rng: random.Random) -> str | None:
    lines = src.splitlines()
    users = [i for i, l in enumerate(lines) if i > 0 and ("Room " in l or "Utils.Create" in l or "Unit " in l)]
    rng.shuffle(users)
    for i in users:
        j = rng.randrange(0, i)
        cand = lines[:]
        cand.insert(j, cand.pop(i))
        text = "\n".join(cand) + "\n"
        if errors(static_check(parse_program(text))):
            return text
    return None


BAD_VALUES = [
    (r'direction: "(north|south|east|west)"', 'direction: "up"'),
    (r"length: \d+", "length: -1200"),
    (r"ratio: [\d.]+", "ratio: 1.5"),
    (r'corner: "\w+"', 'corner: "middle"'),
    (r"width: \d+", "width: 0"),
    (r'alignment: "\w+"', 'alignment: "diagonal"'),
]
EXTRA_ARGS = ["height: 3000", 'material: "steel"', "rotation: 90", "thickness: 200"]


def invalid_argument(src: str, rng: random.Random) -> str | None:
    lines = src.splitlines()
    order = list(range(len(lines)))
    rng.shuffle(order)
    for i in order:
        line = lines[i]
        if rng.random() < 0.5 and line.endswith(");") and "(" in line and "[" not in line:
            cand = line[:-2] + ", " + rng.choice(EXTRA_ARGS) + ");"
        else:
            pats = [(p, r) for p, r in BAD_VALUES if re.search(p, line)]
            if not pats:
                continue
            p, r = rng.choice(pats)
            cand = re.sub(p, r, line, count=1)
        text = "\n".join(lines[:i] + [cand] + lines[i + 1:]) + "\n"
        if errors(static_check(parse_program(text))):
            return text
    return None


HALLUCINATED = [
    'Utils.CreateWindow(room: {room}, direction: "north", width: 1200);',
    'Utils.CreateStair(module: {module}, direction: "east");',
    'Wall wall_1 = new Wall(module: {module}, direction: "south", thickness: 200);',
    'Utils.RotateModule(module: {module}, angle: 90);',
    'Utils.AddBalcony(unit: {unit}, direction: "south", depth: 1500);',
]


def unknown_function(src: str, rng: random.Random) -> str | None:
    lines = src.splitlines()
    names = {kind: re.findall(rf"^{kind} (\w+) =", src, re.M) for kind in ("Module", "Room", "Unit")}
    if not all(names.values()):
        return None
    tpl = rng.choice(HALLUCINATED)
    stmt = tpl.format(room=rng.choice(names["Room"]), module=rng.choice(names["Module"]),
                      unit=rng.choice(names["Unit"]))
    pos = rng.randrange(len(lines) // 2, len(lines) + 1)
    if rng.random() < 0.4:
        # rename an existing call instead of inserting one
        calls = [i for i, l in enumerate(lines) if l.startswith("Utils.Create")]
        if calls:
            i = rng.choice(calls)
            lines[i] = re.sub(r"Utils\.Create\w+", rng.choice(["Utils.CreateOpening", "Utils.MakeDoor"]), lines[i])
            return "\n".join(lines) + "\n"
    return "\n".join(lines[:pos] + [stmt] + lines[pos:]) + "\n"


SWAPS = [
    ("Utils.CreateDoorOnMidpointForModule(module:", "Utils.CreateDoorOnMidpointForRoom(module:"),
    ("Utils.CreateDoorOnMidpointForRoom(room:", "Utils.CreateDoorOnMidpointForModule(room:"),
    ("Utils.CreateDoorForRoom(room:", "Utils.CreateHole(room:"),
    ("Utils.CreateHole(module:", "Utils.CreateDoorForRoom(module:"),
    ("Utils.CreateDoorForModule(module:", "Utils.CreateDoorForRoom(module:"),
    ("Utils.SplitModule(module:", "Utils.MergeModules(module:"),
]


def wrong_function(src: str, rng: random.Random) -> str | None:
    swaps = [s for s in SWAPS if s[0] in src]
    rng.shuffle(swaps)
    for old, new in swaps:
        text = src.replace(old, new, 1)
        if errors(static_check(parse_program(text))):
            return text
    lines = src.splitlines()
    # a Room declared with the Unit constructor
    rooms = [i for i, l in enumerate(lines) if l.startswith("Room ") and "regular:" in l]
    if rooms:
        i = rng.choice(rooms)
        lines[i] = lines[i].replace("new Room(", "new Unit(", 1)
        return "\n".join(lines) + "\n"
    return None


MUTATORS = dict(zip(FAMILIES, (argument_order, sequencing, invalid_argument, unknown_function, wrong_function)))


def corrupted_corpus(per_family: int = 10, seed: int = 0) -> list[tuple[str, str, str]]:
    """(family, gold stem, corrupted text); every text has at least one static error."""
    golds = gold_sources()
    stems = sorted(golds)
    out = []
    for fam in FAMILIES:
        rng = random.Random(f"{seed}/{fam}")
        seen = set()
        tries = 0
        while sum(1 for f, _, _ in out if f == fam) < per_family:
            tries += 1
            if tries > 500:
                raise RuntimeError(f"could not corrupt enough programs for {fam}")
            stem = rng.choice(stems)
            text = MUTATORS[fam](golds[stem], rng)
            if text is None or text in seen or not errors(static_check(parse_program(text))):
                continue
            seen.add(text)
            out.append((fam, stem, text))
    return out
