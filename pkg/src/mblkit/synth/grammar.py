"""Random construction of valid design programs.

Programs are built one action at a time against a live interpreter. An action
that fails to execute is rolled back and another is drawn, so every program
that comes out compiles and executes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .. import geom
from ..dsl import BY_KEY, ListLit, PointLit, Program, Ref, build_statement, static_check
from ..dsl.ast import INITIAL_POINT
from ..dsl.check import errors
from ..kernel import Config, ExecError, Interpreter, ModuleEntity, UnitEntity

LABELS = ("living room", "bedroom", "bathroom", "kitchen")


class GenerationExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class GrammarConfig:
    """Parameter ranges (mm) and count distributions of the generator."""

    module_extent: tuple[float, float] = (1500.0, 8000.0)
    room_extent: tuple[float, float] = (1000.0, 7000.0)
    snap: float = 10.0
    # target counts: weights over 1..n
    module_counts: tuple[float, ...] = (0.08, 0.27, 0.32, 0.21, 0.12)
    element_counts: tuple[float, ...] = (0.04, 0.12, 0.18, 0.22, 0.2, 0.14, 0.1)  # 0..6
    unit_grow: float = 0.75
    p_split: float = 0.2
    p_merge: float = 0.12
    p_directional_unit: float = 0.2
    p_point_anchor: float = 0.3
    labels: tuple[str, ...] = LABELS
    max_attempts: int = 40
    max_restarts: int = 20
    kernel: Config = field(default_factory=Config)

    def __post_init__(self):
        for name in ("module_extent", "room_extent"):
            lo, hi = getattr(self, name)
            if not 0 < lo <= hi:
                raise ValueError(f"{name} must satisfy 0 < low <= high, got {(lo, hi)}")
        for name in ("p_split", "p_merge", "p_directional_unit", "p_point_anchor", "unit_grow"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        for name in ("module_counts", "element_counts"):
            w = getattr(self, name)
            if not w or min(w) < 0 or sum(w) <= 0:
                raise ValueError(f"{name} needs non-negative weights with a positive sum")
        if not self.labels:
            raise ValueError("labels must not be empty")


def _title(label: str) -> str:
    return " ".join(w.capitalize() for w in label.split())


class _Builder:
    def __init__(self, cfg: GrammarConfig, rng: random.Random):
        self.cfg = cfg
        self.rng = rng
        self.it = Interpreter(cfg.kernel)
        self.statements = []
        self.modules: list[str] = []  # live module variables
        self.units: list[str] = []
        self.rooms: list[str] = []
        self.room_counts: dict[str, int] = {}
        self.module_n = 0
        self.unit_n = 0

    # helpers
    def snap(self, v: float) -> float:
        s = self.cfg.snap
        return float(round(v / s) * s)

    def uniform(self, lo: float, hi: float) -> float:
        if hi < lo:
            hi = lo
        return self.snap(self.rng.uniform(lo, hi))

    def ent(self, var: str):
        return self.it.doc.entity(self.it.env[var])

    def add(self, key: str, mapping: dict, var: str | None = None, parts=(None, None)) -> bool:
        sig = BY_KEY[key]
        full = {p.name: mapping[p.name] if p.name in mapping else p.default
                for p in sig.params if p.name in mapping or p.has_default}
        st = build_statement(sig, full, "named", binding=(sig.result, var) if var else None, parts=parts)
        snap = self.it.snapshot()
        try:
            self.it.run(st, len(self.statements))
        except ExecError:
            self.it.restore(snap)
            return False
        self.statements.append(st)
        return True

    # modules
    def first_module(self) -> bool:
        lo, hi = self.cfg.module_extent
        self.module_n += 1
        var, name = f"module_{self.module_n}", f"Module {self.module_n}"
        if self.rng.random() < self.cfg.p_point_anchor:
            pt = PointLit(self.snap(self.rng.uniform(-5000, 5000) / 10) * 10,
                          self.snap(self.rng.uniform(-5000, 5000) / 10) * 10)
        else:
            pt = Ref(INITIAL_POINT)
        ok = self.add("module-absolute", {"name": name, "point": pt, "length": self.uniform(max(lo, 2400), hi),
                                          "width": self.uniform(max(lo, 2400), hi)}, var)
        if ok:
            self.modules.append(var)
        return ok

    def relative_module(self) -> bool:
        rng = self.rng
        lo, hi = self.cfg.module_extent
        ref = rng.choice(self.modules)
        direction = rng.choice(("north", "south", "east", "west"))
        perp = ("east", "west") if direction in ("north", "south") else ("north", "south")
        alignment = rng.choice(perp + ("none",))
        rect = self.ent(ref).rect
        along = rect.length if direction in ("north", "south") else rect.width
        # favour congruent neighbours so units and merges stay rectangular
        size_along = along if rng.random() < 0.5 else self.uniform(lo, hi)
        size_across = self.uniform(lo, hi)
        length, width = (size_along, size_across) if direction in ("north", "south") else (size_across, size_along)
        od, off = "none", 0.0
        if rng.random() < 0.25:
            od = rng.choice(perp)
            off = self.uniform(0, min(2000.0, along / 2))
        self.module_n += 1
        var, name = f"module_{self.module_n}", f"Module {self.module_n}"
        ok = self.add("module-relative", {"name": name, "module": Ref(ref), "direction": direction, "length": length,
                                          "width": width, "alignment": alignment, "offset_direction": od,
                                          "offset": off}, var)
        if ok:
            self.modules.append(var)
        else:
            self.module_n -= 1
        return ok

    def split(self) -> bool:
        rng = self.rng
        cands = [v for v in self.modules if len(self.ent(v).region) == 1]
        if not cands:
            return False
        var = rng.choice(cands)
        r = self.ent(var).rect
        direction = rng.choice(("west-east", "north-south"))
        extent = r.width if direction == "west-east" else r.length
        ratio = rng.choice((0.3, 0.4, 0.5, 0.6, 0.7))
        if min(ratio, 1 - ratio) * extent < 1500:
            return False
        names = ("north", "south") if direction == "west-east" else ("west", "east")
        parts = (f"{var}_{names[0]}", f"{var}_{names[1]}")
        ok = self.add("split", {"module": Ref(var), "direction": direction, "ratio": ratio}, f"{var}_pieces", parts)
        if ok:
            i = self.modules.index(var)
            self.modules[i:i + 1] = list(parts)
        return ok

    def merge(self) -> bool:
        rng = self.rng
        tol = self.cfg.kernel.tol
        pairs = []
        for i, a in enumerate(self.modules):
            for b in self.modules[i + 1:]:
                ra, rb = self.ent(a).region, self.ent(b).region
                if geom.region_contact_length(ra, rb, tol) >= 1000:
                    pairs.append((a, b))
        if not pairs:
            return False
        a, b = rng.choice(pairs)
        bound = rng.random() < 0.3
        var = None
        if bound:
            self.module_n += 1
            var = f"module_{self.module_n}"
        ok = self.add("merge", {"modules": ListLit("Module", (Ref(a), Ref(b)))}, var)
        if ok:
            self.modules.remove(b)
            if bound:
                self.modules[self.modules.index(a)] = var
        elif bound:
            self.module_n -= 1
        return ok

    # units
    def units_phase(self):
        rng = self.rng
        tol = self.cfg.kernel.tol
        free = list(self.modules)
        rng.shuffle(free)
        while free:
            group = [free.pop(0)]
            while True:
                nb = [m for m in free if any(
                    geom.region_contact_length(self.ent(m).region, self.ent(g).region, tol) >= 1000 for g in group)]
                if not nb or rng.random() > self.cfg.unit_grow:
                    break
                pick = rng.choice(nb)
                free.remove(pick)
                group.append(pick)
            group.sort(key=self.modules.index)
            self.unit_n += 1
            var, name = f"unit_{self.unit_n}", f"Unit {self.unit_n}"
            mods = ListLit("Module", tuple(Ref(g) for g in group))
            done = False
            if rng.random() < self.cfg.p_directional_unit:
                direction = rng.choice(("north", "south", "east", "west"))
                dims = []
                for g in group:
                    r = self.ent(g).rect
                    ext = r.width if direction in ("north", "south") else r.length
                    dims.append(ext if rng.random() < 0.4 else self.uniform(max(2400.0, ext * 0.6), ext))
                done = self.add("unit-directional", {"name": name, "modules": mods, "direction": direction,
                                                     "dimensions": ListLit("double", tuple(dims))}, var)
            if not done:
                done = self.add("unit-from-modules", {"name": name, "modules": mods}, var)
            if done:
                self.units.append(var)
            else:
                self.unit_n -= 1

    # rooms
    def room_name(self, label: str) -> tuple[str, str]:
        n = self.room_counts.get(label, 0) + 1
        self.room_counts[label] = n
        base = _title(label)
        name = base if n == 1 else f"{base} {n}"
        return name, f"{label.replace(' ', '_')}_{n}"

    def unname(self, label: str):
        self.room_counts[label] -= 1

    def add_room(self, key: str, label: str, mapping: dict) -> str | None:
        name, var = self.room_name(label)
        if self.add(key, dict(mapping, name=name), var):
            self.rooms.append(var)
            return var
        self.unname(label)
        return None

    def hosts(self, unit_var: str):
        """(host module variable or None, host rect) pairs usable for rooms."""
        u: UnitEntity = self.ent(unit_var)
        tol = self.cfg.kernel.tol
        out = []
        for mv in self.modules:
            m: ModuleEntity = self.ent(mv)
            if m.id in u.module_ids and len(m.region) == 1:
                if not geom.region_difference(m.region, u.region, tol):
                    out.append((mv, m.rect))
        if not out and len(u.region) == 1:
            out.append((None, u.rect))
        return out

    def rooms_phase(self):
        rng = self.rng
        for uv in self.units:
            for mv, box in self.hosts(uv):
                host = {"module": Ref(mv)} if mv else {}
                base = dict(host, unit=Ref(uv))
                if box.length < 2200 or box.width < 2200:
                    self.add_room("room-container", rng.choice(self.cfg.labels), dict(base, regular=True))
                    continue
                pattern = rng.choices(("whole", "corners", "band", "point", "relative"), (4, 3, 3, 1, 2))[0]
                if pattern == "whole":
                    self.add_room("room-container", rng.choice(("bedroom", "living room")), dict(base, regular=True))
                elif pattern == "point":
                    l = self.uniform(1000, box.length - 100)
                    w = self.uniform(1000, box.width - 100)
                    cx = self.snap(rng.uniform(box.x + 50 + l / 2, box.x1 - 50 - l / 2))
                    cy = self.snap(rng.uniform(box.y + 50 + w / 2, box.y1 - 50 - w / 2))
                    r = self.add_room("room-at-point", rng.choice(self.cfg.labels),
                                      {"unit": Ref(uv), "point": PointLit(cx, cy), "length": l, "width": w})
                    if r is None:
                        self.add_room("room-container", "bedroom", dict(base, regular=True))
                elif pattern == "band":
                    direction = rng.choice(("north", "south", "east", "west"))
                    ext = box.width if direction in ("north", "south") else box.length
                    dim = self.uniform(1000, ext * 0.45)
                    self.add_room("room-directional", rng.choice(("kitchen", "bedroom", "bathroom")),
                                  dict(base, direction=direction, dimension=dim, open=rng.random() < 0.4))
                    if rng.random() < 0.25:
                        other = {"north": "south", "south": "north", "east": "west", "west": "east"}[direction]
                        self.add_room("room-directional", rng.choice(("bedroom", "bathroom")),
                                      dict(base, direction=other, dimension=self.uniform(1000, ext * 0.35),
                                           open=False))
                    self.add_room("room-container", "living room", dict(base, regular=False))
                else:
                    corners = ["northeast", "northwest", "southeast", "southwest"]
                    rng.shuffle(corners)
                    made = []
                    for corner in corners[: rng.choice((1, 1, 2))]:
                        l = self.uniform(1000, min(box.length * 0.45, 4000))
                        w = self.uniform(1000, min(box.width * 0.45, 4000))
                        od, off = "none", 0.0
                        if rng.random() < 0.2:
                            od = "south" if corner.startswith("north") else "north"
                            off = self.uniform(0, min(600, box.width * 0.5 - w))
                        r = self.add_room("room-corner", rng.choice(("bathroom", "kitchen", "bedroom")),
                                          dict(base, corner=corner, length=l, width=w, offset_direction=od,
                                               offset=off, open=rng.random() < 0.25))
                        if r:
                            made.append((r, corner))
                    if pattern == "relative" and made:
                        ref, corner = rng.choice(made)
                        direction = "east" if corner.endswith("west") else "west"
                        if rng.random() < 0.5:
                            direction = "north" if corner.startswith("south") else "south"
                        edge = corner[:5] if direction in ("east", "west") else corner[5:]
                        alignment = edge if rng.random() < 0.7 else "none"
                        l = self.uniform(1000, min(box.length * 0.4, 3500))
                        w = self.uniform(1000, min(box.width * 0.4, 3500))
                        self.add_room("room-relative", rng.choice(("bedroom", "bathroom", "kitchen")),
                                      {"unit": Ref(uv), "room": Ref(ref), "direction": direction, "length": l,
                                       "width": w, "alignment": alignment, "offset_direction": "none",
                                       "offset": 0.0, "open": rng.random() < 0.2})
                    self.add_room("room-container", "living room", dict(base, regular=False))

    # openings
    def element(self) -> bool:
        rng = self.rng
        kind = rng.choices(("door-room", "mid-room", "door-module", "mid-module", "hole"), (4, 3, 1, 1, 1.5))[0]
        direction = rng.choice(("north", "south", "east", "west"))
        perp = ("east", "west") if direction in ("north", "south") else ("north", "south")
        dim = rng.choice((800.0, 900.0, 1000.0))
        if kind in ("door-room", "mid-room"):
            if not self.rooms:
                return False
            host = {"room": Ref(rng.choice(self.rooms))}
        else:
            host = {"module": Ref(rng.choice(self.modules))}
        if kind in ("door-room", "door-module"):
            key = "door-for-room" if kind == "door-room" else "door-for-module"
            return self.add(key, dict(host, direction=direction, alignment=rng.choice(perp + ("none",)),
                                      offset=self.uniform(0, 600), set=rng.choice(("in", "out", "none")),
                                      set_dimension=self.uniform(0, 600), dimension=dim))
        if kind in ("mid-room", "mid-module"):
            key = "door-midpoint-room" if kind == "mid-room" else "door-midpoint-module"
            return self.add(key, dict(host, direction=direction, dimension=dim))
        return self.add("hole", dict(host, direction=direction, alignment=rng.choice(perp + ("none",)),
                                     offset=self.uniform(0, 800), dimension=self.uniform(800, 2400)))

    def build(self) -> Program:
        cfg, rng = self.cfg, self.rng
        if not self.first_module():
            raise GenerationExhausted("could not place the first module")
        target = rng.choices(range(1, len(cfg.module_counts) + 1), cfg.module_counts)[0]
        tries = 0
        while len(self.modules) < target and tries < cfg.max_attempts:
            tries += 1
            self.relative_module()
        if rng.random() < cfg.p_split:
            self.split()
        if len(self.modules) > 1 and rng.random() < cfg.p_merge:
            self.merge()
        self.units_phase()
        self.rooms_phase()
        n_el = rng.choices(range(len(cfg.element_counts)), cfg.element_counts)[0]
        made = tries = 0
        while made < n_el and tries < cfg.max_attempts:
            tries += 1
            made += self.element()
        return Program(statements=list(self.statements))


def synthesize_code(config: GrammarConfig | None = None, seed: int | str = 0) -> Program:
    """A random program that compiles and executes; deterministic per seed."""
    cfg = config or GrammarConfig()
    for attempt in range(cfg.max_restarts):
        rng = random.Random(f"{seed}/{attempt}")
        prog = _Builder(cfg, rng).build()
        if not prog.statements or errors(static_check(prog)):
            continue
        if any(st.op_kind.startswith("room") for st in prog.statements):
            return prog
    raise GenerationExhausted(f"no valid program for seed {seed!r} after {cfg.max_restarts} restarts")
