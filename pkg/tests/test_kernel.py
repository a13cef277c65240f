import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mblkit import geom
from mblkit.dsl import INITIAL_POINT, PointLit, Ref, parse_program, parse_strict
from mblkit.geom import Point, Rect
from mblkit.kernel import Config, ExecError, Interpreter, LayoutDocument, execute, ops
from mblkit.kernel.document import room_label
from mblkit.synth import synthesize_code

M = 'Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3000, width: 6000);\n'
U = 'Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1 });\n'


def run(src, **cfg):
    return execute(parse_strict(src), Config(**cfg) if cfg else None)


def by_name(coll, name):
    return next(e for e in coll.values() if e.name == name)


def wall_set(doc):
    return sorted((w.axis, w.coord, w.start, w.end) for w in doc.walls.values())


# -- modules ------------------------------------------------------------------

def test_absolute_module_has_four_walls_and_floor():
    doc = run(M)
    m = by_name(doc.modules, "Module 1")
    assert m.rect == Rect(0, 0, 3000, 6000)
    assert wall_set(doc) == [("h", 0, 0, 3000), ("h", 6000, 0, 3000), ("v", 0, 0, 6000), ("v", 3000, 0, 6000)]
    assert all(w.thickness == 100 for w in doc.walls.values())
    assert len(doc.floors) == 1


@pytest.mark.parametrize("direction,alignment,offdir,offset,expected", [
    ("east", "south", "none", 0, Rect(3000, 0, 2000, 1000)),
    ("east", "north", "none", 0, Rect(3000, 5000, 2000, 1000)),
    ("west", "north", "south", 500, Rect(-2000, 4500, 2000, 1000)),
    ("north", "west", "none", 0, Rect(0, 6000, 2000, 1000)),
    ("north", "east", "west", 300, Rect(700, 6000, 2000, 1000)),
    ("south", "east", "west", 2000, Rect(-1000, -1000, 2000, 1000)),
    ("south", "none", "none", 0, Rect(500, -1000, 2000, 1000)),
    ("east", "none", "north", 100, Rect(3000, 2600, 2000, 1000)),
])
def test_relative_placement(direction, alignment, offdir, offset, expected):
    doc = run(M + f'Module m2 = new Module(name: "M2", module: module_1, direction: "{direction}", length: 2000, '
              f'width: 1000, alignment: "{alignment}", offset_direction: "{offdir}", offset: {offset});\n')
    assert by_name(doc.modules, "M2").rect == expected


def test_shared_wall_is_merged_once():
    doc = run(M + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", length: 3000, '
              'width: 6000, alignment: "south");\n')
    assert [w for w in wall_set(doc) if w[:2] == ("v", 3000)] == [("v", 3000, 0, 6000)]
    assert [w for w in wall_set(doc) if w[:2] == ("h", 0)] == [("h", 0, 0, 6000)]


# -- split and merge ------------------------------------------------------------

@pytest.mark.parametrize("direction,ratio,first,second", [
    ("west-east", 0.25, Rect(0, 4500, 3000, 1500), Rect(0, 0, 3000, 4500)),
    ("north-south", 0.4, Rect(0, 0, 1200, 6000), Rect(1200, 0, 1800, 6000)),
])
def test_split_geometry_and_names(direction, ratio, first, second):
    doc = run(M + f'List<Module> p = Utils.SplitModule(module: module_1, direction: "{direction}", ratio: {ratio});\n'
              'Module a = p[0];\nModule b = p[1];\n')
    a, b = doc.modules.values()
    assert (a.rect, b.rect) == (first, second)
    suffix = ("North", "South") if direction == "west-east" else ("West", "East")
    assert (a.name, b.name) == tuple(f"Module 1 {s}" for s in suffix)


@given(st.sampled_from(["west-east", "north-south"]), st.integers(10, 90))
def test_split_then_merge_restores_module(direction, pct):
    ratio = pct / 100
    before = run(M)
    doc = run(M + f'List<Module> p = Utils.SplitModule(module: module_1, direction: "{direction}", ratio: {ratio});\n'
              'Module a = p[0];\nModule b = p[1];\nUtils.MergeModules(modules: new List<Module> { a, b });\n')
    (m,) = doc.modules.values()
    assert m.region == (Rect(0, 0, 3000, 6000),)
    assert wall_set(doc) == wall_set(before)


def test_split_rebinds_unit_membership():
    doc = run(M + U + 'List<Module> p = Utils.SplitModule(module: module_1, direction: "west-east", ratio: 0.5);\n'
              'Module a = p[0];\nModule b = p[1];\n')
    (u,) = doc.units.values()
    assert set(u.module_ids) == set(doc.modules)
    assert geom.region_area(u.region) == 3000 * 6000


def test_unbound_merge_keeps_first_identity():
    doc = run(M + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", length: 3000, '
              'width: 6000, alignment: "south");\nUtils.MergeModules(modules: new List<Module> { module_1, m2 });\n')
    (m,) = doc.modules.values()
    assert m.name == "Module 1" and m.rect == Rect(0, 0, 6000, 6000)
    assert not any(w.axis == "v" and w.coord == 3000 for w in doc.walls.values())


def test_merge_into_l_shape():
    doc = run(M + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", length: 3000, '
              'width: 2000, alignment: "south");\nUtils.MergeModules(modules: new List<Module> { module_1, m2 });\n')
    (m,) = doc.modules.values()
    assert len(m.outline) == 6
    assert geom.region_area(m.region) == 3000 * 6000 + 3000 * 2000


# -- units ------------------------------------------------------------------------

def test_unit_directional_slabs():
    doc = run(M + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", length: 3000, '
              'width: 6000, alignment: "south");\nUnit u = new Unit(name: "U", modules: new List<Module> '
              '{ module_1, m2 }, direction: "north", dimensions: new List<double> { 4000, 4000 });\n')
    (u,) = doc.units.values()
    assert geom.min_bounding_rect(u.region) == Rect(0, 2000, 6000, 4000)
    assert any(w.axis == "h" and w.coord == 2000 and w.start == 0 and w.end == 6000 for w in doc.walls.values())


def test_unit_with_hole_is_rejected():
    ring = [(0, 0), (1000, 0), (2000, 0), (0, 1000), (2000, 1000), (0, 2000), (1000, 2000), (2000, 2000)]
    src = "".join(f'Module m{i} = new Module(name: "M{i}", point: new Point({x}, {y}), length: 1000, width: 1000);\n'
                  for i, (x, y) in enumerate(ring))
    src += "Unit u = new Unit(name: \"U\", modules: new List<Module> { " + ", ".join(f"m{i}" for i in range(8)) + " });\n"
    with pytest.raises(ExecError) as e:
        run(src)
    assert e.value.category == "has-hole"


# -- rooms --------------------------------------------------------------------------

@pytest.mark.parametrize("corner,offdir,offset,nominal", [
    ("southwest", "none", 0, Rect(0, 0, 1600, 1200)),
    ("northeast", "none", 0, Rect(1400, 4800, 1600, 1200)),
    ("southeast", "north", 500, Rect(1400, 500, 1600, 1200)),
    ("northwest", "east", 250, Rect(250, 4800, 1600, 1200)),
])
def test_corner_room_arithmetic(corner, offdir, offset, nominal):
    doc = run(M + U + f'Room k = new Room(name: "Kitchen", module: module_1, unit: unit_1, corner: "{corner}", '
              f'length: 1600, width: 1200, offset_direction: "{offdir}", offset: {offset}, open: false);\n')
    (r,) = doc.rooms.values()
    assert r.nominal == nominal
    assert r.rect == nominal.inset(50)
    assert r.center == geom.midpoint_rect(r.rect)
    assert r.label == "kitchen"


def test_corner_open_room_skips_inner_walls():
    doc = run(M + U + 'Room k = new Room(name: "Kitchen", module: module_1, unit: unit_1, corner: "southwest", '
              'length: 1600, width: 1200, offset_direction: "none", offset: 0, open: true);\n')
    (r,) = doc.rooms.values()
    assert set(r.open_sides) == {"north", "east"}
    assert not any(w.axis == "h" and w.coord == 1200 for w in doc.walls.values())


def test_directional_room_band():
    doc = run(M + U + 'Room k = new Room(name: "Kitchen", module: module_1, unit: unit_1, direction: "south", '
              'dimension: 1800, open: true);\n')
    (r,) = doc.rooms.values()
    assert r.nominal == Rect(0, 0, 3000, 1800)
    assert r.open_sides == ("north",)


def test_irregular_room_takes_residual_bbox():
    doc = run(M + U + 'Room b = new Room(name: "Bathroom", module: module_1, unit: unit_1, corner: "northeast", '
              'length: 1500, width: 2000);\nRoom l = new Room(name: "Living Room", module: module_1, unit: unit_1, '
              'regular: false);\n')
    living = by_name(doc.rooms, "Living Room")
    assert not living.regular
    assert geom.region_area(living.region) == 3000 * 6000 - 1500 * 2000
    assert living.rect == Rect(0, 0, 3000, 6000).inset(50)


def test_relative_room_and_point_room():
    doc = run(M + U + 'Room b = new Room(name: "Bathroom", module: module_1, unit: unit_1, corner: "northwest", '
              'length: 1500, width: 1800);\nRoom k = new Room(name: "Kitchen", unit: unit_1, room: b, '
              'direction: "east", length: 1500, width: 1200, alignment: "north");\n'
              'Room p = new Room(name: "Bedroom", unit: unit_1, point: new Point(1500, 1500), length: 1900, '
              'width: 1900);\n')
    assert by_name(doc.rooms, "Kitchen").nominal == Rect(1500, 4800, 1500, 1200)
    bed = by_name(doc.rooms, "Bedroom")
    assert bed.rect == Rect(550, 550, 1900, 1900)
    assert bed.center == Point(1500, 1500)


def test_room_label():
    assert room_label("Bedroom 2") == "bedroom"
    assert room_label("Living Room") == "living room"


# -- openings -------------------------------------------------------------------------

def test_midpoint_door_position():
    doc = run(M + 'Utils.CreateDoorOnMidpointForModule(module: module_1, direction: "south");\n')
    (d,) = doc.doors.values()
    assert (d.side, d.position, d.dimension) == ("south", 1500, 900)
    assert doc.opening_geometry(d) == ("h", 0, 1050, 1950)


def test_aligned_door_offset_from_inner_corner():
    doc = run(M + 'Utils.CreateDoorForModule(module: module_1, direction: "west", alignment: "south", offset: 200, '
              'set: "in", set_dimension: 600, dimension: 800);\n')
    (d,) = doc.doors.values()
    # inner span starts 50 mm above the corner; the leaf edge sits 200 mm further up
    assert doc.opening_geometry(d) == ("v", 0, 250, 1050)
    assert doc.opening_offset(d) == 650  # centre, measured from the wall start
    assert (d.set_mode, d.set_dimension) == ("in", 600)


def test_hole_survives_later_wall_merge():
    doc = run(M + 'Utils.CreateHole(module: module_1, direction: "east", alignment: "none", offset: 0, '
              'dimension: 2000);\nModule m2 = new Module(name: "M2", module: module_1, direction: "east", '
              'length: 3000, width: 8000, alignment: "south");\n')
    (h,) = doc.holes.values()
    w = doc.walls[h.wall_id]
    assert (w.axis, w.coord, w.start, w.end) == ("v", 3000, 0, 8000)
    assert doc.opening_geometry(h) == ("v", 3000, 2000, 4000)


def test_door_collision_is_rejected():
    with pytest.raises(ExecError) as e:
        run(M + 'Utils.CreateDoorOnMidpointForModule(module: module_1, direction: "south");\n'
            'Utils.CreateDoorOnMidpointForModule(module: module_1, direction: "south");\n')
    assert e.value.category == "host-too-small"


# -- errors ----------------------------------------------------------------------------

MORE = 'Module m2 = new Module(name: "M2", point: new Point(5000, 0), length: 3000, width: 6000);\n'


@pytest.mark.parametrize("src,category,index", [
    (M + 'Module m2 = new Module(name: "M2", point: new Point(1000, 1000), length: 3000, width: 6000);\n',
     "overlap", 1),
    (M + U + 'Room r = new Room(name: "Kitchen", module: module_1, unit: unit_1, corner: "southwest", '
     'length: 4000, width: 1000);\n', "containment-violation", 2),
    (M + 'List<Module> p = Utils.SplitModule(module: module_1, direction: "west-east", ratio: 0.01);\n'
     'Module a = p[0];\nModule b = p[1];\n', "degenerate-dimension", 1),
    (M + MORE + 'Utils.MergeModules(modules: new List<Module> { module_1, m2 });\n', "merge-not-adjacent", 2),
    (M + 'Utils.CreateHole(module: module_1, direction: "south", dimension: 5000);\n', "host-too-small", 1),
    (M + U + 'Room k = new Room(name: "Kitchen", module: module_1, unit: unit_1, direction: "south", '
     'dimension: 1800, open: true);\nUtils.CreateDoorOnMidpointForRoom(room: k, direction: "north");\n',
     "wall-not-found", 3),
    (M + MORE + 'Unit u = new Unit(name: "U", modules: new List<Module> { module_1, m2 });\n', "disconnected", 2),
    (M + U + 'Room a = new Room(name: "Bedroom", module: module_1, unit: unit_1, regular: true);\n'
     'Room b = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: false);\n',
     "no-residual-space", 3),
    (M + U + 'Room a = new Room(name: "Bedroom", module: module_1, unit: unit_1, corner: "southwest", '
     'length: 2000, width: 2000);\nRoom b = new Room(name: "Bathroom", module: module_1, unit: unit_1, '
     'corner: "southwest", length: 1000, width: 1000);\n', "overlap", 3),
])
def test_execution_errors(src, category, index):
    with pytest.raises(ExecError) as e:
        run(src)
    assert (e.value.category, e.value.index) == (category, index)


def test_bad_ratio_at_kernel_level():
    doc = LayoutDocument()
    m = ops.create_module_absolute(doc, "M", Point(0, 0), 3000, 6000)
    with pytest.raises(ExecError) as e:
        ops.split_module(doc, m, "west-east", 1.0)
    assert e.value.category == "bad-ratio"


def test_static_errors_block_execution():
    with pytest.raises(ExecError) as e:
        execute(parse_program('Utils.CreateWindow(module: m);'))
    assert e.value.category == "not-compiled"


def test_interpreter_rolls_back_on_error():
    prog = parse_strict(M + 'Module m2 = new Module(name: "M2", point: new Point(1000, 0), length: 3000, width: 6000);\n')
    it = Interpreter()
    it.run(prog.statements[0], 0)
    snap = it.snapshot()
    before = wall_set(it.doc)
    with pytest.raises(ExecError):
        it.run(prog.statements[1], 1)
    it.restore(snap)
    assert wall_set(it.doc) == before and len(it.doc.modules) == 1


def test_wall_thickness_config():
    doc = run(M + U + 'Room r = new Room(name: "Bedroom", module: module_1, unit: unit_1, regular: true);\n',
              wall_thickness=200)
    (r,) = doc.rooms.values()
    assert r.rect == Rect(100, 100, 2800, 5800)


# -- whole-program properties ---------------------------------------------------------

def translate(program, dx, dy):
    def shift(v):
        if isinstance(v, Ref) and v.name == INITIAL_POINT:
            return PointLit(dx, dy)
        if isinstance(v, PointLit):
            return PointLit(v.x + dx, v.y + dy)
        return v

    out = parse_strict("")
    for s in program.statements:
        out.statements.append(dataclasses.replace(s, args=tuple(dataclasses.replace(a, value=shift(a.value))
                                                                for a in s.args)))
    return out


def snapshot_rects(doc, dx=0.0, dy=0.0):
    out = []
    for coll in (doc.modules, doc.units, doc.rooms):
        for e in coll.values():
            out.append((e.name, tuple(r.translate(dx, dy) for r in e.region)))
    return sorted(out)


@given(st.integers(0, 5000), st.integers(-20000, 20000), st.integers(-20000, 20000))
def test_translation_equivariance(seed, dx, dy):
    prog = synthesize_code(seed=seed)
    a = execute(prog)
    b = execute(translate(prog, dx, dy))
    assert snapshot_rects(b) == snapshot_rects(a, dx, dy)
    assert len(a.walls) == len(b.walls) and len(a.doors) == len(b.doors) and len(a.holes) == len(b.holes)


def test_execution_is_deterministic(gold_sources):
    from mblkit.harness import export_layout

    for src in gold_sources.values():
        assert export_layout(run(src)) == export_layout(run(src))


def test_gold_rooms_inside_units(gold_sources):
    for src in gold_sources.values():
        doc = run(src)
        for r in doc.rooms.values():
            u = doc.units[r.unit_id]
            assert geom.region_area(geom.region_difference(r.region, u.region)) <= 1e-6
