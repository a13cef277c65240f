import pytest

from mblkit import topology
from mblkit.dsl import parse_strict
from mblkit.kernel import execute
from mblkit.synth import synthesize_code
from oracles import oracle_relations

M = 'Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3000, width: 6000);\n'
U = 'Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1 });\n'


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("level", ["modules", "rooms"])
def test_relations_match_sampling(seed, level):
    doc = execute(synthesize_code(seed=1000 + seed))
    adj = topology.adjacency(doc, level)
    con = topology.connectivity(doc, level)
    exp_adj, exp_con = oracle_relations(doc, level)
    for (a, b), length in exp_adj.items():
        assert abs(adj[a, b] - length) <= 2.0, (a, b)
        assert con[a, b] == exp_con[a, b], (a, b)


def test_sampled_layouts_are_not_trivial():
    contacts = links = 0
    for seed in range(20):
        adj, con = oracle_relations(execute(synthesize_code(seed=1000 + seed)), "rooms")
        contacts += sum(1 for v in adj.values() if v > 0)
        links += sum(con.values())
    assert contacts > 40 and links > 10


def test_matrix_access_and_csv():
    doc = execute(parse_strict(M + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", '
                               'length: 3000, width: 4000, alignment: "south");\n'))
    adj = topology.adjacency(doc, "modules")
    assert adj["Module 1", "M2"] == adj[1, 0] == 4000
    assert adj.mask()[0, 1] is True
    assert list(adj.pairs()) == [(0, 1, 4000)]
    assert adj.to_csv().splitlines()[0] == ",Module 1,M2"


def test_door_connects_rooms():
    doc = execute(parse_strict(
        M + U + 'Room b = new Room(name: "Bedroom", module: module_1, unit: unit_1, direction: "north", '
        'dimension: 3000);\nRoom l = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: false);\n'))
    assert topology.connectivity(doc)[0, 1] is False
    doc2 = execute(parse_strict(
        M + U + 'Room b = new Room(name: "Bedroom", module: module_1, unit: unit_1, direction: "north", '
        'dimension: 3000);\nRoom l = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: false);\n'
        'Utils.CreateDoorOnMidpointForRoom(room: b, direction: "south");\n'))
    assert topology.connectivity(doc2)[0, 1] is True
    assert topology.adjacency(doc2)[0, 1] == 3000


def test_open_side_connects_rooms():
    doc = execute(parse_strict(
        M + U + 'Room k = new Room(name: "Kitchen", module: module_1, unit: unit_1, direction: "south", '
        'dimension: 2000, open: true);\nRoom l = new Room(name: "Living Room", module: module_1, unit: unit_1, '
        'regular: false);\n'))
    assert topology.connectivity(doc)["Kitchen", "Living Room"] is True


def test_conjoint_rooms_share_a_module():
    doc = execute(parse_strict(
        M + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", length: 3000, width: 6000, '
        'alignment: "south");\nUnit u = new Unit(name: "U", modules: new List<Module> { module_1, m2 });\n'
        'Room a = new Room(name: "Bedroom", module: module_1, unit: u, direction: "north", dimension: 3000);\n'
        'Room b = new Room(name: "Bathroom", module: module_1, unit: u, regular: false);\n'
        'Room c = new Room(name: "Kitchen", module: m2, unit: u, regular: true);\n'))
    cj = topology.conjoint(doc)
    assert cj["Bedroom", "Bathroom"] is True
    assert cj["Bedroom", "Kitchen"] is False


def test_gold_layouts_validate(gold_sources):
    for src in gold_sources.values():
        report = topology.analyze(execute(parse_strict(src)))
        assert report.ok, [v for v in report.containment if not v.ok]


def test_containment_flags_outside_room():
    from mblkit.geom import Rect

    doc = execute(parse_strict(M + U + 'Room r = new Room(name: "Bedroom", module: module_1, unit: unit_1, '
                                        'regular: true);\n'))
    (room,) = doc.rooms.values()
    doc.rooms[room.id] = type(room)(**{**room.__dict__, "region": (Rect(0, 0, 4000, 6000),)})
    verdicts = topology.validate_containment(doc)
    bad = [v for v in verdicts if not v.ok]
    assert bad and bad[0].kind == "room" and bad[0].excess == pytest.approx(1000 * 6000)
