import pytest
from hypothesis import given
from hypothesis import strategies as st

from mblkit.dsl import (SIGNATURES, ListLit, PointLit, Ref, Unrepairable, canonicalize, errors, parse_program,
                        parse_strict, repair_program, static_check, to_source, tokenize)
from mblkit.synth import synthesize_code

MODULE = 'Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3000, width: 6000);\n'
UNIT = 'Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1 });\n'


def cats(src):
    return sorted({d.category for d in errors(static_check(parse_program(src)))})


# -- lexing and parsing -----------------------------------------------------

def test_tokenize_kinds_and_positions():
    toks, diags = tokenize('Module m = new Module(length: -2.5e3);')
    assert not diags
    kinds = [t.kind for t in toks]
    assert kinds[0] == "identifier" and kinds[-1] == "eof"
    assert ("punct", "-") in [(t.kind, t.lexeme) for t in toks]
    assert any(t.kind == "number" and t.lexeme == "2.5e3" for t in toks)
    assert toks[0].span == (1, 1)


def test_tokenize_flags_bad_characters():
    _, diags = tokenize("Module m = new Module(name: `x`);")
    assert diags and diags[0].category == "syntax"
    _, diags = tokenize("Module m = new Module(length: 1); // comments are not part of the language")
    assert diags and diags[0].category == "syntax"


def test_parse_values():
    p = parse_strict(MODULE + UNIT + 'Room r = new Room(name: "Bedroom", unit: unit_1, point: new Point(1500, -20), '
                     'length: 2000, width: 2000);\n')
    args = p.statements[2].arguments()
    assert args["point"] == PointLit(1500, -20)
    assert p.statements[1].arguments()["modules"] == ListLit("Module", (Ref("module_1"),))
    assert p.statements[0].arguments()["point"] == Ref("initial_point")
    assert [s.op_kind for s in p] == ["module-absolute", "unit-from-modules", "room-at-point"]


def test_split_destructuring_binds_pieces():
    src = MODULE + ('List<Module> parts = Utils.SplitModule(module: module_1, direction: "west-east", ratio: 0.5);\n'
                    'Module top = parts[0];\nModule bottom = parts[1];\n')
    p = parse_strict(src)
    assert len(p) == 2
    assert p.statements[1].parts == ("top", "bottom")
    assert not errors(static_check(p))


def test_split_index_errors():
    src = MODULE + ('List<Module> parts = Utils.SplitModule(module: module_1, direction: "west-east", ratio: 0.5);\n'
                    'Module top = parts[2];\n')
    assert "arity" in cats(src)
    assert "undefined-name" in cats(MODULE + "Module top = nothing[0];\n")


def test_syntax_error_recovery_keeps_other_statements():
    p = parse_program(MODULE + "Module broken = new Module(name: ;\n" + UNIT)
    assert [d.category for d in p.diagnostics] == ["syntax"]
    assert [s.op_kind for s in p] == ["module-absolute", "unit-from-modules"]
    with pytest.raises(ValueError):
        parse_strict(MODULE + "Module broken = new Module(name: ;\n")


def test_positional_form_resolution():
    p = parse_strict('Module m = new Module("M", initial_point, 3000, 6000);\n'
                     'Module n = new Module("N", m, "east", 3000, 6000, "north", "none", 0);\n')
    assert [s.op_kind for s in p] == ["module-absolute", "module-relative"]
    assert p.statements[1].arguments()["alignment"] == "north"


def test_every_signature_has_distinct_key():
    keys = [s.key for s in SIGNATURES]
    assert len(keys) == len(set(keys)) == 16


# -- static checking ----------------------------------------------------------

@pytest.mark.parametrize("src,category", [
    ('Utils.CreateWindow(room: r, direction: "north");', "unknown-op"),
    (MODULE + 'Utils.CreateHole(module: module_1, direction: "up", alignment: "none", offset: 0, dimension: 900);',
     "enum-value"),
    (MODULE + 'Utils.CreateHole(module: module_2, direction: "north", dimension: 900);', "undefined-name"),
    (MODULE + MODULE, "redefinition"),
    (MODULE + 'Utils.CreateHole(module: module_1, direction: "north", dimension: 900, height: 20);', "arity"),
    (MODULE + 'Utils.CreateHole(module: module_1, direction: "north", alignment: "north", offset: 0, '
     'dimension: 900);', "enum-value"),
    (MODULE + 'Room r = new Room("Kitchen", module_1, unit_1, 1800, "south", true);', "undefined-name"),
])
def test_static_check_categories(src, category):
    assert category in cats(src)


def test_swapped_positional_values_are_named():
    src = MODULE + UNIT + 'Room r = new Room("Kitchen", module_1, unit_1, 1800, "south", true);\n'
    assert cats(src) == ["wrong-arg-order"]


def test_use_before_declaration():
    assert cats(UNIT + MODULE) == ["undefined-name"]


def test_split_retires_the_source_module():
    src = MODULE + ('List<Module> parts = Utils.SplitModule(module: module_1, direction: "west-east", ratio: 0.5);\n'
                    'Module a = parts[0];\nModule b = parts[1];\n'
                    'Utils.CreateHole(module: module_1, direction: "north", dimension: 900);\n')
    assert "undefined-name" in cats(src)


def test_empty_program_is_clean():
    assert static_check(parse_program("")) == []


# -- printing and canonical form ---------------------------------------------

def test_gold_round_trip(gold_sources):
    for src in gold_sources.values():
        p = parse_strict(src)
        text = canonicalize(p)
        assert parse_strict(text) == p
        assert canonicalize(parse_strict(text)) == text


def test_named_and_positional_agree(gold_sources):
    for src in gold_sources.values():
        p = parse_strict(src)
        positional = to_source(p, "positional")
        assert "name:" not in positional
        assert canonicalize(parse_strict(positional)) == canonicalize(p)


@given(st.integers(0, 10_000))
def test_synthetic_round_trip(seed):
    p = synthesize_code(seed=seed)
    assert parse_strict(canonicalize(p)) == p
    assert canonicalize(parse_strict(to_source(p, "positional"))) == canonicalize(p)


def test_omitted_defaults_compare_equal():
    short = parse_strict(MODULE + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", '
                         'length: 3000, width: 6000);\n')
    full = parse_strict(MODULE + 'Module m2 = new Module(name: "M2", module: module_1, direction: "east", '
                        'length: 3000, width: 6000, alignment: "none", offset_direction: "none", offset: 0);\n')
    assert short == full
    assert parse_strict(canonicalize(short)) == short


def test_named_argument_order_is_irrelevant():
    a = parse_strict('Module m = new Module(width: 6000, length: 3000, point: initial_point, name: "M");\n')
    b = parse_strict('Module m = new Module(name: "M", point: initial_point, length: 3000, width: 6000);\n')
    assert canonicalize(a) == canonicalize(b)


def test_number_formatting():
    p = parse_strict('Module m = new Module(name: "M", point: new Point(0.5, -0), length: 3000.0, width: 1e3);\n')
    assert "new Point(0.5, 0), length: 3000, width: 1000" in canonicalize(p)


# -- repair -----------------------------------------------------------------

def test_repair_swaps_values_back():
    src = MODULE + UNIT + 'Room r = new Room("Kitchen", module_1, unit_1, 1800, "south", true);\n'
    out = repair_program(parse_program(src))
    assert not errors(static_check(out))
    args = out.statements[-1].arguments()
    assert args["direction"] == "south" and args["dimension"] == 1800
    assert any("swapped" in line for line in out.repair_log)


def test_repair_drops_unknown_calls_and_arguments():
    src = MODULE + ('Utils.CreateWindow(module: module_1);\n'
                    'Utils.CreateHole(module: module_1, direction: "north", dimension: 900, height: 3);\n')
    out = repair_program(parse_program(src))
    assert [s.op_kind for s in out] == ["module-absolute", "hole"]
    assert "height" not in out.statements[1].arguments()


def test_repair_retargets_wrong_function():
    src = MODULE + 'Utils.CreateDoorOnMidpointForRoom(module: module_1, direction: "south");\n'
    out = repair_program(parse_program(src))
    assert out.statements[-1].sig.key == "door-midpoint-module"


def test_repair_repoints_forward_references():
    src = MODULE + 'Room r = new Room(name: "Kitchen", unit: unit_1, regular: true);\n' + UNIT
    out = repair_program(parse_program(src))
    assert not errors(static_check(out))


def test_repair_resets_invalid_enum_to_default():
    src = MODULE + ('Module m2 = new Module(name: "M2", module: module_1, direction: "east", length: 3000, '
                    'width: 6000, alignment: "diagonal", offset_direction: "none", offset: 0);\n')
    out = repair_program(parse_program(src))
    assert out.statements[-1].arguments()["alignment"] == "none"


def test_unrepairable_positional_call():
    with pytest.raises(Unrepairable):
        repair_program(parse_program('Module m = new Module("M");\n'))


def test_repair_is_identity_on_clean_programs(gold_sources):
    for src in gold_sources.values():
        p = parse_strict(src)
        assert repair_program(p) == p
