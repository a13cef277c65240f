"""The twelve reference action snippets, each with the minimal statements it needs.

Each row is (action, method, prerequisites, snippet, expected category).
"""

BASE = 'Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3000, width: 6000);'
BASE_UNIT = BASE + '\nUnit unit = new Unit(name: "Unit", modules: new List<Module> { module_1 });'
MODULE_AND_UNIT = (
    'Module module = new Module(name: "Module", point: initial_point, length: 5000, width: 4000);\n'
    'Unit unit = new Unit(name: "Unit", modules: new List<Module> { module });'
)

ROWS = [
    ("module creation", "absolute coordinate", "",
     'Module module = new Module(name: "Module", point: initial_point, length: 2800, width: 6880);', "module"),
    ("module creation", "relative position", BASE,
     'Module module_3 = new Module(name: "Module 3", module: module_1, direction: "south", length: 2240, width: 1620, '
     'alignment: "east", offset_direction: "west", offset: 2000);', "module"),
    ("module operation", "module split",
     BASE + '\nModule module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3000, '
     'width: 6000, alignment: "north", offset_direction: "none", offset: 0);',
     'List<Module> new_modules = Utils.SplitModule(module: module_2, direction: "west-east", ratio: 0.5);\n'
     'Module module_2_north = new_modules[0];\nModule module_2_south = new_modules[1];', "module"),
    ("module operation", "module merging",
     BASE + '\nModule module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3000, '
     'width: 6000, alignment: "north", offset_direction: "none", offset: 0);',
     'Utils.MergeModules(modules: new List<Module> { module_1, module_2 });', "module"),
    ("unit initialization", "combination of modules",
     BASE + '\nModule module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3000, '
     'width: 6000, alignment: "north", offset_direction: "none", offset: 0);\n'
     'List<Module> new_modules = Utils.SplitModule(module: module_2, direction: "west-east", ratio: 0.5);\n'
     'Module module_2_north = new_modules[0];\nModule module_2_south = new_modules[1];',
     'Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1, module_2_north });', "unit"),
    ("unit initialization", "combination of directional modules",
     'Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3000, width: 5800);\n'
     'Module module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3000, width: 5800, '
     'alignment: "south", offset_direction: "none", offset: 0);\n'
     'Module module_3 = new Module(name: "Module 3", module: module_2, direction: "east", length: 3000, width: 5800, '
     'alignment: "south", offset_direction: "none", offset: 0);',
     'Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1, module_2, module_3 }, '
     'direction: "north", dimensions: new List<double> { 5800, 5800, 5800 });', "unit"),
    ("room assignment", "module/unit-based", MODULE_AND_UNIT,
     'Room living_room = new Room(name: "Living Room", module: module, unit: unit, regular: false);', "room"),
    ("room assignment", "direction-oriented", MODULE_AND_UNIT,
     'Room kitchen = new Room(name: "Kitchen", module: module, unit: unit, direction: "south", dimension: 1800, '
     'open: true);', "room"),
    ("room assignment", "corner-oriented", MODULE_AND_UNIT,
     'Room kitchen = new Room(name: "Kitchen", module: module, unit: unit, corner: "southwest", length: 1600, '
     'width: 1200, offset_direction: "none", offset: 0, open: true);', "room"),
    ("room assignment", "relative", MODULE_AND_UNIT
     + '\nRoom bathroom = new Room(name: "Bathroom", module: module, unit: unit, corner: "northwest", length: 1500, '
     'width: 1800, offset_direction: "none", offset: 0, open: false);',
     'Room kitchen = new Room(name: "Kitchen", unit: unit, room: bathroom, direction: "east", length: 1640, '
     'width: 1220, alignment: "north", offset_direction: "none", offset: 0, open: false);', "room"),
    ("element placement", "door",
     'Module module_1 = new Module(name: "Module 1", point: initial_point, length: 4000, width: 4000);\n'
     'Unit unit = new Unit(name: "Unit", modules: new List<Module> { module_1 });\n'
     'Room bedroom_3 = new Room(name: "Bedroom 3", module: module_1, unit: unit, corner: "northeast", length: 3000, '
     'width: 3000, offset_direction: "none", offset: 0, open: false);',
     'Utils.CreateDoorForRoom(room: bedroom_3, direction: "west", alignment: "south", offset: 0, set: "in", '
     'set_dimension: 600);', "element"),
    ("element placement", "hole",
     BASE + '\nModule module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3000, '
     'width: 6000, alignment: "north", offset_direction: "none", offset: 0);',
     'Utils.CreateHole(module: module_2, direction: "north", alignment: "none", offset: 0, dimension: 2000);',
     "element"),
]
