Module module_1 = new Module(name: "Module 1", point: new Point(1000, 2000), length: 3000, width: 4000);
Module module_2 = new Module(name: "Module 2", module: module_1, direction: "north", length: 5000, width: 3000, alignment: "west", offset_direction: "west", offset: 500);
Module module_3 = new Module(name: "Module 3", module: module_2, direction: "east", length: 2500, width: 3000, alignment: "north", offset_direction: "none", offset: 0);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1, module_2 });
Unit unit_2 = new Unit(name: "Unit 2", modules: new List<Module> { module_3 });
Room bedroom = new Room(name: "Bedroom", module: module_1, unit: unit_1, regular: true);
Room living_room = new Room(name: "Living Room", module: module_2, unit: unit_1, regular: true);
Room kitchen = new Room(name: "Kitchen", module: module_3, unit: unit_2, regular: true);
Utils.CreateDoorForModule(module: module_3, direction: "east", alignment: "south", offset: 400, set: "out", set_dimension: 300, dimension: 1000);
