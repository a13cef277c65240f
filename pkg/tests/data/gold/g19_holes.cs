Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3500, width: 7000);
Module module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3500, width: 7000, alignment: "north", offset_direction: "none", offset: 0);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1, module_2 });
Room living_room = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: true);
Room kitchen = new Room(name: "Kitchen", module: module_2, unit: unit_1, direction: "north", dimension: 2500, open: true);
Room bedroom = new Room(name: "Bedroom", module: module_2, unit: unit_1, regular: false);
Utils.CreateHole(module: module_2, direction: "west", alignment: "north", offset: 500, dimension: 2000);
Utils.CreateHole(module: module_1, direction: "north", alignment: "none", offset: 0, dimension: 1500);
Utils.CreateDoorForRoom(room: bedroom, direction: "west", alignment: "south", offset: 300, set: "in", set_dimension: 500);
