Module module_1 = new Module(name: "Module 1", point: initial_point, length: 4000, width: 4000);
Module module_2 = new Module(name: "Module 2", module: module_1, direction: "west", length: 3000, width: 4000, alignment: "north", offset_direction: "none", offset: 0);
Module module_3 = new Module(name: "Module 3", module: module_1, direction: "south", length: 4000, width: 2500, alignment: "east", offset_direction: "none", offset: 0);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1, module_2, module_3 });
Room living_room = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: true);
Room bedroom = new Room(name: "Bedroom", module: module_2, unit: unit_1, regular: true);
Room kitchen = new Room(name: "Kitchen", module: module_3, unit: unit_1, direction: "east", dimension: 2000, open: true);
Room bathroom = new Room(name: "Bathroom", module: module_3, unit: unit_1, regular: false);
Utils.CreateDoorOnMidpointForRoom(room: bedroom, direction: "east");
Utils.CreateHole(module: module_3, direction: "north", alignment: "east", offset: 200, dimension: 1200);
