Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3200, width: 6000);
Module module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3200, width: 6000, alignment: "south", offset_direction: "none", offset: 0);
Module module_3 = new Module(name: "Module 3", module: module_2, direction: "east", length: 3200, width: 6000, alignment: "south", offset_direction: "none", offset: 0);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1 });
Unit unit_2 = new Unit(name: "Unit 2", modules: new List<Module> { module_2 });
Unit unit_3 = new Unit(name: "Unit 3", modules: new List<Module> { module_3 });
Room living_room = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: true);
Room living_room_2 = new Room(name: "Living Room 2", module: module_2, unit: unit_2, regular: true);
Room living_room_3 = new Room(name: "Living Room 3", module: module_3, unit: unit_3, regular: true);
Utils.CreateDoorOnMidpointForModule(module: module_1, direction: "south");
Utils.CreateDoorOnMidpointForModule(module: module_2, direction: "south");
Utils.CreateDoorOnMidpointForModule(module: module_3, direction: "south");
