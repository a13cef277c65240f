Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3100, width: 5420);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1 });
Room bathroom = new Room(name: "Bathroom", module: module_1, unit: unit_1, corner: "northeast", length: 1600, width: 1800, offset_direction: "none", offset: 0, open: false);
Room living_room = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: false);
Utils.CreateDoorOnMidpointForRoom(room: bathroom, direction: "south");
Utils.CreateDoorOnMidpointForModule(module: module_1, direction: "south");
