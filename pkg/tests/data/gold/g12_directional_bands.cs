Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3000, width: 8000);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1 });
Room bedroom = new Room(name: "Bedroom", module: module_1, unit: unit_1, direction: "north", dimension: 3000, open: false);
Room kitchen = new Room(name: "Kitchen", module: module_1, unit: unit_1, direction: "south", dimension: 1800, open: true);
Room living_room = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: false);
Utils.CreateDoorOnMidpointForRoom(room: bedroom, direction: "south", dimension: 900);
