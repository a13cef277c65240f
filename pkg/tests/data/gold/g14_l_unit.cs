Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3000, width: 6000);
Module module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 4000, width: 3000, alignment: "south", offset_direction: "none", offset: 0);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1, module_2 });
Room bedroom = new Room(name: "Bedroom", module: module_2, unit: unit_1, corner: "southeast", length: 3000, width: 3000, offset_direction: "none", offset: 0, open: false);
Room bathroom = new Room(name: "Bathroom", module: module_1, unit: unit_1, corner: "northwest", length: 1800, width: 2200, offset_direction: "none", offset: 0, open: false);
Room living_room = new Room(name: "Living Room", unit: unit_1, regular: false);
Utils.CreateDoorForRoom(room: bedroom, direction: "west", alignment: "north", offset: 200, set: "in", set_dimension: 600);
Utils.CreateDoorOnMidpointForRoom(room: bathroom, direction: "east");
