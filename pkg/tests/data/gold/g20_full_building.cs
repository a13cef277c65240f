Module module_1 = new Module(name: "Module 1", point: initial_point, length: 3100, width: 5420);
Module module_2 = new Module(name: "Module 2", module: module_1, direction: "east", length: 3100, width: 5420, alignment: "south", offset_direction: "none", offset: 0);
Module module_3 = new Module(name: "Module 3", module: module_2, direction: "east", length: 3100, width: 5420, alignment: "south", offset_direction: "none", offset: 0);
Module module_4 = new Module(name: "Module 4", module: module_1, direction: "north", length: 6200, width: 3000, alignment: "west", offset_direction: "none", offset: 0);
List<Module> parts = Utils.SplitModule(module: module_4, direction: "north-south", ratio: 0.5);
Module module_4_west = parts[0];
Module module_4_east = parts[1];
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1, module_4_west });
Unit unit_2 = new Unit(name: "Unit 2", modules: new List<Module> { module_2, module_4_east });
Unit unit_3 = new Unit(name: "Unit 3", modules: new List<Module> { module_3 });
Room bedroom = new Room(name: "Bedroom", module: module_4_west, unit: unit_1, regular: true);
Room bathroom = new Room(name: "Bathroom", module: module_1, unit: unit_1, corner: "southwest", length: 1600, width: 1800, offset_direction: "none", offset: 0, open: false);
Room living_room = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: false);
Room bedroom_2 = new Room(name: "Bedroom 2", module: module_4_east, unit: unit_2, regular: true);
Room kitchen = new Room(name: "Kitchen", module: module_2, unit: unit_2, direction: "south", dimension: 1500, open: true);
Room living_room_2 = new Room(name: "Living Room 2", module: module_2, unit: unit_2, regular: false);
Room living_room_3 = new Room(name: "Living Room 3", module: module_3, unit: unit_3, regular: true);
Utils.CreateDoorOnMidpointForRoom(room: bedroom, direction: "south");
Utils.CreateDoorOnMidpointForRoom(room: bedroom_2, direction: "south");
Utils.CreateDoorForRoom(room: bathroom, direction: "north", alignment: "west", offset: 200, set: "in", set_dimension: 600, dimension: 700);
Utils.CreateDoorOnMidpointForModule(module: module_3, direction: "south");
