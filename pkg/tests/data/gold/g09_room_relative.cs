Module module_1 = new Module(name: "Module 1", point: initial_point, length: 5000, width: 4000);
Unit unit_1 = new Unit(name: "Unit 1", modules: new List<Module> { module_1 });
Room bathroom = new Room(name: "Bathroom", module: module_1, unit: unit_1, corner: "northwest", length: 1500, width: 1800, offset_direction: "none", offset: 0, open: false);
Room kitchen = new Room(name: "Kitchen", unit: unit_1, room: bathroom, direction: "east", length: 1640, width: 1220, alignment: "north", offset_direction: "none", offset: 0, open: false);
Room living_room = new Room(name: "Living Room", module: module_1, unit: unit_1, regular: false);
Utils.CreateDoorOnMidpointForRoom(room: kitchen, direction: "south", dimension: 800);
