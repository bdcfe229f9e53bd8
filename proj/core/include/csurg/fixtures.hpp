#pragma once

#include <string>
#include <string_view>

#include "csurg/atlas.hpp"
#include "csurg/linkalg.hpp"

namespace csurg::fixtures {

// Family linking fixture <-> JSON (schema: version, description,
// components[{label, knot_type, tb, rot, role, coefficient?}], linking).
std::string family_fixture_to_json(const atlas::FamilyFixture& fixture);
atlas::FamilyFixture parse_family_fixture(std::string_view json_text);

// Move script <-> JSON. Moves follow the wire form
//   {"op": "slide", "i": 2, "j": 0, "sign": -1} | {"op": "blowdown", "i": 1}
// and diagrams are {"labels": [...], "matrix": [[...]]}.
std::string move_script_to_json(const linkalg::MoveScript& script);
linkalg::MoveScript parse_move_script(std::string_view json_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

atlas::FamilyFixture load_family_fixture(const std::string& path);
linkalg::MoveScript load_move_script(const std::string& path);

}  // namespace csurg::fixtures
