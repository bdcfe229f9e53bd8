#include "csurg/fixtures.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "csurg/errors.hpp"

namespace csurg::fixtures {

using nlohmann::json;

namespace {

json matrix_to_json(const linkalg::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

linkalg::IntMatrix matrix_from_json(const json& rows) {
    if (!rows.is_array()) throw ParseError("matrix must be an array of arrays");
    std::vector<std::vector<Integer>> data;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("matrix row must be an array");
        std::vector<Integer> r;
        for (const auto& cell : row) {
            if (cell.is_number_integer()) {
                r.push_back(Integer(cell.get<long long>()));
            } else if (cell.is_string()) {
                r.push_back(parse_integer(cell.get<std::string>()));
            } else {
                throw ParseError("matrix entries must be integers");
            }
        }
        data.push_back(std::move(r));
    }
    try {
        return linkalg::IntMatrix::from_rows(std::move(data));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Integer int_from_json(const json& v, const char* what) {
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) return parse_integer(v.get<std::string>());
    throw ParseError(std::string(what) + " must be an integer");
}

json diagram_to_json(const linkalg::FramedLinkMatrix& link) {
    return json{{"labels", link.labels()}, {"matrix", matrix_to_json(link.matrix())}};
}

linkalg::FramedLinkMatrix diagram_from_json(const json& j) {
    linkalg::IntMatrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("labels")) {
        try {
            return {std::move(m), j.at("labels").get<std::vector<std::string>>()};
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    return linkalg::FramedLinkMatrix(std::move(m));
}

std::string role_name(atlas::FixtureRole role) {
    switch (role) {
        case atlas::FixtureRole::SurgerySlope: return "surgery_slope";
        case atlas::FixtureRole::BundleSlope: return "bundle_slope";
        case atlas::FixtureRole::Fixed: return "fixed";
    }
    return "?";
}

atlas::FixtureRole role_from_name(const std::string& name) {
    if (name == "surgery_slope") return atlas::FixtureRole::SurgerySlope;
    if (name == "bundle_slope") return atlas::FixtureRole::BundleSlope;
    if (name == "fixed") return atlas::FixtureRole::Fixed;
    throw ParseError("unknown fixture role \"" + name + "\"");
}

}  // namespace

std::string family_fixture_to_json(const atlas::FamilyFixture& fixture) {
    json components = json::array();
    for (const auto& c : fixture.components) {
        json jc{{"label", c.label},
                {"knot_type", c.knot_type},
                {"tb", c.tb.str()},
                {"rot", c.rot.str()},
                {"role", role_name(c.role)}};
        if (c.coefficient) jc["coefficient"] = format_rational(*c.coefficient);
        components.push_back(std::move(jc));
    }
    json j{{"version", fixture.version},
           {"description", fixture.description},
           {"components", std::move(components)},
           {"linking", matrix_to_json(fixture.linking)}};
    return j.dump(2) + "\n";
}

atlas::FamilyFixture parse_family_fixture(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("fixture JSON: ") + e.what());
    }
    try {
        atlas::FamilyFixture f;
        f.version = j.at("version").get<int>();
        f.description = j.value("description", "");
        for (const auto& jc : j.at("components")) {
            atlas::FixtureComponent c;
            c.label = jc.at("label").get<std::string>();
            c.knot_type = jc.at("knot_type").get<std::string>();
            c.tb = int_from_json(jc.at("tb"), "tb");
            c.rot = int_from_json(jc.at("rot"), "rot");
            c.role = role_from_name(jc.at("role").get<std::string>());
            if (jc.contains("coefficient")) {
                c.coefficient = parse_rational(jc.at("coefficient").get<std::string>());
            }
            f.components.push_back(std::move(c));
        }
        f.linking = matrix_from_json(j.at("linking"));
        f.validate();
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("fixture JSON: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string move_script_to_json(const linkalg::MoveScript& script) {
    json moves = json::array();
    for (const auto& mv : script.moves) {
        if (mv.kind == linkalg::KirbyMove::Kind::Slide) {
            moves.push_back(json{{"op", "slide"}, {"i", mv.i}, {"j", mv.j}, {"sign", mv.sign}});
        } else {
            moves.push_back(json{{"op", "blowdown"}, {"i", mv.i}});
        }
    }
    json j{{"version", script.version},
           {"description", script.description},
           {"start", diagram_to_json(script.start)},
           {"moves", std::move(moves)},
           {"target", diagram_to_json(script.target)}};
    return j.dump(2) + "\n";
}

linkalg::MoveScript parse_move_script(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("move script JSON: ") + e.what());
    }
    try {
        linkalg::MoveScript s;
        s.version = j.value("version", 1);
        s.description = j.value("description", "");
        s.start = diagram_from_json(j.at("start"));
        s.target = diagram_from_json(j.at("target"));
        for (const auto& jm : j.at("moves")) {
            std::string op = jm.at("op").get<std::string>();
            if (op == "slide") {
                s.moves.push_back(linkalg::KirbyMove::slide(jm.at("i").get<std::size_t>(),
                                                            jm.at("j").get<std::size_t>(),
                                                            jm.at("sign").get<int>()));
            } else if (op == "blowdown") {
                s.moves.push_back(linkalg::KirbyMove::blow_down(jm.at("i").get<std::size_t>()));
            } else {
                throw ParseError("unknown move op \"" + op + "\"");
            }
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("move script JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

atlas::FamilyFixture load_family_fixture(const std::string& path) {
    return parse_family_fixture(read_file(path));
}

linkalg::MoveScript load_move_script(const std::string& path) {
    return parse_move_script(read_file(path));
}

}  // namespace csurg::fixtures
