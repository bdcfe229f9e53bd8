#include "csurg/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "csurg/errors.hpp"

namespace csurg::serialize {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

Integer int_field(const json& v) {
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) return parse_integer(v.get<std::string>());
    throw ParseError("expected an integer value");
}

Rational rational_field(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("expected a rational value");
}

// Chains are arrays of [coefficient, budget] pairs.
json chain_to_json(const contact::ExpandedChain& e) {
    json chain = json::array();
    for (const auto& k : e.chain) {
        chain.push_back(json::array({k.coefficient.str(), k.stab_budget.str()}));
    }
    return json{{"plus_ones", e.plus_ones.str()}, {"chain", std::move(chain)}};
}

contact::ExpandedChain chain_from_json(const json& j) {
    contact::ExpandedChain e;
    e.plus_ones = int_field(j.at("plus_ones"));
    for (const auto& pair : j.at("chain")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("chain entries must be [coefficient, budget] pairs");
        }
        e.chain.push_back({int_field(pair[0]), int_field(pair[1])});
    }
    return e;
}

std::string route_name(contact::TightRoute r) { return contact::to_string(r); }

contact::TightRoute route_from_name(const std::string& s) {
    if (s == "SteinFillable") return contact::TightRoute::SteinFillable;
    if (s == "PositiveContactLS2") return contact::TightRoute::PositiveContactLS2;
    if (s == "TrefoilSurgery") return contact::TightRoute::TrefoilSurgery;
    throw ParseError("unknown route \"" + s + "\"");
}

json certificate_to_json_obj(const contact::TightnessCertificate& c) {
    json details;
    switch (c.route) {
        case contact::TightRoute::SteinFillable: {
            const auto& d = std::get<contact::SteinDetails>(c.details);
            details = json{{"r", format_rational(d.r)},
                           {"r_prime", format_rational(d.r_prime)},
                           {"surgery_chain", chain_to_json(d.surgery_chain)},
                           {"bundle_chain", chain_to_json(d.bundle_chain)}};
            break;
        }
        case contact::TightRoute::PositiveContactLS2: {
            const auto& d = std::get<contact::Ls2Details>(c.details);
            details = json{{"knot_type", d.knot_type},
                           {"tb", d.tb.str()},
                           {"g4", d.g4.str()},
                           {"r", format_rational(d.r)}};
            break;
        }
        case contact::TightRoute::TrefoilSurgery: {
            const auto& d = std::get<contact::TrefoilDetails>(c.details);
            details = json{{"smooth_coeff", d.smooth_coeff.str()},
                           {"contact_coeff", d.contact_coeff.str()}};
            break;
        }
    }
    return json{{"route", route_name(c.route)}, {"details", std::move(details)}};
}

contact::TightnessCertificate certificate_from_json_obj(const json& j) {
    contact::TightnessCertificate c;
    c.route = route_from_name(j.at("route").get<std::string>());
    const json& d = j.at("details");
    switch (c.route) {
        case contact::TightRoute::SteinFillable:
            c.details = contact::SteinDetails{rational_field(d.at("r")),
                                              rational_field(d.at("r_prime")),
                                              chain_from_json(d.at("surgery_chain")),
                                              chain_from_json(d.at("bundle_chain"))};
            break;
        case contact::TightRoute::PositiveContactLS2:
            c.details = contact::Ls2Details{d.at("knot_type").get<std::string>(),
                                            int_field(d.at("tb")), int_field(d.at("g4")),
                                            rational_field(d.at("r"))};
            break;
        case contact::TightRoute::TrefoilSurgery:
            c.details = contact::TrefoilDetails{int_field(d.at("smooth_coeff")),
                                                int_field(d.at("contact_coeff"))};
            break;
    }
    return c;
}

}  // namespace

std::string sl2_to_json(const monodromy::SL2Matrix& m) {
    return m.str();
}

monodromy::SL2Matrix parse_sl2(std::string_view json_text) {
    json j = parse_json(json_text, "matrix");
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2) {
        throw ParseError("expected [[a11,a12],[a21,a22]]");
    }
    return monodromy::SL2Matrix::from_entries(int_field(j[0][0]), int_field(j[0][1]),
                                              int_field(j[1][0]), int_field(j[1][1]));
}

WordReport make_word_report(const monodromy::TwistWord& w) {
    monodromy::SL2Matrix m = monodromy::word_to_matrix(w);
    return {w, m, m.trace(), monodromy::classify_monodromy(m)};
}

std::string word_report_json(const WordReport& r) {
    json j{{"word", r.word.str()},
           {"matrix", json::parse(r.matrix.str())},
           {"trace", r.trace.str()},
           {"class", monodromy::to_string(r.type)}};
    return j.dump(2) + "\n";
}

WordReport parse_word_report(std::string_view json_text) {
    json j = parse_json(json_text, "word report");
    WordReport r;
    r.word = monodromy::TwistWord::parse(j.at("word").get<std::string>());
    r.matrix = parse_sl2(j.at("matrix").dump());
    r.trace = int_field(j.at("trace"));
    std::string cls = j.at("class").get<std::string>();
    if (cls == "Anosov") r.type = monodromy::MonodromyType::Anosov;
    else if (cls == "Reducible") r.type = monodromy::MonodromyType::Reducible;
    else if (cls == "Periodic") r.type = monodromy::MonodromyType::Periodic;
    else throw ParseError("unknown class \"" + cls + "\"");
    return r;
}

std::string word_report_table(const WordReport& r) {
    std::ostringstream out;
    out << "word:   " << r.word.str() << "\n"
        << "matrix: " << r.matrix.str() << "\n"
        << "trace:  " << r.trace << "\n"
        << "class:  " << monodromy::to_string(r.type) << "\n";
    return out.str();
}

VerifyReport make_verify_report(const Integer& m) {
    return {m, monodromy::verify_monodromy_relation(m), m < 1};
}

std::string verify_report_json(const VerifyReport& r) {
    json j{{"m", r.m.str()}, {"holds", r.holds}, {"in_family", r.in_family}};
    return j.dump(2) + "\n";
}

std::string verify_report_table(const VerifyReport& r) {
    std::ostringstream out;
    out << "m = " << r.m << ": ta^" << Integer(-r.m + 1) << " tb ta "
        << (r.holds ? "==" : "!=") << " [[" << r.m << ",1],[-1,0]]"
        << (r.in_family ? "" : "  (outside the m < 1 family)") << "\n";
    return out.str();
}

ExpansionReport make_expansion_report(const Rational& r) {
    return {r, contact::full_expansion(r)};
}

std::string expansion_report_json(const ExpansionReport& r) {
    json j = chain_to_json(r.expansion);
    j["r"] = format_rational(r.r);
    return j.dump(2) + "\n";
}

ExpansionReport parse_expansion_report(std::string_view json_text) {
    json j = parse_json(json_text, "expansion report");
    return {rational_field(j.at("r")), chain_from_json(j)};
}

std::string expansion_report_table(const ExpansionReport& r) {
    std::ostringstream out;
    out << "r = " << format_rational(r.r) << "\n";
    out << "plus_ones = " << r.expansion.plus_ones << "\n";
    out << "chain = [";
    for (std::size_t i = 0; i < r.expansion.chain.size(); ++i) {
        out << (i ? ", " : "") << r.expansion.chain[i].coefficient;
    }
    out << "]\nbudgets = [";
    for (std::size_t i = 0; i < r.expansion.chain.size(); ++i) {
        out << (i ? ", " : "") << r.expansion.chain[i].stab_budget;
    }
    out << "]\nstructures = " << r.expansion.choice_count() << "\n";
    return out.str();
}

CertificateReport make_certificate_report(const atlas::FamilyParams& fp) {
    return {fp, contact::tightness_certificate(fp.m, fp.p, fp.q)};
}

std::string certificate_report_json(const CertificateReport& r) {
    json j = certificate_to_json_obj(r.certificate);
    j["m"] = r.params.m.str();
    j["p"] = r.params.p.str();
    j["q"] = r.params.q.str();
    return j.dump(2) + "\n";
}

CertificateReport parse_certificate_report(std::string_view json_text) {
    json j = parse_json(json_text, "certificate report");
    CertificateReport r;
    r.params = {int_field(j.at("m")), int_field(j.at("p")), int_field(j.at("q"))};
    r.certificate = certificate_from_json_obj(j);
    return r;
}

std::string certificate_report_table(const CertificateReport& r) {
    std::ostringstream out;
    out << "M(" << r.params.m << "; " << r.params.p << "/" << r.params.q << ") is tight\n";
    out << "route: " << route_name(r.certificate.route) << "\n";
    switch (r.certificate.route) {
        case contact::TightRoute::SteinFillable: {
            const auto& d = std::get<contact::SteinDetails>(r.certificate.details);
            out << "r = " << format_rational(d.r)
                << ", expansion uses only -1 surgeries (plus_ones = "
                << d.surgery_chain.plus_ones << ")\n";
            out << "r' = " << format_rational(d.r_prime)
                << ", expansion uses only -1 surgeries (plus_ones = " << d.bundle_chain.plus_ones
                << ")\n";
            break;
        }
        case contact::TightRoute::PositiveContactLS2: {
            const auto& d = std::get<contact::Ls2Details>(r.certificate.details);
            out << "knot " << d.knot_type << " with tb = " << d.tb << " = 2 g4 - 1 (g4 = " << d.g4
                << "), positive contact framing r = " << format_rational(d.r) << "\n";
            break;
        }
        case contact::TightRoute::TrefoilSurgery: {
            const auto& d = std::get<contact::TrefoilDetails>(r.certificate.details);
            out << "contact " << d.contact_coeff << " surgery on the right-handed trefoil "
                << "(smooth coefficient " << d.smooth_coeff << ")\n";
            break;
        }
    }
    return out.str();
}

std::string homology_report_json(const HomologyReport& r) {
    json torsion = json::array();
    for (const auto& d : r.h1.torsion) torsion.push_back(d.str());
    json j{{"source", r.source},
           {"h1", r.h1.str()},
           {"free_rank", r.h1.free_rank},
           {"torsion", std::move(torsion)}};
    return j.dump(2) + "\n";
}

std::string homology_report_table(const HomologyReport& r) {
    return "H1(" + r.source + ") = " + r.h1.str() + "\n";
}

AbelianGroup h1_of_input_json(std::string_view json_text) {
    json j = parse_json(json_text, "homology input");
    std::string type = j.value("type", "presentation");
    try {
        if (type == "presentation") {
            std::vector<std::vector<Integer>> rows;
            for (const auto& row : j.at("matrix")) {
                std::vector<Integer> r;
                for (const auto& cell : row) r.push_back(int_field(cell));
                rows.push_back(std::move(r));
            }
            return linkalg::h1_from_presentation(linkalg::IntMatrix::from_rows(std::move(rows)));
        }
        if (type == "framed_link") {
            std::vector<std::vector<Integer>> rows;
            for (const auto& row : j.at("matrix")) {
                std::vector<Integer> r;
                for (const auto& cell : row) r.push_back(int_field(cell));
                rows.push_back(std::move(r));
            }
            return linkalg::h1_of_link(
                linkalg::FramedLinkMatrix(linkalg::IntMatrix::from_rows(std::move(rows))));
        }
        if (type == "rational_link") {
            linkalg::RationalSurgeryLink link;
            std::vector<std::vector<Integer>> rows;
            for (const auto& row : j.at("linking")) {
                std::vector<Integer> r;
                for (const auto& cell : row) r.push_back(int_field(cell));
                rows.push_back(std::move(r));
            }
            link.linking = linkalg::IntMatrix::from_rows(std::move(rows));
            for (const auto& c : j.at("coefficients")) link.coefficients.push_back(rational_field(c));
            link.labels.resize(link.coefficients.size());
            return linkalg::h1_of_rational_link(link);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("homology input: ") + e.what());
    }
    throw ParseError("unknown homology input type \"" + type + "\"");
}

namespace {

json atlas_row_to_json(const atlas::AtlasRow& row) {
    json j{{"m", row.params.m.str()},
           {"p", row.params.p.str()},
           {"q", row.params.q.str()},
           {"h1", row.h1.str()},
           {"no_taut", row.no_taut},
           {"no_lamination", row.no_lamination},
           {"expected_hyperbolic", row.expected_hyperbolic}};
    j["r"] = row.r ? json(format_rational(*row.r)) : json(nullptr);
    j["r_prime"] = row.r_prime ? json(format_rational(*row.r_prime)) : json(nullptr);
    j["structure_count"] = row.structure_count ? json(row.structure_count->str()) : json(nullptr);
    j["tight_route"] = row.tight ? json(route_name(row.tight->route)) : json(nullptr);
    j["tight"] = row.tight ? certificate_to_json_obj(*row.tight) : json(nullptr);
    json d3s = json::array();
    for (const auto& v : row.d3_values) d3s.push_back(format_rational(v));
    j["d3_values"] = std::move(d3s);
    return j;
}

atlas::AtlasRow atlas_row_from_json(const json& j) {
    atlas::AtlasRow row;
    row.params = {int_field(j.at("m")), int_field(j.at("p")), int_field(j.at("q"))};
    row.h1 = AbelianGroup::parse(j.at("h1").get<std::string>());
    row.no_taut = j.at("no_taut").get<bool>();
    row.no_lamination = j.at("no_lamination").get<bool>();
    row.expected_hyperbolic = j.at("expected_hyperbolic").get<bool>();
    if (!j.at("r").is_null()) row.r = rational_field(j.at("r"));
    if (!j.at("r_prime").is_null()) row.r_prime = rational_field(j.at("r_prime"));
    if (!j.at("structure_count").is_null())
        row.structure_count = int_field(j.at("structure_count"));
    if (!j.at("tight").is_null()) row.tight = certificate_from_json_obj(j.at("tight"));
    for (const auto& v : j.at("d3_values")) row.d3_values.push_back(rational_field(v));
    return row;
}

std::string csv_cell_d3(const atlas::AtlasRow& row) {
    std::string out;
    for (std::size_t i = 0; i < row.d3_values.size(); ++i) {
        if (i) out += ';';
        out += format_rational(row.d3_values[i]);
    }
    return out;
}

}  // namespace

std::string atlas_to_csv(const std::vector<atlas::AtlasRow>& rows) {
    std::ostringstream out;
    out << "m,p,q,r,r_prime,h1,structure_count,no_taut,no_lamination,tight_route,d3_values,"
           "expected_hyperbolic\n";
    for (const auto& row : rows) {
        out << row.params.m << ',' << row.params.p << ',' << row.params.q << ',';
        out << (row.r ? format_rational(*row.r) : "") << ',';
        out << (row.r_prime ? format_rational(*row.r_prime) : "") << ',';
        out << row.h1.str() << ',';
        out << (row.structure_count ? row.structure_count->str() : "") << ',';
        out << (row.no_taut ? "true" : "false") << ',';
        out << (row.no_lamination ? "true" : "false") << ',';
        out << (row.tight ? route_name(row.tight->route) : "") << ',';
        out << csv_cell_d3(row) << ',';
        out << (row.expected_hyperbolic ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string atlas_to_json(const std::vector<atlas::AtlasRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(atlas_row_to_json(row));
    return arr.dump(2) + "\n";
}

std::vector<atlas::AtlasRow> parse_atlas_json(std::string_view json_text) {
    json arr = parse_json(json_text, "atlas");
    if (!arr.is_array()) throw ParseError("atlas JSON must be an array of rows");
    std::vector<atlas::AtlasRow> rows;
    rows.reserve(arr.size());
    for (const auto& j : arr) rows.push_back(atlas_row_from_json(j));
    return rows;
}

std::string atlas_to_table(const std::vector<atlas::AtlasRow>& rows) {
    std::ostringstream out;
    out << "   m     p/q   r       r'     H1              #xi  taut- lam-  route              hyp\n";
    for (const auto& row : rows) {
        std::ostringstream slope;
        slope << row.params.p << "/" << row.params.q;
        std::ostringstream line;
        auto pad = [&line](const std::string& s, std::size_t w) {
            line << s;
            for (std::size_t i = s.size(); i < w; ++i) line << ' ';
        };
        pad(row.params.m.str(), 6);
        pad(slope.str(), 8);
        pad(row.r ? format_rational(*row.r) : "-", 8);
        pad(row.r_prime ? format_rational(*row.r_prime) : "-", 7);
        pad(row.h1.str(), 16);
        pad(row.structure_count ? row.structure_count->str() : "-", 5);
        pad(row.no_taut ? "yes" : ".", 6);
        pad(row.no_lamination ? "yes" : ".", 6);
        pad(row.tight ? route_name(row.tight->route) : "-", 19);
        line << (row.expected_hyperbolic ? "yes" : ".");
        out << line.str() << "\n";
    }
    out << "(" << rows.size() << " rows)\n";
    return out.str();
}

KirbyReport make_kirby_report(const linkalg::MoveScript& script, const std::string& source) {
    KirbyReport r;
    r.source = source;
    r.moves = script.moves.size();
    r.verified = script.verify();
    r.start_h1 = linkalg::h1_of_link(script.start);
    r.target_h1 = linkalg::h1_of_link(script.target);
    return r;
}

std::string kirby_report_json(const KirbyReport& r) {
    json j{{"source", r.source},
           {"verified", r.verified},
           {"moves", r.moves},
           {"start_h1", r.start_h1.str()},
           {"target_h1", r.target_h1.str()}};
    return j.dump(2) + "\n";
}

std::string kirby_report_table(const KirbyReport& r) {
    std::ostringstream out;
    out << "script:    " << r.source << "\n"
        << "moves:     " << r.moves << "\n"
        << "start H1:  " << r.start_h1.str() << "\n"
        << "target H1: " << r.target_h1.str() << "\n"
        << "verified:  " << (r.verified ? "yes" : "NO") << "\n";
    return out.str();
}

}  // namespace csurg::serialize
