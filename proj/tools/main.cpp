// csurg: exact calculator for the surgered torus-bundle family M(m; p/q) --
// monodromy words, contact surgery expansions, surgered-manifold homology,
// Kirby move scripts, and the classification atlas.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "csurg/atlas.hpp"
#include "csurg/contact.hpp"
#include "csurg/errors.hpp"
#include "csurg/fixtures.hpp"
#include "csurg/monodromy.hpp"
#include "csurg/serialize.hpp"

namespace {

using namespace csurg;

struct GlobalOpts {
    std::string format;  // "", "table", "json", "csv"
    std::string out;
    std::string fixtures;

    // Tables on a terminal, JSON when writing to a file.
    std::string effective_format() const {
        if (!format.empty()) return format;
        return out.empty() ? "table" : "json";
    }

    const atlas::FamilyFixture& family_fixture(std::optional<atlas::FamilyFixture>& storage) const {
        if (fixtures.empty()) return atlas::default_family_fixture();
        storage = fixtures::load_family_fixture(fixtures);
        return *storage;
    }
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        fixtures::write_file(g.out, text);
    }
}

struct Grid {
    Integer m_min = -9, m_max = 0;
    Integer qmax = 8, pmax = 40;
};

// "m=-9..0,qmax=8,pmax=40" (any subset, any order).
Grid parse_grid(const std::string& text) {
    Grid grid;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("grid segment \"" + part + "\" needs '='");
        std::string key = part.substr(0, eq);
        std::string value = part.substr(eq + 1);
        if (key == "m") {
            std::size_t dots = value.find("..");
            if (dots == std::string::npos) {
                grid.m_min = grid.m_max = parse_integer(value);
            } else {
                grid.m_min = parse_integer(value.substr(0, dots));
                grid.m_max = parse_integer(value.substr(dots + 2));
            }
        } else if (key == "qmax") {
            grid.qmax = parse_integer(value);
        } else if (key == "pmax") {
            grid.pmax = parse_integer(value);
        } else {
            throw ParseError("unknown grid key \"" + key + "\" (expected m, qmax, pmax)");
        }
    }
    return grid;
}

int run(int argc, char** argv) {
    CLI::App app{"exact contact-surgery and Kirby-calculus toolkit for the M(m; p/q) family"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", g.out, "write the report to this path (defaults the format to json)");
    app.add_option("--fixtures", g.fixtures, "alternate family linking fixture (JSON)");

    // monodromy
    auto* mono = app.add_subcommand("monodromy", "twist word algebra");
    mono->require_subcommand(1);
    std::string word_text;
    auto* mono_word = mono->add_subcommand("word", "evaluate a twist word, e.g. \"a^4 b a\"");
    mono_word->add_option("word", word_text, "word in generators a, b")->required();
    std::string verify_m;
    auto* mono_verify =
        mono->add_subcommand("verify", "check ta^(-m+1) tb ta against [[m,1],[-1,0]]");
    mono_verify->add_option("m", verify_m, "integer m")->required();
    std::string classify_text;
    auto* mono_classify = mono->add_subcommand("classify", "trace trichotomy of a word's matrix");
    mono_classify->add_option("word", classify_text, "word in generators a, b")->required();

    // expand
    std::string expand_r;
    auto* expand = app.add_subcommand("expand", "contact surgery coefficient expansion");
    expand->add_option("r", expand_r, "rational contact coefficient, e.g. -5/2")->required();

    // homology
    auto* homology = app.add_subcommand("homology", "first homology of a family member or file");
    std::vector<std::string> hom_args;
    homology->add_option("params", hom_args, "m p q");
    std::string hom_input;
    homology->add_option("--input", hom_input,
                         "JSON file: presentation, framed_link, or rational_link");

    // certify
    auto* certify = app.add_subcommand("certify", "tightness certificate for M(m; p/q)");
    std::string cm, cp, cq;
    certify->add_option("m", cm, "integer m <= 0")->required();
    certify->add_option("p", cp, "numerator")->required();
    certify->add_option("q", cq, "denominator >= 1")->required();

    // atlas
    auto* atlas_cmd = app.add_subcommand("atlas", "classification table over a parameter grid");
    std::string grid_text = "m=-9..0,qmax=8,pmax=40";
    atlas_cmd->add_option("--grid", grid_text, "grid, e.g. m=-9..0,qmax=8,pmax=40");
    bool no_d3 = false, with_q0 = false, witnesses_only = false;
    unsigned jobs = 1;
    std::size_t d3_limit = 512;
    atlas_cmd->add_flag("--no-d3", no_d3, "skip d3 enumeration");
    atlas_cmd->add_flag("--with-q0", with_q0, "include slope-infinity rows");
    atlas_cmd->add_flag("--witnesses", witnesses_only,
                        "only rows with no essential lamination (all carry tight certificates)");
    atlas_cmd->add_option("--jobs", jobs, "worker threads");
    atlas_cmd->add_option("--d3-limit", d3_limit,
                          "skip d3 on rows with more stabilization choices than this");

    // kirby
    auto* kirby = app.add_subcommand("kirby", "verify a slide/blow-down move script");
    std::string script_path;
    kirby->add_option("script", script_path, "move script JSON file")->required();

    // Global options are accepted after a subcommand as well.
    for (auto* sc : app.get_subcommands(nullptr)) {
        sc->fallthrough();
        for (auto* nested : sc->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string format = g.effective_format();
    std::optional<atlas::FamilyFixture> fixture_storage;

    try {
        if (*mono_word || *mono_classify) {
            auto w = monodromy::TwistWord::parse(*mono_word ? word_text : classify_text);
            auto report = serialize::make_word_report(w);
            emit(g, format == "json" ? serialize::word_report_json(report)
                                     : serialize::word_report_table(report));
        } else if (*mono_verify) {
            auto report = serialize::make_verify_report(parse_integer(verify_m));
            emit(g, format == "json" ? serialize::verify_report_json(report)
                                     : serialize::verify_report_table(report));
        } else if (*expand) {
            auto report = serialize::make_expansion_report(parse_rational(expand_r));
            emit(g, format == "json" ? serialize::expansion_report_json(report)
                                     : serialize::expansion_report_table(report));
        } else if (*homology) {
            serialize::HomologyReport report;
            if (!hom_input.empty()) {
                report.source = hom_input;
                report.h1 = serialize::h1_of_input_json(fixtures::read_file(hom_input));
            } else if (hom_args.size() == 3) {
                atlas::FamilyParams fp{parse_integer(hom_args[0]), parse_integer(hom_args[1]),
                                       parse_integer(hom_args[2])};
                report.source = "M(" + fp.m.str() + ";" + fp.p.str() + "/" + fp.q.str() + ")";
                report.h1 = atlas::family_h1(fp);
            } else {
                std::cerr << "homology needs either m p q or --input FILE\n";
                return 2;
            }
            emit(g, format == "json" ? serialize::homology_report_json(report)
                                     : serialize::homology_report_table(report));
        } else if (*certify) {
            auto report = serialize::make_certificate_report(
                {parse_integer(cm), parse_integer(cp), parse_integer(cq)});
            emit(g, format == "json" ? serialize::certificate_report_json(report)
                                     : serialize::certificate_report_table(report));
        } else if (*atlas_cmd) {
            Grid grid = parse_grid(grid_text);
            atlas::AtlasOptions options;
            options.include_d3 = !no_d3;
            options.include_q0 = with_q0;
            options.jobs = jobs;
            options.d3_limit = d3_limit;
            const atlas::FamilyFixture& fixture = g.family_fixture(fixture_storage);
            options.fixture = &fixture;
            auto rows = atlas::build_atlas(grid.m_min, grid.m_max, grid.qmax, grid.pmax, options);
            if (witnesses_only) rows = atlas::witnesses(rows);
            if (format == "csv") {
                emit(g, serialize::atlas_to_csv(rows));
            } else if (format == "json") {
                emit(g, serialize::atlas_to_json(rows));
            } else {
                emit(g, serialize::atlas_to_table(rows));
            }
        } else if (*kirby) {
            auto script = fixtures::load_move_script(script_path);
            auto report = serialize::make_kirby_report(script, script_path);
            emit(g, format == "json" ? serialize::kirby_report_json(report)
                                     : serialize::kirby_report_table(report));
            if (!report.verified) return 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
