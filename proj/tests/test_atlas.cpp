#include <doctest.h>

#include "csurg/atlas.hpp"
#include "csurg/errors.hpp"
#include "csurg/fixtures.hpp"
#include "support.hpp"

using namespace csurg;
using namespace csurg::atlas;

namespace {

// H1 of the fully expanded smooth diagram for one (any) rot choice.
AbelianGroup expanded_h1(const FamilyParams& fp) {
    auto presentation = presentation_for(fp, default_family_fixture());
    auto smooth = contact::smooth_presentation(presentation, {});
    return linkalg::h1_of_link(smooth.link);
}

}  // namespace

TEST_CASE("slope formulas") {
    CHECK(family_r({-3, 5, 2}) == Rational(3, 2));
    CHECK(family_r_prime({-3, 5, 2}) == Rational(-1, 4));
    CHECK(family_r({0, 1, 2}) == Rational(-1, 2));
    CHECK(family_r_prime({0, 1, 2}) == Rational(-1));
}

TEST_CASE("family homology closed form") {
    CHECK(family_h1({-3, 1, 1}) == AbelianGroup{0, {5}});
    CHECK(family_h1({-3, 5, 2}) == AbelianGroup{0, {5, 5}});
    CHECK(family_h1({-3, 0, 1}) == AbelianGroup{1, {5}});

    SUBCASE("slope-one members are cyclic of order -m + 2") {
        for (long long m = -20; m <= 0; ++m) {
            AbelianGroup g = family_h1({m, 1, 1});
            CHECK(g.free_rank == 0);
            CHECK(g.torsion_order() == Integer(-m + 2));
            CHECK(g.torsion.size() <= 1);
        }
    }
    SUBCASE("independent of q") {
        for (long long q : {1, 2, 3, 4, 6}) {
            CHECK(family_h1({-3, 5, q}) == family_h1({-3, 5, 1}));
        }
    }
}

TEST_CASE("whitehead link cross-check") {
    AbelianGroup w = whitehead_check();
    CHECK(w == AbelianGroup{0, {5, 5}});
    CHECK(w == family_h1({-3, 5, 2}));
    CHECK(w.torsion_order() == 25);
}

TEST_CASE("foliation and lamination predicates") {
    CHECK(no_taut_foliation({-3, 3, 2}));
    CHECK_FALSE(no_taut_foliation({-4, 3, 2}));  // m must be odd
    CHECK_FALSE(no_taut_foliation({-3, 2, 1}));  // p must be odd
    CHECK_FALSE(no_taut_foliation({-1, 3, 2}));  // m must be <= -3
    CHECK_FALSE(no_taut_foliation({-3, 1, 2}));  // p >= q fails

    CHECK(no_essential_lamination({-4, 5, 2}));
    CHECK_FALSE(no_essential_lamination({-3, 5, 2}));  // m must be <= -4
    CHECK(no_essential_lamination({-5, 7, 3}));
    CHECK_FALSE(no_essential_lamination({-5, 8, 3}));

    SUBCASE("literal truth table on random parameters") {
        auto g = testsupport::rng(31);
        int tested = 0;
        while (tested < 500) {
            long long m = testsupport::rand_int(g, -12, 0);
            long long q = testsupport::rand_int(g, 0, 9);
            long long p = testsupport::rand_int(g, -25, 25);
            if (gcd(Integer(p), Integer(q)) != 1) continue;
            ++tested;
            bool nt = (m <= -3) && (m % 2 != 0) && (p % 2 != 0) && (p >= q);
            bool nl = (m <= -4) && (std::abs(p - 2 * q) == 1);
            CHECK(no_taut_foliation({m, p, q}) == nt);
            CHECK(no_essential_lamination({m, p, q}) == nl);
        }
    }
}

TEST_CASE("family presentation") {
    SUBCASE("coefficients land on the fixture roles") {
        auto p = family_presentation({-3, 5, 2});
        REQUIRE(p.components.size() == 2);
        CHECK(p.components[0].knot_type == "5_2");
        CHECK(p.components[0].tb == 1);
        CHECK(p.components[0].contact_coeff == Rational(3, 2));
        CHECK(p.components[1].knot_type == "unknot");
        CHECK(p.components[1].contact_coeff == Rational(-1, 4));
    }
    SUBCASE("p = q needs the trefoil form") {
        CHECK_THROWS_AS(family_presentation({-3, 1, 1}), ZeroCoefficientError);
        auto p = presentation_for({-3, 1, 1}, default_family_fixture());
        REQUIRE(p.components.size() == 1);
        CHECK(p.components[0].knot_type == "rh_trefoil");
        CHECK(p.components[0].contact_coeff == Rational(4));
    }
    SUBCASE("out of family errors") {
        CHECK_THROWS_AS(family_presentation({1, 5, 2}), OutOfFamilyError);
        CHECK_THROWS_AS(family_presentation({-3, 5, 0}), OutOfFamilyError);
        CHECK_THROWS_AS(family_presentation({-3, 4, 2}), OutOfFamilyError);
    }
}

TEST_CASE("expanded smooth diagram homology matches the closed form") {
    // The binding validation between the linking fixture and family_h1;
    // the acceptance suite runs the full grid.
    for (long long m : {-4, -1, 0}) {
        for (long long q = 1; q <= 3; ++q) {
            for (long long p = -7; p <= 7; ++p) {
                if (gcd(Integer(p), Integer(q)) != 1) continue;
                FamilyParams fp{m, p, q};
                CHECK(expanded_h1(fp) == family_h1(fp));
            }
        }
    }
}

TEST_CASE("bundle transcription homology matches the closed form") {
    for (long long m : {-5, -3, -2, 0}) {
        for (long long q = 1; q <= 3; ++q) {
            for (long long p = -6; p <= 6; ++p) {
                if (gcd(Integer(p), Integer(q)) != 1) continue;
                FamilyParams fp{m, p, q};
                CHECK(linkalg::h1_of_rational_link(bundle_surgery_link(fp)) == family_h1(fp));
            }
        }
    }
}

TEST_CASE("trefoil reduction script") {
    SUBCASE("m = -3 reduces to the 5-framed trefoil") {
        linkalg::MoveScript s = trefoil_reduction_script(-3);
        CHECK(s.start.size() == 9);
        CHECK(s.target.size() == 1);
        CHECK(s.target.framing(0) == 5);
        CHECK(s.verify());
        CHECK(linkalg::h1_of_link(s.start) == AbelianGroup{0, {5}});
        CHECK(linkalg::h1_of_link(s.target) == AbelianGroup{0, {5}});
    }
    SUBCASE("other family members reduce the same way") {
        for (long long m : {-6, -1, 0}) {
            linkalg::MoveScript s = trefoil_reduction_script(m);
            CHECK(s.verify());
            CHECK(linkalg::h1_of_link(s.start) == family_h1({m, 1, 1}));
        }
    }
}

TEST_CASE("atlas generation") {
    AtlasOptions opts;
    opts.include_d3 = false;
    auto rows = build_atlas(-5, -3, 3, 6, opts);
    REQUIRE(!rows.empty());

    SUBCASE("rows are sorted by (m, q, p) and all coprime") {
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            const auto& a = rows[i].params;
            const auto& b = rows[i + 1].params;
            bool ordered = (a.m < b.m) || (a.m == b.m && a.q < b.q) ||
                           (a.m == b.m && a.q == b.q && a.p < b.p);
            CHECK(ordered);
        }
        for (const auto& row : rows) {
            CHECK(gcd(row.params.p, row.params.q) == 1);
            CHECK(row.params.q >= 1);
        }
    }
    SUBCASE("every row carries a tightness certificate") {
        for (const auto& row : rows) {
            REQUIRE(row.tight.has_value());
            if (row.params.p < row.params.q)
                CHECK(row.tight->route == contact::TightRoute::SteinFillable);
        }
    }
    SUBCASE("structure count is 1 exactly at |p - q| = 1 away from p = q") {
        for (const auto& row : rows) {
            if (row.params.p == row.params.q) continue;
            CHECK((*row.structure_count == 1) == (abs(row.params.p - row.params.q) == 1));
        }
    }
    SUBCASE("witness rows are the laminar-free ones") {
        auto w = witnesses(rows);
        CHECK(!w.empty());
        for (const auto& row : w) {
            CHECK(row.no_lamination);
            CHECK(row.tight.has_value());
        }
    }
    SUBCASE("expected_hyperbolic flags |m| > 2") {
        for (const auto& row : rows) {
            CHECK(row.expected_hyperbolic == (row.params.m <= -3));
        }
    }
}

TEST_CASE("atlas d3 values are deterministic and parallel-safe") {
    AtlasOptions seq;
    auto rows1 = build_atlas(-4, -3, 2, 4, seq);
    AtlasOptions par = seq;
    par.jobs = 4;
    auto rows2 = build_atlas(-4, -3, 2, 4, par);
    REQUIRE(rows1.size() == rows2.size());
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].params == rows2[i].params);
        CHECK(rows1[i].d3_values == rows2[i].d3_values);
        CHECK(rows1[i].h1 == rows2[i].h1);
    }
    // d3 count matches the structure count when within the limit.
    for (const auto& row : rows1) {
        REQUIRE(row.structure_count.has_value());
        CHECK(Integer(row.d3_values.size()) == *row.structure_count);
    }
}

TEST_CASE("q = 0 rows appear only behind the flag") {
    AtlasOptions opts;
    opts.include_d3 = false;
    auto rows = build_atlas(-3, -3, 1, 2, opts);
    for (const auto& row : rows) CHECK(row.params.q >= 1);

    opts.include_q0 = true;
    auto with_q0 = build_atlas(-3, -3, 1, 2, opts);
    bool saw_q0 = false;
    for (const auto& row : with_q0) {
        if (row.params.q == 0) {
            saw_q0 = true;
            CHECK_FALSE(row.tight.has_value());
            CHECK_FALSE(row.structure_count.has_value());
            CHECK(row.d3_values.empty());
        }
    }
    CHECK(saw_q0);
}

TEST_CASE("shipped fixtures agree with the built-in data") {
    SUBCASE("family fixture file") {
        auto fixture = fixtures::load_family_fixture(std::string(CSURG_FIXTURES_DIR) +
                                                     "/family_presentation.json");
        const auto& builtin = default_family_fixture();
        CHECK(fixture.version == builtin.version);
        REQUIRE(fixture.components.size() == builtin.components.size());
        for (std::size_t i = 0; i < fixture.components.size(); ++i) {
            CHECK(fixture.components[i].label == builtin.components[i].label);
            CHECK(fixture.components[i].knot_type == builtin.components[i].knot_type);
            CHECK(fixture.components[i].tb == builtin.components[i].tb);
            CHECK(fixture.components[i].rot == builtin.components[i].rot);
            CHECK(fixture.components[i].role == builtin.components[i].role);
        }
        CHECK(fixture.linking == builtin.linking);
    }
    SUBCASE("trefoil reduction script file") {
        auto script = fixtures::load_move_script(std::string(CSURG_FIXTURES_DIR) +
                                                 "/trefoil_reduction.json");
        auto builtin = trefoil_reduction_script(-3);
        CHECK(script.start == builtin.start);
        CHECK(script.target == builtin.target);
        CHECK(script.moves == builtin.moves);
        CHECK(script.verify());
    }
}
