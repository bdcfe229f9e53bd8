#include "csurg/atlas.hpp"

#include <algorithm>
#include <thread>

#include "csurg/errors.hpp"
#include "csurg/monodromy.hpp"

namespace csurg::atlas {

void validate_params(const FamilyParams& fp, bool for_contact) {
    if (fp.q < 0) {
        throw OutOfFamilyError("q must be >= 0, got " + fp.q.str());
    }
    if (gcd(fp.p, fp.q) != 1) {
        throw OutOfFamilyError("p and q must be coprime, got p = " + fp.p.str() +
                               ", q = " + fp.q.str());
    }
    if (for_contact) {
        if (fp.q < 1) throw OutOfFamilyError("contact operations need q >= 1");
        if (fp.m > 0) throw OutOfFamilyError("contact operations need m <= 0, got m = " + fp.m.str());
    }
}

Rational family_r(const FamilyParams& fp) {
    validate_params(fp, /*for_contact=*/true);
    return Rational(fp.p - fp.q, fp.q);
}

Rational family_r_prime(const FamilyParams& fp) {
    validate_params(fp, /*for_contact=*/true);
    return Rational(-1, -fp.m + 1);
}

void FamilyFixture::validate() const {
    if (linking.rows() != components.size() || linking.cols() != components.size()) {
        throw Error("fixture linking matrix does not match component count");
    }
    if (!linking.is_symmetric()) throw Error("fixture linking matrix must be symmetric");
    bool surgery = false, bundle = false;
    for (const auto& c : components) {
        if (c.role == FixtureRole::SurgerySlope) surgery = true;
        if (c.role == FixtureRole::BundleSlope) bundle = true;
        if (c.role == FixtureRole::Fixed && !c.coefficient) {
            throw Error("fixed component " + c.label + " needs a coefficient");
        }
    }
    if (!surgery || !bundle) {
        throw Error("fixture needs one surgery-slope and one bundle-slope component");
    }
}

const FamilyFixture& default_family_fixture() {
    static const FamilyFixture fixture = [] {
        FamilyFixture f;
        f.version = 1;
        f.description =
            "Two-component family diagram: the tb = 1 Legendrian 5_2 carries the surgery slope "
            "r = (p-q)/q, an unknot carries the bundle slope r' = -1/(-m+1). The twist-curve "
            "handles cancel, leaving the components algebraically unlinked.";
        f.components = {
            {"L", "5_2", 1, 0, FixtureRole::SurgerySlope, std::nullopt},
            {"A", "unknot", -1, 0, FixtureRole::BundleSlope, std::nullopt},
        };
        f.linking = linkalg::IntMatrix(2, 2);
        f.validate();
        return f;
    }();
    return fixture;
}

contact::ContactSurgeryPresentation trefoil_presentation(const Integer& m) {
    if (m > 0) throw OutOfFamilyError("trefoil presentation needs m <= 0");
    contact::ContactSurgeryPresentation p;
    p.components.push_back(
        {"T", "rh_trefoil", 1, 0, Rational(-m + 1), {}});
    p.validate();
    return p;
}

contact::ContactSurgeryPresentation family_presentation(const FamilyParams& fp,
                                                        const FamilyFixture& fixture,
                                                        bool trefoil_form) {
    validate_params(fp, /*for_contact=*/true);
    fixture.validate();
    if (fp.p == fp.q) {
        if (trefoil_form) return trefoil_presentation(fp.m);
        throw ZeroCoefficientError(
            "p/q = 1 makes the surgery-slope coefficient 0; the slope-one member is presented "
            "as a trefoil surgery instead");
    }
    contact::ContactSurgeryPresentation p;
    Rational r = family_r(fp);
    Rational r_prime = family_r_prime(fp);
    for (const auto& fc : fixture.components) {
        std::optional<Rational> coeff;
        switch (fc.role) {
            case FixtureRole::SurgerySlope: coeff = r; break;
            case FixtureRole::BundleSlope: coeff = r_prime; break;
            case FixtureRole::Fixed: coeff = fc.coefficient; break;
        }
        p.components.push_back({fc.label, fc.knot_type, fc.tb, fc.rot, coeff, {}});
    }
    for (std::size_t i = 0; i < fixture.components.size(); ++i) {
        for (std::size_t j = 0; j < fixture.components.size(); ++j) {
            if (i == j) continue;
            const Integer& lk = fixture.linking.at(i, j);
            if (lk != 0) p.components[i].links[fixture.components[j].label] = lk;
        }
    }
    p.validate();
    return p;
}

contact::ContactSurgeryPresentation family_presentation(const FamilyParams& fp) {
    return family_presentation(fp, default_family_fixture(), /*trefoil_form=*/false);
}

contact::ContactSurgeryPresentation presentation_for(const FamilyParams& fp,
                                                     const FamilyFixture& fixture) {
    return family_presentation(fp, fixture, /*trefoil_form=*/true);
}

AbelianGroup family_h1(const FamilyParams& fp) {
    validate_params(fp, /*for_contact=*/false);
    // Generators (t, x, y); relations p t = 0 and (A_m - I)(x, y)^T = 0.
    linkalg::PresentationMatrix r(3, 3);
    r.at(0, 0) = fp.p;
    r.at(1, 1) = fp.m - 1;
    r.at(1, 2) = 1;
    r.at(2, 1) = -1;
    r.at(2, 2) = -1;
    return linkalg::h1_from_presentation(r);
}

AbelianGroup whitehead_check() {
    linkalg::RationalSurgeryLink link;
    link.linking = linkalg::IntMatrix(2, 2);
    link.coefficients = {Rational(5), Rational(5, 2)};
    link.labels = {"W", "K"};
    return linkalg::h1_of_rational_link(link);
}

bool no_taut_foliation(const FamilyParams& fp) {
    validate_params(fp, /*for_contact=*/false);
    return fp.m <= -3 && fp.m % 2 != 0 && fp.p % 2 != 0 && fp.p >= fp.q;
}

bool no_essential_lamination(const FamilyParams& fp) {
    validate_params(fp, /*for_contact=*/false);
    return fp.m <= -4 && abs(fp.p - 2 * fp.q) == 1;
}

namespace {

AtlasRow build_row(const FamilyParams& fp, const AtlasOptions& options,
                   const FamilyFixture& fixture) {
    AtlasRow row;
    row.params = fp;
    row.h1 = family_h1(fp);
    row.no_taut = no_taut_foliation(fp);
    row.no_lamination = no_essential_lamination(fp);
    row.expected_hyperbolic = fp.m <= -3;
    if (fp.q >= 1) {
        row.r = family_r(fp);
        row.r_prime = family_r_prime(fp);
        row.tight = contact::tightness_certificate(fp.m, fp.p, fp.q);
        auto presentation = presentation_for(fp, fixture);
        row.structure_count = contact::count_structures(presentation);
        if (options.include_d3 && *row.structure_count <= options.d3_limit) {
            contact::for_each_rot_choice(presentation, [&](const contact::RotChoice& c) {
                auto smooth = contact::smooth_presentation(presentation, c);
                row.d3_values.push_back(contact::d3(smooth.link, smooth.rot, smooth.plus_ones));
            });
        }
    }
    return row;
}

}  // namespace

std::vector<AtlasRow> build_atlas(const Integer& m_min, const Integer& m_max,
                                  const Integer& denominator_bound,
                                  const Integer& numerator_bound, const AtlasOptions& options) {
    if (m_max > 0) throw OutOfFamilyError("atlas range must satisfy m <= 0");
    if (m_min > m_max) throw Error("empty m range");

    const FamilyFixture& fixture = options.fixture ? *options.fixture : default_family_fixture();
    std::vector<FamilyParams> params;
    for (Integer m = m_min; m <= m_max; ++m) {
        if (options.include_q0) {
            for (Integer p = -numerator_bound; p <= numerator_bound; ++p) {
                if (abs(p) == 1) params.push_back({m, p, 0});
            }
        }
        for (Integer q = 1; q <= denominator_bound; ++q) {
            for (Integer p = -numerator_bound; p <= numerator_bound; ++p) {
                if (gcd(p, q) == 1) params.push_back({m, p, q});
            }
        }
    }
    // Already ordered by (m, q, p) by construction.

    std::vector<AtlasRow> rows(params.size());
    unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1 || params.size() < 2) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            rows[i] = build_row(params[i], options, fixture);
        }
    } else {
        std::vector<std::thread> workers;
        std::size_t chunk = (params.size() + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            std::size_t lo = w * chunk;
            std::size_t hi = std::min(params.size(), lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) {
                    rows[i] = build_row(params[i], options, fixture);
                }
            });
        }
        for (auto& t : workers) t.join();
    }
    return rows;
}

std::vector<AtlasRow> witnesses(const std::vector<AtlasRow>& rows) {
    std::vector<AtlasRow> out;
    for (const auto& row : rows) {
        if (row.no_lamination && row.tight) out.push_back(row);
    }
    return out;
}

linkalg::RationalSurgeryLink bundle_surgery_link(const FamilyParams& fp) {
    validate_params(fp, /*for_contact=*/false);
    if (fp.m > 0) throw OutOfFamilyError("bundle transcription needs m <= 0");
    if (fp.q < 1) throw OutOfFamilyError("bundle transcription needs q >= 1");
    Integer copies = -fp.m + 2;
    std::size_t nc = static_cast<std::size_t>(copies);
    std::size_t n = nc + 4;  // W1, W2, a-copies, B, K
    linkalg::RationalSurgeryLink link;
    link.linking = linkalg::IntMatrix(n, n);
    link.coefficients.assign(n, Rational(0));
    link.labels.assign(n, "");
    std::size_t w1 = 0, w2 = 1, b = nc + 2, k = nc + 3;
    link.labels[w1] = "W1";
    link.labels[w2] = "W2";
    link.labels[b] = "B";
    link.labels[k] = "K";
    link.coefficients[w1] = Rational(0);
    link.coefficients[w2] = Rational(0);
    link.coefficients[b] = Rational(-1);
    link.coefficients[k] = Rational(fp.p, fp.q);
    for (std::size_t i = 0; i < nc; ++i) {
        std::size_t a = 2 + i;
        link.labels[a] = "A" + std::to_string(i + 1);
        link.coefficients[a] = Rational(-1);
        link.linking.at(a, w1) = 1;
        link.linking.at(w1, a) = 1;
    }
    link.linking.at(b, w2) = 1;
    link.linking.at(w2, b) = 1;
    return link;
}

linkalg::FramedLinkMatrix bundle_link_slope_one(const Integer& m) {
    linkalg::RationalSurgeryLink r = bundle_surgery_link({m, 1, 1});
    std::size_t n = r.labels.size();
    linkalg::IntMatrix q = r.linking;
    for (std::size_t i = 0; i < n; ++i) {
        q.at(i, i) = num(r.coefficients[i]);  // all slopes are integers here
    }
    return {std::move(q), r.labels};
}

linkalg::MoveScript trefoil_reduction_script(const Integer& m) {
    if (m > 0) throw OutOfFamilyError("reduction script needs m <= 0");
    linkalg::MoveScript script;
    script.version = 1;
    script.description =
        "Reduces the slope-one bundle surgery diagram for m = " + m.str() +
        " to a single component of framing " + Integer(-m + 2).str() +
        ": each round slides the remaining a-curve copies off the last one and blows it down, "
        "absorbing one positive twist into the 0-framed handle curve; the leftover +-1 "
        "components then blow down.";
    script.start = bundle_link_slope_one(m);

    std::size_t copies = static_cast<std::size_t>(Integer(-m + 2));
    // a-copies occupy indices 2 .. copies+1; B and K follow.
    for (std::size_t remaining = copies; remaining >= 2; --remaining) {
        std::size_t last = 1 + remaining;
        for (std::size_t i = 2; i < last; ++i) {
            script.moves.push_back(linkalg::KirbyMove::slide(i, last, -1));
        }
        script.moves.push_back(linkalg::KirbyMove::blow_down(last));
    }
    script.moves.push_back(linkalg::KirbyMove::blow_down(2));  // final a-copy
    script.moves.push_back(linkalg::KirbyMove::blow_down(2));  // B
    script.moves.push_back(linkalg::KirbyMove::blow_down(1));  // W2
    script.moves.push_back(linkalg::KirbyMove::blow_down(1));  // K

    linkalg::IntMatrix target(1, 1);
    target.at(0, 0) = -m + 2;
    script.target = linkalg::FramedLinkMatrix(std::move(target), {"rh_trefoil"});
    return script;
}

}  // namespace csurg::atlas
