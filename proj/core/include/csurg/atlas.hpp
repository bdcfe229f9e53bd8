#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csurg/abelian.hpp"
#include "csurg/contact.hpp"
#include "csurg/linkalg.hpp"
#include "csurg/numbers.hpp"

namespace csurg::atlas {

/// Parameters of M(m; p/q): p/q surgery on a section of the torus bundle
/// with monodromy matrix [[m, 1], [-1, 0]]. Requires gcd(p, q) = 1 and
/// q >= 0; q = 0 is the unsurgered bundle (slope infinity) and is excluded
/// from contact operations.
struct FamilyParams {
    Integer m;
    Integer p;
    Integer q;

    bool operator==(const FamilyParams&) const = default;
};

// Throws OutOfFamilyError when gcd or sign constraints fail; when
// for_contact is set, also requires q >= 1 and m <= 0.
void validate_params(const FamilyParams& fp, bool for_contact);

// r = (p - q)/q.
Rational family_r(const FamilyParams& fp);

// r' = -1/(-m + 1).
Rational family_r_prime(const FamilyParams& fp);

/// Roles in the family fixture: which component receives which surgery
/// coefficient when the presentation is instantiated.
enum class FixtureRole { SurgerySlope, BundleSlope, Fixed };

struct FixtureComponent {
    std::string label;
    std::string knot_type;
    Integer tb;
    Integer rot;
    FixtureRole role;
    std::optional<Rational> coefficient;  // Fixed role only
};

/// Linking data of the family contact diagram, shipped as data so that a
/// corrected transcription can be swapped in without touching the algebra.
struct FamilyFixture {
    int version = 1;
    std::string description;
    std::vector<FixtureComponent> components;
    linkalg::IntMatrix linking;  // symmetric, zero diagonal

    void validate() const;
};

// Built-in transcription: the tb = 1 Legendrian 5_2 carrying r and a tb = -1
// unknot carrying r', algebraically unlinked. Derived by cancelling the
// 1-handles of the bundle handle picture against the twist-curve 2-handles;
// the binding validation is that the expanded diagram's homology matches
// family_h1 across the parameter grid.
const FamilyFixture& default_family_fixture();

// Contact surgery presentation of M(m; p/q) for p != q: coefficients
// r and r' on the fixture components. For p = q the diagram degenerates
// (r = 0); with trefoil_form set the trefoil presentation is returned
// instead, otherwise ZeroCoefficientError is thrown.
contact::ContactSurgeryPresentation family_presentation(const FamilyParams& fp,
                                                        const FamilyFixture& fixture,
                                                        bool trefoil_form);

contact::ContactSurgeryPresentation family_presentation(const FamilyParams& fp);

// Contact -m+1 surgery on the tb = 1 right-handed trefoil (smooth -m+2).
contact::ContactSurgeryPresentation trefoil_presentation(const Integer& m);

// Presentation used by the atlas: the family form, or the trefoil form when
// p = q.
contact::ContactSurgeryPresentation presentation_for(const FamilyParams& fp,
                                                     const FamilyFixture& fixture);

// H1 of M(m; p/q): cokernel of the presentation with generators (t, x, y)
// and relations p t = 0, (A_m - I)(x, y)^T = 0. Equivalently
// Z/p + coker(A_m - I), with |coker(A_m - I)| = |2 - m|.
AbelianGroup family_h1(const FamilyParams& fp);

// H1 of (5, 5/2) surgery on the Whitehead link (linking number 0), computed
// independently through the generalized meridian presentation. Equals
// family_h1(-3, 5, 2).
AbelianGroup whitehead_check();

// True iff m <= -3, m odd, p odd, and p >= q: the manifold carries no taut
// foliation.
bool no_taut_foliation(const FamilyParams& fp);

// True iff m <= -4 and |p - 2q| = 1: the manifold carries no essential
// lamination.
bool no_essential_lamination(const FamilyParams& fp);

/// One classified family member.
struct AtlasRow {
    FamilyParams params;
    std::optional<Rational> r;
    std::optional<Rational> r_prime;
    AbelianGroup h1;
    bool no_taut = false;
    bool no_lamination = false;
    std::optional<contact::TightnessCertificate> tight;  // absent on q = 0 rows
    bool expected_hyperbolic = false;  // Thurston surgery heuristic, never a verified claim
    std::optional<Integer> structure_count;
    std::vector<Rational> d3_values;  // one per stabilization choice, enumeration order
};

struct AtlasOptions {
    bool include_d3 = true;
    // Rows with more stabilization choices than this keep d3_values empty.
    std::size_t d3_limit = 512;
    // Slope-infinity rows (q = 0, p = +-1) with contact operations disabled.
    bool include_q0 = false;
    unsigned jobs = 1;
    // Alternate linking fixture; the built-in one when null.
    const FamilyFixture* fixture = nullptr;
};

// One row per m in [m_min, m_max] and coprime pair (p, q) with 1 <= q <=
// denominator_bound and |p| <= numerator_bound, sorted by (m, q, p).
// m_max must be <= 0.
std::vector<AtlasRow> build_atlas(const Integer& m_min, const Integer& m_max,
                                  const Integer& denominator_bound,
                                  const Integer& numerator_bound,
                                  const AtlasOptions& options = {});

// Rows with no_lamination = true; every one carries a tightness certificate.
std::vector<AtlasRow> witnesses(const std::vector<AtlasRow>& rows);

// Surgery description of M(m; p/q) transcribed from the bundle handle
// picture before any cancellation: two 0-framed handle curves, -m+2 copies
// of the a-twist curve and one b-twist curve (framing -1 each), and the
// section K with coefficient p/q.
linkalg::RationalSurgeryLink bundle_surgery_link(const FamilyParams& fp);

// Integer form for p = q = 1 (K framed +1); the start diagram of the
// reduction script below.
linkalg::FramedLinkMatrix bundle_link_slope_one(const Integer& m);

// Slide/blow-down sequence taking bundle_link_slope_one(m) to the single
// (-m+2)-framed component: M(m; 1/1) is (-m+2)-surgery on the right-handed
// trefoil.
linkalg::MoveScript trefoil_reduction_script(const Integer& m);

}  // namespace csurg::atlas
