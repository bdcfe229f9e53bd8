#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csurg/linkalg.hpp"
#include "csurg/numbers.hpp"

namespace csurg::contact {

/// Smooth-type facts used by the tightness criteria. The table is fixed;
/// rot_at_max_tb is the rotation number of the standard representative at
/// maximal tb.
struct KnotFacts {
    std::string knot_type;
    Integer max_tb;
    Integer g4;
    Integer rot_at_max_tb;
};

// "unknot", "rh_trefoil", "5_2"; nullptr for anything else.
const KnotFacts* lookup_knot(std::string_view knot_type);

/// One Legendrian component of a contact surgery diagram. contact_coeff is
/// measured against the contact framing; nullopt means slope infinity (no
/// surgery). A zero coefficient is rejected everywhere: surgery with r = 0
/// contact framing is not well-defined.
struct LegendrianComponent {
    std::string label;
    std::string knot_type;
    Integer tb;
    Integer rot;
    std::optional<Rational> contact_coeff;
    std::map<std::string, Integer> links;

    Integer linking_with(const std::string& other) const;
};

struct ContactSurgeryPresentation {
    std::vector<LegendrianComponent> components;

    const LegendrianComponent* find(const std::string& label) const;

    // Checks coefficients, symmetric linking data, and (for table knot
    // types) tb <= max_tb and rot = tb + 1 mod 2.
    void validate() const;
};

// Negative continued fraction r = a0 - 1/(a1 - 1/(... - 1/ak)) with
// a0 <= -1 and ai <= -2 for i >= 1; unique under those bounds. Throws
// PositiveCoefficientError for r >= 0.
std::vector<Integer> neg_expansion(const Rational& r);

// Evaluates the continued fraction back to a rational; the reconstruction
// oracle for neg_expansion.
Rational eval_neg_continued_fraction(std::span<const Integer> entries);

struct PosReduction {
    Integer plus_ones;                  // number of +1 surgeries emitted
    std::optional<Rational> remainder;  // negative remainder, or none

    bool operator==(const PosReduction&) const = default;
};

// Repeatedly replaces r by r/(1 - r), emitting one +1 surgery per step,
// until the recursion leaves the positive range: r = 1 stops with no
// remainder, r < 0 stops with that remainder. Computed in closed form;
// equals the literal iteration. Throws NegativeCoefficientError for r <= 0.
PosReduction pos_reduction(const Rational& r);

// Inverse of k steps of the replacement recursion applied to x (x = 1 when
// the reduction ended with no remainder consumes one of the steps).
Rational pos_reduction_inverse(const PosReduction& red);

struct ChainKnot {
    Integer coefficient;  // <= -1 for the head, <= -2 afterwards
    Integer stab_budget;  // |a0 + 1| for the head, |ai + 2| afterwards

    bool operator==(const ChainKnot&) const = default;
};

/// Result of expanding one rational contact coefficient into +1 surgeries
/// followed by a chain of -1 surgeries with stabilization budgets.
struct ExpandedChain {
    Integer plus_ones;
    std::vector<ChainKnot> chain;

    bool operator==(const ExpandedChain&) const = default;

    // Number of distinct stabilization choices: product of (budget + 1).
    Integer choice_count() const;
};

// Composition of pos_reduction and neg_expansion; throws
// ZeroCoefficientError on r = 0.
ExpandedChain full_expansion(const Rational& contact_coeff);

// Number of contact structures the diagram describes: product of
// (stab_budget + 1) over every chain knot of every component. Components at
// slope infinity contribute nothing.
Integer count_structures(const ContactSurgeryPresentation& p);

/// Stabilization choices per component: one rotation offset per chain knot,
/// each in {-s, -s+2, ..., s} for that knot's budget s. Omitted components
/// default to the fully negative choice (the first one in enumeration
/// order).
struct RotChoice {
    std::map<std::string, std::vector<Integer>> by_component;
};

struct SmoothPresentation {
    linkalg::FramedLinkMatrix link;
    std::vector<Integer> rot;
    Integer plus_ones;
};

// Integer surgery diagram underlying the contact diagram for one choice of
// stabilizations:
//   - each +1 surgery becomes a push-off with framing tb + 1, linking its
//     source component (and fellow push-offs) at tb;
//   - the chain head is the stabilized original knot with framing
//     (stabilized tb) - 1 and keeps the original linking data;
//   - later chain knots are stabilized unknots with framing
//     (stabilized tb) - 1, consecutive chain knots linking once.
// Throws InconsistentChoiceError when the choice does not match the budgets.
SmoothPresentation smooth_presentation(const ContactSurgeryPresentation& p,
                                       const RotChoice& choice);

// Enumerates rot choices in deterministic order: per chain knot the offsets
// run from most negative to most positive, the last knot varying fastest.
void for_each_rot_choice(const ContactSurgeryPresentation& p,
                         const std::function<void(const RotChoice&)>& fn);

// Materialized enumeration; throws Error if the count exceeds the limit.
std::vector<RotChoice> all_rot_choices(const ContactSurgeryPresentation& p, std::size_t limit);

// d3 invariant of the plane field presented by the diagram:
//   (c^2 - 3 sigma(Q) - 2 chi) / 4 + plus_ones
// with Q x = rot solved over the rationals, c^2 = x^T rot, and
// chi = 1 + (number of components). Throws NonTorsionClassError when the
// system has no rational solution.
Rational d3(const linkalg::FramedLinkMatrix& link, const std::vector<Integer>& rot,
            const Integer& plus_ones);

// True iff r > 0 and tb = 2 g4 - 1. Unless allow_degenerate is set, also
// requires g4 >= 1 and tb = max_tb, so the unknot cannot certify.
bool ls2_certificate(const KnotFacts& facts, const Integer& tb, const Rational& r,
                     bool allow_degenerate = false);

enum class TightRoute { SteinFillable, PositiveContactLS2, TrefoilSurgery };

std::string to_string(TightRoute r);

struct SteinDetails {
    Rational r;
    Rational r_prime;
    ExpandedChain surgery_chain;  // expansion of r
    ExpandedChain bundle_chain;   // expansion of r_prime

    bool operator==(const SteinDetails&) const = default;
};

struct Ls2Details {
    std::string knot_type;
    Integer tb;
    Integer g4;
    Rational r;

    bool operator==(const Ls2Details&) const = default;
};

struct TrefoilDetails {
    Integer smooth_coeff;   // -m + 2
    Integer contact_coeff;  // -m + 1

    bool operator==(const TrefoilDetails&) const = default;
};

/// Machine-checkable tightness verdict for M(m; p/q) with the route that
/// justifies it.
struct TightnessCertificate {
    TightRoute route;
    std::variant<SteinDetails, Ls2Details, TrefoilDetails> details;

    bool operator==(const TightnessCertificate&) const = default;
};

// Route selection for m <= 0, q >= 1, gcd(p, q) = 1, with r = (p - q)/q:
//   r < 0  -> SteinFillable, all-(-1) expansions of r and r' = -1/(-m+1);
//   r > 0  -> PositiveContactLS2 on the tb = 1 Legendrian 5_2;
//   p = q  -> TrefoilSurgery, contact -m+1 (smooth -m+2) on the trefoil.
// Throws OutOfFamilyError outside that domain.
TightnessCertificate tightness_certificate(const Integer& m, const Integer& p, const Integer& q);

}  // namespace csurg::contact
