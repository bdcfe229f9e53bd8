#include "csurg/contact.hpp"

#include <algorithm>
#include <array>

#include "csurg/errors.hpp"

namespace csurg::contact {

namespace {

const std::array<KnotFacts, 3> kKnotTable{{
    {"unknot", -1, 0, 0},
    {"rh_trefoil", 1, 1, 0},
    {"5_2", 1, 1, 0},
}};

}  // namespace

const KnotFacts* lookup_knot(std::string_view knot_type) {
    for (const auto& k : kKnotTable) {
        if (k.knot_type == knot_type) return &k;
    }
    return nullptr;
}

Integer LegendrianComponent::linking_with(const std::string& other) const {
    auto it = links.find(other);
    return it == links.end() ? Integer(0) : it->second;
}

const LegendrianComponent* ContactSurgeryPresentation::find(const std::string& label) const {
    for (const auto& c : components) {
        if (c.label == label) return &c;
    }
    return nullptr;
}

void ContactSurgeryPresentation::validate() const {
    for (const auto& c : components) {
        if (c.contact_coeff && *c.contact_coeff == 0) {
            throw ZeroCoefficientError("component " + c.label +
                                       " has contact coefficient 0, which is not well-defined");
        }
        if (const KnotFacts* facts = lookup_knot(c.knot_type)) {
            if (c.tb > facts->max_tb) {
                throw Error("component " + c.label + ": tb " + c.tb.str() + " exceeds max tb " +
                            facts->max_tb.str() + " of " + c.knot_type);
            }
            if ((c.rot - c.tb - 1) % 2 != 0) {
                throw Error("component " + c.label + ": rot must equal tb + 1 mod 2");
            }
        }
        for (const auto& [other, lk] : c.links) {
            const LegendrianComponent* o = find(other);
            if (!o) throw Error("component " + c.label + " links unknown component " + other);
            if (o->linking_with(c.label) != lk) {
                throw Error("asymmetric linking data between " + c.label + " and " + other);
            }
        }
    }
}

std::vector<Integer> neg_expansion(const Rational& r) {
    if (r >= 0) {
        throw PositiveCoefficientError("neg_expansion needs r < 0, got " + format_rational(r));
    }
    std::vector<Integer> entries;
    Rational x = r;
    for (;;) {
        if (is_integral(x)) {
            entries.push_back(num(x));
            break;
        }
        Integer a = rational_floor(x);
        entries.push_back(a);
        x = Rational(-1) / (x - Rational(a));
    }
    return entries;
}

Rational eval_neg_continued_fraction(std::span<const Integer> entries) {
    if (entries.empty()) throw Error("empty continued fraction");
    Rational x(entries.back());
    for (std::size_t k = entries.size() - 1; k-- > 0;) {
        x = Rational(entries[k]) - Rational(1) / x;
    }
    return x;
}

PosReduction pos_reduction(const Rational& r) {
    if (r <= 0) {
        throw NegativeCoefficientError("pos_reduction needs r > 0, got " + format_rational(r));
    }
    // r_k = p / (q - k p). The recursion hits 1 only when p divides q, i.e.
    // p = 1 in lowest terms; otherwise it first turns negative at
    // k = floor(q/p) + 1.
    Integer p = num(r), q = den(r);
    if (p == 1) {
        return {q, std::nullopt};
    }
    Integer k = floor_div(q, p) + 1;
    return {k, Rational(-p, k * p - q)};  // p/(q - kp) with the sign on top
}

Rational pos_reduction_inverse(const PosReduction& red) {
    // Applying the inverse step s -> s/(1 + s) k times gives s/(1 + k s).
    if (red.remainder) {
        const Rational& v = *red.remainder;
        return v / (1 + Rational(red.plus_ones) * v);
    }
    if (red.plus_ones < 1) throw Error("reduction with no remainder needs plus_ones >= 1");
    // The final step consumed r = 1.
    return Rational(1) / Rational(red.plus_ones);
}

Integer ExpandedChain::choice_count() const {
    Integer n = 1;
    for (const auto& k : chain) n *= k.stab_budget + 1;
    return n;
}

ExpandedChain full_expansion(const Rational& contact_coeff) {
    if (contact_coeff == 0) {
        throw ZeroCoefficientError("contact surgery coefficient 0 is not well-defined");
    }
    ExpandedChain out;
    out.plus_ones = 0;
    std::optional<Rational> negative = contact_coeff;
    if (contact_coeff > 0) {
        PosReduction red = pos_reduction(contact_coeff);
        out.plus_ones = red.plus_ones;
        negative = red.remainder;
    }
    if (negative) {
        std::vector<Integer> entries = neg_expansion(*negative);
        out.chain.reserve(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            Integer budget = i == 0 ? abs(entries[i] + 1) : abs(entries[i] + 2);
            out.chain.push_back({entries[i], budget});
        }
    }
    return out;
}

Integer count_structures(const ContactSurgeryPresentation& p) {
    p.validate();
    Integer n = 1;
    for (const auto& c : p.components) {
        if (!c.contact_coeff) continue;
        n *= full_expansion(*c.contact_coeff).choice_count();
    }
    return n;
}

namespace {

void check_choice(const std::string& label, const ExpandedChain& exp,
                  const std::vector<Integer>& offsets) {
    if (offsets.size() != exp.chain.size()) {
        throw InconsistentChoiceError("component " + label + ": expected " +
                                      std::to_string(exp.chain.size()) + " rotation offsets, got " +
                                      std::to_string(offsets.size()));
    }
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const Integer& s = exp.chain[i].stab_budget;
        const Integer& o = offsets[i];
        if (abs(o) > s || (o - s) % 2 != 0) {
            throw InconsistentChoiceError("component " + label + ": offset " + o.str() +
                                          " invalid for budget " + s.str());
        }
    }
}

struct EmittedKnot {
    std::string label;
    Integer framing;
    Integer rot;
    std::size_t component;  // index into presentation
    enum class Kind { Pushoff, Head, Tail } kind;
    std::size_t chain_pos = 0;
};

}  // namespace

SmoothPresentation smooth_presentation(const ContactSurgeryPresentation& p,
                                       const RotChoice& choice) {
    p.validate();
    std::vector<EmittedKnot> knots;
    Integer plus_ones_total = 0;

    for (std::size_t ci = 0; ci < p.components.size(); ++ci) {
        const LegendrianComponent& c = p.components[ci];
        if (!c.contact_coeff) continue;
        ExpandedChain exp = full_expansion(*c.contact_coeff);

        std::vector<Integer> offsets(exp.chain.size());
        auto it = choice.by_component.find(c.label);
        if (it != choice.by_component.end()) {
            offsets = it->second;
        } else {
            // First choice in enumeration order: fully negative offsets.
            for (std::size_t i = 0; i < exp.chain.size(); ++i) {
                offsets[i] = -exp.chain[i].stab_budget;
            }
        }
        check_choice(c.label, exp, offsets);

        plus_ones_total += exp.plus_ones;
        for (Integer k = 0; k < exp.plus_ones; ++k) {
            knots.push_back({c.label + "+" + k.str(), c.tb + 1, c.rot, ci,
                             EmittedKnot::Kind::Pushoff});
        }
        for (std::size_t i = 0; i < exp.chain.size(); ++i) {
            if (i == 0) {
                // Stabilized original knot, Legendrian surgered.
                Integer stabilized_tb = c.tb - exp.chain[i].stab_budget;
                knots.push_back({c.label, stabilized_tb - 1, c.rot + offsets[i], ci,
                                 EmittedKnot::Kind::Head, i});
            } else {
                // Stabilized unknot: tb = -1 - budget, framing tb - 1.
                Integer stabilized_tb = Integer(-1) - exp.chain[i].stab_budget;
                knots.push_back({c.label + "." + std::to_string(i), stabilized_tb - 1, offsets[i],
                                 ci, EmittedKnot::Kind::Tail, i});
            }
        }
    }

    std::size_t n = knots.size();
    linkalg::IntMatrix q(n, n);
    std::vector<std::string> labels(n);
    std::vector<Integer> rot(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = knots[i].label;
        rot[i] = knots[i].rot;
        q.at(i, i) = knots[i].framing;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const EmittedKnot& a = knots[i];
            const EmittedKnot& b = knots[j];
            Integer lk = 0;
            if (a.component == b.component) {
                const LegendrianComponent& c = p.components[a.component];
                bool a_tail = a.kind == EmittedKnot::Kind::Tail;
                bool b_tail = b.kind == EmittedKnot::Kind::Tail;
                if (!a_tail && !b_tail) {
                    // Push-offs link each other and the head at tb.
                    lk = c.tb;
                } else if (a.kind != EmittedKnot::Kind::Pushoff &&
                           b.kind != EmittedKnot::Kind::Pushoff &&
                           (a.chain_pos + 1 == b.chain_pos || b.chain_pos + 1 == a.chain_pos)) {
                    lk = 1;
                }
            } else {
                bool a_carries = a.kind != EmittedKnot::Kind::Tail;
                bool b_carries = b.kind != EmittedKnot::Kind::Tail;
                if (a_carries && b_carries) {
                    lk = p.components[a.component].linking_with(p.components[b.component].label);
                }
            }
            q.at(i, j) = lk;
            q.at(j, i) = lk;
        }
    }
    return {linkalg::FramedLinkMatrix(std::move(q), std::move(labels)), std::move(rot),
            plus_ones_total};
}

void for_each_rot_choice(const ContactSurgeryPresentation& p,
                         const std::function<void(const RotChoice&)>& fn) {
    p.validate();
    struct Slot {
        std::string label;
        std::size_t pos;
        Integer budget;
    };
    std::vector<Slot> slots;
    RotChoice choice;
    for (const auto& c : p.components) {
        if (!c.contact_coeff) continue;
        ExpandedChain exp = full_expansion(*c.contact_coeff);
        auto& offsets = choice.by_component[c.label];
        offsets.resize(exp.chain.size());
        for (std::size_t i = 0; i < exp.chain.size(); ++i) {
            offsets[i] = -exp.chain[i].stab_budget;
            slots.push_back({c.label, i, exp.chain[i].stab_budget});
        }
    }
    // Odometer, last slot fastest; offsets step by 2 from -s to s.
    for (;;) {
        fn(choice);
        std::size_t k = slots.size();
        while (k > 0) {
            --k;
            auto& v = choice.by_component[slots[k].label][slots[k].pos];
            if (v < slots[k].budget) {
                v += 2;
                break;
            }
            v = -slots[k].budget;
            if (k == 0) return;
        }
        if (slots.empty()) return;
    }
}

std::vector<RotChoice> all_rot_choices(const ContactSurgeryPresentation& p, std::size_t limit) {
    std::vector<RotChoice> out;
    Integer total = count_structures(p);
    if (total > limit) {
        throw Error("rot choice enumeration of size " + total.str() + " exceeds limit " +
                    std::to_string(limit));
    }
    for_each_rot_choice(p, [&](const RotChoice& c) { out.push_back(c); });
    return out;
}

namespace {

// One rational solution of Q x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(const linkalg::IntMatrix& qm,
                                                    const std::vector<Integer>& b) {
    std::size_t n = qm.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(qm.at(i, j));
        a[i][n] = Rational(b[i]);
    }
    std::vector<std::size_t> pivot_col(n, n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[row][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (std::size_t i = row; i < n; ++i) {
        if (a[i][n] != 0) return std::nullopt;
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < row; ++i) {
        x[pivot_col[i]] = a[i][n] / a[i][pivot_col[i]];
    }
    return x;
}

}  // namespace

Rational d3(const linkalg::FramedLinkMatrix& link, const std::vector<Integer>& rot,
            const Integer& plus_ones) {
    std::size_t n = link.size();
    if (rot.size() != n) throw Error("rot vector length does not match diagram size");
    auto x = solve_rational(link.matrix(), rot);
    if (!x) {
        throw NonTorsionClassError("rotation class is not torsion: Q x = rot has no solution");
    }
    Rational c_squared = 0;
    for (std::size_t i = 0; i < n; ++i) c_squared += (*x)[i] * Rational(rot[i]);
    Integer sigma = linkalg::signature(link);
    Integer chi = 1 + Integer(n);
    return (c_squared - 3 * Rational(sigma) - 2 * Rational(chi)) / 4 + Rational(plus_ones);
}

bool ls2_certificate(const KnotFacts& facts, const Integer& tb, const Rational& r,
                     bool allow_degenerate) {
    if (r <= 0) return false;
    if (tb != 2 * facts.g4 - 1) return false;
    if (!allow_degenerate) {
        // Applied at maximal-tb representatives; keeps the unknot from
        // certifying through tb = -1 = 2*0 - 1.
        if (facts.g4 < 1 || tb != facts.max_tb) return false;
    }
    return true;
}

std::string to_string(TightRoute r) {
    switch (r) {
        case TightRoute::SteinFillable: return "SteinFillable";
        case TightRoute::PositiveContactLS2: return "PositiveContactLS2";
        case TightRoute::TrefoilSurgery: return "TrefoilSurgery";
    }
    return "?";
}

TightnessCertificate tightness_certificate(const Integer& m, const Integer& p, const Integer& q) {
    if (m > 0) throw OutOfFamilyError("tightness certificate needs m <= 0, got m = " + m.str());
    if (q < 1) throw OutOfFamilyError("tightness certificate needs q >= 1, got q = " + q.str());
    if (gcd(p, q) != 1) {
        throw OutOfFamilyError("p and q must be coprime, got p = " + p.str() +
                               ", q = " + q.str());
    }
    if (p == q) {
        // p = q = 1: contact -m+1 surgery on the right-handed trefoil,
        // smooth coefficient tb + (-m+1) = -m+2.
        TrefoilDetails d{-m + 2, -m + 1};
        return {TightRoute::TrefoilSurgery, d};
    }
    Rational r(p - q, q);
    if (r < 0) {
        Rational r_prime = Rational(-1, -m + 1);
        SteinDetails d{r, r_prime, full_expansion(r), full_expansion(r_prime)};
        return {TightRoute::SteinFillable, d};
    }
    const KnotFacts* facts = lookup_knot("5_2");
    Ls2Details d{facts->knot_type, facts->max_tb, facts->g4, r};
    return {TightRoute::PositiveContactLS2, d};
}

}  // namespace csurg::contact
