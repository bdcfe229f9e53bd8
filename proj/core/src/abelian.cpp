#include "csurg/abelian.hpp"

#include <sstream>

#include "csurg/errors.hpp"

namespace csurg {

Integer AbelianGroup::torsion_order() const {
    Integer n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

bool AbelianGroup::well_formed() const {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) return false;
        if (i > 0 && torsion[i] % torsion[i - 1] != 0) return false;
    }
    return true;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < free_rank; ++i) {
        out << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& d : torsion) {
        out << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return out.str();
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
    AbelianGroup g;
    std::string s(text);
    std::istringstream in(s);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        if (tok == "+") continue;
        any = true;
        if (tok == "0") continue;
        if (tok == "Z") {
            ++g.free_rank;
        } else if (tok.rfind("Z/", 0) == 0) {
            g.torsion.push_back(parse_integer(tok.substr(2)));
        } else {
            throw ParseError("bad group term \"" + tok + "\"");
        }
    }
    if (!any) throw ParseError("empty group string");
    if (!g.well_formed()) throw ParseError("torsion list is not a divisibility chain: " + s);
    return g;
}

AbelianGroup group_from_diagonal(const std::vector<Integer>& diag, std::size_t generator_surplus) {
    AbelianGroup g;
    g.free_rank = generator_surplus;
    for (const auto& d : diag) {
        Integer a = abs(d);
        if (a == 0) {
            ++g.free_rank;
        } else if (a >= 2) {
            g.torsion.push_back(a);
        }
    }
    return g;
}

}  // namespace csurg
