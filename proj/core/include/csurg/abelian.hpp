#pragma once

#include <string>
#include <vector>

#include "csurg/numbers.hpp"

namespace csurg {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const AbelianGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    // Order of the torsion subgroup.
    Integer torsion_order() const;

    // Invariant factors satisfy the divisibility chain and the >= 2 bound.
    bool well_formed() const;

    // "0", "Z", "Z/5 + Z/5", "Z + Z/5", ...
    std::string str() const;

    static AbelianGroup parse(std::string_view text);
};

// Cokernel read off a diagonal: zero entries contribute free rank, entries
// with |d| >= 2 contribute torsion. generator_surplus counts generators with
// no relation at all (columns beyond the diagonal).
AbelianGroup group_from_diagonal(const std::vector<Integer>& diag, std::size_t generator_surplus);

}  // namespace csurg
