#pragma once

#include <span>
#include <string>
#include <vector>

#include "csurg/abelian.hpp"
#include "csurg/numbers.hpp"

namespace csurg::linkalg {

/// Dense integer matrix, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Integer>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    bool is_symmetric() const;
    bool is_diagonal() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Integer& c);
    // col i += c * col j
    void add_col(std::size_t i, std::size_t j, const Integer& c);
    void negate_row(std::size_t i);

    IntMatrix without_row_col(std::size_t i) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

// Exact determinant (Bareiss fraction-free elimination); matrix must be
// square.
Integer determinant(const IntMatrix& m);

/// Relation matrix of a finitely presented abelian group: rows are
/// relations, columns are generators.
using PresentationMatrix = IntMatrix;

struct SmithResult {
    IntMatrix d;  // diagonal, nonnegative, divisibility chain
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix v;  // unimodular, cols x cols

    std::vector<Integer> diagonal() const;
};

// u * r * v = d with |det u| = |det v| = 1 and d1 | d2 | ... on the
// diagonal. Pivot selection is the smallest nonzero absolute value, ties
// broken by lowest (row, column), so outputs are deterministic.
SmithResult smith_normal_form(const PresentationMatrix& r);

// Cokernel of the relation matrix.
AbelianGroup h1_from_presentation(const PresentationMatrix& r);

/// Symmetric linking matrix of a framed link: framings on the diagonal,
/// linking numbers off it.
class FramedLinkMatrix {
public:
    FramedLinkMatrix() = default;
    // Throws Error unless q is symmetric and labels match its dimension.
    FramedLinkMatrix(IntMatrix q, std::vector<std::string> labels);

    // Labels default to "K0", "K1", ...
    explicit FramedLinkMatrix(IntMatrix q);

    std::size_t size() const { return q_.rows(); }
    const IntMatrix& matrix() const { return q_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Integer& framing(std::size_t i) const { return q_.at(i, i); }
    const Integer& linking(std::size_t i, std::size_t j) const { return q_.at(i, j); }

    bool operator==(const FramedLinkMatrix&) const = default;

private:
    IntMatrix q_;
    std::vector<std::string> labels_;
};

// H1 of the surgered manifold: cokernel of the linking matrix itself (the
// meridian relations for integer framings).
AbelianGroup h1_of_link(const FramedLinkMatrix& link);

// Removes component i with framing e in {+1, -1}; for the remaining j, k:
// Q'[j][k] = Q[j][k] - e * Q[i][j] * Q[i][k]. Throws BlowDownFramingError.
FramedLinkMatrix blow_down(const FramedLinkMatrix& link, std::size_t i);

// Slide component i over component j: Q' = E^T Q E where E is the identity
// with `sign` at (j, i). sign must be +1 or -1.
FramedLinkMatrix handle_slide(const FramedLinkMatrix& link, std::size_t i, std::size_t j,
                              int sign);

// Signature of the symmetric matrix, computed by exact congruence reduction
// over the rationals.
Integer signature(const FramedLinkMatrix& link);
Integer signature(const IntMatrix& symmetric);

struct KirbyMove {
    enum class Kind { Slide, BlowDown };
    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;  // slide only
    int sign = 0;       // slide only

    static KirbyMove slide(std::size_t i, std::size_t j, int sign) {
        return {Kind::Slide, i, j, sign};
    }
    static KirbyMove blow_down(std::size_t i) { return {Kind::BlowDown, i, 0, 0}; }

    bool operator==(const KirbyMove&) const = default;
};

// Applies the moves in order. Errors are rethrown as MoveSequenceError
// carrying the zero-based step index.
FramedLinkMatrix apply_moves(const FramedLinkMatrix& start, std::span<const KirbyMove> moves);

// True when the two matrices agree after a simultaneous permutation of
// components (labels are ignored).
bool equal_up_to_permutation(const FramedLinkMatrix& a, const FramedLinkMatrix& b);

// Applies the moves and compares with the target up to permutation.
bool verify_move_sequence(const FramedLinkMatrix& start, std::span<const KirbyMove> moves,
                          const FramedLinkMatrix& target);

/// Move sequence shipped as data: a start diagram, the moves, and the
/// claimed result.
struct MoveScript {
    int version = 1;
    std::string description;
    FramedLinkMatrix start;
    std::vector<KirbyMove> moves;
    FramedLinkMatrix target;

    bool verify() const { return verify_move_sequence(start, moves, target); }
};

/// Link with one rational surgery coefficient per component. The linking
/// matrix carries linking numbers only (diagonal ignored, kept zero); the
/// coefficient p/q of a component is its surgery slope.
struct RationalSurgeryLink {
    IntMatrix linking;
    std::vector<Rational> coefficients;
    std::vector<std::string> labels;
};

// Generalized meridian relations: for each component i with slope p_i/q_i,
//   p_i mu_i + q_i * sum_j lk(i, j) mu_j = 0.
PresentationMatrix meridian_presentation(const RationalSurgeryLink& link);

AbelianGroup h1_of_rational_link(const RationalSurgeryLink& link);

}  // namespace csurg::linkalg
