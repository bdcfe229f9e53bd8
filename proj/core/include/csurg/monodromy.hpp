#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "csurg/numbers.hpp"

namespace csurg::monodromy {

// Dehn twist generators along the two standard curves of the punctured
// torus. On first homology they act by
//
//   ta = [[1, 1], [0, 1]]     tb = [[1, 0], [-1, 1]]
//
// Composition convention: letters act left to right, and word_to_matrix
// multiplies the generator matrices in the same left-to-right order. This is
// the order under which ta^(-m+1) tb ta equals [[m, 1], [-1, 0]]; under the
// opposite (function-order) convention the same identity holds for the
// reversed word.
enum class Generator { Ta, Tb };

struct Letter {
    Generator gen;
    Integer exponent;  // nonzero

    bool operator==(const Letter&) const = default;
};

/// Word in the twist generators, kept normalized: adjacent letters carry
/// distinct generators and every exponent is nonzero.
class TwistWord {
public:
    TwistWord() = default;

    // Normalizes: merges adjacent equal generators, drops zero exponents,
    // and cascades cancellations.
    static TwistWord from_letters(std::vector<Letter> letters);

    // Single letter g^e; the empty word when e = 0.
    static TwistWord power(Generator g, const Integer& e);

    // Grammar: whitespace-separated letters "a", "b", optionally with
    // "^exponent" (exponent a signed integer). Example: "a^4 b a".
    static TwistWord parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    TwistWord inverse() const;
    TwistWord operator*(const TwistWord& rhs) const;  // concatenation, normalized
    bool operator==(const TwistWord&) const = default;

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

/// Element of SL(2, Z); construction through the public entry points keeps
/// the determinant exactly 1.
struct SL2Matrix {
    Integer a11{1}, a12{0}, a21{0}, a22{1};

    static SL2Matrix identity() { return {}; }

    // Throws Error unless the determinant is exactly 1.
    static SL2Matrix from_entries(const Integer& a11, const Integer& a12, const Integer& a21,
                                  const Integer& a22);

    SL2Matrix operator*(const SL2Matrix& rhs) const;
    SL2Matrix inverse() const;

    Integer det() const { return a11 * a22 - a12 * a21; }
    Integer trace() const { return a11 + a22; }

    bool operator==(const SL2Matrix&) const = default;

    std::string str() const;
};

// Product of the generator matrices in left-to-right word order.
SL2Matrix word_to_matrix(const TwistWord& w);

// [[m, 1], [-1, 0]].
SL2Matrix a_matrix(const Integer& m);

// ta^(-m+1) tb ta, the monodromy word of the bundle with matrix a_matrix(m).
TwistWord monodromy_word(const Integer& m);

// ta^(-m+2) tb, conjugate to monodromy_word(m) by ta.
TwistWord conjugate_monodromy_word(const Integer& m);

// word_to_matrix(monodromy_word(m)) == a_matrix(m). Holds as a matrix
// identity for every integer m; the bundle family itself has m < 1.
bool verify_monodromy_relation(const Integer& m);

// Normalized form of c^-1 * w * c.
TwistWord conjugate_word(const TwistWord& w, const TwistWord& c);

// Trace trichotomy: |tr| > 2, = 2, < 2.
enum class MonodromyType { Anosov, Reducible, Periodic };

MonodromyType classify_monodromy(const SL2Matrix& m);

std::string to_string(MonodromyType t);

}  // namespace csurg::monodromy
