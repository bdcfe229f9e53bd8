#pragma once

#include <random>
#include <vector>

#include "csurg/linkalg.hpp"
#include "csurg/monodromy.hpp"
#include "csurg/numbers.hpp"

namespace testsupport {

using csurg::Integer;
using csurg::Rational;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long long rand_int(std::mt19937_64& g, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(g);
}

// Nonzero rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
inline Rational rand_rational(std::mt19937_64& g, long long num_bound, long long den_bound,
                              int sign) {
    long long p = rand_int(g, 1, num_bound);
    long long q = rand_int(g, 1, den_bound);
    return Rational(sign * p, q);
}

inline csurg::linkalg::IntMatrix rand_symmetric(std::mt19937_64& g, std::size_t n, long long bound) {
    csurg::linkalg::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Integer v = rand_int(g, -bound, bound);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    }
    return m;
}

inline csurg::linkalg::IntMatrix rand_matrix(std::mt19937_64& g, std::size_t rows,
                                             std::size_t cols, long long bound) {
    csurg::linkalg::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rand_int(g, -bound, bound);
    return m;
}

inline csurg::monodromy::TwistWord rand_word(std::mt19937_64& g, std::size_t max_len,
                                             long long exp_bound) {
    std::vector<csurg::monodromy::Letter> letters;
    std::size_t len = static_cast<std::size_t>(rand_int(g, 0, static_cast<long long>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
        auto gen = rand_int(g, 0, 1) ? csurg::monodromy::Generator::Ta
                                     : csurg::monodromy::Generator::Tb;
        long long e = 0;
        while (e == 0) e = rand_int(g, -exp_bound, exp_bound);
        letters.push_back({gen, Integer(e)});
    }
    return csurg::monodromy::TwistWord::from_letters(std::move(letters));
}

// 2x2 integer product oracle, independent of SL2Matrix.
struct Tiny2 {
    long long a, b, c, d;
    Tiny2 mul(const Tiny2& r) const {
        return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
    }
};

}  // namespace testsupport
