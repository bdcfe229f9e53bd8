#include "csurg/linkalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "csurg/errors.hpp"

namespace csurg::linkalg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Integer>> rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            throw Error("ragged matrix rows");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

IntMatrix IntMatrix::without_row_col(std::size_t idx) const {
    IntMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == idx) continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == idx) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ',';
            out << at(i, j);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::vector<Integer> SmithResult::diagonal() const {
    std::vector<Integer> out;
    std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Smallest nonzero |entry| of d[t.., t..]; ties by lowest (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs = 0;
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Integer& x = d.at(i, j);
            if (x == 0) continue;
            Integer a = abs(x);
            if (!best || a < best_abs) {
                best = {{i, j}};
                best_abs = a;
            }
        }
    }
    return best;
}

}  // namespace

SmithResult smith_normal_form(const PresentationMatrix& r) {
    SmithResult s{r, IntMatrix::identity(r.rows()), IntMatrix::identity(r.cols())};
    IntMatrix& d = s.d;
    std::size_t n = std::min(d.rows(), d.cols());

    for (std::size_t t = 0; t < n; ++t) {
        auto piv = find_pivot(d, t);
        if (!piv) break;
        d.swap_rows(t, piv->first);
        s.u.swap_rows(t, piv->first);
        d.swap_cols(t, piv->second);
        s.v.swap_cols(t, piv->second);

        bool settled = false;
        while (!settled) {
            settled = true;
            // Clear the pivot column, re-pivoting on any leftover remainder.
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Integer q = floor_div(d.at(i, t), d.at(t, t));
                d.add_row(i, t, -q);
                s.u.add_row(i, t, -q);
                if (d.at(i, t) != 0) {
                    d.swap_rows(t, i);
                    s.u.swap_rows(t, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Integer q = floor_div(d.at(t, j), d.at(t, t));
                d.add_col(j, t, -q);
                s.v.add_col(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    s.v.swap_cols(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Enforce divisibility: the pivot must divide the rest of the
            // submatrix.
            for (std::size_t i = t + 1; i < d.rows() && settled; ++i) {
                for (std::size_t j = t + 1; j < d.cols() && settled; ++j) {
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        s.u.add_row(t, i, 1);
                        settled = false;
                    }
                }
            }
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    return s;
}

AbelianGroup h1_from_presentation(const PresentationMatrix& r) {
    SmithResult s = smith_normal_form(r);
    std::size_t n = std::min(r.rows(), r.cols());
    return group_from_diagonal(s.diagonal(), r.cols() - n);
}

FramedLinkMatrix::FramedLinkMatrix(IntMatrix q, std::vector<std::string> labels)
    : q_(std::move(q)), labels_(std::move(labels)) {
    if (!q_.is_symmetric()) throw Error("linking matrix must be symmetric");
    if (labels_.size() != q_.rows()) {
        throw Error("label count does not match linking matrix dimension");
    }
}

FramedLinkMatrix::FramedLinkMatrix(IntMatrix q) {
    std::vector<std::string> labels(q.rows());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = "K" + std::to_string(i);
    *this = FramedLinkMatrix(std::move(q), std::move(labels));
}

AbelianGroup h1_of_link(const FramedLinkMatrix& link) {
    return h1_from_presentation(link.matrix());
}

FramedLinkMatrix blow_down(const FramedLinkMatrix& link, std::size_t i) {
    if (i >= link.size()) throw BlowDownFramingError("component index out of range");
    const Integer& e = link.framing(i);
    if (e != 1 && e != -1) {
        throw BlowDownFramingError("component " + std::to_string(i) + " has framing " + e.str() +
                                   ", need +1 or -1");
    }
    const IntMatrix& q = link.matrix();
    IntMatrix out(link.size() - 1, link.size() - 1);
    std::vector<std::string> labels;
    labels.reserve(link.size() - 1);
    for (std::size_t j = 0, oj = 0; j < link.size(); ++j) {
        if (j == i) continue;
        labels.push_back(link.labels()[j]);
        for (std::size_t k = 0, ok = 0; k < link.size(); ++k) {
            if (k == i) continue;
            out.at(oj, ok) = q.at(j, k) - e * q.at(i, j) * q.at(i, k);
            ++ok;
        }
        ++oj;
    }
    return {std::move(out), std::move(labels)};
}

FramedLinkMatrix handle_slide(const FramedLinkMatrix& link, std::size_t i, std::size_t j,
                              int sign) {
    if (i >= link.size() || j >= link.size() || i == j) {
        throw SlideIndexError("slide needs two distinct component indices in range");
    }
    if (sign != 1 && sign != -1) {
        throw SlideSignError("slide sign must be +1 or -1");
    }
    // E = I + sign * e_{j,i}: column i += sign * column j, then the same on
    // rows.
    IntMatrix q = link.matrix();
    q.add_col(i, j, sign);
    q.add_row(i, j, sign);
    return {std::move(q), link.labels()};
}

Integer signature(const IntMatrix& symmetric) {
    if (!symmetric.is_symmetric()) throw Error("signature needs a symmetric matrix");
    std::size_t n = symmetric.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(symmetric.at(i, j));

    std::vector<bool> active(n, true);
    Integer sig = 0;
    for (;;) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (active[i] && m[i][i] != 0) {
                k = i;
                break;
            }
        }
        if (k == n) {
            // All active diagonal entries vanish; fold an off-diagonal entry
            // onto the diagonal (row/col i += row/col j gives 2*m[i][j]).
            std::size_t oi = n, oj = n;
            for (std::size_t i = 0; i < n && oi == n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (active[j] && m[i][j] != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
                }
            }
            if (oi == n) break;  // zero form on the remaining block
            for (std::size_t t = 0; t < n; ++t)
                if (active[t]) m[oi][t] += m[oj][t];
            for (std::size_t t = 0; t < n; ++t)
                if (active[t]) m[t][oi] += m[t][oj];
            k = oi;
        }
        sig += sign_of(m[k][k]);
        std::vector<Rational> f(n);
        for (std::size_t t = 0; t < n; ++t)
            if (active[t] && t != k) f[t] = m[t][k] / m[k][k];
        for (std::size_t t = 0; t < n; ++t) {
            if (!active[t] || t == k || f[t] == 0) continue;
            for (std::size_t s = 0; s < n; ++s)
                if (active[s]) m[t][s] -= f[t] * m[k][s];
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (!active[t] || t == k || f[t] == 0) continue;
            for (std::size_t s = 0; s < n; ++s)
                if (active[s]) m[s][t] -= f[t] * m[s][k];
        }
        active[k] = false;
    }
    return sig;
}

Integer signature(const FramedLinkMatrix& link) {
    return signature(link.matrix());
}

FramedLinkMatrix apply_moves(const FramedLinkMatrix& start, std::span<const KirbyMove> moves) {
    FramedLinkMatrix current = start;
    for (std::size_t step = 0; step < moves.size(); ++step) {
        const KirbyMove& mv = moves[step];
        try {
            if (mv.kind == KirbyMove::Kind::Slide) {
                current = handle_slide(current, mv.i, mv.j, mv.sign);
            } else {
                current = blow_down(current, mv.i);
            }
        } catch (const Error& e) {
            throw MoveSequenceError(step, e.what());
        }
    }
    return current;
}

namespace {

bool permutation_search(const IntMatrix& a, const IntMatrix& b, std::vector<std::size_t>& perm,
                        std::vector<bool>& used, std::size_t depth) {
    std::size_t n = a.rows();
    if (depth == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        if (a.at(cand, cand) != b.at(depth, depth)) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
            if (a.at(cand, perm[k]) != b.at(depth, k)) ok = false;
        }
        if (!ok) continue;
        perm[depth] = cand;
        used[cand] = true;
        if (permutation_search(a, b, perm, used, depth + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool equal_up_to_permutation(const FramedLinkMatrix& a, const FramedLinkMatrix& b) {
    if (a.size() != b.size()) return false;
    if (a.matrix() == b.matrix()) return true;
    std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    return permutation_search(a.matrix(), b.matrix(), perm, used, 0);
}

bool verify_move_sequence(const FramedLinkMatrix& start, std::span<const KirbyMove> moves,
                          const FramedLinkMatrix& target) {
    return equal_up_to_permutation(apply_moves(start, moves), target);
}

PresentationMatrix meridian_presentation(const RationalSurgeryLink& link) {
    std::size_t n = link.coefficients.size();
    if (link.linking.rows() != n || link.linking.cols() != n) {
        throw Error("linking matrix dimension does not match coefficient count");
    }
    if (!link.linking.is_symmetric()) throw Error("linking matrix must be symmetric");
    PresentationMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer p = num(link.coefficients[i]);
        Integer q = den(link.coefficients[i]);
        for (std::size_t j = 0; j < n; ++j) {
            r.at(i, j) = q * link.linking.at(i, j);
        }
        r.at(i, i) += p;
    }
    return r;
}

AbelianGroup h1_of_rational_link(const RationalSurgeryLink& link) {
    return h1_from_presentation(meridian_presentation(link));
}

}  // namespace csurg::linkalg
