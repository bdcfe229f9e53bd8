#include "csurg/monodromy.hpp"

#include <cctype>
#include <sstream>

#include "csurg/errors.hpp"

namespace csurg::monodromy {

TwistWord TwistWord::from_letters(std::vector<Letter> letters) {
    TwistWord w;
    for (auto& l : letters) {
        if (l.exponent == 0) continue;
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
            w.letters_.back().exponent += l.exponent;
            if (w.letters_.back().exponent == 0) {
                w.letters_.pop_back();  // cancellation may expose a new merge
            }
        } else {
            w.letters_.push_back(std::move(l));
        }
    }
    return w;
}

TwistWord TwistWord::power(Generator g, const Integer& e) {
    return from_letters({Letter{g, e}});
}

TwistWord TwistWord::parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        char c = text[i];
        Generator g;
        if (c == 'a' || c == 'A') {
            g = Generator::Ta;
        } else if (c == 'b' || c == 'B') {
            g = Generator::Tb;
        } else {
            throw ParseError("expected generator 'a' or 'b' at \"" + std::string(text.substr(i)) +
                             "\"");
        }
        ++i;
        Integer e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) {
                throw ParseError("missing exponent after '^' in \"" + std::string(text) + "\"");
            }
            e = parse_integer(text.substr(start, i - start));
        }
        letters.push_back({g, e});
        skip_ws();
    }
    return from_letters(std::move(letters));
}

TwistWord TwistWord::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        rev.push_back({it->gen, -it->exponent});
    }
    return from_letters(std::move(rev));
}

TwistWord TwistWord::operator*(const TwistWord& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return from_letters(std::move(cat));
}

std::string TwistWord::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& l : letters_) {
        if (!first) out << ' ';
        first = false;
        out << (l.gen == Generator::Ta ? 'a' : 'b');
        if (l.exponent != 1) out << '^' << l.exponent;
    }
    return out.str();
}

SL2Matrix SL2Matrix::from_entries(const Integer& a11, const Integer& a12, const Integer& a21,
                                  const Integer& a22) {
    SL2Matrix m{a11, a12, a21, a22};
    if (m.det() != 1) {
        throw Error("matrix [[" + a11.str() + "," + a12.str() + "],[" + a21.str() + "," +
                    a22.str() + "]] has determinant " + m.det().str() + ", expected 1");
    }
    return m;
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& r) const {
    return {a11 * r.a11 + a12 * r.a21, a11 * r.a12 + a12 * r.a22,
            a21 * r.a11 + a22 * r.a21, a21 * r.a12 + a22 * r.a22};
}

SL2Matrix SL2Matrix::inverse() const {
    // det = 1
    return {a22, -a12, -a21, a11};
}

std::string SL2Matrix::str() const {
    std::ostringstream out;
    out << "[[" << a11 << "," << a12 << "],[" << a21 << "," << a22 << "]]";
    return out.str();
}

namespace {

// ta^e = [[1, e], [0, 1]], tb^e = [[1, 0], [-e, 1]].
SL2Matrix generator_power(Generator g, const Integer& e) {
    if (g == Generator::Ta) return {1, e, 0, 1};
    return {1, 0, -e, 1};
}

}  // namespace

SL2Matrix word_to_matrix(const TwistWord& w) {
    SL2Matrix m = SL2Matrix::identity();
    for (const auto& l : w.letters()) {
        m = m * generator_power(l.gen, l.exponent);
    }
    return m;
}

SL2Matrix a_matrix(const Integer& m) {
    return {m, 1, -1, 0};
}

TwistWord monodromy_word(const Integer& m) {
    return TwistWord::power(Generator::Ta, -m + 1) * TwistWord::power(Generator::Tb, 1) *
           TwistWord::power(Generator::Ta, 1);
}

TwistWord conjugate_monodromy_word(const Integer& m) {
    return TwistWord::power(Generator::Ta, -m + 2) * TwistWord::power(Generator::Tb, 1);
}

bool verify_monodromy_relation(const Integer& m) {
    return word_to_matrix(monodromy_word(m)) == a_matrix(m);
}

TwistWord conjugate_word(const TwistWord& w, const TwistWord& c) {
    return c.inverse() * w * c;
}

MonodromyType classify_monodromy(const SL2Matrix& m) {
    Integer t = abs(m.trace());
    if (t > 2) return MonodromyType::Anosov;
    if (t == 2) return MonodromyType::Reducible;
    return MonodromyType::Periodic;
}

std::string to_string(MonodromyType t) {
    switch (t) {
        case MonodromyType::Anosov: return "Anosov";
        case MonodromyType::Reducible: return "Reducible";
        case MonodromyType::Periodic: return "Periodic";
    }
    return "?";
}

}  // namespace csurg::monodromy
