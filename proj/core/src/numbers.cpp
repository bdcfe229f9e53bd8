#include "csurg/numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

#include "csurg/errors.hpp"

namespace csurg {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

Integer rational_floor(const Rational& r) {
    return floor_div(num(r), den(r));
}

bool is_integral(const Rational& r) {
    return den(r) == 1;
}

int sign_of(const Integer& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

int sign_of(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

std::string format_rational(const Rational& r) {
    if (is_integral(r)) {
        return num(r).str();
    }
    return num(r).str() + "/" + den(r).str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer_strict(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw ParseError("empty integer in \"" + std::string(whole) + "\"");
    }
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) {
        throw ParseError("missing digits in \"" + std::string(whole) + "\"");
    }
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw ParseError("unexpected character '" + std::string(1, text[k]) + "' in \"" +
                             std::string(whole) + "\"");
        }
    }
    return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        throw ParseError("empty rational");
    }
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer_strict(s, text));
    }
    Integer p = parse_integer_strict(trim(s.substr(0, slash)), text);
    Integer q = parse_integer_strict(trim(s.substr(slash + 1)), text);
    if (q == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    if (q < 0) {  // the backend wants a positive denominator
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

Integer parse_integer(std::string_view text) {
    return parse_integer_strict(trim(text), text);
}

}  // namespace csurg
