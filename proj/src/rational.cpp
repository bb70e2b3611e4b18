#include "adelic/rational.hpp"

#include <cctype>

namespace adelic {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw ParseError("malformed rational component '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

void check_dims(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string pretty_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit_vector(std::size_t n, std::size_t i) {
    RatVector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
    check_dims(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
    check_dims(a, b);
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    check_dims(a, b);
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector operator-(const RatVector& a) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

std::string format_vector(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += pretty_rational(v[i]);
    }
    return out + ")";
}

}  // namespace adelic
