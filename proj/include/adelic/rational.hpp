#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adelic {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense column vector over Q.
using RatVector = std::vector<Rational>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an argument lies outside the domain of an operation
/// (non-prime place, vector outside a required subspace, singular matrix...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Parses "n", "-n" or "n/d" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Formats as "num/den"; integers are written with denominator 1 so that
/// every serialized rational has the same shape.
std::string format_rational(const Rational& q);

/// Human-oriented form: "3", "-1/2".
std::string pretty_rational(const Rational& q);

RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);
RatVector operator*(const Rational& s, const RatVector& v);

std::string format_vector(const RatVector& v);

}  // namespace adelic
