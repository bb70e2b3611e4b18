#pragma once

#include "adelic/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adelic {

/// An element of Q/Z, i.e. the root of unity e^{2πi r}, stored as r ∈ [0, 1).
class Phase {
public:
    Phase() = default;
    /// Reduces any rational modulo 1.
    explicit Phase(const Rational& r);

    const Rational& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.value_ + b.value_); }
    friend Phase operator-(const Phase& a, const Phase& b) { return Phase(a.value_ - b.value_); }
    friend Phase operator-(const Phase& a) { return Phase(-a.value_); }
    friend bool operator==(const Phase& a, const Phase& b) { return a.value_ == b.value_; }

    /// "num/den" serialization.
    std::string str() const;
    static Phase parse(const std::string& text);

private:
    Rational value_ = 0;
};

inline Phase phase_add(const Phase& a, const Phase& b) { return a + b; }
inline Phase phase_neg(const Phase& a) { return -a; }

/// A character value: either 0 or a root of unity.
class CharValue {
public:
    static CharValue zero() { return CharValue(); }
    static CharValue root(const Phase& p) { return CharValue(p); }
    static CharValue one() { return CharValue(Phase()); }

    bool is_zero() const { return !phase_.has_value(); }
    bool is_one() const { return phase_ && phase_->is_zero(); }
    /// Precondition: !is_zero().
    const Phase& phase() const { return *phase_; }

    CharValue conj() const { return phase_ ? root(-*phase_) : zero(); }

    friend CharValue operator*(const CharValue& a, const CharValue& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return root(*a.phase_ + *b.phase_);
    }
    friend bool operator==(const CharValue& a, const CharValue& b) = default;

    std::string str() const;

private:
    CharValue() = default;
    explicit CharValue(const Phase& p) : phase_(p) {}
    std::optional<Phase> phase_;
};

inline CharValue cv_mul(const CharValue& a, const CharValue& b) { return a * b; }

bool is_prime(std::uint64_t p);

/// frac_p(x): the unique f ∈ [0, 1) with p-power denominator such that x - f
/// is a p-adic integer. Throws DomainError when p is not prime.
Rational frac_p(const Rational& x, std::uint64_t p);

/// Real fractional part x - floor(x).
Rational frac(const Rational& x);

/// Distinct primes dividing n > 0, ascending (trial division).
std::vector<std::uint64_t> prime_divisors(const Integer& n);

/// frac(q) - Σ_{p | den q} frac_p(q) ≡ 0 mod 1. Always true; this is the
/// triviality of the global additive character on Q.
bool global_phase_zero(const Rational& q);

}  // namespace adelic
