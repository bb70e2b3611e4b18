#pragma once

// Minimal RAII wrapper over an MPFR value with an explicit precision. Results
// of binary operations take the larger operand precision.

#include "adelic/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <utility>

namespace adelic::detail {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec), mpfr_set_zero(v_, 1); }
    BigFloat(long value, mpfr_prec_t prec) { mpfr_init2(v_, prec), mpfr_set_si(v_, value, MPFR_RNDN); }
    BigFloat(long double value, mpfr_prec_t prec) { mpfr_init2(v_, prec), mpfr_set_ld(v_, value, MPFR_RNDN); }
    BigFloat(const Rational& q, mpfr_prec_t prec) { mpfr_init2(v_, prec), mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// cos(2πr), sin(2πr).
    static std::pair<BigFloat, BigFloat> unit_circle(const Rational& r, mpfr_prec_t prec) {
        BigFloat angle(prec), c(prec), s(prec);
        mpfr_const_pi(angle.v_, MPFR_RNDN);
        BigFloat scale(Rational(2) * r, prec);
        mpfr_mul(angle.v_, angle.v_, scale.v_, MPFR_RNDN);
        mpfr_sin_cos(s.v_, c.v_, angle.v_, MPFR_RNDN);
        return {std::move(c), std::move(s)};
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

private:
    template <class Op>
    static BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
        BigFloat r(std::max(a.precision(), b.precision()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

}  // namespace adelic::detail
