#include "adelic/qmod1.hpp"

namespace adelic {

Rational frac(const Rational& x) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl);
}

Phase::Phase(const Rational& r) : value_(frac(r)) {}

std::string Phase::str() const { return format_rational(value_); }

Phase Phase::parse(const std::string& text) { return Phase(parse_rational(text)); }

std::string CharValue::str() const { return phase_ ? "root(" + phase_->str() + ")" : "zero"; }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    Integer z(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

Rational frac_p(const Rational& x, std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("frac_p: " + std::to_string(p) + " is not prime");
    const Integer prime(static_cast<unsigned long>(p));
    Integer m = x.get_den();
    Integer pk = 1;
    while (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) {
        m /= prime;
        pk *= prime;
    }
    if (pk == 1) return 0;
    // x = a / (p^k m) with gcd(m, p) = 1; f = c / p^k where c ≡ a m^{-1} (mod p^k).
    Integer inv;
    mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), pk.get_mpz_t());
    Integer c = x.get_num() * inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    Rational f(c, pk);
    f.canonicalize();
    return f;
}

std::vector<std::uint64_t> prime_divisors(const Integer& n) {
    if (n <= 0) throw DomainError("prime_divisors: argument must be positive");
    std::vector<std::uint64_t> out;
    Integer rest = n;
    for (unsigned long d = 2; Integer(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            out.push_back(d);
            while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
        }
    }
    if (rest > 1) {
        if (!rest.fits_ulong_p()) throw DomainError("prime_divisors: cofactor exceeds 64 bits");
        out.push_back(rest.get_ui());
    }
    return out;
}

bool global_phase_zero(const Rational& q) {
    Rational s = frac(q);
    for (auto p : prime_divisors(q.get_den())) s -= frac_p(q, p);
    return sgn(frac(s)) == 0;
}

}  // namespace adelic
