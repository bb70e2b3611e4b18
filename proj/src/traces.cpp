#include "adelic/traces.hpp"

#include "bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <string>

namespace adelic {

using detail::BigFloat;

namespace {

// Working precision: requested bits plus guard bits for the Jacobi sweeps.
constexpr unsigned kGuardBits = 16;

using BigMatrix = std::vector<std::vector<BigFloat>>;

BigMatrix make_matrix(std::size_t n, mpfr_prec_t prec) {
    return BigMatrix(n, std::vector<BigFloat>(n, BigFloat(prec)));
}

/// Cyclic Jacobi on a real symmetric matrix; returns the smallest eigenvalue.
BigFloat jacobi_min_eigenvalue(BigMatrix a, unsigned bits) {
    const std::size_t n = a.size();
    const mpfr_prec_t prec = bits + kGuardBits;
    if (n == 0) return BigFloat(0L, prec);
    BigFloat frob(prec);
    for (const auto& row : a)
        for (const auto& x : row) frob = frob + x * x;
    // Stop once the off-diagonal mass is below 2^-bits relative to ||A||_F.
    BigFloat threshold = frob;
    for (unsigned i = 0; i < 2 * bits; ++i) threshold = threshold / BigFloat(2L, prec);

    const BigFloat one(1L, prec), two(2L, prec);
    for (int sweep = 0; sweep < 100; ++sweep) {
        BigFloat off(prec);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = off + a[p][q] * a[p][q];
        if (off <= threshold) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q].is_zero()) continue;
                const BigFloat theta = (a[q][q] - a[p][p]) / (two * a[p][q]);
                BigFloat t = one / (abs(theta) + sqrt(theta * theta + one));
                if (theta.sign() < 0) t = -t;
                const BigFloat c = one / sqrt(t * t + one);
                const BigFloat s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const BigFloat akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const BigFloat apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    BigFloat lo = a[0][0];
    for (std::size_t i = 1; i < n; ++i) {
        if (a[i][i] < lo) lo = a[i][i];
    }
    return lo;
}

/// Real symmetric embedding [[A, -B], [B, A]] of H = A + iB; its spectrum is
/// that of H with every eigenvalue doubled in multiplicity.
BigMatrix embed(const BigMatrix& re, const BigMatrix& im) {
    const std::size_t n = re.size();
    const mpfr_prec_t prec = n ? re[0][0].precision() : 64;
    BigMatrix out = make_matrix(2 * n, prec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = re[i][j];
            out[n + i][n + j] = re[i][j];
            out[i][n + j] = -im[i][j];
            out[n + i][j] = im[i][j];
        }
    return out;
}

unsigned effective_bits(unsigned bits) {
    if (bits == 0) bits = psd_precision_from_env();
    return std::max(bits, 53u);
}

PsdResult numeric_result(const BigMatrix& re, const BigMatrix& im, double tol, unsigned bits) {
    PsdResult r;
    r.tolerance = tol;
    r.precision_bits = bits;
    const long double lo = jacobi_min_eigenvalue(embed(re, im), bits).to_long_double();
    r.min_eigenvalue = lo;
    r.psd = lo >= -static_cast<long double>(tol);
    return r;
}

}  // namespace

unsigned psd_precision_from_env() {
    if (const char* env = std::getenv("ADELIC_CHARS_PSD_BITS"); env && *env) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v < 100000) return std::max<unsigned>(static_cast<unsigned>(v), 53u);
    }
    return kDefaultPsdBits;
}

GramMatrix gram_matrix(const TraceFunction& phi, const std::vector<GroupElement>& elems) {
    const auto& sys = phi.system();
    GramMatrix g;
    g.n = elems.size();
    g.values.reserve(g.n * g.n);
    std::vector<GroupElement> inverses;
    for (const auto& e : elems) inverses.push_back(sys.inverse(e));
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j) g.values.push_back(phi(sys.multiply(inverses[j], elems[i])));
    return g;
}

ComplexMatrix to_complex(const GramMatrix& gram) {
    ComplexMatrix m;
    m.n = gram.n;
    for (const auto& v : gram.values) {
        if (v.is_zero()) {
            m.entries.emplace_back(0.0L, 0.0L);
        } else {
            auto [c, s] = BigFloat::unit_circle(v.phase().value(), 80);
            m.entries.emplace_back(c.to_long_double(), s.to_long_double());
        }
    }
    return m;
}

bool psd_exact(const RatMatrix& m) {
    if (!m.is_square() || m != m.transpose()) throw DomainError("psd_exact: matrix is not symmetric");
    RatMatrix a = m;
    std::vector<bool> alive(a.rows(), true);
    for (std::size_t step = 0; step < a.rows(); ++step) {
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (!alive[i]) continue;
            if (sgn(a(i, i)) < 0) return false;
            if (sgn(a(i, i)) > 0 && !pivot) pivot = i;
        }
        if (!pivot) {
            // Remaining diagonal is zero: PSD iff the remaining block is zero.
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.rows(); ++j)
                    if (alive[i] && alive[j] && sgn(a(i, j)) != 0) return false;
            return true;
        }
        const std::size_t k = *pivot;
        alive[k] = false;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (!alive[i] || sgn(a(i, k)) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = 0; j < a.rows(); ++j) {
                if (alive[j]) a(i, j) -= f * a(k, j);
            }
        }
    }
    return true;
}

PsdResult psd_check(const GramMatrix& gram, double tol, unsigned bits) {
    const std::size_t n = gram.n;
    bool real_signs = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(gram.at(i, j) == gram.at(j, i).conj())) {
                throw DomainError("psd_check: Gram matrix is not Hermitian at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
            }
            const auto& v = gram.at(i, j);
            if (!v.is_zero() && !v.phase().is_zero() && v.phase().value() != Rational(1, 2)) real_signs = false;
        }
    if (real_signs) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& v = gram.at(i, j);
                m(i, j) = v.is_zero() ? 0 : (v.phase().is_zero() ? 1 : -1);
            }
        PsdResult r;
        r.exact = true;
        r.psd = psd_exact(m);
        r.tolerance = tol;
        return r;
    }
    return psd_check_numeric(gram, tol, bits);
}

PsdResult psd_check_numeric(const GramMatrix& gram, double tol, unsigned bits) {
    const std::size_t n = gram.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(gram.at(i, j) == gram.at(j, i).conj())) throw DomainError("psd_check: Gram matrix is not Hermitian");
        }
    bits = effective_bits(bits);
    const mpfr_prec_t prec = bits + kGuardBits;
    BigMatrix re = make_matrix(n, prec), im = make_matrix(n, prec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = gram.at(i, j);
            if (v.is_zero()) continue;
            auto [c, s] = BigFloat::unit_circle(v.phase().value(), prec);
            re[i][j] = std::move(c);
            im[i][j] = std::move(s);
        }
    return numeric_result(re, im, tol, bits);
}

PsdResult psd_check(const ComplexMatrix& m, double tol, unsigned bits) {
    const std::size_t n = m.n;
    if (m.entries.size() != n * n) throw DimensionError("psd_check: matrix entry count is not n^2");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > static_cast<long double>(tol)) {
                throw DomainError("psd_check: matrix is not Hermitian at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
            }
        }
    bits = effective_bits(bits);
    const mpfr_prec_t prec = bits + kGuardBits;
    BigMatrix re = make_matrix(n, prec), im = make_matrix(n, prec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrize so the embedding is exactly symmetric.
            const auto h = (m.at(i, j) + std::conj(m.at(j, i))) / 2.0L;
            re[i][j] = BigFloat(h.real(), prec);
            im[i][j] = BigFloat(h.imag(), prec);
        }
    return numeric_result(re, im, tol, bits);
}

long double min_eigenvalue(const ComplexMatrix& m, unsigned bits) {
    auto r = psd_check(m, std::numeric_limits<double>::infinity(), bits);
    return *r.min_eigenvalue;
}

bool central_check(const TraceFunction& phi, const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
    const auto& sys = phi.system();
    for (const auto& [g, h] : pairs) {
        if (!(phi(sys.conjugate(g, h)) == phi(g))) return false;
    }
    return true;
}

TraceFunction trivial_extension(const TraceFunction& psi, std::function<bool(const GroupElement&)> membership,
                                std::string name) {
    if (!membership(psi.system().identity())) throw DomainError("trivial_extension: identity is not a member");
    auto fn = [psi, membership = std::move(membership)](const GroupElement& g) {
        return membership(g) ? psi(g) : CharValue::zero();
    };
    return TraceFunction(psi.system_ptr(), std::move(fn), std::move(name));
}

TraceFunction tensor(const TraceFunction& phi1, const TraceFunction& phi2, const DirectSum& sum) {
    if (sum.first_dim != phi1.system().dim() || sum.second_dim != phi2.system().dim()) {
        throw DimensionError("tensor: direct sum does not match the factor systems");
    }
    auto system = std::make_shared<const LeviSystem>(sum.system);
    auto fn = [phi1, phi2, sum](const GroupElement& g) {
        const auto [a, b] = sum.split(g);
        return phi1(a) * phi2(b);
    };
    return TraceFunction(std::move(system), std::move(fn), phi1.name() + " (x) " + phi2.name());
}

KernelProbe projective_kernel_probe(const TraceFunction& phi, const std::vector<GroupElement>& elems) {
    const auto& sys = phi.system();
    KernelProbe probe;
    std::vector<CharValue> values;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        values.push_back(phi(elems[i]));
        if (values.back().is_zero()) continue;
        probe.p_members.push_back(i);
        if (values.back().is_one()) probe.k_members.push_back(i);
    }
    for (auto i : probe.p_members)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (!(phi(sys.multiply(elems[i], elems[j])) == values[i] * values[j])) probe.multiplicative = false;
        }
    return probe;
}

}  // namespace adelic
