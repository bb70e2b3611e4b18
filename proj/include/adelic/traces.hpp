#pragma once

#include "adelic/chars.hpp"
#include "adelic/trace_function.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace adelic {

/// Default binary precision of the numerical PSD check; overridden by the
/// ADELIC_CHARS_PSD_BITS environment variable.
inline constexpr unsigned kDefaultPsdBits = 60;
inline constexpr double kDefaultPsdTolerance = 1e-9;

/// Precision from ADELIC_CHARS_PSD_BITS, or kDefaultPsdBits. Values below 53
/// are raised to 53.
unsigned psd_precision_from_env();

/// (φ(g_j^{-1} g_i))_{i,j}, kept exactly.
struct GramMatrix {
    std::size_t n = 0;
    std::vector<CharValue> values;

    const CharValue& at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

struct ComplexMatrix {
    std::size_t n = 0;
    std::vector<std::complex<long double>> entries;

    const std::complex<long double>& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

GramMatrix gram_matrix(const TraceFunction& phi, const std::vector<GroupElement>& elems);
ComplexMatrix to_complex(const GramMatrix& gram);

struct PsdResult {
    bool psd = false;
    /// True when decided by exact rational elimination (entries in {0, ±1}).
    bool exact = false;
    /// Smallest eigenvalue (numerical path only).
    std::optional<long double> min_eigenvalue;
    double tolerance = 0;
    unsigned precision_bits = 0;
};

/// Positive semi-definiteness of a Gram matrix. When every entry is 0 or ±1
/// the decision is exact; otherwise the smallest eigenvalue is computed at
/// `bits` of binary precision and compared with -tol. Throws DomainError on
/// a non-Hermitian matrix.
PsdResult psd_check(const GramMatrix& gram, double tol = kDefaultPsdTolerance, unsigned bits = 0);
PsdResult psd_check(const ComplexMatrix& m, double tol = kDefaultPsdTolerance, unsigned bits = 0);

/// Always the numerical path, phases converted at the working precision.
PsdResult psd_check_numeric(const GramMatrix& gram, double tol = kDefaultPsdTolerance, unsigned bits = 0);

/// Exact PSD test of a symmetric rational matrix by pivoted elimination.
bool psd_exact(const RatMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix at the given precision.
long double min_eigenvalue(const ComplexMatrix& m, unsigned bits);

/// φ(h g h^{-1}) == φ(g) for every pair (g, h).
bool central_check(const TraceFunction& phi, const std::vector<std::pair<GroupElement, GroupElement>>& pairs);

/// ψ on the subgroup given by `membership`, 0 outside. Throws DomainError if
/// the identity is not a member.
TraceFunction trivial_extension(const TraceFunction& psi, std::function<bool(const GroupElement&)> membership,
                                std::string name = "tilde");

/// φ1 ⊗ φ2 on the product group; `sum` must be direct_sum(φ1.system(), φ2.system()).
TraceFunction tensor(const TraceFunction& phi1, const TraceFunction& phi2, const DirectSum& sum);

struct KernelProbe {
    /// Indices into the probed elements with φ(g) = 1.
    std::vector<std::size_t> k_members;
    /// Indices with |φ(g)| = 1.
    std::vector<std::size_t> p_members;
    /// φ(x γ) = φ(x) φ(γ) for all x in P and γ in the probed set.
    bool multiplicative = true;
};

KernelProbe projective_kernel_probe(const TraceFunction& phi, const std::vector<GroupElement>& elems);

}  // namespace adelic
