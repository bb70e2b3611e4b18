#pragma once

#include "adelic/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace adelic {

/// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /// Builds a matrix from nested rows; every row must have the same length.
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return data_; }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;
    std::vector<RatVector> row_vectors() const;

    RatMatrix transpose() const;
    bool is_zero() const;

    /// Exact inverse; throws DomainError when singular.
    RatMatrix inverse() const;
    RatMatrix pow(unsigned k) const;

    RatVector apply(const RatVector& v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& m);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::string format_matrix(const RatMatrix& m);

/// Stacks matrices vertically; all must share the column count `cols`.
RatMatrix vstack(std::span<const RatMatrix> blocks, std::size_t cols);

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form (unique for the row space of m).
RrefResult rref(const RatMatrix& m);

/// A linear subspace of Q^d held in canonical form: the non-zero rows of the
/// RREF of any spanning set. Two values compare equal iff they are the same
/// subspace.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, std::span<const RatVector> vectors);
    /// Row space of m.
    static Subspace row_space(const RatMatrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    std::vector<RatVector> basis_vectors() const { return basis_.row_vectors(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Reduces v modulo this subspace (clears the pivot coordinates).
    RatVector reduce(const RatVector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, RatMatrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_ = 0;
    RatMatrix basis_;
    std::vector<std::size_t> pivots_;
};

std::string format_subspace(const Subspace& s);

/// {x : m x = 0}.
Subspace kernel(const RatMatrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// {x : m x ∈ s}.
Subspace preimage(const RatMatrix& m, const Subspace& s);
/// {q : <v, q> = 0 for all v ∈ s}.
Subspace annihilator(const Subspace& s);
/// Image m(s).
Subspace image(const RatMatrix& m, const Subspace& s);

/// The largest V ⊆ w with M V ⊆ V for every M in ops.
Subspace largest_invariant_in(const Subspace& w, std::span<const RatMatrix> ops);

/// The smallest subspace of Q^ambient_dim containing every seed and stable
/// under every M in ops.
Subspace smallest_invariant_containing(std::size_t ambient_dim, std::span<const RatVector> seeds,
                                       std::span<const RatMatrix> ops);

}  // namespace adelic
