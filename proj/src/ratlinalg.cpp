#include "adelic/ratlinalg.hpp"

#include <utility>

namespace adelic {

namespace {

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_square(const RatMatrix& m, std::size_t side, const char* what) {
    if (m.rows() != side || m.cols() != side) {
        throw DimensionError(std::string(what) + ": expected " + dims(side, side) + " operator, got " +
                             dims(m.rows(), m.cols()));
    }
}

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionError(std::string(what) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                             " and " + std::to_string(b.ambient_dim()) + " differ");
    }
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("matrix " + dims(rows, cols) + " given " + std::to_string(data_.size()) +
                             " entries");
    }
    for (auto& q : data_) q.canonicalize();
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                 ", expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<RatVector> RatMatrix::row_vectors() const {
    std::vector<RatVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& q : data_) {
        if (sgn(q) != 0) return false;
    }
    return true;
}

RatMatrix RatMatrix::inverse() const {
    if (!is_square()) throw DimensionError("inverse of non-square matrix " + dims(rows_, cols_));
    const std::size_t n = rows_;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    auto r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw DomainError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
    return inv;
}

RatMatrix RatMatrix::pow(unsigned k) const {
    if (!is_square()) throw DimensionError("power of non-square matrix");
    RatMatrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i) result = result * (*this);
    return result;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (v.size() != cols_) {
        throw DimensionError("apply: matrix " + dims(rows_, cols_) + " to vector of length " +
                             std::to_string(v.size()));
    }
    RatVector out(rows_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const auto& a = (*this)(i, j);
            if (sgn(a) != 0) out[i] += a * v[j];
        }
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("product " + dims(a.rows_, a.cols_) + " * " + dims(b.rows_, b.cols_));
    }
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (sgn(bkj) != 0) c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionError("sum " + dims(a.rows_, a.cols_) + " + " + dims(b.rows_, b.cols_));
    }
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionError("difference " + dims(a.rows_, a.cols_) + " - " + dims(b.rows_, b.cols_));
    }
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
    RatMatrix c(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) c.data_[i] = s * m.data_[i];
    return c;
}

std::string format_matrix(const RatMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += pretty_rational(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

RatMatrix vstack(std::span<const RatMatrix> blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionError("vstack: column count mismatch");
        rows += b.rows();
    }
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (const auto& b : blocks) entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return RatMatrix(rows, cols, std::move(entries));
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        }
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots), r};
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, RatMatrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
    return Subspace(ambient_dim, RatMatrix::identity(ambient_dim), std::move(piv));
}

Subspace Subspace::row_space(const RatMatrix& m) {
    auto r = rref(m);
    RatMatrix basis(r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = r.matrix(i, j);
    return Subspace(m.cols(), std::move(basis), std::move(r.pivots));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const RatVector> vectors) {
    RatMatrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim) {
            throw DimensionError("span: vector of length " + std::to_string(vectors[i].size()) + " in Q^" +
                                 std::to_string(ambient_dim));
        }
        for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    return row_space(m);
}

RatVector Subspace::reduce(const RatVector& v) const {
    if (v.size() != ambient_) throw DimensionError("reduce: vector length mismatch");
    RatVector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rational f = r[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (sgn(basis_(i, j)) != 0) r[j] -= f * basis_(i, j);
        }
    }
    return r;
}

bool Subspace::contains(const RatVector& v) const { return adelic::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other, "contains");
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

std::string format_subspace(const Subspace& s) {
    if (s.is_zero()) return "{0}";
    std::string out = "span{";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i) out += ", ";
        out += format_vector(s.basis().row(i));
    }
    return out + "}";
}

Subspace kernel(const RatMatrix& m) {
    auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<RatVector> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(n, Rational(0));
        x[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.matrix(i, f);
        gens.push_back(std::move(x));
    }
    return Subspace::span(n, gens);
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect");
    const RatMatrix constraints[] = {annihilator(a).basis(), annihilator(b).basis()};
    return kernel(vstack(constraints, a.ambient_dim()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    const RatMatrix blocks[] = {a.basis(), b.basis()};
    return Subspace::row_space(vstack(blocks, a.ambient_dim()));
}

Subspace preimage(const RatMatrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) {
        throw DimensionError("preimage: matrix with " + std::to_string(m.rows()) + " rows into Q^" +
                             std::to_string(s.ambient_dim()));
    }
    if (s.is_full()) return Subspace::full(m.cols());
    return kernel(annihilator(s).basis() * m);
}

Subspace image(const RatMatrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionError("image: dimension mismatch");
    return Subspace::row_space(s.basis() * m.transpose());
}

Subspace largest_invariant_in(const Subspace& w, std::span<const RatMatrix> ops) {
    const std::size_t d = w.ambient_dim();
    for (const auto& m : ops) require_square(m, d, "largest_invariant_in");
    Subspace v = w;
    while (true) {
        std::vector<RatMatrix> constraints{annihilator(v).basis()};
        const RatMatrix ann = constraints.front();
        for (const auto& m : ops) constraints.push_back(ann * m);
        Subspace next = kernel(vstack(constraints, d));
        if (next.dim() == v.dim()) return v;
        v = std::move(next);
    }
}

Subspace smallest_invariant_containing(std::size_t ambient_dim, std::span<const RatVector> seeds,
                                       std::span<const RatMatrix> ops) {
    for (const auto& m : ops) require_square(m, ambient_dim, "smallest_invariant_containing");
    Subspace v = Subspace::span(ambient_dim, seeds);
    while (true) {
        std::vector<RatMatrix> blocks{v.basis()};
        for (const auto& m : ops) blocks.push_back(v.basis() * m.transpose());
        Subspace next = Subspace::row_space(vstack(blocks, ambient_dim));
        if (next.dim() == v.dim()) return v;
        v = std::move(next);
    }
}

}  // namespace adelic
