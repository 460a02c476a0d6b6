#include "basicset/ratlin.hpp"

#include <utility>

namespace basicset {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rat acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rat& e = (*this)(r, c);
            if (sgn(e) != 0) acc += e * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Echelon rref(RatMatrix m) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        }
        Rat inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Rat factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Echelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

IntVector primitive_integer(const RatVector& v) {
    mpz_class den = 1;
    bool nonzero = false;
    for (const auto& q : v) {
        if (sgn(q) != 0) nonzero = true;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    if (!nonzero) throw ZeroVector("zero vector has no primitive multiple");

    IntVector out;
    out.reserve(v.size());
    mpz_class content = 0;
    for (const auto& q : v) {
        mpz_class n = q.get_num() * (den / q.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        out.push_back(std::move(n));
    }
    int lead = 0;
    for (const auto& n : out) {
        if (sgn(n) != 0) {
            lead = sgn(n);
            break;
        }
    }
    if (lead < 0) content = -content;
    for (auto& n : out) n /= content;
    return out;
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product size mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace basicset
