#pragma once

#include "celestial/exactalg/gaussian.hpp"
#include "celestial/exactalg/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace celestial {

template <class F>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
    ExactMatrix(const std::vector<std::vector<F>>& rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size())
    {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::vector<F> row(std::size_t i) const
    {
        return std::vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    std::vector<F> apply(const std::vector<F>& v) const
    {
        if (v.size() != cols_)
            throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<F> r(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero(v[j]))
                    r[i] += F(at(i, j) * v[j]);
        return r;
    }

    ExactMatrix select_rows(const std::vector<std::size_t>& idx) const
    {
        ExactMatrix m(idx.size(), cols_);
        for (std::size_t k = 0; k < idx.size(); ++k)
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(k, j) = at(idx[k], j);
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

// Kernel basis via fraction-free elimination; vectors are primitive integer vectors.
std::vector<std::vector<Rational>> nullspace(const ExactMatrix<Rational>& m);
std::size_t rank(const ExactMatrix<Rational>& m);

// Gauss-Jordan over Q(i); used for small systems.
std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix<GaussianRational>& m);

// Rows forming a basis of the row space modulo the prime p (first-come order).
std::vector<std::size_t> modular_row_basis(const ExactMatrix<Rational>& m, std::uint64_t p);
std::vector<std::vector<std::uint64_t>> modular_nullspace(const ExactMatrix<Rational>& m, std::uint64_t p);

// One-dimensional kernel by CRT over 62-bit primes and rational reconstruction,
// returned only after exact verification against m.
std::optional<std::vector<Rational>> multimodular_kernel_vector(const ExactMatrix<Rational>& m, int max_primes = 400);

// Content-free integer vector, first nonzero entry positive.
std::vector<Rational> primitive_vector(const std::vector<Rational>& v);

// Determinant of a square matrix over an integral domain by Bareiss elimination.
// div(a, b) must return the exact quotient a / b.
template <class R, class IsZero, class ExactDiv>
R bareiss_determinant(std::vector<std::vector<R>> a, const R& one, IsZero zero, ExactDiv div)
{
    const std::size_t n = a.size();
    if (n == 0)
        return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (zero(a[k][k])) {
            std::size_t p = k + 1;
            while (p < n && zero(a[p][k]))
                ++p;
            if (p == n)
                return R(one - one);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = div(R(a[k][k] * a[i][j] - a[i][k] * a[k][j]), prev);
            a[i][k] = R(one - one);
        }
        prev = a[k][k];
    }
    R d = a[n - 1][n - 1];
    if (negate)
        d = R((one - one) - d);
    return d;
}

Rational determinant(const ExactMatrix<Rational>& m);

} // namespace celestial
