#include "hvmdp/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace hvmdp {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

double Matrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (double v : row(r))
            s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

Vector multiply(const Matrix& a, std::span<const double> x) {
    assert(a.cols() == x.size());
    Vector y(a.rows(), 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row(r);
        y[r] = std::inner_product(row.begin(), row.end(), x.begin(), 0.0);
    }
    return y;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.rows());
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

double norm_inf(std::span<const double> x) {
    double best = 0.0;
    for (double v : x)
        best = std::max(best, std::abs(v));
    return best;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        best = std::max(best, std::abs(a[i] - b[i]));
    return best;
}

std::optional<LuFactorization> LuFactorization::factor(Matrix a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    const double threshold = kSingularityThreshold * a.norm_inf();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(a(r, k)) > best) {
                best = std::abs(a(r, k));
                pivot = r;
            }
        }
        if (best < threshold || best == 0.0)
            return std::nullopt;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(pivot, c));
            std::swap(perm[k], perm[pivot]);
        }
        const double d = a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double factor = a(r, k) / d;
            a(r, k) = factor;
            if (factor == 0.0)
                continue;
            for (std::size_t c = k + 1; c < n; ++c)
                a(r, c) -= factor * a(k, c);
        }
    }
    return LuFactorization(std::move(a), std::move(perm));
}

Vector LuFactorization::solve(std::span<const double> b) const {
    const std::size_t n = size();
    assert(b.size() == n);
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j)
            s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

Vector LuFactorization::solve_transposed(std::span<const double> b) const {
    // A^T = U^T L^T P, so solve U^T y = b, L^T w = y, then x = P^T w.
    const std::size_t n = size();
    assert(b.size() == n);
    Vector y(b.begin(), b.end());
    for (std::size_t i = 0; i < n; ++i) {
        double s = y[i];
        for (std::size_t j = 0; j < i; ++j)
            s -= lu_(j, i) * y[j];
        y[i] = s / lu_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = y[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= lu_(j, i) * y[j];
        y[i] = s;
    }
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[perm_[i]] = y[i];
    return x;
}

Matrix LuFactorization::inverse() const {
    const std::size_t n = size();
    Matrix inv(n, n);
    Vector e(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        e[c] = 1.0;
        Vector col = solve(e);
        e[c] = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            inv(r, c) = col[r];
    }
    return inv;
}

} // namespace hvmdp
