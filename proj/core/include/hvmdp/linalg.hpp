#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hvmdp {

using Vector = std::vector<double>;

/// Dense row-major matrix. Sizes in this library are small (policy
/// matrices of a few hundred states at most), so no blocking is attempted.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    Matrix transposed() const;

    /// Maximum absolute row sum.
    double norm_inf() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Vector multiply(const Matrix& a, std::span<const double> x);
Matrix multiply(const Matrix& a, const Matrix& b);

double norm_inf(std::span<const double> x);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

/// LU factorization with partial pivoting, PA = LU.
///
/// A pivot is treated as zero when its magnitude falls below
/// 1e-12 times the largest absolute row sum of the input; factor() then
/// returns nullopt.
class LuFactorization {
public:
    static constexpr double kSingularityThreshold = 1e-12;

    static std::optional<LuFactorization> factor(Matrix a);

    std::size_t size() const noexcept { return lu_.rows(); }

    /// Solves A x = b.
    Vector solve(std::span<const double> b) const;
    /// Solves A^T x = b.
    Vector solve_transposed(std::span<const double> b) const;

    Matrix inverse() const;

private:
    LuFactorization(Matrix lu, std::vector<std::size_t> perm)
        : lu_(std::move(lu)), perm_(std::move(perm)) {}

    Matrix lu_;
    std::vector<std::size_t> perm_; // row i of PA is row perm_[i] of A
};

} // namespace hvmdp
