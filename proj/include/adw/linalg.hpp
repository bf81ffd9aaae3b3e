#pragma once

#include <cstddef>
#include <initializer_list>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adw/scalar.hpp"

namespace adw {

/// Dense coefficient vector over the rationals.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : c_(n) {}
    Vec(std::initializer_list<Scalar> xs) : c_(xs) {}
    explicit Vec(std::vector<Scalar> xs) : c_(std::move(xs)) {}

    static Vec unit(std::size_t n, std::size_t i);

    std::size_t size() const { return c_.size(); }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Scalar>& data() const { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool is_zero() const;
    /// Concatenation (x, y).
    static Vec concat(const Vec& x, const Vec& y);
    Vec slice(std::size_t from, std::size_t count) const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Scalar& s);
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Scalar& s, Vec a) { return a *= s; }
    Vec operator-() const;

    friend bool operator==(const Vec&, const Vec&) = default;

    std::string str() const;

private:
    std::vector<Scalar> c_;
};

/// Dense row-major matrix. A linear map k^cols -> k^rows acts on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    /// Builds from rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    Matrix transpose() const;
    bool is_zero() const;
    /// Row-major flattening, used for reports.
    Vec flatten() const;

    Vec apply(const Vec& v) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct LinearSolution {
    Vec particular;
    std::vector<Vec> nullspace;
};

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

/**
 * Solves A x = b exactly. Returns nullopt when inconsistent; otherwise a
 * particular solution (free variables set to zero) and a nullspace basis
 * (one vector per free column, in increasing column order).
 */
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b);

std::vector<Vec> nullspace(const Matrix& a);
std::size_t rank(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

/**
 * For an inconsistent system A x = b, a vector y with y^T A = 0 and
 * y . b != 0 (a Farkas-style certificate over a field); nullopt when consistent.
 */
std::optional<Vec> infeasibility_certificate(const Matrix& a, const Vec& b);

Scalar dot(const Vec& x, const Vec& y);

/// Coordinates of v in the span of the given independent columns, if v lies in it.
std::optional<Vec> coordinates(const Matrix& basis_columns, const Vec& v);

/// The system M z = b equivalent to residual(z) = 0 for an affine residual.
struct AffineSystem {
    Matrix m;
    Vec b;
};
AffineSystem affine_system(std::size_t unknowns, const std::function<Vec(const Vec&)>& residual);

/**
 * Solves residual(z) = 0 for z in k^unknowns assuming residual is affine.
 * The result is re-checked against residual, so a non-affine residual can
 * only produce nullopt, never a wrong answer.
 */
std::optional<Vec> solve_affine(std::size_t unknowns, const std::function<Vec(const Vec&)>& residual);

}  // namespace adw
