#pragma once

#include <cstddef>
#include <vector>

#include "adw/linalg.hpp"

namespace adw {

/**
 * Bilinear map k^left x k^right -> k^out given by structure constants:
 * e_i o e_j = sum_k c(i, j, k) e_k.
 */
class Bilinear {
public:
    Bilinear() = default;
    Bilinear(std::size_t left, std::size_t right, std::size_t out);
    static Bilinear square(std::size_t n) { return Bilinear(n, n, n); }

    std::size_t left() const { return left_; }
    std::size_t right() const { return right_; }
    std::size_t out() const { return out_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * right_ + j) * out_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * right_ + j) * out_ + k];
    }

    /// e_i o e_j.
    Vec basis(std::size_t i, std::size_t j) const;
    Vec apply(const Vec& x, const Vec& y) const;
    bool is_zero() const;
    /// Coefficients in (i, j, k) order.
    Vec flatten() const { return Vec(c_); }

    Bilinear& operator+=(const Bilinear& o);
    Bilinear& operator-=(const Bilinear& o);
    friend Bilinear operator+(Bilinear a, const Bilinear& b) { return a += b; }
    friend Bilinear operator-(Bilinear a, const Bilinear& b) { return a -= b; }
    Bilinear operator-() const;

    friend bool operator==(const Bilinear&, const Bilinear&) = default;

private:
    std::size_t left_ = 0, right_ = 0, out_ = 0;
    std::vector<Scalar> c_;
};

/**
 * Linear-map-valued family indexed by the basis of a source space:
 * x -> M(x) in End-like Hom(k^cols, k^rows). Composition of maps is matrix
 * product, so the matrix of f o g is M(f) M(g).
 */
class ActionFamily {
public:
    ActionFamily() = default;
    /// All maps zero, each mod_dim x mod_dim.
    ActionFamily(std::size_t alg_dim, std::size_t mod_dim);
    explicit ActionFamily(std::vector<Matrix> maps);

    std::size_t alg_dim() const { return maps_.size(); }
    std::size_t mod_dim() const { return mod_dim_; }

    Matrix& at(std::size_t x) { return maps_[x]; }
    const Matrix& at(std::size_t x) const { return maps_[x]; }

    /// M(x) for a general element x.
    Matrix of(const Vec& x) const;
    /// M(x) v.
    Vec apply(const Vec& x, const Vec& v) const;
    /// Family of transposed maps.
    ActionFamily dual() const;
    bool is_zero() const;

    ActionFamily& operator+=(const ActionFamily& o);
    friend ActionFamily operator+(ActionFamily a, const ActionFamily& b) { return a += b; }
    ActionFamily operator-() const;
    friend ActionFamily operator-(const ActionFamily& a, const ActionFamily& b) { return a + (-b); }

    friend bool operator==(const ActionFamily&, const ActionFamily&) = default;

private:
    std::size_t mod_dim_ = 0;
    std::vector<Matrix> maps_;
};

}  // namespace adw
