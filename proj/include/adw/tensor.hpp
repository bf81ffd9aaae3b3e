#pragma once

#include <cstddef>
#include <vector>

#include "adw/bilinear.hpp"

namespace adw {

/// Element of k^n (x) k^m: t(i, j) is the coefficient of e_i (x) e_j.
class Tensor2 {
public:
    Tensor2() = default;
    Tensor2(std::size_t d1, std::size_t d2) : d1_(d1), d2_(d2), c_(d1 * d2) {}
    static Tensor2 pure(const Vec& x, const Vec& y);

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return c_[i * d2_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return c_[i * d2_ + j]; }

    /// tau(x (x) y) = y (x) x.
    Tensor2 twist() const;
    /// (f (x) I) t.
    Tensor2 leg1(const Matrix& f) const;
    /// (I (x) g) t.
    Tensor2 leg2(const Matrix& g) const;
    bool is_zero() const;
    Vec flatten() const { return Vec(c_); }

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    Tensor2 operator-() const;
    friend bool operator==(const Tensor2&, const Tensor2&) = default;

private:
    std::size_t d1_ = 0, d2_ = 0;
    std::vector<Scalar> c_;
};

/// Element of k^a (x) k^b (x) k^c.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d1, std::size_t d2, std::size_t d3) : d1_(d1), d2_(d2), d3_(d3), c_(d1 * d2 * d3) {}

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    std::size_t d3() const { return d3_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * d2_ + j) * d3_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * d2_ + j) * d3_ + k];
    }

    /// sigma_123(x (x) y (x) z) = z (x) x (x) y.
    Tensor3 sigma123() const;
    /// sigma_132(x (x) y (x) z) = y (x) z (x) x.
    Tensor3 sigma132() const;
    /// Applies a linear map on one leg (0, 1 or 2).
    Tensor3 leg(std::size_t which, const Matrix& f) const;
    bool is_zero() const;
    Vec flatten() const { return Vec(c_); }

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    Tensor3 operator-() const;
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<Scalar> c_;
};

/**
 * Leg products of u = sum a_i (x) b_i and v = sum c_j (x) d_j in A (x) A:
 *   u12 o v13 = sum (a_i o c_j) (x) b_i (x) d_j
 *   u13 o v23 = sum a_i (x) c_j (x) (b_i o d_j)
 *   u23 o v12 = sum c_j (x) (a_i o d_j) (x) b_i
 */
Tensor3 leg12_13(const Tensor2& u, const Tensor2& v, const Bilinear& op);
Tensor3 leg13_23(const Tensor2& u, const Tensor2& v, const Bilinear& op);
Tensor3 leg23_12(const Tensor2& u, const Tensor2& v, const Bilinear& op);

}  // namespace adw
