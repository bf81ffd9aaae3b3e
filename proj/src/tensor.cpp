#include "adw/tensor.hpp"

#include "adw/errors.hpp"

namespace adw {

namespace {

void require_square_op(const Bilinear& op, std::size_t n) {
    if (op.left() != n || op.right() != n || op.out() != n)
        throw InputError("leg product: operation and tensors have different dimensions");
}

}  // namespace

Tensor2 Tensor2::pure(const Vec& x, const Vec& y) {
    Tensor2 t(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) t(i, j) = x[i] * y[j];
    return t;
}

Tensor2 Tensor2::twist() const {
    Tensor2 t(d2_, d1_);
    for (std::size_t i = 0; i < d1_; ++i)
        for (std::size_t j = 0; j < d2_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Tensor2 Tensor2::leg1(const Matrix& f) const {
    if (f.cols() != d1_) throw InputError("Tensor2::leg1: dimension mismatch");
    Tensor2 t(f.rows(), d2_);
    for (std::size_t a = 0; a < d1_; ++a)
        for (std::size_t j = 0; j < d2_; ++j) {
            const Scalar& x = (*this)(a, j);
            if (x.is_zero()) continue;
            for (std::size_t i = 0; i < f.rows(); ++i)
                if (!f(i, a).is_zero()) t(i, j) += f(i, a) * x;
        }
    return t;
}

Tensor2 Tensor2::leg2(const Matrix& g) const { return twist().leg1(g).twist(); }

bool Tensor2::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (d1_ != o.d1_ || d2_ != o.d2_) throw InputError("Tensor2 sum: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (d1_ != o.d1_ || d2_ != o.d2_) throw InputError("Tensor2 difference: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Tensor2 Tensor2::operator-() const {
    Tensor2 t(*this);
    for (auto& x : t.c_) x = -x;
    return t;
}

Tensor3 Tensor3::sigma123() const {
    Tensor3 t(d3_, d1_, d2_);
    for (std::size_t i = 0; i < d1_; ++i)
        for (std::size_t j = 0; j < d2_; ++j)
            for (std::size_t k = 0; k < d3_; ++k) t(k, i, j) = (*this)(i, j, k);
    return t;
}

Tensor3 Tensor3::sigma132() const {
    Tensor3 t(d2_, d3_, d1_);
    for (std::size_t i = 0; i < d1_; ++i)
        for (std::size_t j = 0; j < d2_; ++j)
            for (std::size_t k = 0; k < d3_; ++k) t(j, k, i) = (*this)(i, j, k);
    return t;
}

Tensor3 Tensor3::leg(std::size_t which, const Matrix& f) const {
    std::size_t dims[3] = {d1_, d2_, d3_};
    if (which > 2 || f.cols() != dims[which]) throw InputError("Tensor3::leg: dimension mismatch");
    std::size_t out[3] = {d1_, d2_, d3_};
    out[which] = f.rows();
    Tensor3 t(out[0], out[1], out[2]);
    for (std::size_t i = 0; i < d1_; ++i)
        for (std::size_t j = 0; j < d2_; ++j)
            for (std::size_t k = 0; k < d3_; ++k) {
                const Scalar& x = (*this)(i, j, k);
                if (x.is_zero()) continue;
                std::size_t idx[3] = {i, j, k};
                std::size_t src = idx[which];
                for (std::size_t m = 0; m < f.rows(); ++m) {
                    if (f(m, src).is_zero()) continue;
                    idx[which] = m;
                    t(idx[0], idx[1], idx[2]) += f(m, src) * x;
                }
            }
    return t;
}

bool Tensor3::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_) throw InputError("Tensor3 sum: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_) throw InputError("Tensor3 difference: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 t(*this);
    for (auto& x : t.c_) x = -x;
    return t;
}

Tensor3 leg12_13(const Tensor2& u, const Tensor2& v, const Bilinear& op) {
    const std::size_t n = u.d1();
    require_square_op(op, n);
    Tensor3 t(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (u(a, b).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (v(c, d).is_zero()) continue;
                    Scalar f = u(a, b) * v(c, d);
                    for (std::size_t m = 0; m < n; ++m)
                        if (!op.at(a, c, m).is_zero()) t(m, b, d) += f * op.at(a, c, m);
                }
        }
    return t;
}

Tensor3 leg13_23(const Tensor2& u, const Tensor2& v, const Bilinear& op) {
    const std::size_t n = u.d1();
    require_square_op(op, n);
    Tensor3 t(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (u(a, b).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (v(c, d).is_zero()) continue;
                    Scalar f = u(a, b) * v(c, d);
                    for (std::size_t m = 0; m < n; ++m)
                        if (!op.at(b, d, m).is_zero()) t(a, c, m) += f * op.at(b, d, m);
                }
        }
    return t;
}

Tensor3 leg23_12(const Tensor2& u, const Tensor2& v, const Bilinear& op) {
    const std::size_t n = u.d1();
    require_square_op(op, n);
    Tensor3 t(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (u(a, b).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (v(c, d).is_zero()) continue;
                    Scalar f = u(a, b) * v(c, d);
                    for (std::size_t m = 0; m < n; ++m)
                        if (!op.at(a, d, m).is_zero()) t(c, m, b) += f * op.at(a, d, m);
                }
        }
    return t;
}

}  // namespace adw
