#include "adw/bilinear.hpp"

#include "adw/errors.hpp"

namespace adw {

Bilinear::Bilinear(std::size_t left, std::size_t right, std::size_t out)
    : left_(left), right_(right), out_(out), c_(left * right * out) {}

Vec Bilinear::basis(std::size_t i, std::size_t j) const {
    Vec r(out_);
    for (std::size_t k = 0; k < out_; ++k) r[k] = at(i, j, k);
    return r;
}

Vec Bilinear::apply(const Vec& x, const Vec& y) const {
    if (x.size() != left_ || y.size() != right_)
        throw InputError("bilinear map applied to vectors of the wrong dimension");
    Vec r(out_);
    for (std::size_t i = 0; i < left_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < right_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < out_; ++k) {
                const Scalar& c = at(i, j, k);
                if (!c.is_zero()) r[k] += f * c;
            }
        }
    }
    return r;
}

bool Bilinear::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Bilinear& Bilinear::operator+=(const Bilinear& o) {
    if (left_ != o.left_ || right_ != o.right_ || out_ != o.out_)
        throw InputError("bilinear sum: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Bilinear& Bilinear::operator-=(const Bilinear& o) { return *this += -o; }

Bilinear Bilinear::operator-() const {
    Bilinear r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

ActionFamily::ActionFamily(std::size_t alg_dim, std::size_t mod_dim)
    : mod_dim_(mod_dim), maps_(alg_dim, Matrix(mod_dim, mod_dim)) {}

ActionFamily::ActionFamily(std::vector<Matrix> maps) : maps_(std::move(maps)) {
    if (!maps_.empty()) mod_dim_ = maps_.front().cols();
    for (const auto& m : maps_)
        if (m.cols() != mod_dim_ || m.rows() != maps_.front().rows())
            throw InputError("action family: maps of differing shape");
}

Matrix ActionFamily::of(const Vec& x) const {
    if (x.size() != maps_.size()) throw InputError("action family: argument of the wrong dimension");
    std::size_t rows = maps_.empty() ? mod_dim_ : maps_.front().rows();
    Matrix r(rows, mod_dim_);
    for (std::size_t i = 0; i < maps_.size(); ++i)
        if (!x[i].is_zero()) r += x[i] * maps_[i];
    return r;
}

Vec ActionFamily::apply(const Vec& x, const Vec& v) const {
    if (x.size() != maps_.size()) throw InputError("action family: argument of the wrong dimension");
    std::size_t rows = maps_.empty() ? mod_dim_ : maps_.front().rows();
    Vec r(rows);
    for (std::size_t i = 0; i < maps_.size(); ++i)
        if (!x[i].is_zero()) r += x[i] * maps_[i].apply(v);
    return r;
}

ActionFamily ActionFamily::dual() const {
    std::vector<Matrix> t;
    t.reserve(maps_.size());
    for (const auto& m : maps_) t.push_back(m.transpose());
    ActionFamily r(std::move(t));
    if (maps_.empty()) r.mod_dim_ = mod_dim_;
    return r;
}

bool ActionFamily::is_zero() const {
    for (const auto& m : maps_)
        if (!m.is_zero()) return false;
    return true;
}

ActionFamily& ActionFamily::operator+=(const ActionFamily& o) {
    if (maps_.size() != o.maps_.size() || mod_dim_ != o.mod_dim_)
        throw InputError("action family sum: shape mismatch");
    for (std::size_t i = 0; i < maps_.size(); ++i) maps_[i] += o.maps_[i];
    return *this;
}

ActionFamily ActionFamily::operator-() const {
    ActionFamily r(*this);
    for (auto& m : r.maps_) m = -m;
    return r;
}

}  // namespace adw
