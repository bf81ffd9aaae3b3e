#include "adw/linalg.hpp"

#include "adw/errors.hpp"

namespace adw {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
}

}  // namespace

Vec Vec::unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool Vec::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Vec::concat(const Vec& x, const Vec& y) {
    Vec r(x.size() + y.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[x.size() + i] = y[i];
    return r;
}

Vec Vec::slice(std::size_t from, std::size_t count) const {
    if (from + count > size()) throw InputError("Vec::slice out of range");
    Vec r(count);
    for (std::size_t i = 0; i < count; ++i) r[i] = c_[from + i];
    return r;
}

Vec& Vec::operator+=(const Vec& o) {
    require_same(size(), o.size(), "vector sum");
    for (std::size_t i = 0; i < size(); ++i)
        if (!o[i].is_zero()) c_[i] += o[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    require_same(size(), o.size(), "vector difference");
    for (std::size_t i = 0; i < size(); ++i)
        if (!o[i].is_zero()) c_[i] -= o[i];
    return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
    for (auto& x : c_)
        if (!x.is_zero()) x *= s;
    return *this;
}

Vec Vec::operator-() const {
    Vec r(*this);
    for (auto& x : r.c_)
        if (!x.is_zero()) x = -x;
    return r;
}

std::string Vec::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ", ";
        s += c_[i].str();
    }
    return s + ")";
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_same(rows[i].size(), m.cols_, "matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require_same(cols[j].size(), rows, "matrix columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::flatten() const { return Vec(a_); }

Vec Matrix::apply(const Vec& v) const {
    require_same(v.size(), cols_, "matrix-vector product");
    Vec r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& x = (*this)(i, j);
            if (!x.is_zero()) r[i] += x * v[j];
        }
    }
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same(rows_, o.rows_, "matrix sum");
    require_same(cols_, o.cols_, "matrix sum");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same(rows_, o.rows_, "matrix difference");
    require_same(cols_, o.cols_, "matrix difference");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : a_)
        if (!x.is_zero()) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same(a.cols_, b.rows_, "matrix product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    r *= Scalar(-1);
    return r;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Scalar inv = Scalar(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b) {
    require_same(a.rows(), b.size(), "solve_linear");
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;

    LinearSolution sol{Vec(n), {}};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        sol.particular[pivots[r]] = aug(r, n);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, f);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<Vec> nullspace(const Matrix& a) { return solve_linear(a, Vec(a.rows()))->nullspace; }

std::size_t rank(const Matrix& a) {
    Matrix m(a);
    return rref(m).size();
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<Vec> infeasibility_certificate(const Matrix& a, const Vec& b) {
    require_same(a.rows(), b.size(), "infeasibility_certificate");
    for (auto& y : nullspace(a.transpose()))
        if (!dot(y, b).is_zero()) return y;
    return std::nullopt;
}

Scalar dot(const Vec& x, const Vec& y) {
    require_same(x.size(), y.size(), "dot product");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    return s;
}

AffineSystem affine_system(std::size_t unknowns, const std::function<Vec(const Vec&)>& residual) {
    const Vec r0 = residual(Vec(unknowns));
    std::vector<Vec> cols;
    cols.reserve(unknowns);
    for (std::size_t k = 0; k < unknowns; ++k) cols.push_back(residual(Vec::unit(unknowns, k)) - r0);
    return {Matrix::from_columns(r0.size(), cols), -r0};
}

std::optional<Vec> solve_affine(std::size_t unknowns, const std::function<Vec(const Vec&)>& residual) {
    auto sys = affine_system(unknowns, residual);
    auto sol = solve_linear(sys.m, sys.b);
    if (!sol) return std::nullopt;
    if (!residual(sol->particular).is_zero()) return std::nullopt;
    return sol->particular;
}

std::optional<Vec> coordinates(const Matrix& basis_columns, const Vec& v) {
    auto sol = solve_linear(basis_columns, v);
    if (!sol) return std::nullopt;
    return sol->particular;
}

}  // namespace adw
