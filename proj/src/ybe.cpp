#include "adw/ybe.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "adw/errors.hpp"

namespace adw {

namespace {

void require_square(const ADAlgebra& A, const Tensor2& r) {
    if (r.d1() != A.dim() || r.d2() != A.dim()) throw InputError("r-matrix shape does not match the algebra");
}

/// Arithmetic over the rationals.
struct RationalRing {
    using T = Scalar;
    T from(const Scalar& s) const { return s; }
    void fma(T& acc, const T& a, const T& b) const {
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
    }
    void fms(T& acc, const T& a, const T& b) const {
        if (!a.is_zero() && !b.is_zero()) acc -= a * b;
    }
    bool zero(const T& v) const { return v.is_zero(); }
    T neg(const T& v) const { return -v; }
};

/// Arithmetic modulo a prime.
struct PrimeRing {
    using T = std::uint64_t;
    std::uint64_t p;
    T from(const Scalar& s) const { return s.mod(static_cast<std::uint32_t>(p)); }
    void fma(T& acc, T a, T b) const { acc = (acc + a * b) % p; }
    void fms(T& acc, T a, T b) const { acc = (acc + (p - (a * b) % p)) % p; }
    bool zero(T v) const { return v == 0; }
    T neg(T v) const { return v == 0 ? 0 : p - v; }
};

/// Structure constants converted into the ring.
template <class R>
struct RingTables {
    std::size_t n;
    std::vector<typename R::T> s, p, d;
    RingTables(const R& ring, const ADAlgebra& A) : n(A.dim()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    s.push_back(ring.from(A.succ.at(i, j, k)));
                    p.push_back(ring.from(A.prec.at(i, j, k)));
                    d.push_back(ring.from(A.succ.at(i, j, k) + A.prec.at(i, j, k)));
                }
    }
    std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return (i * n + j) * n + k; }
};

/// True when the YE6 tensor of r (row-major n x n) vanishes.
template <class R>
bool residual_vanishes(const R& ring, const RingTables<R>& t, const std::vector<typename R::T>& r) {
    const std::size_t n = t.n;
    std::vector<typename R::T> out(n * n * n, typename R::T{});
    auto idx = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& u = r[i * n + j];
            if (ring.zero(u)) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const auto& v = r[k * n + l];
                    if (ring.zero(v)) continue;
                    typename R::T uv{};
                    ring.fma(uv, u, v);
                    for (std::size_t a = 0; a < n; ++a) {
                        ring.fma(out[idx(a, j, l)], uv, t.d[t.at(i, k, a)]);
                        ring.fma(out[idx(k, a, j)], uv, t.s[t.at(i, l, a)]);
                        ring.fms(out[idx(i, k, a)], uv, t.p[t.at(j, l, a)]);
                    }
                }
        }
    return std::all_of(out.begin(), out.end(), [&](const auto& v) { return ring.zero(v); });
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

template <class R>
std::vector<std::vector<Scalar>> search(const R& ring, const ADAlgebra& A, const std::vector<Scalar>& values,
                                        unsigned workers, std::uint64_t& points) {
    const std::size_t n = A.dim(), unknowns = n * (n - 1) / 2;
    const RingTables<R> tables(ring, A);
    std::vector<typename R::T> ring_values;
    for (const auto& v : values) ring_values.push_back(ring.from(v));
    const std::uint64_t base = values.size();
    points = 1;
    for (std::size_t u = 0; u < unknowns; ++u) points *= base;

    std::vector<std::vector<Scalar>> found;
    std::mutex mu;
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::vector<Scalar>> local;
        std::vector<typename R::T> r(n * n);
        std::vector<std::size_t> digit(unknowns);
        for (std::uint64_t pt = begin; pt < end; ++pt) {
            std::uint64_t rest = pt;
            for (std::size_t u = unknowns; u-- > 0;) {
                digit[u] = static_cast<std::size_t>(rest % base);
                rest /= base;
            }
            std::size_t u = 0;
            for (std::size_t i = 0; i < n; ++i) {
                r[i * n + i] = typename R::T{};
                for (std::size_t j = i + 1; j < n; ++j, ++u) {
                    r[i * n + j] = ring_values[digit[u]];
                    r[j * n + i] = ring.neg(ring_values[digit[u]]);
                }
            }
            if (residual_vanishes(ring, tables, r)) {
                std::vector<Scalar> sol;
                for (std::size_t k = 0; k < unknowns; ++k) sol.push_back(values[digit[k]]);
                local.push_back(std::move(sol));
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        found.insert(found.end(), local.begin(), local.end());
    };
    const unsigned w = std::max(1u, workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (points + w - 1) / w;
    for (unsigned k = 0; k < w; ++k) {
        const std::uint64_t b = std::min(points, k * chunk), e = std::min(points, b + chunk);
        if (b < e) threads.emplace_back(worker, b, e);
    }
    for (auto& th : threads) th.join();
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace

Tensor3 adybe_residual(const ADAlgebra& A, const Tensor2& r) {
    validate(A);
    require_square(A, r);
    return leg12_13(r, r, associated_associative(A)) + leg23_12(r, r, A.succ) - leg13_23(r, r, A.prec);
}

Matrix t_r(const Tensor2& r) {
    Matrix m(r.d2(), r.d1());
    for (std::size_t l = 0; l < r.d1(); ++l)
        for (std::size_t k = 0; k < r.d2(); ++k) m(k, l) = r(l, k);
    return m;
}

bool is_skew(const Tensor2& r) { return r.d1() == r.d2() && (r + r.twist()).is_zero(); }

Tensor2 skew_from_upper(std::size_t n, const std::vector<Scalar>& upper) {
    if (upper.size() != n * (n - 1) / 2) throw InputError("skew tensor: wrong number of coefficients");
    Tensor2 r(n, n);
    std::size_t u = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++u) {
            r(i, j) = upper[u];
            r(j, i) = -upper[u];
        }
    return r;
}

Report check_o_operator(const Matrix& T, const ADRep& rep, CheckOptions opt) {
    validate(rep);
    const ADAlgebra& A = rep.algebra;
    const std::size_t m = rep.mod_dim();
    if (T.rows() != A.dim() || T.cols() != m) throw InputError("O-operator must map the module into the algebra");
    Report out(opt);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec u = Vec::unit(m, i), v = Vec::unit(m, j);
            Vec Tu = T.column(i), Tv = T.column(j);
            out.equal("O-succ", "uv", {i, j}, A.s(Tu, Tv),
                      T.apply(rep.lsucc.apply(Tu, v) + rep.rsucc.apply(Tv, u)));
            out.equal("O-prec", "uv", {i, j}, A.p(Tu, Tv),
                      T.apply(rep.lprec.apply(Tu, v) + rep.rprec.apply(Tv, u)));
        }
    return out;
}

Report check_o_operator_assoc(const Matrix& T, const Bilinear& op, const ActionFamily& l, const ActionFamily& r,
                              CheckOptions opt) {
    const std::size_t n = op.left(), m = l.mod_dim();
    if (l.alg_dim() != n || r.alg_dim() != n || r.mod_dim() != m || T.rows() != n || T.cols() != m)
        throw InputError("associative O-operator check: shape mismatch");
    Report out(opt);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec u = Vec::unit(m, i), v = Vec::unit(m, j);
            Vec Tu = T.column(i), Tv = T.column(j);
            out.equal("O-assoc", "uv", {i, j}, op.apply(Tu, Tv), T.apply(l.apply(Tu, v) + r.apply(Tv, u)));
        }
    return out;
}

Report check_t_r_identity(const ADAlgebra& A, const Tensor2& r, CheckOptions opt) {
    validate(A);
    require_square(A, r);
    return check_o_operator_assoc(t_r(r), associated_associative(A), -right_operators(A.prec).dual(),
                                  -left_operators(A.succ).dual(), opt);
}

OLift o_operator_to_ybe(const Matrix& T, const ADRep& rep) {
    Report o = check_o_operator(T, rep);
    const std::size_t n = rep.algebra.dim(), m = rep.mod_dim();
    ADAlgebra ambient = assemble_semidirect(dual_representation(rep));
    for (std::size_t a = 0; a < m; ++a) ambient.basis[n + a] = "v" + std::to_string(a + 1) + "*";
    Tensor2 t(n + m, n + m);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < m; ++i) t(k, n + i) = T(k, i);
    Tensor2 r = t - t.twist();
    Tensor3 res = adybe_residual(ambient, r);
    return {std::move(ambient), std::move(r), std::move(res), std::move(o)};
}

std::string FieldSpec::name() const { return rational() ? "rational" : "fp" + std::to_string(prime); }

FieldSpec parse_field_spec(const std::string& text) {
    if (text.empty() || text == "rational") return {};
    if (text.rfind("fp", 0) == 0 && text.size() > 2 &&
        std::all_of(text.begin() + 2, text.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        text.size() <= 8) {
        const auto p = static_cast<std::uint32_t>(std::stoul(text.substr(2)));
        if (is_prime(p) && p < 65536) return {p};
    }
    throw InputError("field must be 'rational' or 'fp<p>' with p a prime below 65536, got '" + text + "'");
}

YbeSearchResult ybe_search(const ADAlgebra& A, const YbeSearchOptions& opt) {
    validate(A);
    if (A.dim() > 4) throw InputError("skew YBE search supports dimension at most 4");
    YbeSearchResult out;
    out.dim = A.dim();
    out.field = opt.field;
    if (opt.field.rational()) {
        if (opt.grid.empty()) throw InputError("rational search needs a non-empty grid");
        std::vector<Scalar> grid(opt.grid);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        out.solutions = search(RationalRing{}, A, grid, opt.workers, out.points);
    } else {
        std::vector<Scalar> values;
        for (std::uint32_t v = 0; v < opt.field.prime; ++v) values.emplace_back(v);
        out.solutions = search(PrimeRing{opt.field.prime}, A, values, opt.workers, out.points);
    }
    return out;
}

}  // namespace adw
