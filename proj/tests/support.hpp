#pragma once

#include <functional>
#include <random>
#include <vector>

#include "adw/algebra.hpp"
#include "adw/representation.hpp"
#include "adw/errors.hpp"
#include "adw/tensor.hpp"

namespace adw::testing {

using Rng = std::mt19937_64;

inline Scalar small_int(Rng& rng, int lo = -2, int hi = 2) {
    return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng));
}

/// Sparse small integer with probability `density` of being nonzero.
inline Scalar sparse_int(Rng& rng, double density) {
    if (std::uniform_real_distribution<double>(0, 1)(rng) >= density) return Scalar(0);
    Scalar s = small_int(rng, 1, 2);
    return std::uniform_int_distribution<int>(0, 1)(rng) ? s : -s;
}

inline Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, double density = 1.0) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = sparse_int(rng, density);
    return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, 0.6);
        if (inverse(m)) return m;
    }
}

inline ActionFamily random_family(Rng& rng, std::size_t a, std::size_t m, double density) {
    ActionFamily f(a, m);
    for (std::size_t x = 0; x < a; ++x) f.at(x) = random_matrix(rng, m, m, density);
    return f;
}

inline Bilinear random_bilinear(Rng& rng, std::size_t l, std::size_t r, std::size_t o, double density) {
    Bilinear b(l, r, o);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < o; ++k) b.at(i, j, k) = sparse_int(rng, density);
    return b;
}

inline ADAlgebra random_tables(Rng& rng, std::size_t n, double density) {
    ADAlgebra a(n);
    a.succ = random_bilinear(rng, n, n, n, density);
    a.prec = random_bilinear(rng, n, n, n, density);
    return a;
}

inline Tensor2 random_tensor2(Rng& rng, std::size_t n, double density = 1.0) {
    Tensor2 t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = sparse_int(rng, density);
    return t;
}

/**
 * Random anti-dendriform algebra graded by the given positive weights:
 * e_i o e_j lies in the span of the e_k with w_k = w_i + w_j. The tables
 * are fixed one output weight at a time. Every triple identity whose total
 * weight is D is linear in the weight-D tables once the lower ones are fixed,
 * so each layer is a random point of a nullspace.
 */
inline ADAlgebra random_graded_algebra(Rng& rng, const std::vector<int>& weights) {
    const std::size_t n = weights.size();
    ADAlgebra alg(n);
    int top = 0;
    for (int w : weights) top = std::max(top, w);
    for (int D = 2; D <= top; ++D) {
        struct Slot {
            int op;
            std::size_t i, j, k;
        };
        std::vector<Slot> slots;
        for (int op = 0; op < 2; ++op)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (weights[i] + weights[j] == D && weights[k] == D) slots.push_back({op, i, j, k});
        if (slots.empty()) continue;
        auto with = [&](const Vec& z) {
            ADAlgebra a = alg;
            for (std::size_t s = 0; s < slots.size(); ++s)
                (slots[s].op == 0 ? a.succ : a.prec).at(slots[s].i, slots[s].j, slots[s].k) = z[s];
            return a;
        };
        auto residual = [&](const Vec& z) {
            ADAlgebra a = with(z);
            ResidualSink sink;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        if (weights[i] + weights[j] + weights[k] != D) continue;
                        Vec x = a.e(i), y = a.e(j), w = a.e(k);
                        sink.relation("A1", "xyz", {i, j, k},
                                      {a.s(x, a.s(y, w)), -a.s(a.dot(x, y), w), -a.p(x, a.dot(y, w)),
                                       a.p(a.p(x, y), w)});
                        sink.relation("A2", "xyz", {i, j, k}, {a.p(a.s(x, y), w), a.s(x, a.p(y, w))});
                    }
            return sink.vec();
        };
        auto sys = affine_system(slots.size(), residual);
        auto null = nullspace(sys.m);
        Vec z(slots.size());
        for (const auto& v : null) z += small_int(rng) * v;
        alg = with(z);
    }
    return alg;
}

/**
 * Random anti-dendriform algebra with weight-1, weight-2 and weight-3 blocks
 * of sizes n1, n2, n3. The weight-2 tables are drawn first with
 * x < y = sign * (x > y) on weight-1 elements (sign = -1 makes x.y vanish
 * there); the weight-3 tables are then a random point of the nullspace of the
 * weight-3 triple identities, which are linear in them.
 */
inline ADAlgebra random_layered_algebra(
    Rng& rng, std::size_t n1, std::size_t n2, std::size_t n3, double density, int sign = -1,
    const std::function<bool(std::size_t, std::size_t, std::size_t)>& allowed = {}) {
    auto ok = [&](std::size_t i, std::size_t j, std::size_t k) { return !allowed || allowed(i, j, k); };
    const std::size_t n = n1 + n2 + n3;
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(i < n1 ? 1 : (i < n1 + n2 ? 2 : 3));
    ADAlgebra alg(n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = n1; k < n1 + n2; ++k) {
                if (!ok(i, j, k)) continue;
                alg.succ.at(i, j, k) = sparse_int(rng, density);
                alg.prec.at(i, j, k) = Scalar(sign) * alg.succ.at(i, j, k);
            }
    struct Slot {
        int op;
        std::size_t i, j, k;
    };
    std::vector<Slot> slots;
    for (int op = 0; op < 2; ++op)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (w[i] + w[j] == 3 && w[k] == 3 && ok(i, j, k)) slots.push_back({op, i, j, k});
    auto with = [&](const Vec& z) {
        ADAlgebra a = alg;
        for (std::size_t s = 0; s < slots.size(); ++s)
            (slots[s].op == 0 ? a.succ : a.prec).at(slots[s].i, slots[s].j, slots[s].k) = z[s];
        return a;
    };
    auto residual = [&](const Vec& z) {
        ADAlgebra a = with(z);
        ResidualSink sink;
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j)
                for (std::size_t k = 0; k < n1; ++k) {
                    Vec x = a.e(i), y = a.e(j), u = a.e(k);
                    sink.relation("A1", "xyz", {i, j, k},
                                  {a.s(x, a.s(y, u)), -a.s(a.dot(x, y), u), -a.p(x, a.dot(y, u)), a.p(a.p(x, y), u)});
                    sink.relation("A2", "xyz", {i, j, k}, {a.p(a.s(x, y), u), a.s(x, a.p(y, u))});
                }
        return sink.vec();
    };
    auto null = nullspace(affine_system(slots.size(), residual).m);
    Vec z(slots.size());
    for (const auto& v : null) z += sparse_int(rng, density) * v;
    return with(z);
}

/// True when some iterated product (x o y) o' z or x o (y o' z) is nonzero.
inline bool has_deep_products(const ADAlgebra& a) {
    const std::size_t n = a.dim();
    for (const Bilinear* o1 : {&a.succ, &a.prec})
        for (const Bilinear* o2 : {&a.succ, &a.prec})
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!o2->apply(o1->basis(i, j), a.e(k)).is_zero()) return true;
                        if (!o2->apply(a.e(i), o1->basis(j, k)).is_zero()) return true;
                    }
    return false;
}

/// Layered algebra in which the spans of the two parts (part[i] in {0, 1}) are subalgebras.
inline ADAlgebra random_split_algebra(Rng& rng, std::size_t n1, std::size_t n2, std::size_t n3,
                                      const std::vector<int>& part, double density, int sign = -1) {
    return random_layered_algebra(rng, n1, n2, n3, density, sign, [&](std::size_t i, std::size_t j, std::size_t k) {
        return !(part[i] == part[j] && part[k] != part[i]);
    });
}


/// Block-diagonal sum of two action families of the same algebra.
inline ActionFamily direct_sum(const ActionFamily& f, const ActionFamily& g) {
    const std::size_t m1 = f.mod_dim(), m2 = g.mod_dim();
    ActionFamily out(f.alg_dim(), m1 + m2);
    for (std::size_t x = 0; x < f.alg_dim(); ++x) {
        for (std::size_t i = 0; i < m1; ++i)
            for (std::size_t j = 0; j < m1; ++j) out.at(x)(i, j) = f.at(x)(i, j);
        for (std::size_t i = 0; i < m2; ++i)
            for (std::size_t j = 0; j < m2; ++j) out.at(x)(m1 + i, m1 + j) = g.at(x)(i, j);
    }
    return out;
}

inline ADRep direct_sum(const ADRep& a, const ADRep& b) {
    return {a.algebra, direct_sum(a.lsucc, b.lsucc), direct_sum(a.rsucc, b.rsucc), direct_sum(a.lprec, b.lprec),
            direct_sum(a.rprec, b.rprec)};
}

/// The representation transported along an invertible change of basis P of V.
inline ADRep conjugate(const ADRep& rep, const Matrix& P) {
    const Matrix Pi = *inverse(P);
    ADRep out = rep;
    for (ActionFamily* f : {&out.lsucc, &out.rsucc, &out.lprec, &out.rprec})
        for (std::size_t x = 0; x < f->alg_dim(); ++x) f->at(x) = Pi * f->at(x) * P;
    return out;
}

/// Valid representation built from regular, dual and zero pieces, conjugated at random.
inline ADRep random_valid_rep(Rng& rng, const ADAlgebra& alg, std::size_t pieces = 2) {
    ADRep out = ADRep::zero(alg, 0);
    for (std::size_t k = 0; k < pieces; ++k) {
        const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
        ADRep piece = kind == 0   ? regular_representation(alg)
                      : kind == 1 ? dual_representation(regular_representation(alg))
                      : kind == 2 ? dual_representation(dual_representation(regular_representation(alg)))
                                  : ADRep::zero(alg, 1);
        out = direct_sum(out, piece);
    }
    return conjugate(out, random_invertible(rng, out.mod_dim()));
}

/// An algebra E with a subalgebra A given by an inclusion and a projector p with p i = id.
struct SubalgebraSetup {
    ADAlgebra E;
    Matrix inclusion, projector;
};

/**
 * Picks a proper nonempty basis subset S spanning a subalgebra of `base`,
 * a projector sending the other basis vectors to random elements of span S,
 * and, when `transform` is set, moves everything to a random basis.
 */
inline std::optional<SubalgebraSetup> random_subalgebra_setup(Rng& rng, const ADAlgebra& base, bool transform) {
    const std::size_t N = base.dim();
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<std::size_t> S, rest;
        for (std::size_t i = 0; i < N; ++i) (rng() % 2 ? S : rest).push_back(i);
        if (S.empty() || rest.empty() || !restrict_to(base, S)) continue;
        const std::size_t n = S.size();
        Matrix inc(N, n), q(n, N);
        for (std::size_t c = 0; c < n; ++c) {
            inc(S[c], c) = 1;
            q(c, S[c]) = 1;
        }
        for (std::size_t j : rest)
            for (std::size_t c = 0; c < n; ++c) q(c, j) = sparse_int(rng, 0.5);
        if (!transform) return SubalgebraSetup{base, inc, q};
        const Matrix P = random_invertible(rng, N);
        return SubalgebraSetup{change_basis(base, P), *inverse(P) * inc, q * P};
    }
    return std::nullopt;
}

}  // namespace adw::testing
