#include "adw/bialgebra.hpp"

#include "adw/errors.hpp"

namespace adw {

namespace {

Vec scalar_vec(const Scalar& s) { return Vec(std::vector<Scalar>{s}); }

Tensor2 combine(const std::vector<Tensor2>& family, const Vec& x, std::size_t n) {
    Tensor2 t(n, n);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero())
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) t(i, j) += x[k] * family[k](i, j);
    return t;
}

/// (D (x) I) t.
Tensor3 co_left(const std::vector<Tensor2>& D, const Tensor2& t) {
    const std::size_t n = t.d1();
    Tensor3 out(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (t(i, j).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!D[i](a, b).is_zero()) out(a, b, j) += t(i, j) * D[i](a, b);
        }
    return out;
}

/// (I (x) D) t.
Tensor3 co_right(const std::vector<Tensor2>& D, const Tensor2& t) {
    const std::size_t n = t.d1();
    Tensor3 out(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (t(i, j).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!D[j](a, b).is_zero()) out(i, a, b) += t(i, j) * D[j](a, b);
        }
    return out;
}

std::vector<Tensor2> sum_family(const std::vector<Tensor2>& a, const std::vector<Tensor2>& b) {
    std::vector<Tensor2> out(a);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

struct Ops {
    ActionFamily Ls, Rs, Lp, Rp, Ld, Rd;
    explicit Ops(const ADAlgebra& A)
        : Ls(left_operators(A.succ)),
          Rs(right_operators(A.succ)),
          Lp(left_operators(A.prec)),
          Rp(right_operators(A.prec)),
          Ld(Ls + Lp),
          Rd(Rs + Rp) {}
};

/// D1-D3 for (A, cp) under the given labels.
void eval_d123(const ADAlgebra& A, const CoproductPair& cp, const char* const labels[3], const char* roles,
               Report& out) {
    const Ops o(A);
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = A.e(i), y = A.e(j);
            out.equal(labels[0], roles, {i, j}, cp.prec(A.dot(x, y)).flatten(),
                      (cp.prec(x).leg1(o.Rd.at(j)) - cp.prec(y).leg2(o.Ls.at(i))).flatten());
            out.equal(labels[1], roles, {i, j}, cp.succ(A.dot(x, y)).flatten(),
                      (cp.succ(y).leg2(o.Ld.at(i)) - cp.succ(x).leg1(o.Rp.at(j))).flatten());
            Tensor2 d3 = cp.succ(x).leg2(o.Rd.at(j)) + cp.succ(x).leg1(o.Ls.at(j)) -
                         cp.prec(y).leg2(o.Rp.at(i)).twist() - cp.prec(y).leg1(o.Ld.at(i)).twist();
            out.equal(labels[2], roles, {i, j}, d3.flatten(), Vec(n * n));
        }
}

AssocMatchedPair double_pair(const ADAlgebra& A, const ADAlgebra& B) {
    return {associated_associative(A),
            associated_associative(B),
            -right_operators(A.prec).dual(),
            -left_operators(A.succ).dual(),
            -right_operators(B.prec).dual(),
            -left_operators(B.succ).dual()};
}

}  // namespace

BilinearForm BilinearForm::hyperbolic(std::size_t n) {
    Matrix g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) g(i, n + i) = g(n + i, i) = 1;
    return {g};
}

Report check_connes_cocycle(const Bilinear& op, const BilinearForm& w, CheckOptions opt) {
    const std::size_t n = op.left();
    if (op.right() != n || op.out() != n || w.gram.rows() != n || w.gram.cols() != n)
        throw InputError("Connes cocycle check: shape mismatch");
    Report out(opt);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.equal("sym", "xy", {i, j}, scalar_vec(w.gram(i, j)), scalar_vec(w.gram(j, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                Scalar c = w(op.apply(x, y), z) + w(op.apply(y, z), x) + w(op.apply(z, x), y);
                out.equal("cyclic", "xyz", {i, j, k}, scalar_vec(c), scalar_vec(0));
            }
    return out;
}

ADAlgebra derive_compatible_ad(const Bilinear& op, const BilinearForm& w) {
    Report r = check_connes_cocycle(op, w);
    if (!r.ok()) throw CheckFailure("form is not a commutative Connes cocycle", r);
    auto ginv = inverse(w.gram.transpose());
    if (!ginv) throw PreconditionError("form is degenerate");
    const std::size_t n = op.left();
    ADAlgebra out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = Vec::unit(n, i), y = Vec::unit(n, j);
            Vec rs(n), rp(n);
            for (std::size_t k = 0; k < n; ++k) {
                Vec z = Vec::unit(n, k);
                rs[k] = -w(y, op.apply(z, x));
                rp[k] = -w(x, op.apply(y, z));
            }
            Vec s = ginv->apply(rs), p = ginv->apply(rp);
            for (std::size_t k = 0; k < n; ++k) {
                out.succ.at(i, j, k) = s[k];
                out.prec.at(i, j, k) = p[k];
            }
        }
    return out;
}

DoubleConstruction build_double_construction(const ADAlgebra& A, const ADAlgebra& Astar, CheckOptions opt) {
    validate(A);
    validate(Astar);
    if (A.dim() != Astar.dim()) throw InputError("double construction: dimensions differ");
    const std::size_t n = A.dim();
    DoubleConstruction out{double_pair(A, Astar), Report(opt), std::nullopt, BilinearForm::hyperbolic(n),
                           std::nullopt};
    out.report.merge_prefixed(check_anti_dendriform(A, opt), "A:");
    out.report.merge_prefixed(check_anti_dendriform(Astar, opt), "A*:");
    out.report.merge(check_assoc_matched_pair(out.pair, opt));
    if (!out.report.ok()) return out;
    out.product = associative_bicrossed(out.pair);
    out.report.merge_prefixed(check_connes_cocycle(*out.product, out.omega, opt), "double:");
    if (out.report.ok()) {
        out.compatible = derive_compatible_ad(*out.product, out.omega);
        for (std::size_t i = 0; i < n; ++i) {
            out.compatible->basis[i] = A.basis[i];
            out.compatible->basis[n + i] = Astar.basis[i];
        }
    }
    return out;
}

CoproductPair CoproductPair::zero(std::size_t n) {
    CoproductPair cp;
    cp.dsucc.assign(n, Tensor2(n, n));
    cp.dprec.assign(n, Tensor2(n, n));
    return cp;
}

Tensor2 CoproductPair::succ(const Vec& x) const { return combine(dsucc, x, dim()); }
Tensor2 CoproductPair::prec(const Vec& x) const { return combine(dprec, x, dim()); }

void validate(const CoproductPair& cp) {
    const std::size_t n = cp.dsucc.size();
    if (cp.dprec.size() != n) throw InputError("coproduct pair: dsucc and dprec sizes differ");
    for (const auto* fam : {&cp.dsucc, &cp.dprec})
        for (const auto& t : *fam)
            if (t.d1() != n || t.d2() != n) throw InputError("coproduct pair: tensor shape mismatch");
}

CoproductPair dual_coproducts(const ADAlgebra& A) {
    validate(A);
    const std::size_t n = A.dim();
    CoproductPair cp = CoproductPair::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                cp.dsucc[k](i, j) = A.succ.at(i, j, k);
                cp.dprec[k](i, j) = A.prec.at(i, j, k);
            }
    return cp;
}

ADAlgebra dual_algebra(const CoproductPair& cp) {
    validate(cp);
    const std::size_t n = cp.dim();
    ADAlgebra B(n);
    B.basis = default_labels(n, "f");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                B.succ.at(i, j, k) = cp.dsucc[k](i, j);
                B.prec.at(i, j, k) = cp.dprec[k](i, j);
            }
    return B;
}

Report check_coalgebra(const CoproductPair& cp, CheckOptions opt) {
    validate(cp);
    const std::size_t n = cp.dim();
    const auto total = sum_family(cp.dsucc, cp.dprec);
    Report out(opt);
    for (std::size_t x = 0; x < n; ++x) {
        const Tensor2& s = cp.dsucc[x];
        const Tensor2& p = cp.dprec[x];
        out.equal("Ca1", "x", {x}, co_left(cp.dsucc, p).flatten(), co_right(cp.dprec, s).flatten());
        out.chain("Ca2", "x", {x},
                  {co_right(cp.dsucc, s).flatten(), -co_left(total, s).flatten(), co_left(cp.dprec, p).flatten(),
                   -co_right(total, p).flatten()});
    }
    return out;
}

Report check_d_bialgebra(const ADAlgebra& A, const CoproductPair& cp, CheckOptions opt) {
    validate(A);
    validate(cp);
    if (cp.dim() != A.dim()) throw InputError("D-bialgebra check: dimension mismatch");
    Report out(opt);
    out.merge_prefixed(check_anti_dendriform(A, opt), "alg:");
    out.merge(check_coalgebra(cp, opt));
    static const char* const first[3] = {"D1", "D2", "D3"};
    eval_d123(A, cp, first, "xy", out);

    const Ops o(A);
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = A.e(i), y = A.e(j);
            out.equal("D4", "xy", {i, j}, cp.total(A.p(x, y)).flatten(),
                      (cp.total(x).leg1(o.Rp.at(j)) - cp.succ(y).leg2(o.Lp.at(i))).flatten());
            out.equal("D5", "xy", {i, j}, cp.total(A.s(x, y)).flatten(),
                      (cp.total(y).leg2(o.Ls.at(i)) - cp.prec(x).leg1(o.Rs.at(j))).flatten());
            Tensor2 d6 = cp.total(y).leg1(o.Ls.at(i)) + cp.succ(x).twist().leg1(o.Rs.at(j)) -
                         cp.prec(x).twist().leg2(o.Lp.at(j)) - cp.total(y).leg2(o.Rp.at(i));
            out.equal("D6", "xy", {i, j}, d6.flatten(), Vec(n * n));
        }

    static const char* const dual[3] = {"D7", "D8", "D9"};
    eval_d123(dual_algebra(cp), dual_coproducts(A), dual, "uv", out);
    return out;
}

AssocMatchedPair d_bialgebra_matched_pair(const ADAlgebra& A, const CoproductPair& cp) {
    return double_pair(A, dual_algebra(cp));
}

CoproductPair coboundary_coproducts(const ADAlgebra& A, const Tensor2& rsucc, const Tensor2& rprec) {
    validate(A);
    const std::size_t n = A.dim();
    for (const Tensor2* r : {&rsucc, &rprec})
        if (r->d1() != n || r->d2() != n) throw InputError("r-matrix shape does not match the algebra");
    const Ops o(A);
    CoproductPair cp = CoproductPair::zero(n);
    for (std::size_t x = 0; x < n; ++x) {
        cp.dsucc[x] = -(rsucc.leg1(o.Rp.at(x)) + rsucc.leg2(o.Ld.at(x)));
        cp.dprec[x] = rprec.leg1(o.Rd.at(x)) + rprec.leg2(o.Ls.at(x));
    }
    return cp;
}

Report check_coboundary_conditions(const ADAlgebra& A, const Tensor2& rs, const Tensor2& rp, CheckOptions opt) {
    validate(A);
    const std::size_t n = A.dim();
    for (const Tensor2* r : {&rs, &rp})
        if (r->d1() != n || r->d2() != n) throw InputError("r-matrix shape does not match the algebra");
    const Ops o(A);
    const Bilinear& S = A.succ;
    const Bilinear& P = A.prec;
    const Bilinear D = associated_associative(A);
    const Tensor2 diff = rs - rp;
    const Tensor2 s_tp = rs + rp.twist();
    const Tensor2 p_ts = rp + rs.twist();
    Report out(opt);
    const Vec zero2(n * n), zero3(n * n * n);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = A.e(i), y = A.e(j);
            Tensor2 u = s_tp.leg1(o.Ls.at(j)) + s_tp.leg2(o.Rd.at(j));
            out.equal("CD3", "xy", {i, j}, (u.leg1(o.Rp.at(i)) + u.leg2(o.Ld.at(i))).flatten(), zero2);

            Vec xpy = A.p(x, y), xsy = A.s(x, y), xdy = A.dot(x, y);
            Tensor2 cd4 = diff.leg2(o.Ls.of(xpy)) - diff.leg1(o.Rp.at(j)).leg2(o.Ls.at(i)) +
                          diff.leg1(o.Rp.of(xpy + xdy));
            out.equal("CD4", "xy", {i, j}, cd4.flatten(), zero2);
            Tensor2 cd5 = diff.leg2(o.Ls.of(xsy + xdy)) + diff.leg1(o.Rp.of(xsy)) -
                          diff.leg1(o.Rp.at(j)).leg2(o.Ls.at(i));
            out.equal("CD5", "xy", {i, j}, cd5.flatten(), zero2);

            Tensor2 cd6 = p_ts.leg1(o.Ls.at(i) * o.Rs.at(j)) - p_ts.leg1(o.Rs.at(j)).leg2(o.Rp.at(i)) +
                          s_tp.leg2(o.Rp.at(i) * o.Lp.at(j)) - s_tp.leg1(o.Ls.at(i)).leg2(o.Lp.at(j)) +
                          diff.leg1(o.Ls.at(i) * o.Rp.at(j)) - diff.leg1(o.Rp.at(j)).leg2(o.Rp.at(i)) +
                          diff.leg1(o.Ls.at(i)).leg2(o.Ls.at(j)) - diff.leg2(o.Rp.at(i) * o.Ls.at(j));
            out.equal("CD6", "xy", {i, j}, cd6.flatten(), zero2);
        }

    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& Rpx = o.Rp.at(i);
        const Matrix& Lsx = o.Ls.at(i);
        const Matrix& Ldx = o.Ld.at(i);
        const Matrix& Rdx = o.Rd.at(i);

        Tensor3 t7 = leg12_13(rs, rp, P) + leg23_12(rp, rs, D) + leg13_23(rs, rp, S);
        out.equal("CD7", "x", {i}, (t7.leg(0, Rpx) - t7.leg(2, Lsx)).flatten(), zero3);

        const Tensor2 rs_x = rs.leg1(Rpx);
        Tensor3 cd8 = leg12_13(diff, rs_x, P) + leg23_12(rs_x, diff, S) +
                      (leg13_23(rs, rs, D) - leg12_13(rp, rs, D) - leg23_12(rs, rp, S) + leg12_13(rs, rs, P) +
                       leg23_12(rs, rs, D))
                          .leg(2, Ldx) +
                      (leg23_12(rs, rs, P) + leg13_23(rs, rs, D) - leg12_13(rp, rs, S)).leg(0, Rpx);
        out.equal("CD8", "x", {i}, cd8.flatten(), zero3);

        const Tensor2 neg_diff = rp - rs;
        Tensor3 cd9 = (leg12_13(rp, rp, D) - leg23_12(rs, rp, P) - leg13_23(rp, rs, D) + leg23_12(rp, rp, D) +
                       leg13_23(rp, rp, S))
                          .leg(0, Rdx) +
                      (leg12_13(rp, rp, D) + leg23_12(rp, rp, S) - leg13_23(rp, rs, P)).leg(2, Lsx) +
                      leg13_23(rp, neg_diff, S).leg(2, Lsx) + leg23_12(neg_diff, rp.leg2(Lsx), P);
        out.equal("CD9", "x", {i}, cd9.flatten(), zero3);

        Tensor3 cd10 = (leg23_12(rs, rs, P) + leg13_23(rs, rs, D) - leg12_13(rp, rp, S)).leg(0, Rpx) -
                       (leg12_13(rp, rp, D) + leg23_12(rp, rp, S) - leg13_23(rs, rs, P)).leg(2, Lsx) -
                       leg23_12(rs_x, rs, P) + leg23_12(rp.leg1(Rpx), rp, P);
        out.equal("CD10", "x", {i}, cd10.flatten(), zero3);
    }
    return out;
}

}  // namespace adw
