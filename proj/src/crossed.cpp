#include "adw/crossed.hpp"

#include "adw/errors.hpp"

namespace adw {

namespace {

bool zero_products(const ADAlgebra& alg) { return alg.succ.is_zero() && alg.prec.is_zero(); }

Matrix unpack(const Vec& z, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = z[i * cols + j];
    return m;
}

LinearSearch linear_search(std::size_t rows, std::size_t cols, const std::function<void(const Matrix&, Sink&)>& eval) {
    auto residual = [&](const Vec& z) {
        ResidualSink sink;
        eval(unpack(z, rows, cols), sink);
        return sink.vec();
    };
    auto sys = affine_system(rows * cols, residual);
    LinearSearch out;
    if (auto sol = solve_linear(sys.m, sys.b)) {
        if (residual(sol->particular).is_zero()) out.witness = unpack(sol->particular, rows, cols);
    } else {
        out.certificate = infeasibility_certificate(sys.m, sys.b);
    }
    return out;
}

void require_family(const ActionFamily& f, std::size_t src, std::size_t tgt, const char* name) {
    if (f.alg_dim() != src || f.mod_dim() != tgt)
        throw InputError(std::string("crossed datum: family ") + name + " has the wrong shape");
}

Matrix require_inverse(const Matrix& m, const char* name) {
    auto inv = inverse(m);
    if (!inv) throw PreconditionError(std::string(name) + " is not invertible");
    return *inv;
}

void require_same_pair(const CrossedDatum& c1, const CrossedDatum& c2) {
    if (!(c1.algebra.succ == c2.algebra.succ && c1.algebra.prec == c2.algebra.prec) || c1.vdim() != c2.vdim())
        throw InputError("cocycles must share A and dim V");
}

}  // namespace

CrossedDatum CrossedDatum::zero(const ADAlgebra& alg, const ADAlgebra& v_alg) {
    const std::size_t n = alg.dim(), m = v_alg.dim();
    CrossedDatum d;
    d.algebra = alg;
    d.v_algebra = v_alg;
    d.lsucc = d.rsucc = d.lprec = d.rprec = ActionFamily(n, m);
    d.omega1 = d.omega2 = Bilinear(n, n, m);
    return d;
}

void validate(const CrossedDatum& d) {
    validate(d.algebra);
    validate(d.v_algebra);
    const std::size_t n = d.algebra.dim(), m = d.vdim();
    require_family(d.lsucc, n, m, "lsucc");
    require_family(d.rsucc, n, m, "rsucc");
    require_family(d.lprec, n, m, "lprec");
    require_family(d.rprec, n, m, "rprec");
    for (const Bilinear* w : {&d.omega1, &d.omega2})
        if (w->left() != n || w->right() != n || w->out() != m)
            throw InputError("crossed datum: omega must map A x A -> V");
}

Report check_crossed_system(const CrossedDatum& d, CheckOptions opt) {
    validate(d);
    Report out = check_anti_dendriform(d.algebra, opt);
    const ADAlgebra& A = d.algebra;
    const ADAlgebra& V = d.v_algebra;
    const std::size_t n = A.dim(), m = V.dim();
    const auto &ls = d.lsucc, &rs = d.rsucc, &lp = d.lprec, &rp = d.rprec;
    const ActionFamily ld = ls + lp, rd = rs + rp;
    const auto &w1 = d.omega1, &w2 = d.omega2;
    const Bilinear wd = w1 + w2;
    auto sV = [&](const Vec& a, const Vec& b) { return V.s(a, b); };
    auto pV = [&](const Vec& a, const Vec& b) { return V.p(a, b); };
    auto dV = [&](const Vec& a, const Vec& b) { return V.dot(a, b); };
    auto eA = [&](std::size_t i) { return Vec::unit(n, i); };
    auto eV = [&](std::size_t i) { return Vec::unit(m, i); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = eA(i), y = eA(j), z = eA(k);
                out.chain("C1", "xyz", {i, j, k},
                          {ls.apply(x, w1.apply(y, z)) + w1.apply(x, A.s(y, z)),
                           -rs.apply(z, wd.apply(x, y)) - w1.apply(A.dot(x, y), z),
                           -lp.apply(x, wd.apply(y, z)) - w2.apply(x, A.dot(y, z)),
                           rp.apply(z, w2.apply(x, y)) + w2.apply(A.p(x, y), z)});
                out.equal("C8", "xyz", {i, j, k}, rp.apply(z, w1.apply(x, y)) + w2.apply(A.s(x, y), z),
                          ls.apply(x, w2.apply(y, z)) + w1.apply(x, A.p(y, z)));
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Vec x = eA(i), y = eA(j), a = eV(k);
                out.chain("C2", "xya", {i, j, k},
                          {ls.apply(x, ls.apply(y, a)), -ls.apply(A.dot(x, y), a) - sV(wd.apply(x, y), a),
                           -lp.apply(x, ld.apply(y, a)), lp.apply(A.p(x, y), a) + pV(w2.apply(x, y), a)});
                out.chain("C3", "xay", {i, k, j},
                          {ls.apply(x, rs.apply(y, a)), -rs.apply(y, ld.apply(x, a)), -lp.apply(x, rd.apply(y, a)),
                           rp.apply(y, lp.apply(x, a))});
                out.chain("C4", "axy", {k, i, j},
                          {rs.apply(A.s(x, y), a) + sV(a, w1.apply(x, y)), -rs.apply(y, rd.apply(x, a)),
                           -rp.apply(A.dot(x, y), a) - pV(a, wd.apply(x, y)), rp.apply(y, rp.apply(x, a))});
                out.equal("C9", "xya", {i, j, k}, lp.apply(A.s(x, y), a) + pV(w1.apply(x, y), a),
                          ls.apply(x, lp.apply(y, a)));
                out.equal("C9", "xay", {i, k, j}, rp.apply(y, ls.apply(x, a)), ls.apply(x, rp.apply(y, a)));
                out.equal("C10", "axy", {k, i, j}, rp.apply(y, rs.apply(x, a)),
                          rs.apply(A.p(x, y), a) + sV(a, w2.apply(x, y)));
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l) {
                const Vec x = eA(i), a = eV(k), b = eV(l);
                out.chain("C5", "xab", {i, k, l},
                          {ls.apply(x, sV(a, b)), -sV(ld.apply(x, a), b), -lp.apply(x, dV(a, b)),
                           pV(lp.apply(x, a), b)});
                out.chain("C6", "axb", {k, i, l},
                          {sV(a, ls.apply(x, b)), -sV(rd.apply(x, a), b), -pV(a, ld.apply(x, b)),
                           pV(rp.apply(x, a), b)});
                out.chain("C7", "abx", {k, l, i},
                          {sV(a, rs.apply(x, b)), -rs.apply(x, dV(a, b)), -pV(a, rd.apply(x, b)),
                           rp.apply(x, pV(a, b))});
                out.equal("C10", "xab", {i, k, l}, pV(ls.apply(x, a), b), ls.apply(x, pV(a, b)));
                out.equal("C11", "axb", {k, i, l}, pV(rs.apply(x, a), b), sV(a, lp.apply(x, b)));
                out.equal("C11", "abx", {k, l, i}, rp.apply(x, sV(a, b)), sV(a, rp.apply(x, b)));
            }

    out.merge(check_anti_dendriform(V, opt), "C12");
    return out;
}

ADAlgebra assemble_crossed(const CrossedDatum& d) {
    validate(d);
    const std::size_t n = d.algebra.dim(), m = d.vdim();
    ADAlgebra E(n + m);
    for (std::size_t i = 0; i < n; ++i) E.basis[i] = d.algebra.basis[i];
    for (std::size_t a = 0; a < m; ++a) E.basis[n + a] = d.v_algebra.basis[a];
    struct Part {
        Bilinear& out;
        const Bilinear &base, &vop;
        const ActionFamily &l, &r;
        const Bilinear& w;
    };
    for (Part part : {Part{E.succ, d.algebra.succ, d.v_algebra.succ, d.lsucc, d.rsucc, d.omega1},
                      Part{E.prec, d.algebra.prec, d.v_algebra.prec, d.lprec, d.rprec, d.omega2}}) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) part.out.at(i, j, k) = part.base.at(i, j, k);
                for (std::size_t k = 0; k < m; ++k) part.out.at(i, j, n + k) = part.w.at(i, j, k);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t k = 0; k < m; ++k) {
                    part.out.at(i, n + b, n + k) = part.l.at(i)(k, b);
                    part.out.at(n + b, i, n + k) = part.r.at(i)(k, b);
                }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t k = 0; k < m; ++k) part.out.at(n + a, n + b, n + k) = part.vop.at(a, b, k);
    }
    return E;
}

ADAlgebra crossed_product(const CrossedDatum& d) {
    Report r = check_crossed_system(d);
    if (!r.ok())
        throw CheckFailure("crossed product refused: datum fails " + r.violations().front().equation, r);
    return assemble_crossed(d);
}

SectionCocycle cocycle_from_section(const ADAlgebra& E, const Matrix& p, const Matrix& s) {
    validate(E);
    const std::size_t N = E.dim();
    if (p.cols() != N || s.rows() != N || s.cols() != p.rows())
        throw InputError("section: p must be dim A x dim E and s dim E x dim A");
    const std::size_t n = p.rows();
    if (p * s != Matrix::identity(n)) throw PreconditionError("section: p s != id");

    ADAlgebra A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec si = s.column(i), sj = s.column(j);
            Vec ps = p.apply(E.s(si, sj)), pp = p.apply(E.p(si, sj));
            for (std::size_t k = 0; k < n; ++k) {
                A.succ.at(i, j, k) = ps[k];
                A.prec.at(i, j, k) = pp[k];
            }
        }
    for (std::size_t u = 0; u < N; ++u)
        for (std::size_t v = 0; v < N; ++v) {
            Vec eu = E.e(u), ev = E.e(v);
            if (p.apply(E.s(eu, ev)) != A.s(p.apply(eu), p.apply(ev)) ||
                p.apply(E.p(eu, ev)) != A.p(p.apply(eu), p.apply(ev)))
                throw PreconditionError("section: p is not a homomorphism (ker p is not an ideal)");
        }

    const Matrix K = Matrix::from_columns(N, nullspace(p));
    const std::size_t m = K.cols();
    auto vc = [&](const Vec& u) {
        auto c = coordinates(K, u);
        if (!c) throw PreconditionError("section: value outside ker p");
        return *c;
    };

    ADAlgebra V(m);
    for (std::size_t a = 0; a < m; ++a) V.basis[a] = "v" + std::to_string(a + 1);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec cs = vc(E.s(K.column(a), K.column(b))), cp = vc(E.p(K.column(a), K.column(b)));
            for (std::size_t k = 0; k < m; ++k) {
                V.succ.at(a, b, k) = cs[k];
                V.prec.at(a, b, k) = cp[k];
            }
        }

    CrossedDatum d = CrossedDatum::zero(A, V);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec si = s.column(i);
        for (std::size_t b = 0; b < m; ++b) {
            const Vec kb = K.column(b);
            Vec c1 = vc(E.s(si, kb)), c2 = vc(E.s(kb, si)), c3 = vc(E.p(si, kb)), c4 = vc(E.p(kb, si));
            for (std::size_t k = 0; k < m; ++k) {
                d.lsucc.at(i)(k, b) = c1[k];
                d.rsucc.at(i)(k, b) = c2[k];
                d.lprec.at(i)(k, b) = c3[k];
                d.rprec.at(i)(k, b) = c4[k];
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Vec sj = s.column(j), x = A.e(i), y = A.e(j);
            Vec o1 = vc(E.s(si, sj) - s.apply(A.s(x, y))), o2 = vc(E.p(si, sj) - s.apply(A.p(x, y)));
            for (std::size_t k = 0; k < m; ++k) {
                d.omega1.at(i, j, k) = o1[k];
                d.omega2.at(i, j, k) = o2[k];
            }
        }
    }

    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(s.column(i));
    for (std::size_t b = 0; b < m; ++b) cols.push_back(K.column(b));
    return {std::move(d), K, Matrix::from_columns(N, cols)};
}

void eval_n_equations(const CrossedDatum& c1, const CrossedDatum& c2, const Matrix& zeta, Sink& sink) {
    const ADAlgebra& A = c1.algebra;
    const ADAlgebra& V2 = c2.v_algebra;
    const std::size_t n = A.dim(), m = c1.vdim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = A.e(i), zx = zeta.apply(x);
        for (std::size_t k = 0; k < m; ++k) {
            const Vec a = Vec::unit(m, k);
            sink.relation("N1", "xa", {i, k}, {c1.lprec.apply(x, a), c2.lprec.apply(x, a) + V2.p(zx, a)});
            sink.relation("N1", "xa", {i, k}, {c1.lsucc.apply(x, a), c2.lsucc.apply(x, a) + V2.s(zx, a)});
            sink.relation("N2", "xa", {i, k}, {c1.rprec.apply(x, a), c2.rprec.apply(x, a) + V2.p(a, zx)});
            sink.relation("N2", "xa", {i, k}, {c1.rsucc.apply(x, a), c2.rsucc.apply(x, a) + V2.s(a, zx)});
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Vec y = A.e(j), zy = zeta.apply(y);
            sink.relation("N3", "xy", {i, j},
                          {c1.omega1.apply(x, y) + zeta.apply(A.s(x, y)),
                           c2.omega1.apply(x, y) + c2.lsucc.apply(x, zy) + c2.rsucc.apply(y, zx) + V2.s(zx, zy)});
            sink.relation("N4", "xy", {i, j},
                          {c1.omega2.apply(x, y) + zeta.apply(A.p(x, y)),
                           c2.omega2.apply(x, y) + c2.lprec.apply(x, zy) + c2.rprec.apply(y, zx) + V2.p(zx, zy)});
        }
    }
}

Report check_cocycles_cohomologous(const CrossedDatum& c1, const CrossedDatum& c2, const Matrix& zeta,
                                   CheckOptions opt) {
    validate(c1);
    validate(c2);
    require_same_pair(c1, c2);
    if (zeta.rows() != c1.vdim() || zeta.cols() != c1.algebra.dim())
        throw InputError("zeta must be dim V x dim A");
    Report out(opt);
    out.equal("N5", "", {}, c1.v_algebra.succ.flatten(), c2.v_algebra.succ.flatten());
    out.equal("N5", "", {}, c1.v_algebra.prec.flatten(), c2.v_algebra.prec.flatten());
    eval_n_equations(c1, c2, zeta, out);
    return out;
}

LinearSearch find_cohomologous_zeta(const CrossedDatum& c1, const CrossedDatum& c2) {
    validate(c1);
    validate(c2);
    require_same_pair(c1, c2);
    if (!(c1.v_algebra.succ == c2.v_algebra.succ && c1.v_algebra.prec == c2.v_algebra.prec))
        throw PreconditionError("cohomologous cocycles need equal V-algebras (N5)");
    if (!zero_products(c2.v_algebra))
        throw PreconditionError("linear fast path needs V with zero products (zeta(x) o zeta(y) terms)");
    return linear_search(c1.vdim(), c1.algebra.dim(),
                         [&](const Matrix& z, Sink& sink) { eval_n_equations(c1, c2, z, sink); });
}

void validate(const GH2Tuple& t) {
    const std::size_t n = t.n();
    for (const Matrix* m : {&t.a, &t.b, &t.c, &t.d})
        if (m->rows() != n || m->cols() != n) throw InputError("GH2 tuple: matrices must be n x n");
    if (t.epsilon.size() != n) throw InputError("GH2 tuple: theta and epsilon must have length n");
}

Report check_gh2_tuple(const GH2Tuple& t, GH2Relations rel, CheckOptions opt) {
    validate(t);
    const std::size_t n = t.n();
    const Matrix &A = t.a, &B = t.b, &C = t.c, &D = t.d;
    const Matrix Z(n, n);
    const Vec te = t.theta + t.epsilon;
    const bool printed = rel == GH2Relations::printed;
    Report out(opt);
    out.chain("G1", "", {}, std::vector<Matrix>{A * A, -(C * (A + C)), Z});
    out.chain("G2", "", {},
              std::vector<Matrix>{A * B, D * C, -(B * (A + C)), printed ? -(C * (B + D) * B) : -(C * (B + D))});
    out.chain("G3", "", {}, std::vector<Matrix>{D * D, -(B * (D + B)), Z});
    out.equal("G4", "", {}, A * C, Z);
    out.equal("G5", "", {}, D * B, Z);
    out.equal("G6", "", {}, A * D, D * A);
    out.chain("G7", "", {},
              std::vector<Vec>{A.apply(t.theta), -B.apply(te), -C.apply(te),
                               printed ? -D.apply(t.epsilon) : D.apply(t.epsilon)});
    out.equal("G8", "", {}, D.apply(t.theta), A.apply(t.epsilon));
    return out;
}

CrossedDatum gh2_to_crossed(const GH2Tuple& t) {
    validate(t);
    const std::size_t n = t.n();
    ADAlgebra k0(1);
    ADAlgebra kn(n);
    kn.basis = default_labels(n, "v");
    CrossedDatum d = CrossedDatum::zero(k0, kn);
    d.lsucc.at(0) = t.a;
    d.rsucc.at(0) = t.b;
    d.lprec.at(0) = t.c;
    d.rprec.at(0) = t.d;
    for (std::size_t k = 0; k < n; ++k) {
        d.omega1.at(0, 0, k) = t.theta[k];
        d.omega2.at(0, 0, k) = t.epsilon[k];
    }
    return d;
}

GH2Verdict gh2_tuples_cohomologous(const GH2Tuple& t1, const GH2Tuple& t2) {
    validate(t1);
    validate(t2);
    if (t1.n() != t2.n()) throw InputError("GH2 tuples of different sizes");
    GH2Verdict out;
    if (!(t1.a == t2.a && t1.b == t2.b && t1.c == t2.c && t1.d == t2.d)) {
        out.reason = "matrices differ";
        return out;
    }
    const std::size_t n = t1.n();
    const Matrix AB = t1.a + t1.b, CD = t1.c + t1.d;
    Matrix M(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            M(i, j) = AB(i, j);
            M(n + i, j) = CD(i, j);
        }
    const Vec rhs = Vec::concat(t1.theta - t2.theta, t1.epsilon - t2.epsilon);
    if (auto sol = solve_linear(M, rhs)) {
        out.cohomologous = true;
        out.w = sol->particular;
    } else {
        out.certificate = infeasibility_certificate(M, rhs);
        out.reason = "no w solves the linear system";
    }
    return out;
}

Report check_aut_pair(const CrossedDatum& c, const AutPair& pair) {
    validate(c);
    const std::size_t n = c.algebra.dim(), m = c.vdim();
    if (pair.alpha.rows() != n || pair.alpha.cols() != n || pair.beta.rows() != m || pair.beta.cols() != m)
        throw InputError("automorphism pair: alpha must be dim A square and beta dim V square");
    Report out;
    for (auto [name, f, alg] : {std::tuple{"alpha", &pair.alpha, &c.algebra}, std::tuple{"beta", &pair.beta, &c.v_algebra}}) {
        if (!inverse(*f)) out.add(Violation{std::string(name) + "-invertible", "", {}, 1, {}, {}});
        for (std::size_t i = 0; i < alg->dim(); ++i)
            for (std::size_t j = 0; j < alg->dim(); ++j) {
                const Vec x = alg->e(i), y = alg->e(j), fx = f->apply(x), fy = f->apply(y);
                out.equal(name, "xy", {i, j}, f->apply(alg->s(x, y)), alg->s(fx, fy));
                out.equal(name, "xy", {i, j}, f->apply(alg->p(x, y)), alg->p(fx, fy));
            }
    }
    return out;
}

namespace {

void eval_iam(const CrossedDatum& c, const AutPair& pair, const Matrix& phi, Sink& sink) {
    const ADAlgebra& A = c.algebra;
    const ADAlgebra& B = c.v_algebra;
    const std::size_t n = A.dim(), m = c.vdim();
    const Matrix &al = pair.alpha, &be = pair.beta;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = A.e(i), ax = al.apply(x), px = phi.apply(x);
        for (std::size_t k = 0; k < m; ++k) {
            const Vec a = B.e(k), ba = be.apply(a);
            sink.relation("Iam1", "xa", {i, k},
                          {be.apply(c.lsucc.apply(x, a)) - c.lsucc.apply(ax, ba), B.s(px, ba)});
            sink.relation("Iam1", "xa", {i, k},
                          {be.apply(c.rsucc.apply(x, a)) - c.rsucc.apply(ax, ba), B.s(ba, px)});
            sink.relation("Iam2", "xa", {i, k},
                          {be.apply(c.lprec.apply(x, a)) - c.lprec.apply(ax, ba), B.p(px, ba)});
            sink.relation("Iam2", "xa", {i, k},
                          {be.apply(c.rprec.apply(x, a)) - c.rprec.apply(ax, ba), B.p(ba, px)});
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Vec y = A.e(j), ay = al.apply(y), py = phi.apply(y);
            sink.relation("Iam3", "xy", {i, j},
                          {be.apply(c.omega1.apply(x, y)) - c.omega1.apply(ax, ay),
                           B.s(px, py) - phi.apply(A.s(x, y)) + c.lsucc.apply(ax, py) + c.rsucc.apply(ay, px)});
            sink.relation("Iam4", "xy", {i, j},
                          {be.apply(c.omega2.apply(x, y)) - c.omega2.apply(ax, ay),
                           B.p(px, py) - phi.apply(A.p(x, y)) + c.lprec.apply(ax, py) + c.rprec.apply(ay, px)});
        }
    }
}

}  // namespace

InducibleResult check_inducible(const CrossedDatum& c, const AutPair& pair, const Matrix& phi, CheckOptions opt) {
    const std::size_t n = c.algebra.dim(), m = c.vdim();
    Report aut = check_aut_pair(c, pair);
    if (!aut.ok()) throw CheckFailure("inducible: (alpha, beta) is not a pair of automorphisms", aut);
    if (phi.rows() != m || phi.cols() != n) throw InputError("phi must be dim V x dim A");

    InducibleResult out{Report(opt), std::nullopt};
    eval_iam(c, pair, phi, out.report);
    if (!out.report.ok()) return out;

    const std::size_t N = n + m;
    Matrix gamma(N, N);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) gamma(i, j) = pair.alpha(i, j);
        for (std::size_t k = 0; k < m; ++k) gamma(n + k, i) = phi(k, i);
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) gamma(n + k, n + l) = pair.beta(k, l);

    const ADAlgebra E = assemble_crossed(c);
    for (std::size_t u = 0; u < N; ++u)
        for (std::size_t v = 0; v < N; ++v) {
            const Vec x = E.e(u), y = E.e(v), gx = gamma.apply(x), gy = gamma.apply(y);
            out.report.equal("Iam5", "uv", {u, v}, gamma.apply(E.s(x, y)), E.s(gx, gy));
            out.report.equal("Iam5", "uv", {u, v}, gamma.apply(E.p(x, y)), E.p(gx, gy));
        }
    if (!inverse(gamma)) out.report.add(Violation{"Iam5-invertible", "", {}, 1, {}, {}});

    Matrix P(n, N), S(N, n), I(N, m), R(m, N);
    for (std::size_t i = 0; i < n; ++i) P(i, i) = S(i, i) = 1;
    for (std::size_t k = 0; k < m; ++k) I(n + k, k) = R(k, n + k) = 1;
    out.report.equal("K", "alpha", {}, P * gamma * S, pair.alpha);
    out.report.equal("K", "beta", {}, gamma * I, I * pair.beta);
    if (out.report.ok()) out.gamma = gamma;
    return out;
}

LinearSearch find_inducing_phi(const CrossedDatum& c, const AutPair& pair) {
    Report aut = check_aut_pair(c, pair);
    if (!aut.ok()) throw CheckFailure("inducible: (alpha, beta) is not a pair of automorphisms", aut);
    if (!zero_products(c.v_algebra))
        throw PreconditionError("linear fast path needs V with zero products (phi(x) o phi(y) terms)");
    return linear_search(c.vdim(), c.algebra.dim(),
                         [&](const Matrix& phi, Sink& sink) { eval_iam(c, pair, phi, sink); });
}

CrossedDatum transformed_cocycle(const CrossedDatum& c, const AutPair& pair) {
    Report aut = check_aut_pair(c, pair);
    if (!aut.ok()) throw CheckFailure("transformed cocycle: (alpha, beta) is not a pair of automorphisms", aut);
    const std::size_t n = c.algebra.dim();
    const Matrix ai = require_inverse(pair.alpha, "alpha"), bi = require_inverse(pair.beta, "beta");
    CrossedDatum t = c;
    for (auto [src, dst] : {std::pair{&c.lsucc, &t.lsucc}, std::pair{&c.rsucc, &t.rsucc},
                            std::pair{&c.lprec, &t.lprec}, std::pair{&c.rprec, &t.rprec}})
        for (std::size_t i = 0; i < n; ++i) dst->at(i) = pair.beta * src->of(ai.column(i)) * bi;
    for (auto [src, dst] : {std::pair{&c.omega1, &t.omega1}, std::pair{&c.omega2, &t.omega2}})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec w = pair.beta.apply(src->apply(ai.column(i), ai.column(j)));
                for (std::size_t k = 0; k < c.vdim(); ++k) dst->at(i, j, k) = w[k];
            }
    return t;
}

WellsClass wells_map(const CrossedDatum& c, const AutPair& pair) { return {transformed_cocycle(c, pair), c}; }

Report wells_vanishes_with(const WellsClass& w, const Matrix& zeta, CheckOptions opt) {
    return check_cocycles_cohomologous(w.transformed, w.original, zeta, opt);
}

LinearSearch wells_vanishes(const WellsClass& w) { return find_cohomologous_zeta(w.transformed, w.original); }

namespace {

void eval_z1(const CrossedDatum& c, const Matrix& phi, Sink& ann, Sink& diff) {
    const ADAlgebra& A = c.algebra;
    const ADAlgebra& B = c.v_algebra;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        const Vec x = A.e(i), px = phi.apply(x);
        const Vec zero(B.dim());
        for (std::size_t k = 0; k < B.dim(); ++k) {
            const Vec a = B.e(k);
            ann.relation("Z1-ann", "xa", {i, k}, {zero, B.s(px, a), B.s(a, px), B.p(px, a), B.p(a, px)});
        }
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const Vec y = A.e(j), py = phi.apply(y);
            diff.relation("Z1-succ", "xy", {i, j},
                          {phi.apply(A.s(x, y)) - B.s(px, py), c.lsucc.apply(x, py) + c.rsucc.apply(y, px)});
            diff.relation("Z1-prec", "xy", {i, j},
                          {phi.apply(A.p(x, y)) - B.p(px, py), c.lprec.apply(x, py) + c.rprec.apply(y, px)});
        }
    }
}

struct NullSink : Sink {
    void relation(std::string_view, std::string_view, std::vector<std::size_t>, const std::vector<Vec>&) override {}
};

}  // namespace

std::vector<Matrix> z1_cocycles(const CrossedDatum& c) {
    validate(c);
    const std::size_t n = c.algebra.dim(), m = c.vdim();
    auto ann_residual = [&](const Vec& z) {
        ResidualSink ann;
        NullSink none;
        eval_z1(c, unpack(z, m, n), ann, none);
        return ann.vec();
    };
    const auto ann_basis = nullspace(affine_system(m * n, ann_residual).m);
    // On the annihilator subspace phi(x) o phi(y) = 0, so the difference equations are linear there.
    std::vector<Vec> cols;
    for (const Vec& z : ann_basis) {
        ResidualSink diff;
        NullSink none;
        eval_z1(c, unpack(z, m, n), none, diff);
        cols.push_back(diff.vec());
    }
    std::vector<Matrix> out;
    if (ann_basis.empty()) return out;
    const Matrix M = Matrix::from_columns(cols.front().size(), cols);
    for (const Vec& t : nullspace(M)) {
        Vec z(m * n);
        for (std::size_t k = 0; k < ann_basis.size(); ++k) z += t[k] * ann_basis[k];
        out.push_back(unpack(z, m, n));
    }
    return out;
}

Report check_z1(const CrossedDatum& c, const Matrix& phi, CheckOptions opt) {
    validate(c);
    if (phi.rows() != c.vdim() || phi.cols() != c.algebra.dim()) throw InputError("phi must be dim V x dim A");
    Report out(opt);
    eval_z1(c, phi, out, out);
    return out;
}

}  // namespace adw
