#include "adw/unified.hpp"

#include "adw/errors.hpp"

namespace adw {

namespace {

void require_family(const ActionFamily& f, std::size_t src, std::size_t tgt, const char* name) {
    if (f.alg_dim() != src || f.mod_dim() != tgt)
        throw InputError(std::string("extending datum: family ") + name + " has the wrong shape");
    for (std::size_t x = 0; x < src; ++x)
        if (f.at(x).rows() != tgt) throw InputError(std::string("extending datum: family ") + name + " not square");
}

void require_bilinear(const Bilinear& b, std::size_t l, std::size_t r, std::size_t o, const char* name) {
    if (b.left() != l || b.right() != r || b.out() != o)
        throw InputError(std::string("extending datum: map ") + name + " has the wrong shape");
}

bool has_zero_products(const ADAlgebra& A) { return A.succ.is_zero() && A.prec.is_zero(); }

}  // namespace

ExtendingDatum ExtendingDatum::zero(const ADAlgebra& alg, std::size_t vdim) {
    const std::size_t n = alg.dim();
    ExtendingDatum d;
    d.algebra = alg;
    d.vdim = vdim;
    d.lsucc = d.rsucc = d.lprec = d.rprec = ActionFamily(n, vdim);
    d.rho_succ = d.mu_succ = d.rho_prec = d.mu_prec = ActionFamily(vdim, n);
    d.varpi1 = d.varpi2 = Bilinear(vdim, vdim, n);
    d.succ_v = d.prec_v = Bilinear::square(vdim);
    return d;
}

void validate(const ExtendingDatum& d) {
    validate(d.algebra);
    const std::size_t n = d.algebra.dim(), m = d.vdim;
    require_family(d.lsucc, n, m, "lsucc");
    require_family(d.rsucc, n, m, "rsucc");
    require_family(d.lprec, n, m, "lprec");
    require_family(d.rprec, n, m, "rprec");
    require_family(d.rho_succ, m, n, "rhoSucc");
    require_family(d.mu_succ, m, n, "muSucc");
    require_family(d.rho_prec, m, n, "rhoPrec");
    require_family(d.mu_prec, m, n, "muPrec");
    require_bilinear(d.varpi1, m, m, n, "varpi1");
    require_bilinear(d.varpi2, m, m, n, "varpi2");
    require_bilinear(d.succ_v, m, m, m, "succV");
    require_bilinear(d.prec_v, m, m, m, "precV");
}

Report check_extending_structure(const ExtendingDatum& d, CheckOptions opt) {
    validate(d);
    Report out = check_anti_dendriform(d.algebra, opt);
    out.merge(check_representation(d.action(), opt));
    const ADAlgebra& A = d.algebra;
    const std::size_t n = A.dim(), m = d.vdim;

    const auto &ls = d.lsucc, &rs = d.rsucc, &lp = d.lprec, &rp = d.rprec;
    const ActionFamily ld = ls + lp, rd = rs + rp;
    const auto &hs = d.rho_succ, &hp = d.rho_prec, &ms = d.mu_succ, &mp = d.mu_prec;
    const ActionFamily hd = hs + hp, md = ms + mp;
    const auto &w1 = d.varpi1, &w2 = d.varpi2;
    const Bilinear wd = w1 + w2;
    auto sV = [&](const Vec& a, const Vec& b) { return d.succ_v.apply(a, b); };
    auto pV = [&](const Vec& a, const Vec& b) { return d.prec_v.apply(a, b); };
    auto dV = [&](const Vec& a, const Vec& b) { return sV(a, b) + pV(a, b); };
    auto sA = [&](const Vec& x, const Vec& y) { return A.s(x, y); };
    auto pA = [&](const Vec& x, const Vec& y) { return A.p(x, y); };
    auto dA = [&](const Vec& x, const Vec& y) { return A.dot(x, y); };
    auto eA = [&](std::size_t i) { return Vec::unit(n, i); };
    auto eV = [&](std::size_t i) { return Vec::unit(m, i); };

    // (x, y, a), (x, a, y), (a, x, y)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Vec x = eA(i), y = eA(j), a = eV(k);
                out.chain("S2", "xya", {i, j, k},
                          {sA(x, ms.apply(a, y)) + ms.apply(ls.apply(y, a), x), -ms.apply(a, dA(x, y)),
                           -pA(x, md.apply(a, y)) - mp.apply(ld.apply(y, a), x), mp.apply(a, pA(x, y))});
                out.chain("S3", "xay", {i, k, j},
                          {sA(x, hs.apply(a, y)) + ms.apply(rs.apply(y, a), x),
                           -sA(md.apply(a, x), y) - hs.apply(ld.apply(x, a), y),
                           -pA(x, hd.apply(a, y)) - mp.apply(rd.apply(y, a), x),
                           pA(mp.apply(a, x), y) + hp.apply(lp.apply(x, a), y)});
                out.chain("S4", "axy", {k, i, j},
                          {hs.apply(a, sA(x, y)), -sA(hd.apply(a, x), y) - hs.apply(rd.apply(x, a), y),
                           -hp.apply(a, dA(x, y)), pA(hp.apply(a, x), y) + hp.apply(rp.apply(x, a), y)});
                out.equal("S13", "xya", {i, j, k}, mp.apply(a, sA(x, y)),
                          sA(x, mp.apply(a, y)) + ms.apply(lp.apply(y, a), x));
                out.equal("S14", "xay", {i, k, j}, pA(ms.apply(a, x), y) + hp.apply(ls.apply(x, a), y),
                          sA(x, hp.apply(a, y)) + ms.apply(rp.apply(y, a), x));
                out.equal("S15", "axy", {k, i, j}, pA(hs.apply(a, x), y) + hp.apply(rs.apply(x, a), y),
                          hs.apply(a, pA(x, y)));
            }

    // (x, a, b), (a, x, b), (a, b, x)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l) {
                const Vec x = eA(i), a = eV(k), b = eV(l);
                out.chain("S5", "xab", {i, k, l},
                          {sA(x, w1.apply(a, b)) + ms.apply(sV(a, b), x),
                           -ms.apply(b, md.apply(a, x)) - w1.apply(ld.apply(x, a), b),
                           -pA(x, wd.apply(a, b)) - mp.apply(dV(a, b), x),
                           mp.apply(b, mp.apply(a, x)) + w2.apply(lp.apply(x, a), b)});
                out.chain("S6", "xab", {i, k, l},
                          {ls.apply(x, sV(a, b)), -ls.apply(md.apply(a, x), b) - sV(ld.apply(x, a), b),
                           -lp.apply(x, dV(a, b)), lp.apply(mp.apply(a, x), b) + pV(lp.apply(x, a), b)});
                out.chain("S7", "axb", {k, i, l},
                          {hs.apply(a, ms.apply(b, x)) + w1.apply(a, ls.apply(x, b)),
                           -ms.apply(b, hd.apply(a, x)) - w1.apply(rd.apply(x, a), b),
                           -hp.apply(a, md.apply(b, x)) - w2.apply(a, ld.apply(x, b)),
                           mp.apply(b, hp.apply(a, x)) + w2.apply(rp.apply(x, a), b)});
                out.chain("S8", "axb", {k, i, l},
                          {rs.apply(ms.apply(b, x), a) + sV(a, ls.apply(x, b)),
                           -ls.apply(hd.apply(a, x), b) - sV(rd.apply(x, a), b),
                           -rp.apply(md.apply(b, x), a) - pV(a, ld.apply(x, b)),
                           lp.apply(hp.apply(a, x), b) + pV(rp.apply(x, a), b)});
                out.chain("S9", "abx", {k, l, i},
                          {hs.apply(a, hs.apply(b, x)) + w1.apply(a, rs.apply(x, b)),
                           -sA(wd.apply(a, b), x) - hs.apply(dV(a, b), x),
                           -hp.apply(a, hd.apply(b, x)) - w2.apply(a, rd.apply(x, b)),
                           pA(w2.apply(a, b), x) + hp.apply(pV(a, b), x)});
                out.chain("S10", "abx", {k, l, i},
                          {rs.apply(hs.apply(b, x), a) + sV(a, rs.apply(x, b)), -rs.apply(x, dV(a, b)),
                           -rp.apply(hd.apply(b, x), a) - pV(a, rd.apply(x, b)), rp.apply(x, pV(a, b))});
                out.equal("S19-xab-A", "xab", {i, k, l}, mp.apply(b, ms.apply(a, x)) + w2.apply(ls.apply(x, a), b),
                          sA(x, w2.apply(a, b)) + ms.apply(pV(a, b), x));
                out.equal("S19-xab-V", "xab", {i, k, l}, lp.apply(ms.apply(a, x), b) + pV(ls.apply(x, a), b),
                          ls.apply(x, pV(a, b)));
                out.equal("S19-axb-A", "axb", {k, i, l}, mp.apply(b, hs.apply(a, x)) + w2.apply(rs.apply(x, a), b),
                          hs.apply(a, mp.apply(b, x)) + w1.apply(a, lp.apply(x, b)));
                out.equal("S19-axb-V", "axb", {k, i, l}, lp.apply(hs.apply(a, x), b) + pV(rs.apply(x, a), b),
                          rs.apply(mp.apply(b, x), a) + sV(a, lp.apply(x, b)));
                out.equal("S19-abx-A", "abx", {k, l, i}, pA(w1.apply(a, b), x) + hp.apply(sV(a, b), x),
                          hs.apply(a, hp.apply(b, x)) + w1.apply(a, rp.apply(x, b)));
                out.equal("S19-abx-V", "abx", {k, l, i}, rp.apply(x, sV(a, b)),
                          rs.apply(hp.apply(b, x), a) + sV(a, rp.apply(x, b)));
            }

    // (a, b, c)
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t q = 0; q < m; ++q) {
                const Vec a = eV(k), b = eV(l), c = eV(q);
                out.chain("S11", "abc", {k, l, q},
                          {hs.apply(a, w1.apply(b, c)) + w1.apply(a, sV(b, c)),
                           -ms.apply(c, wd.apply(a, b)) - w1.apply(dV(a, b), c),
                           -hp.apply(a, wd.apply(b, c)) - w2.apply(a, dV(b, c)),
                           mp.apply(c, w2.apply(a, b)) + w2.apply(pV(a, b), c)});
                out.chain("S12", "abc", {k, l, q},
                          {rs.apply(w1.apply(b, c), a) + sV(a, sV(b, c)),
                           -ls.apply(wd.apply(a, b), c) - sV(dV(a, b), c),
                           -rp.apply(wd.apply(b, c), a) - pV(a, dV(b, c)),
                           lp.apply(w2.apply(a, b), c) + pV(pV(a, b), c)});
                out.equal("S16", "abc", {k, l, q}, mp.apply(c, w1.apply(a, b)) + w2.apply(sV(a, b), c),
                          hs.apply(a, w2.apply(b, c)) + w1.apply(a, pV(b, c)));
                out.equal("S17", "abc", {k, l, q}, lp.apply(w1.apply(a, b), c) + pV(sV(a, b), c),
                          rs.apply(w2.apply(b, c), a) + sV(a, pV(b, c)));
            }
    return out;
}

ADAlgebra assemble_unified(const ExtendingDatum& d) {
    validate(d);
    const std::size_t n = d.algebra.dim(), m = d.vdim;
    ADAlgebra E(n + m);
    for (std::size_t i = 0; i < n; ++i) E.basis[i] = d.algebra.basis[i];
    for (std::size_t a = 0; a < m; ++a) E.basis[n + a] = "v" + std::to_string(a + 1);
    struct Part {
        Bilinear& out;
        const Bilinear& base;
        const ActionFamily &l, &r, &rho, &mu;
        const Bilinear &w, &v;
    };
    for (Part part : {Part{E.succ, d.algebra.succ, d.lsucc, d.rsucc, d.rho_succ, d.mu_succ, d.varpi1, d.succ_v},
                      Part{E.prec, d.algebra.prec, d.lprec, d.rprec, d.rho_prec, d.mu_prec, d.varpi2, d.prec_v}}) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) part.out.at(i, j, k) = part.base.at(i, j, k);
        // x o b = (mu(b)x, l(x)b);  a o y = (rho(a)y, r(y)a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t k = 0; k < n; ++k) {
                    part.out.at(i, n + b, k) = part.mu.at(b)(k, i);
                    part.out.at(n + b, i, k) = part.rho.at(b)(k, i);
                }
                for (std::size_t k = 0; k < m; ++k) {
                    part.out.at(i, n + b, n + k) = part.l.at(i)(k, b);
                    part.out.at(n + b, i, n + k) = part.r.at(i)(k, b);
                }
            }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t k = 0; k < n; ++k) part.out.at(n + a, n + b, k) = part.w.at(a, b, k);
                for (std::size_t k = 0; k < m; ++k) part.out.at(n + a, n + b, n + k) = part.v.at(a, b, k);
            }
    }
    return E;
}

ADAlgebra unified_product(const ExtendingDatum& d) {
    Report r = check_extending_structure(d);
    if (!r.ok())
        throw CheckFailure("unified product refused: datum fails " + r.violations().front().equation, r);
    return assemble_unified(d);
}

Extraction extract_extending_datum(const ADAlgebra& E, const Matrix& inclusion, const Matrix& projector) {
    validate(E);
    const std::size_t N = E.dim();
    if (inclusion.rows() != N || projector.cols() != N || projector.rows() != inclusion.cols())
        throw InputError("extraction: inclusion/projector shapes do not match the algebra");
    const std::size_t n = inclusion.cols();
    if (projector * inclusion != Matrix::identity(n))
        throw PreconditionError("extraction: p is not a projection onto A (p i != id)");
    const Matrix ip = inclusion * projector;

    auto kernel = nullspace(projector);
    const std::size_t m = kernel.size();
    Matrix K = Matrix::from_columns(N, kernel);
    auto acoord = [&](const Vec& u) { return projector.apply(u); };
    auto vcoord = [&](const Vec& u) {
        auto c = coordinates(K, u - ip.apply(u));
        if (!c) throw PreconditionError("extraction: complement coordinates failed");
        return *c;
    };

    ADAlgebra A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = inclusion.column(i), y = inclusion.column(j);
            for (auto [prod, table] : {std::pair{E.s(x, y), &A.succ}, std::pair{E.p(x, y), &A.prec}}) {
                if (ip.apply(prod) != prod) throw PreconditionError("extraction: A is not a subalgebra of E");
                Vec c = acoord(prod);
                for (std::size_t k = 0; k < n; ++k) table->at(i, j, k) = c[k];
            }
        }

    ExtendingDatum d = ExtendingDatum::zero(A, m);
    struct Part {
        const Bilinear& op;
        ActionFamily &l, &r, &rho, &mu;
        Bilinear &w, &v;
    };
    for (Part part : {Part{E.succ, d.lsucc, d.rsucc, d.rho_succ, d.mu_succ, d.varpi1, d.succ_v},
                      Part{E.prec, d.lprec, d.rprec, d.rho_prec, d.mu_prec, d.varpi2, d.prec_v}}) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < m; ++b) {
                Vec x = inclusion.column(i), a = K.column(b);
                Vec xa = part.op.apply(x, a), ax = part.op.apply(a, x);
                Vec xa_A = acoord(xa), xa_V = vcoord(xa), ax_A = acoord(ax), ax_V = vcoord(ax);
                for (std::size_t k = 0; k < m; ++k) {
                    part.l.at(i)(k, b) = xa_V[k];
                    part.r.at(i)(k, b) = ax_V[k];
                }
                for (std::size_t k = 0; k < n; ++k) {
                    part.mu.at(b)(k, i) = xa_A[k];
                    part.rho.at(b)(k, i) = ax_A[k];
                }
            }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vec ab = part.op.apply(K.column(a), K.column(b));
                Vec ab_A = acoord(ab), ab_V = vcoord(ab);
                for (std::size_t k = 0; k < n; ++k) part.w.at(a, b, k) = ab_A[k];
                for (std::size_t k = 0; k < m; ++k) part.v.at(a, b, k) = ab_V[k];
            }
    }

    std::vector<Vec> phi_cols;
    for (std::size_t i = 0; i < n; ++i) phi_cols.push_back(inclusion.column(i));
    for (std::size_t b = 0; b < m; ++b) phi_cols.push_back(K.column(b));
    return {std::move(d), std::move(K), Matrix::from_columns(N, phi_cols)};
}

void eval_h_equations(const ExtendingDatum& d1, const ExtendingDatum& d2, const EquivWitness& w, Sink& sink) {
    const ADAlgebra& A = d1.algebra;
    const std::size_t n = A.dim(), m = d1.vdim;
    const Matrix &Z = w.zeta, &H = w.eta;
    auto eA = [&](std::size_t i) { return Vec::unit(n, i); };
    auto eV = [&](std::size_t i) { return Vec::unit(m, i); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            const Vec x = eA(i), a = eV(k), ha = H.apply(a), za = Z.apply(a);
            sink.relation("h1", "xa", {i, k}, {H.apply(d1.lsucc.apply(x, a)), d2.lsucc.apply(x, ha)});
            sink.relation("h1", "xa", {i, k}, {H.apply(d1.rsucc.apply(x, a)), d2.rsucc.apply(x, ha)});
            sink.relation("h2", "xa", {i, k}, {H.apply(d1.lprec.apply(x, a)), d2.lprec.apply(x, ha)});
            sink.relation("h2", "xa", {i, k}, {H.apply(d1.rprec.apply(x, a)), d2.rprec.apply(x, ha)});
            sink.relation("h3", "xa", {i, k},
                          {Z.apply(d1.lsucc.apply(x, a)),
                           A.s(x, za) - d1.mu_succ.apply(a, x) + d2.mu_succ.apply(ha, x)});
            sink.relation("h4", "xa", {i, k},
                          {Z.apply(d1.rsucc.apply(x, a)),
                           A.s(za, x) - d1.rho_succ.apply(a, x) + d2.rho_succ.apply(ha, x)});
            sink.relation("h5", "xa", {i, k},
                          {Z.apply(d1.lprec.apply(x, a)),
                           A.p(x, za) - d1.mu_prec.apply(a, x) + d2.mu_prec.apply(ha, x)});
            sink.relation("h6", "xa", {i, k},
                          {Z.apply(d1.rprec.apply(x, a)),
                           A.p(za, x) - d1.rho_prec.apply(a, x) + d2.rho_prec.apply(ha, x)});
        }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
            const Vec a = eV(k), b = eV(l), ha = H.apply(a), hb = H.apply(b), za = Z.apply(a), zb = Z.apply(b);
            sink.relation("h7", "ab", {k, l},
                          {H.apply(d1.succ_v.apply(a, b)),
                           d2.succ_v.apply(ha, hb) + d2.lsucc.apply(za, hb) + d2.rsucc.apply(zb, ha)});
            sink.relation("h8", "ab", {k, l},
                          {Z.apply(d1.succ_v.apply(a, b)) + d1.varpi1.apply(a, b),
                           A.s(za, zb) + d2.rho_succ.apply(ha, zb) + d2.mu_succ.apply(hb, za) +
                               d2.varpi1.apply(ha, hb)});
            sink.relation("h9", "ab", {k, l},
                          {H.apply(d1.prec_v.apply(a, b)),
                           d2.prec_v.apply(ha, hb) + d2.lprec.apply(za, hb) + d2.rprec.apply(zb, ha)});
            sink.relation("h10", "ab", {k, l},
                          {Z.apply(d1.prec_v.apply(a, b)) + d1.varpi2.apply(a, b),
                           A.p(za, zb) + d2.rho_prec.apply(ha, zb) + d2.mu_prec.apply(hb, za) +
                               d2.varpi2.apply(ha, hb)});
        }
}

namespace {

void require_comparable(const ExtendingDatum& d1, const ExtendingDatum& d2, const EquivWitness& w) {
    validate(d1);
    validate(d2);
    if (!(d1.algebra.succ == d2.algebra.succ && d1.algebra.prec == d2.algebra.prec) || d1.vdim != d2.vdim)
        throw InputError("equivalence: data must share A and dim V");
    const std::size_t n = d1.algebra.dim(), m = d1.vdim;
    if (w.zeta.rows() != n || w.zeta.cols() != m || w.eta.rows() != m || w.eta.cols() != m)
        throw InputError("equivalence: witness shapes do not match (zeta: dim A x dim V, eta: dim V x dim V)");
}

}  // namespace

Report check_equivalence(const ExtendingDatum& d1, const ExtendingDatum& d2, const EquivWitness& w, EquivMode mode,
                         CheckOptions opt) {
    require_comparable(d1, d2, w);
    if (mode == EquivMode::equivalence && !inverse(w.eta))
        throw PreconditionError("equivalence: eta is singular");
    Report out(opt);
    if (mode == EquivMode::cohomologous)
        out.equal("eta=id", "", {}, w.eta, Matrix::identity(d1.vdim));
    eval_h_equations(d1, d2, w, out);
    return out;
}

std::optional<Matrix> find_zeta_linear(const ExtendingDatum& d1, const ExtendingDatum& d2, const Matrix& eta) {
    const std::size_t n = d1.algebra.dim(), m = d1.vdim;
    require_comparable(d1, d2, {Matrix(n, m), eta});
    if (!has_zero_products(d1.algebra))
        throw PreconditionError("linear fast path needs A with zero products (zeta(a) o zeta(b) terms)");
    auto unpack = [&](const Vec& z) {
        Matrix Z(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) Z(i, j) = z[i * m + j];
        return Z;
    };
    auto sol = solve_affine(n * m, [&](const Vec& z) {
        ResidualSink sink;
        eval_h_equations(d1, d2, {unpack(z), eta}, sink);
        return sink.vec();
    });
    if (!sol) return std::nullopt;
    return unpack(*sol);
}

AssocExtendingDatum sum_extending_datum(const ExtendingDatum& d) {
    validate(d);
    return {associated_associative(d.algebra),
            d.vdim,
            d.lsucc + d.lprec,
            d.rsucc + d.rprec,
            d.rho_succ + d.rho_prec,
            d.mu_succ + d.mu_prec,
            d.varpi1 + d.varpi2,
            d.succ_v + d.prec_v};
}

Bilinear associative_unified_product(const AssocExtendingDatum& d) {
    const std::size_t n = d.algebra.left(), m = d.vdim;
    Bilinear out = Bilinear::square(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = d.algebra.at(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t k = 0; k < n; ++k) {
                out.at(i, n + b, k) = d.mu.at(b)(k, i);
                out.at(n + b, i, k) = d.rho.at(b)(k, i);
            }
            for (std::size_t k = 0; k < m; ++k) {
                out.at(i, n + b, n + k) = d.l.at(i)(k, b);
                out.at(n + b, i, n + k) = d.r.at(i)(k, b);
            }
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t k = 0; k < n; ++k) out.at(n + a, n + b, k) = d.varpi.at(a, b, k);
            for (std::size_t k = 0; k < m; ++k) out.at(n + a, n + b, n + k) = d.dot_v.at(a, b, k);
        }
    return out;
}

}  // namespace adw
