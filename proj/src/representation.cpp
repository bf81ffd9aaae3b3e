#include "adw/representation.hpp"

#include "adw/errors.hpp"

namespace adw {

ADRep ADRep::zero(const ADAlgebra& alg, std::size_t m) {
    ActionFamily z(alg.dim(), m);
    return {alg, z, z, z, z};
}

void validate(const ADRep& rep) {
    validate(rep.algebra);
    const std::size_t n = rep.algebra.dim(), m = rep.mod_dim();
    for (const ActionFamily* f : {&rep.lsucc, &rep.rsucc, &rep.lprec, &rep.rprec}) {
        if (f->alg_dim() != n || f->mod_dim() != m)
            throw InputError("representation: action family shape does not match (algebra dim, modDim)");
        for (std::size_t x = 0; x < n; ++x)
            if (f->at(x).rows() != m) throw InputError("representation: action matrices must be square");
    }
}

Report check_representation(const ADRep& rep, CheckOptions opt) {
    validate(rep);
    Report out(opt);
    const ADAlgebra& A = rep.algebra;
    const ActionFamily ld = rep.ldot(), rd = rep.rdot();
    const auto& ls = rep.lsucc;
    const auto& rs = rep.rsucc;
    const auto& lp = rep.lprec;
    const auto& rp = rep.rprec;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            Vec x = A.e(i), y = A.e(j);
            out.chain("R1", "xy", {i, j},
                      {ls.at(i) * ls.at(j), -ls.of(A.dot(x, y)), -(lp.at(i) * ld.at(j)), lp.of(A.p(x, y))});
            out.chain("R2", "xy", {i, j},
                      {rs.of(A.s(x, y)), -(rs.at(j) * rd.at(i)), -rp.of(A.dot(x, y)), rp.at(j) * rp.at(i)});
            out.chain("R3", "xy", {i, j},
                      {ls.at(i) * rs.at(j), -(rs.at(j) * ld.at(i)), -(lp.at(i) * rd.at(j)), rp.at(j) * lp.at(i)});
            out.equal("R4", "xy", {i, j}, lp.of(A.s(x, y)), ls.at(i) * lp.at(j));
            out.equal("R5", "xy", {i, j}, rp.at(j) * rs.at(i), rs.of(A.p(x, y)));
            out.equal("R6", "xy", {i, j}, rp.at(j) * ls.at(i), ls.at(i) * rp.at(j));
            out.equal("R7", "xy", {i, j}, rd.at(j) * ld.at(i), ld.at(i) * rd.at(j));
        }
    return out;
}

ADRep regular_representation(const ADAlgebra& alg) {
    MulOperators m = multiplication_operators(alg);
    return {alg, m.Lsucc, m.Rsucc, m.Lprec, m.Rprec};
}

ADRep dual_representation(const ADRep& rep) {
    validate(rep);
    return {rep.algebra, -(rep.rprec + rep.rsucc).dual(), rep.lprec.dual(), rep.rsucc.dual(),
            -(rep.lprec + rep.lsucc).dual()};
}

Report check_assoc_bimodule(const Bilinear& op, const ActionFamily& l, const ActionFamily& r, CheckOptions opt) {
    const std::size_t n = op.left();
    if (l.alg_dim() != n || r.alg_dim() != n || l.mod_dim() != r.mod_dim())
        throw InputError("bimodule check: shape mismatch");
    Report out(opt);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec xy = op.basis(i, j);
            out.equal("AB1", "xy", {i, j}, l.of(xy), l.at(i) * l.at(j));
            out.equal("AB2", "xy", {i, j}, r.of(xy), r.at(j) * r.at(i));
            out.equal("AB3", "xy", {i, j}, l.at(i) * r.at(j), r.at(j) * l.at(i));
        }
    return out;
}

std::vector<InducedBimodule> induced_associative_reps(const ADRep& rep) {
    validate(rep);
    const Bilinear dot = associated_associative(rep.algebra);
    std::vector<AssocBimodule> mods = {
        {"a", -rep.lsucc, -rep.rprec},
        {"b", rep.ldot(), rep.rdot()},
        {"d", -rep.rprec.dual(), -rep.lsucc.dual()},
        {"e", rep.rdot().dual(), rep.ldot().dual()},
    };
    std::vector<InducedBimodule> out;
    for (auto& m : mods) {
        Report r = check_assoc_bimodule(dot, m.l, m.r);
        out.push_back({std::move(m), std::move(r)});
    }
    return out;
}

ADAlgebra assemble_semidirect(const ADRep& rep) {
    validate(rep);
    const std::size_t n = rep.algebra.dim(), m = rep.mod_dim();
    ADAlgebra E(n + m);
    for (std::size_t i = 0; i < n; ++i) E.basis[i] = rep.algebra.basis[i];
    for (std::size_t a = 0; a < m; ++a) E.basis[n + a] = "v" + std::to_string(a + 1);
    struct Part {
        Bilinear& out;
        const Bilinear& base;
        const ActionFamily& l;
        const ActionFamily& r;
    };
    for (Part part : {Part{E.succ, rep.algebra.succ, rep.lsucc, rep.rsucc},
                      Part{E.prec, rep.algebra.prec, rep.lprec, rep.rprec}}) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) part.out.at(i, j, k) = part.base.at(i, j, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t k = 0; k < m; ++k) {
                    part.out.at(i, n + b, n + k) = part.l.at(i)(k, b);
                    part.out.at(n + b, i, n + k) = part.r.at(i)(k, b);
                }
    }
    return E;
}

ADAlgebra semidirect_product(const ADRep& rep) {
    Report r = check_representation(rep);
    if (!r.ok())
        throw CheckFailure("semidirect product refused: representation fails " + r.violations().front().equation,
                           r);
    return assemble_semidirect(rep);
}

}  // namespace adw
