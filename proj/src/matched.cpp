#include "adw/matched.hpp"

#include <algorithm>

#include "adw/errors.hpp"

namespace adw {

namespace {

void require_family(const ActionFamily& f, std::size_t src, std::size_t tgt, const char* name) {
    if (f.alg_dim() != src || f.mod_dim() != tgt)
        throw InputError(std::string("matched pair: family ") + name + " has the wrong shape");
}

}  // namespace

MatchedPairDatum MatchedPairDatum::zero(const ADAlgebra& a1, const ADAlgebra& a2) {
    MatchedPairDatum d;
    d.alg1 = a1;
    d.alg2 = a2;
    d.l1s = d.r1s = d.l1p = d.r1p = ActionFamily(a1.dim(), a2.dim());
    d.l2s = d.r2s = d.l2p = d.r2p = ActionFamily(a2.dim(), a1.dim());
    return d;
}

void validate(const MatchedPairDatum& d) {
    validate(d.alg1);
    validate(d.alg2);
    const std::size_t n = d.alg1.dim(), m = d.alg2.dim();
    require_family(d.l1s, n, m, "l1s");
    require_family(d.r1s, n, m, "r1s");
    require_family(d.l1p, n, m, "l1p");
    require_family(d.r1p, n, m, "r1p");
    require_family(d.l2s, m, n, "l2s");
    require_family(d.r2s, m, n, "r2s");
    require_family(d.l2p, m, n, "l2p");
    require_family(d.r2p, m, n, "r2p");
}

Report check_matched_pair(const MatchedPairDatum& d, CheckOptions opt) {
    validate(d);
    Report out(opt);
    out.merge_prefixed(check_anti_dendriform(d.alg1, opt), "alg1:");
    out.merge_prefixed(check_anti_dendriform(d.alg2, opt), "alg2:");
    out.merge_prefixed(check_representation(d.rep1(), opt), "rep1:");
    out.merge_prefixed(check_representation(d.rep2(), opt), "rep2:");

    const ADAlgebra& A1 = d.alg1;
    const ADAlgebra& A2 = d.alg2;
    const std::size_t n = A1.dim(), m = A2.dim();
    const ActionFamily l1d = d.l1s + d.l1p, r1d = d.r1s + d.r1p;
    const ActionFamily l2d = d.l2s + d.l2p, r2d = d.r2s + d.r2p;
    const auto& l1s = d.l1s;
    const auto& r1s = d.r1s;
    const auto& l1p = d.l1p;
    const auto& r1p = d.r1p;
    const auto& l2s = d.l2s;
    const auto& r2s = d.r2s;
    const auto& l2p = d.l2p;
    const auto& r2p = d.r2p;

    // Shapes with two A1 elements.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < m; ++c) {
                Vec x = A1.e(i), y = A1.e(j), cc = A2.e(c);
                out.chain("M1", "xyc", {i, j, c},
                          {A1.s(x, r2s.apply(cc, y)) + r2s.apply(l1s.apply(y, cc), x), -r2s.apply(cc, A1.dot(x, y)),
                           -A1.p(x, r2d.apply(cc, y)) - r2p.apply(l1d.apply(y, cc), x),
                           r2p.apply(cc, A1.p(x, y))});
                out.equal("M7", "xyc", {i, j, c}, r2p.apply(cc, A1.s(x, y)),
                          A1.s(x, r2p.apply(cc, y)) + r2s.apply(l1p.apply(y, cc), x));
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = A1.e(i), bb = A2.e(b), z = A1.e(k);
                out.chain("M2", "xbz", {i, b, k},
                          {A1.s(x, l2s.apply(bb, z)) + r2s.apply(r1s.apply(z, bb), x),
                           -A1.s(r2d.apply(bb, x), z) - l2s.apply(l1d.apply(x, bb), z),
                           -A1.p(x, l2d.apply(bb, z)) - r2p.apply(r1d.apply(z, bb), x),
                           A1.p(r2p.apply(bb, x), z) + l2p.apply(l1p.apply(x, bb), z)});
                out.equal("M8", "xbz", {i, b, k}, A1.p(r2s.apply(bb, x), z) + l2p.apply(l1s.apply(x, bb), z),
                          A1.s(x, l2p.apply(bb, z)) + r2s.apply(r1p.apply(z, bb), x));
            }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec aa = A2.e(a), y = A1.e(j), z = A1.e(k);
                out.chain("M3", "ayz", {a, j, k},
                          {l2s.apply(aa, A1.s(y, z)), -A1.s(l2d.apply(aa, y), z) - l2s.apply(r1d.apply(y, aa), z),
                           -l2p.apply(aa, A1.dot(y, z)),
                           A1.p(l2p.apply(aa, y), z) + l2p.apply(r1p.apply(y, aa), z)});
                out.equal("M9", "ayz", {a, j, k}, A1.p(l2s.apply(aa, y), z) + l2p.apply(r1s.apply(y, aa), z),
                          l2s.apply(aa, A1.p(y, z)));
            }
    // Shapes with two A2 elements.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                Vec x = A1.e(i), bb = A2.e(b), cc = A2.e(c);
                out.chain("M4", "xbc", {i, b, c},
                          {l1s.apply(x, A2.s(bb, cc)), -A2.s(l1d.apply(x, bb), cc) - l1s.apply(r2d.apply(bb, x), cc),
                           -l1p.apply(x, A2.dot(bb, cc)),
                           A2.p(l1p.apply(x, bb), cc) + l1p.apply(r2p.apply(bb, x), cc)});
                out.equal("M10", "xbc", {i, b, c}, A2.p(l1s.apply(x, bb), cc) + l1p.apply(r2s.apply(bb, x), cc),
                          l1s.apply(x, A2.p(bb, cc)));
            }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < m; ++c) {
                Vec aa = A2.e(a), y = A1.e(j), cc = A2.e(c);
                out.chain("M5", "ayc", {a, j, c},
                          {A2.s(aa, l1s.apply(y, cc)) + r1s.apply(r2s.apply(cc, y), aa),
                           -A2.s(r1d.apply(y, aa), cc) - l1s.apply(l2d.apply(aa, y), cc),
                           -A2.p(aa, l1d.apply(y, cc)) - r1p.apply(r2d.apply(cc, y), aa),
                           A2.p(r1p.apply(y, aa), cc) + l1p.apply(l2p.apply(aa, y), cc)});
                out.equal("M11", "ayc", {a, j, c}, A2.p(r1s.apply(y, aa), cc) + l1p.apply(l2s.apply(aa, y), cc),
                          A2.s(aa, l1p.apply(y, cc)) + r1s.apply(r2p.apply(cc, y), aa));
            }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                Vec aa = A2.e(a), bb = A2.e(b), z = A1.e(k);
                out.chain("M6", "abz", {a, b, k},
                          {A2.s(aa, r1s.apply(z, bb)) + r1s.apply(l2s.apply(bb, z), aa), -r1s.apply(z, A2.dot(aa, bb)),
                           -A2.p(aa, r1d.apply(z, bb)) - r1p.apply(l2d.apply(bb, z), aa),
                           r1p.apply(z, A2.p(aa, bb))});
                out.equal("M12", "abz", {a, b, k}, r1p.apply(z, A2.s(aa, bb)),
                          A2.s(aa, r1p.apply(z, bb)) + r1s.apply(l2p.apply(bb, z), aa));
            }
    return out;
}

ADAlgebra assemble_bicrossed(const MatchedPairDatum& d) {
    validate(d);
    const std::size_t n = d.alg1.dim(), m = d.alg2.dim();
    ADAlgebra E(n + m);
    for (std::size_t i = 0; i < n; ++i) E.basis[i] = d.alg1.basis[i];
    for (std::size_t a = 0; a < m; ++a) E.basis[n + a] = d.alg2.basis[a];
    struct Part {
        Bilinear& out;
        const Bilinear& op1;
        const Bilinear& op2;
        const ActionFamily& l1;
        const ActionFamily& r1;
        const ActionFamily& l2;
        const ActionFamily& r2;
    };
    for (Part part : {Part{E.succ, d.alg1.succ, d.alg2.succ, d.l1s, d.r1s, d.l2s, d.r2s},
                      Part{E.prec, d.alg1.prec, d.alg2.prec, d.l1p, d.r1p, d.l2p, d.r2p}}) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) part.out.at(i, j, k) = part.op1.at(i, j, k);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t k = 0; k < m; ++k) part.out.at(n + a, n + b, n + k) = part.op2.at(a, b, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t k = 0; k < n; ++k) {
                    part.out.at(i, n + b, k) = part.r2.at(b)(k, i);
                    part.out.at(n + b, i, k) = part.l2.at(b)(k, i);
                }
                for (std::size_t k = 0; k < m; ++k) {
                    part.out.at(i, n + b, n + k) = part.l1.at(i)(k, b);
                    part.out.at(n + b, i, n + k) = part.r1.at(i)(k, b);
                }
            }
    }
    return E;
}

ADAlgebra bicrossed_product(const MatchedPairDatum& d) {
    Report r = check_matched_pair(d);
    if (!r.ok())
        throw CheckFailure("bicrossed product refused: matched pair fails " + r.violations().front().equation,
                           r);
    return assemble_bicrossed(d);
}

Report check_assoc_matched_pair(const AssocMatchedPair& p, CheckOptions opt) {
    const std::size_t n = p.op1.left(), m = p.op2.left();
    if (p.l1.alg_dim() != n || p.r1.alg_dim() != n || p.l1.mod_dim() != m || p.r1.mod_dim() != m ||
        p.l2.alg_dim() != m || p.r2.alg_dim() != m || p.l2.mod_dim() != n || p.r2.mod_dim() != n)
        throw InputError("associative matched pair: shape mismatch");
    Report out(opt);
    out.merge_prefixed(check_associative(p.op1, opt), "alg1:");
    out.merge_prefixed(check_associative(p.op2, opt), "alg2:");
    out.merge_prefixed(check_assoc_bimodule(p.op1, p.l1, p.r1, opt), "bimod1:");
    out.merge_prefixed(check_assoc_bimodule(p.op2, p.l2, p.r2, opt), "bimod2:");
    auto m1 = [&](const Vec& x, const Vec& y) { return p.op1.apply(x, y); };
    auto m2 = [&](const Vec& a, const Vec& b) { return p.op2.apply(a, b); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vec x = Vec::unit(n, i), aa = Vec::unit(m, a), bb = Vec::unit(m, b);
                out.equal("AM1", "xab", {i, a, b}, p.l1.apply(x, m2(aa, bb)),
                          p.l1.apply(p.r2.apply(aa, x), bb) + m2(p.l1.apply(x, aa), bb));
                out.equal("AM2", "xab", {i, a, b}, p.r1.apply(x, m2(aa, bb)),
                          p.r1.apply(p.l2.apply(bb, x), aa) + m2(aa, p.r1.apply(x, bb)));
                out.equal("AM5", "xab", {i, a, b}, p.l1.apply(p.l2.apply(aa, x), bb) + m2(p.r1.apply(x, aa), bb),
                          p.r1.apply(p.r2.apply(bb, x), aa) + m2(aa, p.l1.apply(x, bb)));
            }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec aa = Vec::unit(m, a), x = Vec::unit(n, i), y = Vec::unit(n, j);
                out.equal("AM3", "axy", {a, i, j}, p.l2.apply(aa, m1(x, y)),
                          p.l2.apply(p.r1.apply(x, aa), y) + m1(p.l2.apply(aa, x), y));
                out.equal("AM4", "axy", {a, i, j}, p.r2.apply(aa, m1(x, y)),
                          p.r2.apply(p.l1.apply(y, aa), x) + m1(x, p.r2.apply(aa, y)));
                out.equal("AM6", "axy", {a, i, j}, p.l2.apply(p.l1.apply(x, aa), y) + m1(p.r2.apply(aa, x), y),
                          p.r2.apply(p.r1.apply(y, aa), x) + m1(x, p.l2.apply(aa, y)));
            }
    return out;
}

Bilinear associative_bicrossed(const AssocMatchedPair& p) {
    const std::size_t n = p.op1.left(), m = p.op2.left();
    Bilinear out = Bilinear::square(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = p.op1.at(i, j, k);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < m; ++k) out.at(n + a, n + b, n + k) = p.op2.at(a, b, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t k = 0; k < n; ++k) {
                out.at(i, n + b, k) = p.r2.at(b)(k, i);
                out.at(n + b, i, k) = p.l2.at(b)(k, i);
            }
            for (std::size_t k = 0; k < m; ++k) {
                out.at(i, n + b, n + k) = p.l1.at(i)(k, b);
                out.at(n + b, i, n + k) = p.r1.at(i)(k, b);
            }
        }
    return out;
}

InducedAssocPair induced_associative_matched_pair(const MatchedPairDatum& d, CheckOptions opt) {
    validate(d);
    AssocMatchedPair p{associated_associative(d.alg1), associated_associative(d.alg2), d.l1s + d.l1p,
                       d.r1s + d.r1p, d.l2s + d.l2p, d.r2s + d.r2p};
    Report r = check_assoc_matched_pair(p, opt);
    return {std::move(p), std::move(r)};
}

Factorization factorize(const ADAlgebra& C, const std::vector<std::size_t>& basis_a,
                        const std::vector<std::size_t>& basis_b) {
    validate(C);
    const std::size_t dim = C.dim(), n = basis_a.size(), m = basis_b.size();
    std::vector<int> seen(dim, 0);
    for (auto idx : {&basis_a, &basis_b})
        for (std::size_t i : *idx) {
            if (i >= dim) throw InputError("factorize: basis index out of range");
            ++seen[i];
        }
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
        return {std::nullopt, "index sets must be disjoint and cover the basis"};
    auto A1 = restrict_to(C, basis_a);
    if (!A1) return {std::nullopt, "span of the first index set is not a subalgebra"};
    auto A2 = restrict_to(C, basis_b);
    if (!A2) return {std::nullopt, "span of the second index set is not a subalgebra"};

    MatchedPairDatum d = MatchedPairDatum::zero(*A1, *A2);
    struct Part {
        const Bilinear& op;
        ActionFamily& l1;
        ActionFamily& r1;
        ActionFamily& l2;
        ActionFamily& r2;
    };
    for (Part part : {Part{C.succ, d.l1s, d.r1s, d.l2s, d.r2s}, Part{C.prec, d.l1p, d.r1p, d.l2p, d.r2p}})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < m; ++b) {
                const std::size_t x = basis_a[i], y = basis_b[b];
                for (std::size_t k = 0; k < n; ++k) {
                    part.r2.at(b)(k, i) = part.op.at(x, y, basis_a[k]);
                    part.l2.at(b)(k, i) = part.op.at(y, x, basis_a[k]);
                }
                for (std::size_t k = 0; k < m; ++k) {
                    part.l1.at(i)(k, b) = part.op.at(x, y, basis_b[k]);
                    part.r1.at(i)(k, b) = part.op.at(y, x, basis_b[k]);
                }
            }
    Report r = check_matched_pair(d);
    if (!r.ok()) return {std::nullopt, "extracted datum fails " + r.violations().front().equation};

    std::vector<std::size_t> order(basis_a);
    order.insert(order.end(), basis_b.begin(), basis_b.end());
    Matrix perm(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) perm(order[c], c) = 1;
    ADAlgebra permuted = change_basis(C, perm);
    ADAlgebra rebuilt = assemble_bicrossed(d);
    if (!(permuted.succ == rebuilt.succ && permuted.prec == rebuilt.prec))
        return {std::nullopt, "bicrossed product does not reproduce the input tables"};
    return {std::move(d), ""};
}

}  // namespace adw
