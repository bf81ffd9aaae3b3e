#include "adw/algebra.hpp"

#include "adw/errors.hpp"

namespace adw {

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
    return labels;
}

ADAlgebra::ADAlgebra(std::size_t n)
    : basis(default_labels(n)), succ(Bilinear::square(n)), prec(Bilinear::square(n)) {}

void validate(const ADAlgebra& alg) {
    const std::size_t n = alg.dim();
    for (const Bilinear* op : {&alg.succ, &alg.prec})
        if (op->left() != n || op->right() != n || op->out() != n)
            throw InputError("algebra tables do not match dimension " + std::to_string(n));
}

Report check_anti_dendriform(const ADAlgebra& alg, CheckOptions opt) {
    validate(alg);
    Report rep(opt);
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = alg.e(i), y = alg.e(j), z = alg.e(k);
                rep.chain("A1", "xyz", {i, j, k},
                          {alg.s(x, alg.s(y, z)), -alg.s(alg.dot(x, y), z), -alg.p(x, alg.dot(y, z)),
                           alg.p(alg.p(x, y), z)});
                rep.equal("A2", "xyz", {i, j, k}, alg.p(alg.s(x, y), z), alg.s(x, alg.p(y, z)));
            }
    return rep;
}

Bilinear associated_associative(const ADAlgebra& alg) {
    validate(alg);
    return alg.succ + alg.prec;
}

Report check_associative(const Bilinear& op, CheckOptions opt) {
    const std::size_t n = op.left();
    if (op.right() != n || op.out() != n) throw InputError("associativity check needs a square table");
    Report rep(opt);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                rep.equal("assoc", "xyz", {i, j, k}, op.apply(op.apply(x, y), z), op.apply(x, op.apply(y, z)));
            }
    return rep;
}

bool is_anti_zinbiel(const ADAlgebra& alg) {
    validate(alg);
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (alg.succ.at(i, j, k) != alg.prec.at(j, i, k)) return false;
    return true;
}

ActionFamily left_operators(const Bilinear& op) {
    const std::size_t n = op.out();
    ActionFamily L(op.left(), n);
    for (std::size_t i = 0; i < op.left(); ++i)
        for (std::size_t j = 0; j < op.right(); ++j)
            for (std::size_t k = 0; k < n; ++k) L.at(i)(k, j) = op.at(i, j, k);
    return L;
}

ActionFamily right_operators(const Bilinear& op) {
    const std::size_t n = op.out();
    ActionFamily R(op.right(), n);
    for (std::size_t i = 0; i < op.left(); ++i)
        for (std::size_t j = 0; j < op.right(); ++j)
            for (std::size_t k = 0; k < n; ++k) R.at(j)(k, i) = op.at(i, j, k);
    return R;
}

Bilinear from_left_operators(const ActionFamily& L) {
    const std::size_t n = L.mod_dim();
    Bilinear op(L.alg_dim(), n, n);
    for (std::size_t i = 0; i < L.alg_dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) op.at(i, j, k) = L.at(i)(k, j);
    return op;
}

MulOperators multiplication_operators(const ADAlgebra& alg) {
    validate(alg);
    return {left_operators(alg.succ), right_operators(alg.succ), left_operators(alg.prec),
            right_operators(alg.prec)};
}

ADAlgebra change_basis(const ADAlgebra& alg, const Matrix& P) {
    validate(alg);
    auto inv = inverse(P);
    if (!inv) throw InputError("change of basis matrix is singular");
    const std::size_t n = alg.dim();
    ADAlgebra out(n);
    out.basis = alg.basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = P.column(i), y = P.column(j);
            Vec s = inv->apply(alg.s(x, y)), p = inv->apply(alg.p(x, y));
            for (std::size_t k = 0; k < n; ++k) {
                out.succ.at(i, j, k) = s[k];
                out.prec.at(i, j, k) = p[k];
            }
        }
    return out;
}

bool is_homomorphism(const Matrix& f, const ADAlgebra& src, const ADAlgebra& dst) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) throw InputError("homomorphism check: shape mismatch");
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            Vec fx = f.column(i), fy = f.column(j);
            if (f.apply(src.succ.basis(i, j)) != dst.s(fx, fy)) return false;
            if (f.apply(src.prec.basis(i, j)) != dst.p(fx, fy)) return false;
        }
    return true;
}

std::optional<ADAlgebra> restrict_to(const ADAlgebra& alg, const std::vector<std::size_t>& indices) {
    validate(alg);
    const std::size_t m = indices.size();
    std::vector<long> pos(alg.dim(), -1);
    for (std::size_t a = 0; a < m; ++a) {
        if (indices[a] >= alg.dim()) throw InputError("basis index out of range");
        pos[indices[a]] = static_cast<long>(a);
    }
    ADAlgebra sub(m);
    for (std::size_t a = 0; a < m; ++a) sub.basis[a] = alg.basis[indices[a]];
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < alg.dim(); ++k) {
                const Scalar& s = alg.succ.at(indices[a], indices[b], k);
                const Scalar& p = alg.prec.at(indices[a], indices[b], k);
                if (s.is_zero() && p.is_zero()) continue;
                if (pos[k] < 0) return std::nullopt;
                sub.succ.at(a, b, static_cast<std::size_t>(pos[k])) = s;
                sub.prec.at(a, b, static_cast<std::size_t>(pos[k])) = p;
            }
    return sub;
}

}  // namespace adw
