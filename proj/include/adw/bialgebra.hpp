#pragma once

#include <optional>
#include <vector>

#include "adw/matched.hpp"
#include "adw/tensor.hpp"

namespace adw {

/// Bilinear form on k^n by its Gram matrix.
struct BilinearForm {
    Matrix gram;
    std::size_t dim() const { return gram.rows(); }
    Scalar operator()(const Vec& x, const Vec& y) const { return dot(x, gram.apply(y)); }
    /// omega(x + a, y + b) = <x, b> + <a, y> on k^n + (k^n)*.
    static BilinearForm hyperbolic(std::size_t n);
    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// Symmetry ("sym") and the cyclic identity ("cyclic") over basis triples.
Report check_connes_cocycle(const Bilinear& op, const BilinearForm& w, CheckOptions opt = {});

/**
 * Solves w(x > y, z) = -w(y, z.x) and w(x < y, z) = -w(x, y.z) for the two
 * tables. Throws PreconditionError when w is degenerate or not a Connes cocycle.
 */
ADAlgebra derive_compatible_ad(const Bilinear& op, const BilinearForm& w);

struct DoubleConstruction {
    /// (A, A*, -R<^T, -L>^T, -R<_{A*}^T, -L>_{A*}^T).
    AssocMatchedPair pair;
    Report report;
    /// A + A* (A first), set when the matched pair passes.
    std::optional<Bilinear> product;
    BilinearForm omega;
    /// Structure derived from omega on the assembled algebra.
    std::optional<ADAlgebra> compatible;
};

/// Both algebras ("A:", "A*:"), the AM check, and on pass the Connes check of the hyperbolic form ("double:").
DoubleConstruction build_double_construction(const ADAlgebra& A, const ADAlgebra& Astar, CheckOptions opt = {});

/// dsucc[x](i, j) is the coefficient of e_i (x) e_j in Delta>(e_x); same for dprec.
struct CoproductPair {
    std::vector<Tensor2> dsucc, dprec;

    static CoproductPair zero(std::size_t n);
    std::size_t dim() const { return dsucc.size(); }
    Tensor2 succ(const Vec& x) const;
    Tensor2 prec(const Vec& x) const;
    Tensor2 total(const Vec& x) const { return succ(x) + prec(x); }
    friend bool operator==(const CoproductPair&, const CoproductPair&) = default;
};

void validate(const CoproductPair& cp);

/// Transposed structure constants: Delta(e_k) = sum c(i, j, k) e_i (x) e_j.
CoproductPair dual_coproducts(const ADAlgebra& A);
/// Algebra on the dual space with products dual to the coproducts.
ADAlgebra dual_algebra(const CoproductPair& cp);

/// Ca1 and the four-term chain Ca2 on every basis element.
Report check_coalgebra(const CoproductPair& cp, CheckOptions opt = {});

/**
 * A1/A2 on A ("alg:"), Ca1/Ca2, D1-D6 over basis pairs of A, and D7-D9: the
 * D1-D3 identities for the dual algebra with the dual coproducts.
 */
Report check_d_bialgebra(const ADAlgebra& A, const CoproductPair& cp, CheckOptions opt = {});

/// The associative matched pair (A, A*, -R<^T, -L>^T, -R<_{A*}^T, -L>_{A*}^T) of a D-bialgebra candidate.
AssocMatchedPair d_bialgebra_matched_pair(const ADAlgebra& A, const CoproductPair& cp);

/// Delta>(x) = -(R<(x) (x) I + I (x) L.(x)) r>, Delta<(x) = (R.(x) (x) I + I (x) L>(x)) r<.
CoproductPair coboundary_coproducts(const ADAlgebra& A, const Tensor2& rsucc, const Tensor2& rprec);

/// CD3-CD6 over basis pairs and CD7-CD10 over basis elements.
Report check_coboundary_conditions(const ADAlgebra& A, const Tensor2& rsucc, const Tensor2& rprec,
                                   CheckOptions opt = {});

}  // namespace adw
