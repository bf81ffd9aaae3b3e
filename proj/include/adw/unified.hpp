#pragma once

#include <optional>

#include "adw/representation.hpp"

namespace adw {

/**
 * Extending datum of an algebra A through a space V = k^vdim:
 * A acts on V by (lsucc, rsucc, lprec, rprec), V acts on A by
 * (rho_succ, mu_succ, rho_prec, mu_prec), varpi1/varpi2: V x V -> A and
 * succ_v/prec_v: V x V -> V.
 */
struct ExtendingDatum {
    ADAlgebra algebra;
    std::size_t vdim = 0;
    ActionFamily lsucc, rsucc, lprec, rprec;
    ActionFamily rho_succ, mu_succ, rho_prec, mu_prec;
    Bilinear varpi1, varpi2;
    Bilinear succ_v, prec_v;

    static ExtendingDatum zero(const ADAlgebra& alg, std::size_t vdim);
    /// The A-on-V part as a representation.
    ADRep action() const { return {algebra, lsucc, rsucc, lprec, rprec}; }

    friend bool operator==(const ExtendingDatum&, const ExtendingDatum&) = default;
};

void validate(const ExtendingDatum& d);

/**
 * S1 (representation, labels R1-R7), S2-S17, and the A2 identity on the
 * triple shapes (x,a,b), (a,x,b), (a,b,x), labelled S19-xab-A, S19-xab-V and
 * so on. Passes exactly when the unified product is anti-dendriform.
 */
Report check_extending_structure(const ExtendingDatum& d, CheckOptions opt = {});

/// Products on A + V (A basis first). No checks.
ADAlgebra assemble_unified(const ExtendingDatum& d);
/// Checked version; throws CheckFailure when the datum fails.
ADAlgebra unified_product(const ExtendingDatum& d);

struct Extraction {
    ExtendingDatum datum;
    /// Columns: basis of V = ker p in E coordinates.
    Matrix kernel_basis;
    /// phi(x, a) = x + a as a dim E x dim E matrix.
    Matrix phi;
};

/**
 * Reads an extending datum off an algebra E with subalgebra i(A) and linear
 * projection p: E -> A, p i = id. V = ker p with the nullspace basis.
 * Throws PreconditionError when p i != id or i(A) is not a subalgebra.
 */
Extraction extract_extending_datum(const ADAlgebra& E, const Matrix& inclusion, const Matrix& projector);

struct EquivWitness {
    Matrix zeta;  ///< V -> A (dim A x vdim)
    Matrix eta;   ///< V -> V
};

enum class EquivMode { equivalence, cohomologous };

/// Evaluates h1-h10 for psi(x, a) = (x + zeta(a), eta(a)) from d1 to d2.
void eval_h_equations(const ExtendingDatum& d1, const ExtendingDatum& d2, const EquivWitness& w, Sink& sink);

/**
 * h1-h10 for the supplied witness. Equivalence mode throws PreconditionError
 * when eta is singular; cohomologous mode also reports "eta=id" if eta is not
 * the identity.
 */
Report check_equivalence(const ExtendingDatum& d1, const ExtendingDatum& d2, const EquivWitness& w,
                         EquivMode mode = EquivMode::equivalence, CheckOptions opt = {});

/**
 * Linear fast path: with eta fixed and A having zero products, h1-h10 are
 * affine in zeta. Returns a zeta that works, or nullopt if none exists.
 * Throws PreconditionError when A has nonzero products.
 */
std::optional<Matrix> find_zeta_linear(const ExtendingDatum& d1, const ExtendingDatum& d2, const Matrix& eta);

/// The summed data (l., r., rho., mu., varpi, .V) of the associated associative structure.
struct AssocExtendingDatum {
    Bilinear algebra;
    std::size_t vdim = 0;
    ActionFamily l, r, rho, mu;
    Bilinear varpi, dot_v;
};

AssocExtendingDatum sum_extending_datum(const ExtendingDatum& d);
/// (x,a).(y,b) = (x.y + rho(a)y + mu(b)x + varpi(a,b), l(x)b + r(y)a + a.b).
Bilinear associative_unified_product(const AssocExtendingDatum& d);

}  // namespace adw
