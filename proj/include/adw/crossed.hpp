#pragma once

#include <optional>
#include <vector>

#include "adw/representation.hpp"

namespace adw {

/**
 * Crossed datum of A through an algebra V: A acts on V by
 * (lsucc, rsucc, lprec, rprec) and omega1/omega2: A x A -> V.
 * With the V-algebra fixed, the six maps form a non-abelian 2-cocycle.
 */
struct CrossedDatum {
    ADAlgebra algebra;
    ADAlgebra v_algebra;
    ActionFamily lsucc, rsucc, lprec, rprec;
    Bilinear omega1, omega2;

    static CrossedDatum zero(const ADAlgebra& alg, const ADAlgebra& v_alg);
    std::size_t vdim() const { return v_algebra.dim(); }
    friend bool operator==(const CrossedDatum&, const CrossedDatum&) = default;
};

using NonAbelian2Cocycle = CrossedDatum;

void validate(const CrossedDatum& d);

/// A1/A2 on A, C1-C11 over basis tuples, and C12 (A1/A2 on V). Passes exactly when the crossed product is.
Report check_crossed_system(const CrossedDatum& d, CheckOptions opt = {});

/// (x,a) > (y,b) = (x > y, omega1(x,y) + l>(x)b + r>(y)a + a >_V b), same for <. No checks.
ADAlgebra assemble_crossed(const CrossedDatum& d);
/// Checked version; throws CheckFailure when the datum fails.
ADAlgebra crossed_product(const CrossedDatum& d);

struct SectionCocycle {
    CrossedDatum datum;
    /// Columns: basis of V = ker p in E coordinates.
    Matrix kernel_basis;
    /// (x, a) -> s(x) + a, an isomorphism from the crossed product onto E.
    Matrix phi;
};

/**
 * Non-abelian 2-cocycle of the extension E -> A given by p with section s.
 * A carries the quotient structure x > y = p(s(x) > s(y)). Throws
 * PreconditionError when p s != id or p is not a homomorphism (ker p not an ideal).
 */
SectionCocycle cocycle_from_section(const ADAlgebra& E, const Matrix& p, const Matrix& s);

/// Evaluates N1-N4 for zeta: A -> V (dim V x dim A).
void eval_n_equations(const CrossedDatum& c1, const CrossedDatum& c2, const Matrix& zeta, Sink& sink);
/// N1-N4 for the witness zeta, plus N5 (equal V-algebras).
Report check_cocycles_cohomologous(const CrossedDatum& c1, const CrossedDatum& c2, const Matrix& zeta,
                                   CheckOptions opt = {});

/// Outcome of a linear fast-path search: a witness, or a certificate that none exists.
struct LinearSearch {
    std::optional<Matrix> witness;
    /// y with y^T M = 0 and y . b != 0 for the system M z = b.
    std::optional<Vec> certificate;
    bool found() const { return witness.has_value(); }
};

/**
 * Searches zeta with N1-N5 when V has zero products (then the system is
 * affine). Throws PreconditionError otherwise, or when the V-algebras differ.
 */
LinearSearch find_cohomologous_zeta(const CrossedDatum& c1, const CrossedDatum& c2);

/// Tuple (A, B, C, D, theta0, epsilon0) describing crossed systems of k_0 through k_0^n.
struct GH2Tuple {
    Matrix a, b, c, d;
    Vec theta, epsilon;
    std::size_t n() const { return theta.size(); }
    friend bool operator==(const GH2Tuple&, const GH2Tuple&) = default;
};

enum class GH2Relations {
    /// The relation list as printed.
    printed,
    /// The list obtained by expanding C1-C11 for this family.
    derived,
};

void validate(const GH2Tuple& t);
/// Labels G1-G8, one per displayed relation group.
Report check_gh2_tuple(const GH2Tuple& t, GH2Relations rel = GH2Relations::printed, CheckOptions opt = {});
/// Crossed datum of the 1-dim zero algebra through the n-dim zero algebra.
CrossedDatum gh2_to_crossed(const GH2Tuple& t);

struct GH2Verdict {
    bool cohomologous = false;
    /// theta - theta' = (A + B) w and epsilon - epsilon' = (C + D) w.
    std::optional<Vec> w;
    std::optional<Vec> certificate;
    /// Set when the matrices differ (then no w is sought).
    std::string reason;
};
GH2Verdict gh2_tuples_cohomologous(const GH2Tuple& t1, const GH2Tuple& t2);

/// Pair of maps (alpha on A, beta on V).
struct AutPair {
    Matrix alpha, beta;
};

/// Both maps invertible and multiplicative ("alpha", "beta").
Report check_aut_pair(const CrossedDatum& c, const AutPair& pair);

struct InducibleResult {
    Report report;
    /// gamma(x, a) = (alpha x, beta a + phi x) on the crossed product, set on pass.
    std::optional<Matrix> gamma;
};

/**
 * Iam1-Iam4 for phi: A -> V. On pass, gamma is materialized and checked to be
 * an automorphism ("Iam5") with K(gamma) = (p gamma s, gamma|_V) = (alpha, beta) ("K").
 */
InducibleResult check_inducible(const CrossedDatum& c, const AutPair& pair, const Matrix& phi,
                                CheckOptions opt = {});

/// Linear fast path for phi when V has zero products. Throws PreconditionError otherwise.
LinearSearch find_inducing_phi(const CrossedDatum& c, const AutPair& pair);

/// Inc1-Inc3: maps conjugated by (alpha, beta).
CrossedDatum transformed_cocycle(const CrossedDatum& c, const AutPair& pair);

/// The Wells class W(alpha, beta) = [transformed - original].
struct WellsClass {
    CrossedDatum transformed;
    CrossedDatum original;
};
WellsClass wells_map(const CrossedDatum& c, const AutPair& pair);

/// Vanishing witness check: transformed and original cohomologous via zeta.
Report wells_vanishes_with(const WellsClass& w, const Matrix& zeta, CheckOptions opt = {});
/// Decides vanishing on the abelian fast path.
LinearSearch wells_vanishes(const WellsClass& w);

/// Basis of the non-abelian 1-cocycles phi: A -> V (each dim V x dim A).
std::vector<Matrix> z1_cocycles(const CrossedDatum& c);
/// Direct check of the Z1 conditions for one map (labels "Z1-ann", "Z1-succ", "Z1-prec").
Report check_z1(const CrossedDatum& c, const Matrix& phi, CheckOptions opt = {});

}  // namespace adw
