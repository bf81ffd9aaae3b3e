#pragma once

#include <string>
#include <vector>

#include "adw/algebra.hpp"

namespace adw {

/// Quadruple (l_succ, r_succ, l_prec, r_prec) of actions of an algebra on k^modDim.
struct ADRep {
    ADAlgebra algebra;
    ActionFamily lsucc, rsucc, lprec, rprec;

    std::size_t mod_dim() const { return lsucc.mod_dim(); }
    ActionFamily ldot() const { return lsucc + lprec; }
    ActionFamily rdot() const { return rsucc + rprec; }

    /// Zero action on k^m.
    static ADRep zero(const ADAlgebra& alg, std::size_t m);

    friend bool operator==(const ADRep&, const ADRep&) = default;
};

void validate(const ADRep& rep);

/// R1-R6 for every pair of basis elements, plus R7 as a derived consistency check.
Report check_representation(const ADRep& rep, CheckOptions opt = {});

/// (A, L_succ, R_succ, L_prec, R_prec).
ADRep regular_representation(const ADAlgebra& alg);

/// (V*, -(r_prec* + r_succ*), l_prec*, r_succ*, -(l_prec* + l_succ*)).
ADRep dual_representation(const ADRep& rep);

/// Left/right actions (l, r) of an associative algebra on a module.
struct AssocBimodule {
    std::string label;
    ActionFamily l, r;
};

/// l(xy) = l(x)l(y) (AB1), r(xy) = r(y)r(x) (AB2), l(x)r(y) = r(y)l(x) (AB3).
Report check_assoc_bimodule(const Bilinear& op, const ActionFamily& l, const ActionFamily& r,
                            CheckOptions opt = {});

struct InducedBimodule {
    AssocBimodule bimodule;
    Report report;
};

/**
 * The four bimodules of the associated associative algebra:
 * (a) (V, -l_succ, -r_prec), (b) (V, l., r.), (d) (V*, -r_prec*, -l_succ*),
 * (e) (V*, r.*, l.*). Each comes with its bimodule-axiom report.
 */
std::vector<InducedBimodule> induced_associative_reps(const ADRep& rep);

/// A + V with (x,a) > (y,b) = (x > y, l>(x)b + r>(y)a), same for <. No checks.
ADAlgebra assemble_semidirect(const ADRep& rep);

/// Checked version; throws PreconditionError when the representation fails.
ADAlgebra semidirect_product(const ADRep& rep);

}  // namespace adw
