#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adw/representation.hpp"
#include "adw/tensor.hpp"

namespace adw {

/// r12.r13 + r23 > r12 - r13 < r23.
Tensor3 adybe_residual(const ADAlgebra& A, const Tensor2& r);

/// Matrix of T_r: A* -> A, T_r(e_l*) = sum_k r(l, k) e_k.
Matrix t_r(const Tensor2& r);

bool is_skew(const Tensor2& r);
/// Skew tensor from its strictly upper coefficients r(i, j), i < j, in row order.
Tensor2 skew_from_upper(std::size_t n, const std::vector<Scalar>& upper);

/// T(u) > T(v) = T(l>(Tu)v + r>(Tv)u) ("O-succ") and the same for < ("O-prec").
Report check_o_operator(const Matrix& T, const ADRep& rep, CheckOptions opt = {});
/// T(u).T(v) = T(l(Tu)v + r(Tv)u) ("O-assoc") for an associative product with actions (l, r).
Report check_o_operator_assoc(const Matrix& T, const Bilinear& op, const ActionFamily& l, const ActionFamily& r,
                              CheckOptions opt = {});

/// T_r as an O-operator of (A., -R<^T, -L>^T) ("O-assoc").
Report check_t_r_identity(const ADAlgebra& A, const Tensor2& r, CheckOptions opt = {});

struct OLift {
    /// A + V* built from the dual representation (A basis first).
    ADAlgebra ambient;
    Tensor2 r;
    Tensor3 residual;
    Report o_report;
    bool zero_residual() const { return residual.is_zero(); }
};

/// T in ambient (x) ambient, r = T - tau(T), and the residual of r.
OLift o_operator_to_ybe(const Matrix& T, const ADRep& rep);

/// Scalar field used by the exhaustive search.
struct FieldSpec {
    /// 0 for the rationals, otherwise the prime modulus.
    std::uint32_t prime = 0;
    bool rational() const { return prime == 0; }
    std::string name() const;
};

/// Parses "rational" or "fp<p>" with p prime; throws InputError otherwise.
FieldSpec parse_field_spec(const std::string& text);

struct YbeSearchOptions {
    FieldSpec field;
    /// Candidate values per coefficient over the rationals (ignored over F_p, which uses 0..p-1).
    std::vector<Scalar> grid;
    unsigned workers = 1;
};

struct YbeSearchResult {
    std::size_t dim = 0;
    FieldSpec field;
    std::uint64_t points = 0;
    /// Upper coefficients of each skew solution, lexicographically sorted (residues over F_p).
    std::vector<std::vector<Scalar>> solutions;
};

/// Exhaustive search of skew AD-YBE solutions over the grid. Requires dim <= 4.
YbeSearchResult ybe_search(const ADAlgebra& A, const YbeSearchOptions& opt);

}  // namespace adw
