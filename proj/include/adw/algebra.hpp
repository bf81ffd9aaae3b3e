#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adw/bilinear.hpp"
#include "adw/report.hpp"

namespace adw {

/// Finite-dimensional algebra with two products succ and prec given by structure constants.
struct ADAlgebra {
    std::vector<std::string> basis;
    Bilinear succ, prec;

    ADAlgebra() = default;
    /// Zero algebra of dimension n with labels e1..en.
    explicit ADAlgebra(std::size_t n);

    std::size_t dim() const { return basis.size(); }
    Vec e(std::size_t i) const { return Vec::unit(dim(), i); }
    Vec s(const Vec& x, const Vec& y) const { return succ.apply(x, y); }
    Vec p(const Vec& x, const Vec& y) const { return prec.apply(x, y); }
    /// Associated product x.y = x succ y + x prec y.
    Vec dot(const Vec& x, const Vec& y) const { return s(x, y) + p(x, y); }

    friend bool operator==(const ADAlgebra&, const ADAlgebra&) = default;
};

/// Throws InputError unless both tables are dim x dim -> dim.
void validate(const ADAlgebra& alg);

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e");

Report check_anti_dendriform(const ADAlgebra& alg, CheckOptions opt = {});
Bilinear associated_associative(const ADAlgebra& alg);
Report check_associative(const Bilinear& op, CheckOptions opt = {});
bool is_anti_zinbiel(const ADAlgebra& alg);

struct MulOperators {
    ActionFamily Lsucc, Rsucc, Lprec, Rprec;
};

MulOperators multiplication_operators(const ADAlgebra& alg);
/// Left and right multiplication operators of a single product table.
ActionFamily left_operators(const Bilinear& op);
ActionFamily right_operators(const Bilinear& op);
/// Product table rebuilt from its left multiplication operators.
Bilinear from_left_operators(const ActionFamily& L);

/**
 * Transports the structure along the invertible change of basis P whose
 * columns are the new basis vectors written in old coordinates.
 */
ADAlgebra change_basis(const ADAlgebra& alg, const Matrix& P);

/// True when f: src -> dst (dst.dim x src.dim) preserves both products.
bool is_homomorphism(const Matrix& f, const ADAlgebra& src, const ADAlgebra& dst);

/// Restriction of the products to the span of the given basis indices; nullopt if not closed.
std::optional<ADAlgebra> restrict_to(const ADAlgebra& alg, const std::vector<std::size_t>& indices);

}  // namespace adw
