#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adw/representation.hpp"

namespace adw {

/// Two algebras acting on each other: (l1s, r1s, l1p, r1p) of A1 on A2 and (l2s, r2s, l2p, r2p) of A2 on A1.
struct MatchedPairDatum {
    ADAlgebra alg1, alg2;
    ActionFamily l1s, r1s, l1p, r1p;
    ActionFamily l2s, r2s, l2p, r2p;

    static MatchedPairDatum zero(const ADAlgebra& a1, const ADAlgebra& a2);
    ADRep rep1() const { return {alg1, l1s, r1s, l1p, r1p}; }
    ADRep rep2() const { return {alg2, l2s, r2s, l2p, r2p}; }
    friend bool operator==(const MatchedPairDatum&, const MatchedPairDatum&) = default;
};

void validate(const MatchedPairDatum& d);

/**
 * A1/A2 on both algebras (prefixed "alg1:", "alg2:"), both representations
 * (prefixed "rep1:", "rep2:") and M1-M12 over basis triples. Passes exactly
 * when the bicrossed product is anti-dendriform.
 */
Report check_matched_pair(const MatchedPairDatum& d, CheckOptions opt = {});

/// (x,a) > (y,b) = (x >1 y + l2s(a)y + r2s(b)x, a >2 b + l1s(x)b + r1s(y)a), same for <. No checks.
ADAlgebra assemble_bicrossed(const MatchedPairDatum& d);
/// Checked version; throws CheckFailure when the datum fails.
ADAlgebra bicrossed_product(const MatchedPairDatum& d);

/// Associative algebras A1, A2 with bimodule actions (l1, r1) of A1 on A2 and (l2, r2) of A2 on A1.
struct AssocMatchedPair {
    Bilinear op1, op2;
    ActionFamily l1, r1, l2, r2;
    friend bool operator==(const AssocMatchedPair&, const AssocMatchedPair&) = default;
};

/// Associativity, both bimodules (prefixed "bimod1:", "bimod2:") and AM1-AM6.
Report check_assoc_matched_pair(const AssocMatchedPair& p, CheckOptions opt = {});
/// x.b = (r2(b)x, l1(x)b) and a.y = (l2(a)y, r1(y)a) on A1 + A2. No checks.
Bilinear associative_bicrossed(const AssocMatchedPair& p);

struct InducedAssocPair {
    AssocMatchedPair pair;
    Report report;
};
/// Summed products and actions, with the AM check of the result.
InducedAssocPair induced_associative_matched_pair(const MatchedPairDatum& d, CheckOptions opt = {});

struct Factorization {
    std::optional<MatchedPairDatum> datum;
    std::string diagnostic;
};

/**
 * Reads a matched pair off C with A1 = span(basis_a) and A2 = span(basis_b).
 * Fails with a diagnostic when the index sets are not complementary, a span is
 * not a subalgebra, the datum fails, or the bicrossed product differs from C.
 */
Factorization factorize(const ADAlgebra& C, const std::vector<std::size_t>& basis_a,
                        const std::vector<std::size_t>& basis_b);

}  // namespace adw
