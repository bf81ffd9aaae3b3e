#include <doctest.h>

#include "adw/representation.hpp"
#include "support.hpp"
#include "witness_oracle.hpp"

using namespace adw;
using namespace adw::testing;

namespace {

ADAlgebra nilp2() {
    ADAlgebra a(2);
    a.succ.at(0, 0, 1) = 1;
    return a;
}

/// A + V assembled directly from the structure constants.
ADAlgebra raw_semidirect(const ADRep& rep) {
    const std::size_t n = rep.algebra.dim(), m = rep.mod_dim();
    ADAlgebra e(n + m);
    for (int which = 0; which < 2; ++which) {
        Bilinear& t = which ? e.prec : e.succ;
        const Bilinear& a = which ? rep.algebra.prec : rep.algebra.succ;
        const ActionFamily& l = which ? rep.lprec : rep.lsucc;
        const ActionFamily& r = which ? rep.rprec : rep.rsucc;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = a.at(i, j, k);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t k = 0; k < m; ++k) {
                    t.at(x, n + b, n + k) = l.at(x)(k, b);
                    t.at(n + b, x, n + k) = r.at(x)(k, b);
                }
    }
    return e;
}

ADRep random_rep(Rng& rng, const ADAlgebra& alg, std::size_t m, double density) {
    return {alg, random_family(rng, alg.dim(), m, density), random_family(rng, alg.dim(), m, density),
            random_family(rng, alg.dim(), m, density), random_family(rng, alg.dim(), m, density)};
}

}  // namespace

TEST_CASE("R1-R6 witnesses match the axiom failures of the semidirect product") {
    Rng rng(20);
    int pass = 0, fail = 0;
    for (int t = 0; t < 200; ++t) {
        ADAlgebra alg = t % 2 ? nilp2() : random_layered_algebra(rng, 1, 1, t % 4 == 0, 0.7);
        ADRep rep = random_rep(rng, alg, 1 + t % 2, 0.3);
        if (t % 3 == 0 && check_anti_dendriform(alg).ok()) {
            rep = random_valid_rep(rng, alg, 1);
            if (t % 2) rep.rprec.at(0)(0, 0) += Scalar(1);
        }
        const std::size_t n = alg.dim(), m = rep.mod_dim();
        Report r = check_representation(rep, {true});
        ADAlgebra E = raw_semidirect(rep);
        std::map<std::string, WitnessSet> expect;
        for (const char* eq : {"R1", "R2", "R3", "R4", "R5", "R6"}) expect[eq];
        for (std::size_t p = 0; p < n + m; ++p)
            for (std::size_t q = 0; q < n + m; ++q)
                for (std::size_t s = 0; s < n + m; ++s) {
                    const int shape = (p >= n) * 4 + (q >= n) * 2 + (s >= n);
                    TripleFailure f = triple_failure(E, p, q, s, n);
                    auto add = [&](bool bad, const char* eq, std::vector<std::size_t> w) {
                        if (bad) expect[eq].insert(w);
                    };
                    if (shape == 1) add(f.a1_high, "R1", {p, q}), add(f.a2_high, "R4", {p, q});
                    if (shape == 2) add(f.a1_high, "R3", {p, s}), add(f.a2_high, "R6", {p, s});
                    if (shape == 4) add(f.a1_high, "R2", {q, s}), add(f.a2_high, "R5", {q, s});
                    if (shape != 0 && shape != 1 && shape != 2 && shape != 4) CHECK(!f.a1_high);
                }
        for (const auto& [eq, ws] : expect) CHECK(witnesses_of(r, eq) == ws);
        const bool base = check_anti_dendriform(alg).ok();
        bool r16 = true;
        for (const char* eq : {"R1", "R2", "R3", "R4", "R5", "R6"}) r16 = r16 && r.count(eq) == 0;
        CHECK((r16 && base) == check_anti_dendriform(E).ok());
        (r16 ? pass : fail)++;
    }
    CHECK(pass > 20);
    CHECK(fail > 20);
}

TEST_CASE("valid representations and their corruptions") {
    Rng rng(21);
    int flipped = 0;
    for (int t = 0; t < 80; ++t) {
        ADAlgebra alg = t % 2 ? nilp2() : random_layered_algebra(rng, 1 + t % 3 / 2, 1, 1, 0.7);
        if (!check_anti_dendriform(alg).ok()) continue;
        ADRep rep = random_valid_rep(rng, alg, 1 + t % 2);
        REQUIRE(check_representation(rep).ok());
        CHECK(check_anti_dendriform(semidirect_product(rep)).ok());
        CHECK(check_representation(dual_representation(rep)).ok());
        for (const auto& b : induced_associative_reps(rep)) CHECK(b.report.ok());

        ADRep bad = rep;
        ActionFamily* fams[] = {&bad.lsucc, &bad.rsucc, &bad.lprec, &bad.rprec};
        ActionFamily& f = *fams[rng() % 4];
        const std::size_t x = rng() % alg.dim(), i = rng() % rep.mod_dim(), j = rng() % rep.mod_dim();
        f.at(x)(i, j) += Scalar(1 + static_cast<int>(rng() % 2));
        const bool rep_ok = check_representation(bad).ok();
        CHECK(rep_ok == check_anti_dendriform(assemble_semidirect(bad)).ok());
        flipped += !rep_ok;
        if (!rep_ok) CHECK_THROWS_AS(semidirect_product(bad), CheckFailure);
    }
    CHECK(flipped > 20);
}

TEST_CASE("semidirect product structure") {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        ADAlgebra alg = nilp2();
        ADRep rep = random_valid_rep(rng, alg);
        ADAlgebra E = semidirect_product(rep);
        const std::size_t n = alg.dim(), m = rep.mod_dim();
        CHECK(E.succ == raw_semidirect(rep).succ);
        CHECK(E.prec == raw_semidirect(rep).prec);
        std::vector<std::size_t> a_idx, v_idx;
        for (std::size_t i = 0; i < n; ++i) a_idx.push_back(i);
        for (std::size_t i = 0; i < m; ++i) v_idx.push_back(n + i);
        auto a_sub = restrict_to(E, a_idx);
        REQUIRE(a_sub);
        CHECK(a_sub->succ == alg.succ);
        CHECK(a_sub->prec == alg.prec);
        auto v_sub = restrict_to(E, v_idx);
        REQUIRE(v_sub);
        CHECK(v_sub->succ.is_zero());
        CHECK(v_sub->prec.is_zero());
        Matrix proj(n, n + m);
        for (std::size_t i = 0; i < n; ++i) proj(i, i) = 1;
        CHECK(is_homomorphism(proj, E, alg));
    }
}

TEST_CASE("documented representation examples") {
    ADAlgebra a = nilp2();
    CHECK(check_representation(ADRep::zero(a, 3)).ok());
    CHECK(check_representation(regular_representation(a)).ok());

    ADRep bad = ADRep::zero(a, 2);
    bad.lsucc.at(0) = Matrix::identity(2);
    Report r = check_representation(bad);
    CHECK(r.count("R1") > 0);

    CHECK(dual_representation(ADRep::zero(a, 2)) == ADRep::zero(a, 2));
    ADAlgebra z(2);
    ADRep zz = dual_representation(dual_representation(regular_representation(z)));
    CHECK(zz == ADRep::zero(z, 2));

    // Dual of the regular representation by direct transposition.
    MulOperators ops = multiplication_operators(a);
    ADRep d = dual_representation(regular_representation(a));
    for (std::size_t x = 0; x < 2; ++x) {
        CHECK(d.lsucc.at(x) == -(ops.Rprec.at(x) + ops.Rsucc.at(x)).transpose());
        CHECK(d.rsucc.at(x) == ops.Lprec.at(x).transpose());
        CHECK(d.lprec.at(x) == ops.Rsucc.at(x).transpose());
        CHECK(d.rprec.at(x) == -(ops.Lprec.at(x) + ops.Lsucc.at(x)).transpose());
    }
    CHECK(check_representation(d).ok());
    CHECK(check_anti_dendriform(semidirect_product(d)).ok());
    CHECK(check_anti_dendriform(semidirect_product(regular_representation(a))).ok());
    CHECK(semidirect_product(regular_representation(a)).dim() == 4);

    auto induced = induced_associative_reps(regular_representation(a));
    REQUIRE(induced.size() == 4);
    CHECK(induced[0].bimodule.l == -ops.Lsucc);
    CHECK(induced[0].bimodule.r == -ops.Rprec);
    for (const auto& b : induced) CHECK(b.report.ok());
    const Bilinear dot = associated_associative(a);
    CHECK(induced[1].bimodule.l == left_operators(dot));
    CHECK(induced[1].bimodule.r == right_operators(dot));

    for (const auto& b : induced_associative_reps(ADRep::zero(a, 2))) {
        CHECK(b.report.ok());
        CHECK(b.bimodule.l.is_zero());
    }
}

TEST_CASE("shape mismatches are input errors") {
    ADRep rep = ADRep::zero(nilp2(), 2);
    rep.rprec = ActionFamily(2, 3);
    CHECK_THROWS_AS(check_representation(rep), InputError);
}
