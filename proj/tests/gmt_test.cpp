#include <doctest.h>

#include <random>

#include "identity_props.hpp"
#include "qkernel/identities/gmt.hpp"
#include "qkernel/qpoch.hpp"

using namespace qk;

TEST_CASE("G integral hypotheses and smoke cases") {
    Nome q(0.5);
    GmtArgs empty{ParamSet(), ParamSet(), ParamSet(), ParamSet()};
    CHECK_THROWS_AS(eval_G_integral(0, CScalar(1.0), empty, 1.0, q), HypothesisViolated);

    GmtArgs bad{ParamSet(), ParamSet(), ParamSet({CScalar(2.0)}), ParamSet()};
    CHECK_THROWS_AS(eval_G_integral(0, CScalar(1.0), bad, 1.0, q), HypothesisViolated);

    // b = d makes the integrand collapse to e^{i m psi}
    CScalar beta(0.4, 0.2);
    GmtArgs cancel{ParamSet(), ParamSet({beta}), ParamSet(), ParamSet({beta})};
    CScalar g0 = eval_G_integral(0, CScalar(1.0), cancel, 1.0, q);
    CHECK(rel_diff(g0, qpoch_infinite(q.value(), q)) < 1e-12);
    CScalar g2 = eval_G_integral(2, CScalar(1.0), cancel, 1.0, q);
    CHECK(std::abs(g2) < 1e-12);
}

TEST_CASE("G at m=0, t=1 reproduces the Askey-Wilson integral") {
    Nome q(0.5);
    CScalar sq = std::sqrt(q.value());
    std::vector<CScalar> pm = {CScalar(1.0), CScalar(-1.0), sq, -sq};
    std::vector<CScalar> as = {CScalar(0.35), CScalar(0.2, 0.3), CScalar(-0.4, 0.1),
                               CScalar(0.15, -0.25)};
    GmtArgs g{ParamSet(pm), ParamSet(pm), ParamSet(as), ParamSet(as)};
    CScalar got = eval_G_integral(0, CScalar(1.0), g, 1.0, q);

    CScalar prod = 1.0;
    for (const auto& a : as) prod *= a;
    ScaledComplex rhs = qpoch_infinite_scaled(prod, q);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) rhs /= qpoch_infinite_scaled(as[i] * as[j], q);
    CHECK(rel_diff(got, 2.0 * rhs.value()) < 1e-9);
}

TEST_CASE("sigma independence of the G integral") {
    Nome q(0.3);
    GmtArgs g{ParamSet({CScalar(0.3, 0.1)}), ParamSet({CScalar(0.2, -0.4)}),
              ParamSet({CScalar(0.5, 0.2)}), ParamSet({CScalar(-0.45, 0.2)})};
    CScalar t(0.7, 0.2);
    CScalar v1 = eval_G_integral(1, t, g, 0.95, q);
    CScalar v2 = eval_G_integral(1, t, g, 1.08, q);
    CHECK(rel_diff(v1, v2) < 1e-8);
}

TEST_CASE("series expansions match the integral") {
    Nome q(0.5);
    GmtArgs g{ParamSet({CScalar(0.08, 0.05)}), ParamSet({CScalar(0.1, -0.08)}),
              ParamSet({CScalar(0.55, 0.2)}), ParamSet({CScalar(-0.5, 0.25)})};
    CScalar t(0.8, 0.1);
    for (int m : {-2, -1, 0, 1, 2}) {
        CScalar gi = eval_G_integral(m, t, g, 1.0, q);
        CScalar gd = eval_G_series_d(m, t, g, q);
        CScalar gc = eval_G_series_c(m, t, g, q);
        CAPTURE(m);
        CHECK(rel_diff(gi, gd) < 1e-9);
        CHECK(rel_diff(gi, gc) < 1e-9);
    }
    // single-element d-set: one term, still equal to the integral
    GmtArgs g1{ParamSet({CScalar(0.08, 0.05)}), ParamSet(), ParamSet({CScalar(0.55, 0.2)}),
               ParamSet({CScalar(-0.5, 0.25)})};
    CHECK(rel_diff(eval_G_integral(0, t, g1, 1.0, q), eval_G_series_d(0, t, g1, q)) < 1e-9);
    CHECK_THROWS_AS(
        eval_G_series_d(0, t, GmtArgs{g1.a, ParamSet(), g1.c, ParamSet()}, q),
        HypothesisViolated);
}

TEST_CASE("H is symmetric in the d-pair") {
    Nome q(0.5);
    ParamSet a({CScalar(0.05, 0.02)});
    ParamSet c({CScalar(0.6, 0.2), CScalar(-0.55, 0.3), CScalar(0.3, -0.6)});
    std::array<CScalar, 2> d = {CScalar(0.5, -0.3), CScalar(-0.45, 0.35)};
    CScalar h1 = eval_H(a, c, d, q);
    CScalar h2 = eval_H(a, c, {d[1], d[0]}, q);
    CHECK(rel_diff(h1, h2) < 1e-12);
}

TEST_CASE("J respects its convergence requirements") {
    Nome q(0.5);
    ParamSet a({CScalar(0.05, 0.02)});
    ParamSet c2({CScalar(0.6, 0.2), CScalar(-0.55, 0.3)});
    std::array<CScalar, 2> d = {CScalar(0.5, -0.3), CScalar(-0.45, 0.35)};
    CHECK_THROWS_AS(eval_J(a, c2, d, CScalar(0.9), q), Divergent);

    // C = A + 2 boundary with argument modulus ~0.5 converges cleanly
    ParamSet c3({CScalar(0.6, 0.2), CScalar(-0.55, 0.3), CScalar(0.3, -0.6)});
    effort::reset();
    CScalar j = eval_J(a, c3, d, CScalar(0.9), q);
    CHECK(is_finite(j));
    CHECK(effort::snapshot().max_series_terms < 200);

    // f enters only through the removable theta pair: J normalized by
    // theta(f, f d1/d2;q) is f-free
    CScalar f1(0.7), f2(0.0, 1.3);
    auto norm = [&](CScalar f) {
        ScaledComplex th = theta_scaled(f, q);
        th *= theta_scaled(f * d[0] / d[1], q);
        return eval_J(a, c3, d, f, q) / th.value();
    };
    CHECK(rel_diff(norm(f1), norm(f2)) < 1e-8);
}
