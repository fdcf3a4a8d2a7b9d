#include <doctest.h>

#include <random>

#include "identity_props.hpp"
#include "oracles.hpp"
#include "qkernel/qpoch.hpp"

using namespace qk;

TEST_CASE("nome construction guards") {
    CHECK_NOTHROW(Nome(0.5));
    CHECK_NOTHROW(Nome(CScalar(0.3, 0.4)));
    CHECK_THROWS_AS(Nome(0.0), DomainError);
    CHECK_THROWS_AS(Nome(0.9995), DomainError);
    CHECK_THROWS_AS(Nome(1.2), DomainError);
}

TEST_CASE("finite q-shifted factorial") {
    Nome q(0.5);
    CHECK(qpoch_finite(CScalar(0.77, -0.2), q, 0) == CScalar(1.0));
    CHECK(qpoch_finite(CScalar(0.0), q, 7) == CScalar(1.0));
    // frozen from the extended-precision product oracle
    CScalar v = qpoch_finite(CScalar(0.3, 0.1), q, 4);
    CHECK(rel_diff(v, CScalar(0.520825, -0.12781875)) < 1e-15);

    // random spot checks against the oracle
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        CScalar a = props::rand_annulus(rng, 0.05, 2.0);
        int n = static_cast<int>(rng() % 12);
        oracle::LD ref = oracle::qpoch_finite(oracle::to_ld(a), oracle::LD(0.5L), n);
        CHECK(rel_diff(qpoch_finite(a, q, n), oracle::to_d(ref)) < 1e-14);
    }
}

TEST_CASE("infinite q-shifted factorial") {
    Nome q(0.5);
    CHECK(qpoch_infinite(CScalar(0.0), q) == CScalar(1.0));
    CHECK(std::abs(qpoch_infinite(CScalar(1.0), q)) == 0.0);
    CHECK(rel_diff(qpoch_infinite(CScalar(0.5), q), CScalar(0.2887880950866024)) < 1e-13);
    // truncated product against the 400-term oracle (a = q case of the spec)
    CHECK(rel_diff(qpoch_infinite(q.value(), q),
                   oracle::to_d(oracle::qpoch_inf(oracle::LD(0.5L), oracle::LD(0.5L)))) < 1e-13);

    TruncationPolicy tiny;
    tiny.n_max = 4;
    CHECK_THROWS_AS(qpoch_infinite(CScalar(0.9), Nome(0.9), tiny), TruncationExceeded);

    SUBCASE("fixed-epsilon tail mode agrees") {
        TruncationPolicy fe;
        fe.tail_mode = TruncationPolicy::TailMode::fixed_epsilon;
        CHECK(rel_diff(qpoch_infinite(CScalar(0.3, 0.2), q, fe),
                       qpoch_infinite(CScalar(0.3, 0.2), q)) < 1e-12);
    }
}

TEST_CASE("general exponent") {
    Nome q(0.5);
    TruncationPolicy pol;
    CHECK(qpoch_general(CScalar(0.37, 0.1), q, CScalar(0.0)) == CScalar(1.0));
    CHECK(rel_diff(qpoch_general(CScalar(0.2), q, CScalar(3.0)),
                   qpoch_finite(CScalar(0.2), q, 3)) < 1e-14);
    // frozen oracle value for a complex exponent
    CHECK(rel_diff(qpoch_general(CScalar(0.2), q, CScalar(0.5, 0.5)),
                   CScalar(0.8530253906280146, -0.0904515704302621)) < 1e-12);
    // negative integer exponent collapses to the reciprocal finite product
    CHECK(rel_diff(qpoch_general(CScalar(0.1), q, CScalar(-2.0)),
                   CScalar(1.0) / qpoch_finite(CScalar(0.1) * powi(CScalar(2.0), 2), q, 2)) <
          1e-13);
    // a q^b landing on Omega_q
    CHECK_THROWS_AS(qpoch_general(CScalar(2.0), q, CScalar(1.0, 1e-9)), PoleAtOmega);
}

TEST_CASE("modified theta function") {
    Nome q(0.5);
    CHECK(std::abs(theta(powi(q.value(), 3), q)) < 1e-12);
    CHECK(std::abs(theta(CScalar(1.0), q)) == 0.0);
    CHECK_THROWS_AS(theta(CScalar(0.0), q), DomainError);
    CHECK(rel_diff(theta(CScalar(0.3), q), CScalar(-0.02108947126157381)) < 1e-12);
    // vanishes at negative powers of q as well
    CHECK(std::abs(theta(powi(CScalar(1.0) / q.value(), 2), q)) < 1e-9);
}

TEST_CASE("parameter shorthand expansion") {
    auto pm = expand_shorthand(Shorthand::pm(CScalar(0.0, 2.0)));
    CHECK(pm[0] == CScalar(0.0, 2.0));
    CHECK(pm[1] == CScalar(0.0, -2.0));

    auto ei = expand_shorthand(Shorthand::eipm(0.0));
    CHECK(rel_diff(ei[0], CScalar(1.0)) < 1e-15);
    CHECK(rel_diff(ei[1], CScalar(1.0)) < 1e-15);

    auto aei = expand_shorthand(Shorthand::aeipm(CScalar(0.5), kPi / 2));
    CHECK(rel_diff(aei[0], CScalar(0.0, 0.5)) < 1e-15);
    CHECK(rel_diff(aei[1], CScalar(0.0, -0.5)) < 1e-15);

    auto lit = expand_shorthand(Shorthand::list({CScalar(1.0), CScalar(2.0)}));
    CHECK(lit.size() == 2);
}

TEST_CASE("q-shifted factorial identity suite (property)") {
    std::mt19937_64 rng(2024);
    for (CScalar qv : {CScalar(0.3), CScalar(0.5), CScalar(0.7),
                       0.5 * std::polar(1.0, kPi / 7)}) {
        double worst = props::poch_identity_suite(qv, 25, rng);
        CAPTURE(qv.real());
        CHECK(worst < 1e-11);
    }
}

TEST_CASE("qpoch_infinite is continuous on fine grids") {
    Nome q(0.5);
    // second differences on a 1e-6-spaced grid expose truncation jumps
    double h = 1e-6;
    for (double base : {0.2, 0.55, 0.9}) {
        for (int i = 1; i < 99; ++i) {
            CScalar a(base + i * h, 0.1);
            CScalar d2 = qpoch_infinite(CScalar(a.real() + h, 0.1), q) - 2.0 * qpoch_infinite(a, q) +
                         qpoch_infinite(CScalar(a.real() - h, 0.1), q);
            REQUIRE(std::abs(d2) < 1e-10);
        }
    }
}

TEST_CASE("omega and theta-zero guards") {
    Nome q(0.5);
    OmegaGuard g;
    CHECK(g.near_omega(CScalar(1.0), q));
    CHECK(g.near_omega(CScalar(4.0) + CScalar(1e-8), q));
    CHECK(!g.near_omega(CScalar(3.7), q));
    CHECK(!g.near_omega(CScalar(0.5), q));  // positive powers are not poles
    CHECK(g.near_theta_zero(CScalar(0.25), q));
    CHECK(g.near_theta_zero(CScalar(2.0), q));
    CHECK(g.near_theta_zero(CScalar(1e-9), q));
    CHECK(!g.near_theta_zero(CScalar(0.3), q));
    // Omega_q^n variant stops scanning at n
    CHECK(!g.near_omega(CScalar(4.0), q, 2));
    CHECK(g.near_omega(CScalar(2.0), q, 2));
}

TEST_CASE("scaled complex arithmetic") {
    ScaledComplex p = ScaledComplex::one();
    for (int i = 0; i < 500; ++i) p *= CScalar(1e3, 2e2);  // far beyond double range
    ScaledComplex r = p;
    for (int i = 0; i < 500; ++i) r /= CScalar(1e3, 2e2);
    CHECK(rel_diff(r.value(), CScalar(1.0)) < 1e-12);
    CHECK(p.log2_abs() > 5000.0);
    ScaledComplex sum = p;
    sum += ScaledComplex(CScalar(1.0));  // negligible against 2^5000
    CHECK(rel_diff(sum.value() == CScalar(0.0) ? CScalar(0.0) : CScalar(1.0), CScalar(1.0)) <
          1e-15);
}
