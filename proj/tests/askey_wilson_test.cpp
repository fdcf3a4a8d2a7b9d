#include <doctest.h>

#include <random>

#include "identity_props.hpp"
#include "oracles.hpp"
#include "ortho_helpers.hpp"
#include "qkernel/askey_wilson.hpp"
#include "qkernel/qpoch.hpp"
#include "qkernel/quadrature.hpp"

using namespace qk;

namespace {
const AWParams kP{CScalar(0.3), CScalar(0.4), CScalar(-0.2), CScalar(0.1), Nome(0.5)};
}

TEST_CASE("degree zero is unity") {
    CHECK(askey_wilson(0, 0.3, kP) == CScalar(1.0));
    CHECK(cdqhahn(0, 0.3, {CScalar(0.3), CScalar(0.4), CScalar(-0.2), Nome(0.5)}) ==
          CScalar(1.0));
    CHECK(alsalam_chihara(0, 0.3, CScalar(0.3), CScalar(0.4), Nome(0.5)) == CScalar(1.0));
}

TEST_CASE("degree one matches the two-term expansion") {
    double x = 0.42;
    double th = std::acos(x);
    using oracle::LD;
    LD q(0.5L), a(0.3L), b(0.4L), c(-0.2L), d(0.1L);
    LD abcd = a * b * c * d;
    LD eip = std::polar(1.0L, (long double)th);
    // two-term 4phi3 with k = 0, 1
    LD t1 = (LD(1) - LD(1) / q) * (LD(1) - abcd) * (LD(1) - a * eip) *
            (LD(1) - a / eip) * q /
            ((LD(1) - q) * (LD(1) - a * b) * (LD(1) - a * c) * (LD(1) - a * d));
    LD series = LD(1) + t1;
    LD pref = (LD(1) - a * b) * (LD(1) - a * c) * (LD(1) - a * d) / a;
    CHECK(rel_diff(askey_wilson(1, x, kP), oracle::to_d(pref * series)) < 1e-14);
}

TEST_CASE("parameter symmetry of degree three") {
    double x = std::cos(1.1);
    AWParams perm{kP.d, kP.b, kP.a, kP.c, kP.q};
    CHECK(rel_diff(askey_wilson(3, x, kP), askey_wilson(3, x, perm)) < 1e-12);
}

TEST_CASE("series and recurrence paths agree") {
    std::mt19937_64 rng(21);
    for (CScalar qv : {CScalar(0.5), CScalar(0.3), 0.5 * std::polar(1.0, kPi / 7)}) {
        Nome q(qv);
        for (int i = 0; i < 8; ++i) {
            AWParams p{props::rand_annulus(rng, 0.4, 0.7), props::rand_annulus(rng, 0.2, 0.6),
                       props::rand_annulus(rng, 0.2, 0.6), props::rand_annulus(rng, 0.2, 0.6),
                       q};
            double x = std::cos(props::rand_annulus(rng, 0.3, 0.3).real() + 1.0);
            auto seq = askey_wilson_sequence(4, x, p);
            for (int n = 1; n <= 4; ++n) {
                CScalar direct = askey_wilson(n, x, p);
                CHECK(rel_diff(direct, seq[static_cast<std::size_t>(n)]) < 1e-9);
            }
        }
    }
}

TEST_CASE("evaluation is real for conjugation-closed parameters") {
    for (int n : {2, 5, 9, 30}) {
        CScalar v = askey_wilson(n, 0.37, kP);
        CHECK(std::abs(v.imag()) < 1e-10 * std::max(1.0, std::abs(v)));
    }
    AWParams conj_pairs{CScalar(0.3, 0.2), CScalar(0.3, -0.2), CScalar(-0.1, 0.45),
                        CScalar(-0.1, -0.45), Nome(0.5)};
    CScalar v = askey_wilson(6, -0.2, conj_pairs);
    CHECK(std::abs(v.imag()) < 1e-10 * std::max(1.0, std::abs(v)));
}

TEST_CASE("weight function") {
    CHECK(std::abs(aw_weight(0.0, kP)) == 0.0);

    AWParams zero{CScalar(0.0), CScalar(0.0), CScalar(0.0), CScalar(0.0), Nome(0.5)};
    CHECK(rel_diff(aw_weight(kPi / 2, zero), CScalar(22.73823039918397)) < 1e-12);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        double th = 0.2 + 2.7 * (i / 10.0);
        auto forms = aw_weight_forms(th, kP);
        CHECK(rel_diff(forms[0], forms[1]) < 1e-9);
    }
}

TEST_CASE("closed-form norm") {
    // n = 0 equals the Askey-Wilson integral evaluation
    CScalar h0 = aw_norm(0, kP);
    auto a = kP.list();
    CScalar prod = a[0] * a[1] * a[2] * a[3];
    ScaledComplex rhs = qpoch_infinite_scaled(prod, kP.q);
    rhs /= qpoch_infinite_scaled(kP.q.value(), kP.q);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) rhs /= qpoch_infinite_scaled(a[i] * a[j], kP.q);
    CHECK(rel_diff(h0, 2.0 * kPi * rhs.value()) < 1e-12);

    AWParams zero{CScalar(0.0), CScalar(0.0), CScalar(0.0), CScalar(0.0), Nome(0.5)};
    CHECK(rel_diff(aw_norm(0, zero), CScalar(21.75707868184584)) < 1e-12);

    // n = 2 against direct quadrature of p_2^2 w
    auto integrand = [&](double th) {
        double x = std::cos(th);
        CScalar p2 = askey_wilson(2, x, kP);
        return p2 * p2 * aw_weight(th, kP);
    };
    CScalar quad = 0.5 * integrate_periodic(integrand);
    CHECK(rel_diff(aw_norm(2, kP), quad) < 1e-8);
}

TEST_CASE("orthogonality gram matrix") {
    auto r = ortho::gram_check(kP, 5);
    CHECK(r.worst_offdiag < 1e-8);
    CHECK(r.worst_diag < 1e-8);
}

TEST_CASE("polynomial degree via divided differences") {
    for (int n = 1; n <= 6; ++n) {
        int pts = n + 2;
        std::vector<double> xs(static_cast<std::size_t>(pts));
        std::vector<CScalar> fs(static_cast<std::size_t>(pts));
        double scale = 0.0;
        for (int j = 0; j < pts; ++j) {
            xs[static_cast<std::size_t>(j)] = std::cos(kPi * (j + 0.5) / pts);
            fs[static_cast<std::size_t>(j)] =
                askey_wilson(n, xs[static_cast<std::size_t>(j)], kP);
            scale = std::max(scale, std::abs(fs[static_cast<std::size_t>(j)]));
        }
        // order-(n+1) divided difference of a degree-n polynomial vanishes
        for (int level = 1; level < pts; ++level)
            for (int j = 0; j + level < pts; ++j)
                fs[static_cast<std::size_t>(j)] =
                    (fs[static_cast<std::size_t>(j + 1)] - fs[static_cast<std::size_t>(j)]) /
                    (xs[static_cast<std::size_t>(j + level)] - xs[static_cast<std::size_t>(j)]);
        CHECK(std::abs(fs[0]) < 1e-9 * std::max(1.0, scale));
    }
}

TEST_CASE("specialization chain") {
    CDQHParams cp{CScalar(0.3), CScalar(0.4), CScalar(-0.2), Nome(0.5)};
    for (int n = 1; n <= 4; ++n) {
        AWParams tiny_d{cp.a, cp.b, cp.c, CScalar(1e-12), cp.q};
        CHECK(rel_diff(cdqhahn(n, 0.44, cp), askey_wilson(n, 0.44, tiny_d)) < 1e-8);
        CHECK(rel_diff(alsalam_chihara(n, 0.44, cp.a, cp.b, cp.q),
                       cdqhahn(n, 0.44, {cp.a, cp.b, CScalar(1e-12), cp.q})) < 1e-8);
    }
    // cdqh symmetric in (a, b, c)
    CDQHParams rot{cp.c, cp.a, cp.b, cp.q};
    CHECK(rel_diff(cdqhahn(3, 0.1, cp), cdqhahn(3, 0.1, rot)) < 1e-11);
    // Al-Salam-Chihara a <-> b symmetry
    CHECK(rel_diff(alsalam_chihara(3, 0.1, cp.a, cp.b, cp.q),
                   alsalam_chihara(3, 0.1, cp.b, cp.a, cp.q)) < 1e-11);
}

TEST_CASE("domain and pole errors") {
    CHECK_THROWS_AS(askey_wilson(2, 1.5, kP), DomainError);
    AWParams pole{CScalar(2.0), CScalar(1.0), CScalar(0.2), CScalar(0.1), Nome(0.5)};
    // ab = 2 = q^{-1} sits in Omega_q^n for n >= 2
    CHECK_THROWS_AS(askey_wilson(3, 0.3, pole), PoleInDenominator);
}
