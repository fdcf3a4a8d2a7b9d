// Acceptance gate: every criterion pinned to its stated tolerance,
// one printed pass/fail line each.
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "identity_props.hpp"
#include "ortho_helpers.hpp"
#include "qkernel/identities/gmt.hpp"
#include "qkernel/identities/registry.hpp"
#include "qkernel/qpoch.hpp"

using namespace qk;

namespace {

struct Criterion {
    const char* label;
    bool ok = true;
    double worst = 0.0;

    void note(double rel, double tol) {
        worst = std::max(worst, rel);
        if (!(rel <= tol)) ok = false;
    }
    ~Criterion() {
        std::printf("[acceptance] %s: %s (worst residual %.3e)\n", label, ok ? "PASS" : "FAIL",
                    worst);
        std::fflush(stdout);
    }
};

double run_suite(Criterion& cr, const char* case_id, std::uint64_t seed, int samples, double tol) {
    const IdentityCase* c = find_case(case_id);
    REQUIRE(c);
    RunPolicies pol;
    pol.tol_override = tol;
    double worst = 0.0;
    auto recs = run_case(*c, seed, samples, pol);
    for (const auto& r : recs) {
        CAPTURE(case_id);
        CAPTURE(r.sample_index);
        CAPTURE(r.error);
        CHECK(r.pass);
        worst = std::max({worst, r.rel_res, r.extra_worst});
        cr.note(std::max(r.rel_res, r.extra_worst), tol);
        if (!r.pass) cr.ok = false;
    }
    return worst;
}

}  // namespace

TEST_CASE("criterion 1: q-shifted factorial identity suite") {
    Criterion cr{"criterion 1 (Pochhammer identities, 100 samples x 4 nomes, 1e-11)"};
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    for (CScalar qv : {CScalar(0.3), CScalar(0.5), CScalar(0.7),
                       0.5 * std::polar(1.0, kPi / 7)}) {
        double worst = props::poch_identity_suite(qv, 100, rng);
        cr.note(worst, 1e-11);
        CHECK(worst < 1e-11);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 5.0);
    if (secs >= 5.0) cr.ok = false;
}

TEST_CASE("criterion 2: Askey-Wilson integral") {
    Criterion cr{"criterion 2 (AWint, 20 samples, 1e-8)"};
    auto t0 = std::chrono::steady_clock::now();
    run_suite(cr, "AWint", 42, 20, 1e-8);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 30.0);
    if (secs >= 30.0) cr.ok = false;
}

TEST_CASE("criterion 3: Nassrallah-Rahman and Rahman integrals with reduction chain") {
    Criterion cr{"criterion 3 (NRint/Rint 10 samples 1e-7; Rint->NRint->AWint chain, 5 samples)"};
    run_suite(cr, "NRint", 3, 10, 1e-7);
    run_suite(cr, "Rint", 3, 10, 1e-7);
    run_suite(cr, "Rint-to-NR", 3, 5, 1e-7);
    run_suite(cr, "NR-to-AW", 3, 5, 1e-7);
}

TEST_CASE("criterion 4: Askey-Roy, Gasper and the 8W7-weighted integral") {
    Criterion cr{"criterion 4 (ARint/Gint/fourfour, 10 samples each, 1e-7, second f per sample)"};
    run_suite(cr, "ARint", 4, 10, 1e-7);
    run_suite(cr, "Gint", 4, 10, 1e-7);
    run_suite(cr, "fourfour", 4, 10, 1e-7);
}

TEST_CASE("criterion 5: G triangle with sigma independence") {
    Criterion cr{"criterion 5 (integral = d-series = c-series, m in {-2..2}, 1e-8)"};
    const IdentityCase* c = find_case("G-d-vs-c");
    REQUIRE(c);
    RunPolicies pol;
    int with_m[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 10; ++i) {
        Sample s = draw_admissible(*c, 5, i, pol);
        int m = s.geti("m");
        with_m[m + 2]++;
        GmtArgs g{ParamSet({s.get("a1"), s.get("a2")}), ParamSet({s.get("b1"), s.get("b2")}),
                  ParamSet({s.get("c1"), s.get("c2")}), ParamSet({s.get("d1"), s.get("d2")})};
        Nome q(s.q);
        CScalar t = s.get("t");
        CScalar gd = eval_G_series_d(m, t, g, q, pol.trunc, pol.guard);
        CScalar gc = eval_G_series_c(m, t, g, q, pol.trunc, pol.guard);
        CScalar gi1 = eval_G_integral(m, t, g, 1.0, q, pol.quad, pol.trunc);
        CScalar gi2 = eval_G_integral(m, t, g, 0.9, q, pol.quad, pol.trunc);
        cr.note(rel_diff(gd, gc), 1e-8);
        cr.note(rel_diff(gi1, gd), 1e-8);
        cr.note(rel_diff(gi1, gc), 1e-8);
        cr.note(rel_diff(gi1, gi2), 1e-8);  // sigma independence
        CHECK(rel_diff(gd, gc) <= 1e-8);
        CHECK(rel_diff(gi1, gd) <= 1e-8);
        CHECK(rel_diff(gi1, gi2) <= 1e-8);
    }
    // the offset sweep must actually exercise the range
    int distinct = 0;
    for (int k = 0; k < 5; ++k) distinct += with_m[k] > 0 ? 1 : 0;
    CHECK(distinct >= 3);
}

TEST_CASE("criterion 6: argument-q theorem suite") {
    Criterion cr{"criterion 6 (qqform = jjform = qintH, 10 samples, 1e-8, swap/f/s checks)"};
    run_suite(cr, "H-int", 6, 10, 1e-8);
    run_suite(cr, "J-int", 6, 10, 1e-8);
    run_suite(cr, "H-qint", 6, 10, 1e-8);
    run_suite(cr, "Int-vs-qint", 6, 10, 1e-8);
}

TEST_CASE("criterion 7: 2phi1 and well-poised 3phi2 integral representations") {
    Criterion cr{"criterion 7 (2phi1-intA/B, 3phi2-int, 10 samples, 1e-7)"};
    run_suite(cr, "2phi1-intA", 7, 10, 1e-7);
    run_suite(cr, "2phi1-intB", 7, 10, 1e-7);
    run_suite(cr, "3phi2-int", 7, 10, 1e-7);
}

TEST_CASE("criterion 8: symmetrization transformations") {
    Criterion cr{"criterion 8 (corsumDC/abcd2/symcor and the W-sum corollaries, 1e-6)"};
    run_suite(cr, "G-d-vs-c", 8, 10, 1e-6);
    run_suite(cr, "abcd2", 8, 10, 1e-6);
    run_suite(cr, "symcor", 8, 10, 1e-6);
    run_suite(cr, "sym-10W9", 8, 10, 1e-6);
    run_suite(cr, "altNR", 8, 10, 1e-6);
    run_suite(cr, "compNR", 8, 10, 1e-6);
    run_suite(cr, "sum-6W5", 8, 10, 1e-6);
}

TEST_CASE("criterion 9: orthogonality") {
    Criterion cr{"criterion 9 (Gram matrix n <= 5 at (0.3,0.4,-0.2,0.1), q = 0.5, 1e-8)"};
    AWParams p{CScalar(0.3), CScalar(0.4), CScalar(-0.2), CScalar(0.1), Nome(0.5)};
    auto r = ortho::gram_check(p, 5);
    cr.note(r.worst_offdiag, 1e-8);
    cr.note(r.worst_diag, 1e-8);
    CHECK(r.worst_offdiag <= 1e-8);
    CHECK(r.worst_diag <= 1e-8);
}

TEST_CASE("criterion 10: generating functions") {
    Criterion cr{"criterion 10 (generating functions, 10 samples, 1e-8; gamma->0 reduction)"};
    run_suite(cr, "genfun2ask", 10, 10, 1e-8);
    run_suite(cr, "AWgf2", 10, 10, 1e-8);
    run_suite(cr, "genfun2cdH", 10, 10, 1e-8);
    run_suite(cr, "nonstan", 10, 10, 1e-8);
    // the gamma -> 0 reduction runs as a per-sample extra of `missing`
    run_suite(cr, "missing", 10, 10, 1e-8);
    run_suite(cr, "ASC-gf", 10, 10, 1e-8);
}

TEST_CASE("criterion 11: end-to-end determinism") {
    Criterion cr{"criterion 11 (verify --all --seed 1 --samples 20: exit 0, < 10 min, byte-identical)"};
    const char* cli = std::getenv("QKERNEL_CLI");
    REQUIRE(cli != nullptr);
    auto slurp = [](const char* p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    auto t0 = std::chrono::steady_clock::now();
    std::string base = std::string(cli) + " verify --all --seed 1 --samples 20 --out ";
    int rc1 = std::system((base + "acc_e2e_1.json > acc_e2e_1.log 2>&1").c_str());
    int rc2 = std::system((base + "acc_e2e_2.json > acc_e2e_2.log 2>&1").c_str());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0 && secs < 600.0;
    std::string r1 = slurp("acc_e2e_1.json"), r2 = slurp("acc_e2e_2.json");
    ok = ok && !r1.empty() && r1 == r2;
    CHECK(WEXITSTATUS(rc1) == 0);
    CHECK(WEXITSTATUS(rc2) == 0);
    CHECK(secs < 600.0);
    CHECK(r1 == r2);
    CHECK(!r1.empty());
    if (!ok) cr.ok = false;
    std::remove("acc_e2e_1.json");
    std::remove("acc_e2e_2.json");
    std::remove("acc_e2e_1.log");
    std::remove("acc_e2e_2.log");
}
