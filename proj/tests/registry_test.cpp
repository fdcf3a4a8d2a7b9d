#include <doctest.h>

#include <set>

#include "qkernel/identities/registry.hpp"
#include "qkernel/report.hpp"

using namespace qk;

TEST_CASE("registry shape") {
    const auto& cases = register_all();
    CHECK(cases.size() == 42);
    std::set<std::string> ids;
    for (const auto& c : cases) {
        CHECK(ids.insert(c.id).second);
        CHECK(c.tol > 0);
        CHECK(bool(c.lhs));
        CHECK(bool(c.rhs));
        CHECK(bool(c.raw_draw));
        CHECK(bool(c.admissible));
    }
    for (const char* id :
         {"G-sym", "G-d-vs-c", "H-int", "J-int", "H-qint", "Int-vs-qint", "mirror-corollary",
          "AWint", "NRint", "NR-to-AW", "Rint", "Rint-to-NR", "ARint", "Gint", "Gint-to-AR",
          "fourfour", "fourfour-to-Gint", "genRah", "sym-10W9", "altNR", "compNR", "sum-6W5",
          "2phi1-intA", "2phi1-intB", "3phi2-int", "intlem", "intlem2", "abcd2", "symcor",
          "qGauss-reduction", "IRAW", "IRAW2", "genfun2ask", "AWgf2", "AWgf2-int", "IRcdqE",
          "IRcdqF", "IRcdqH2", "genfun2cdH", "nonstan", "missing", "ASC-gf"})
        CHECK(find_case(id) != nullptr);
    CHECK(find_case("nosuchcase") == nullptr);
}

TEST_CASE("samplers emit mostly admissible raw draws") {
    RunPolicies pol;
    for (const auto& c : register_all()) {
        std::mt19937_64 rng(1234);
        int ok = 0;
        const int draws = 200;
        for (int i = 0; i < draws; ++i) {
            Sample s = c.raw_draw(rng, pol);
            bool adm = false;
            try {
                adm = c.admissible(s, pol);
            } catch (const Error&) {
                adm = false;
            }
            ok += adm ? 1 : 0;
        }
        CAPTURE(c.id);
        CHECK(ok >= draws * 95 / 100);
    }
}

TEST_CASE("run_case is deterministic") {
    const IdentityCase* c = find_case("AWgf2");
    REQUIRE(c);
    auto r1 = run_case(*c, 5, 4);
    auto r2 = run_case(*c, 5, 4);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].lhs == r2[i].lhs);
        CHECK(r1[i].rhs == r2[i].rhs);
        CHECK(r1[i].rel_res == r2[i].rel_res);
    }
    ReportMeta meta{5, 4, "test", RunPolicies{}};
    CHECK(report_to_json(meta, r1) == report_to_json(meta, r2));
}

TEST_CASE("acceptance-style AWint run") {
    const IdentityCase* c = find_case("AWint");
    REQUIRE(c);
    auto recs = run_case(*c, 42, 10);
    for (const auto& r : recs) {
        CHECK(r.pass);
        CHECK(r.rel_res <= 1e-8);
        for (const auto& [k, v] : r.sample.params) CHECK(std::abs(v) <= 0.5 + 1e-12);
    }
}

TEST_CASE("nonstan at pinned parameters") {
    const IdentityCase* c = find_case("nonstan");
    REQUIRE(c);
    Sample s;
    s.q = CScalar(0.5);
    s.set("a", CScalar(0.3));
    s.set("b", CScalar(0.2));
    s.set("c", CScalar(0.1));
    s.set("t", CScalar(0.4));
    s.set("theta", CScalar(1.0));
    RunPolicies pol;
    CScalar lhs = c->lhs(s, pol);
    CScalar rhs = c->rhs(s, pol);
    CHECK(rel_diff(lhs, rhs) < 1e-9);
}

TEST_CASE("constrained sampler solves for the dependent parameter") {
    const IdentityCase* c = find_case("sym-10W9");
    REQUIRE(c);
    RunPolicies pol;
    for (int i = 0; i < 5; ++i) {
        Sample s = draw_admissible(*c, 9, i, pol);
        CScalar prod = 1.0;
        for (int j = 1; j <= 6; ++j) prod *= s.get("a" + std::to_string(j));
        CHECK(rel_diff(s.get("lambda") * s.get("mu"), prod) < 1e-12);
        ResidualRecord r = run_one(*c, 9, i, pol);
        CHECK(r.pass);
    }
}

TEST_CASE("evaluator failures become records, not exceptions") {
    const IdentityCase* c = find_case("AWgf2");
    REQUIRE(c);
    RunPolicies pol;
    pol.tol_override = 1e-300;  // unattainable: every record fails but returns
    auto recs = run_case(*c, 3, 3, pol);
    CHECK(recs.size() == 3);
    for (const auto& r : recs) CHECK(!r.pass);
}

TEST_CASE("q override is honored") {
    const IdentityCase* c = find_case("AWint");
    REQUIRE(c);
    RunPolicies pol;
    pol.q_override = CScalar(0.42);
    auto recs = run_case(*c, 11, 3, pol);
    for (const auto& r : recs) {
        CHECK(r.sample.q == CScalar(0.42));
        CHECK(r.pass);
    }
}
