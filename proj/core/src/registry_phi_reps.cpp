// Integral representations of 2phi1 / well-poised 3phi2 and the
// unbalanced symmetrization transformations (the A=B=C=D=2 family and its
// q-Gauss-checkable specialization).

#include <cmath>

#include "registry_common.hpp"
#include "registry_detail.hpp"

namespace qk::detail {

namespace {

using sampling::annulus;
using sampling::omega_ok;
using sampling::poch_den_ok;
using sampling::theta_ok;

CScalar phi2a_lhs(const Sample& s, const RunPolicies& pol) {
    SeriesSpec spec{{s.get("a"), s.get("b")}, {s.get("c")}, nm(s), s.get("z"), 0, std::nullopt};
    return phi(spec, pol.trunc, pol.guard).value;
}

std::function<CScalar(double)> phi2a_integrand(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), z = s.get("z"), f = s.get("f");
    CScalar sb = std::sqrt(b), sc = std::sqrt(c0), sz = std::sqrt(z);
    CScalar r1 = sc / (sb * sz), r2 = sb * sz / sc, r3 = sb * sc * sz, r4 = sc * sz / sb;
    double lo = std::max(std::abs(a * r2), std::abs(r4));
    double hi = 1.0 / std::max(std::abs(r1), std::abs(r2));
    double tau = std::sqrt(lo * hi);
    return ratio_integrand({f * r1, q.value() / f * r2}, {f * r1, q.value() / f * r2, r3},
                           {r1, r2}, {a * r2, r4}, tau, q, pol.trunc);
}

ScaledComplex phi2a_pref(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), z = s.get("z"), f = s.get("f");
    ScaledComplex pref = scprod({q.value(), a, c0 / b, a * b * z / c0}, q, pol.trunc);
    pref /= theta_scaled(f, q, pol.trunc);
    pref /= theta_scaled(f * c0 / (b * z), q, pol.trunc);
    // the (c;q)inf belongs in the denominator exactly as in the second
    // representation; the argument-q expansion fixes the normalization
    pref /= qpoch_infinite_scaled(c0, q, pol.trunc);
    return pref;
}

IdentityCase make_2phi1_a() {
    IdentityCase c;
    c.id = "2phi1-intA";
    c.anchor = "first contour-integral representation of a nonterminating 2phi1";
    c.tol = 1e-7;
    c.branch_note = "principal per-parameter roots";
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        s.set("a", annulus(rng, 0.3, 0.6));
        s.set("b", annulus(rng, 0.6, 0.8));
        s.set("c", annulus(rng, 0.25, 0.45));
        s.set("z", annulus(rng, 0.2, 0.4));
        s.set("f", annulus(rng, 0.4, 1.8));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), z = s.get("z"), f = s.get("f");
        CScalar sb = std::sqrt(b), sc = std::sqrt(c0), sz = std::sqrt(z);
        CScalar r1 = sc / (sb * sz), r2 = sb * sz / sc, r4 = sc * sz / sb;
        double lo = std::max(std::abs(a * r2), std::abs(r4));
        double hi = 1.0 / std::max(std::abs(r1), std::abs(r2));
        if (!(hi / lo > 1.15)) return false;
        if (!theta_ok(f, q, pol.guard) || !theta_ok(f * c0 / (b * z), q, pol.guard)) return false;
        if (!poch_den_ok({c0}, q)) return false;
        CScalar expect = 2.0 * kPi * phi2a_lhs(s, pol) / phi2a_pref(s, pol).value();
        return is_finite(expect) &&
               std::abs(expect) * 3e6 > integrand_peak(phi2a_integrand(s, pol));
    };
    c.lhs = phi2a_lhs;
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        CScalar integral = integrate_periodic(phi2a_integrand(s, pol), pol.quad);
        return phi2a_pref(s, pol).value() * integral / (2.0 * kPi);
    };
    return c;
}

std::function<CScalar(double)> phi2b_integrand(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), z = s.get("z"), f = s.get("f");
    CScalar sa = std::sqrt(a), sb = std::sqrt(b), sc = std::sqrt(c0);
    CScalar u1 = sa * sb / sc, u2 = sc / (sa * sb), u3 = sa * sc / sb, u4 = sb * sc / sa;
    double lo = std::max({std::abs(u3), std::abs(u4), std::abs(u1 * z)});
    double hi = 1.0 / std::max(std::abs(u1), std::abs(u2));
    double tau = std::sqrt(lo * hi);
    return ratio_integrand({f * u1, q.value() / f * u2}, {f * u1, q.value() / f * u2}, {u1, u2},
                           {u3, u4, u1 * z}, tau, q, pol.trunc);
}

ScaledComplex phi2b_pref(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), z = s.get("z"), f = s.get("f");
    ScaledComplex pref = scprod({q.value(), a, b, c0 / a, c0 / b, a * b * z / c0}, q, pol.trunc);
    pref /= theta_scaled(f, q, pol.trunc);
    pref /= theta_scaled(f * a * b / c0, q, pol.trunc);
    pref /= qpoch_infinite_scaled(c0, q, pol.trunc);
    return pref;
}

IdentityCase make_2phi1_b() {
    IdentityCase c;
    c.id = "2phi1-intB";
    c.anchor = "second contour-integral representation of a nonterminating 2phi1";
    c.tol = 1e-7;
    c.branch_note = "principal per-parameter roots";
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        s.set("a", annulus(rng, 0.55, 0.8));
        s.set("b", annulus(rng, 0.55, 0.8));
        s.set("c", annulus(rng, 0.25, 0.4));
        s.set("z", annulus(rng, 0.1, 0.25));
        s.set("f", annulus(rng, 0.4, 1.8));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), z = s.get("z"), f = s.get("f");
        CScalar sa = std::sqrt(a), sb = std::sqrt(b), sc = std::sqrt(c0);
        CScalar u1 = sa * sb / sc, u2 = sc / (sa * sb), u3 = sa * sc / sb, u4 = sb * sc / sa;
        double lo = std::max({std::abs(u3), std::abs(u4), std::abs(u1 * z)});
        double hi = 1.0 / std::max(std::abs(u1), std::abs(u2));
        if (!(hi / lo > 1.15)) return false;
        if (!theta_ok(f, q, pol.guard) || !theta_ok(f * a * b / c0, q, pol.guard)) return false;
        if (!poch_den_ok({c0}, q)) return false;
        CScalar expect = 2.0 * kPi * phi2a_lhs(s, pol) / phi2b_pref(s, pol).value();
        return is_finite(expect) &&
               std::abs(expect) * 3e6 > integrand_peak(phi2b_integrand(s, pol));
    };
    c.lhs = phi2a_lhs;
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        CScalar integral = integrate_periodic(phi2b_integrand(s, pol), pol.quad);
        return phi2b_pref(s, pol).value() * integral / (2.0 * kPi);
    };
    return c;
}

CScalar phi32_lhs(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), x = s.get("x");
    SeriesSpec spec{{a, b, c0},
                    {q.value() * a / b, q.value() * a / c0},
                    q,
                    q.value() * a * x / (b * c0),
                    0,
                    std::nullopt};
    return phi(spec, pol.trunc, pol.guard).value;
}

std::function<CScalar(double)> phi32_integrand(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), x = s.get("x"), f = s.get("f");
    CScalar sx = std::sqrt(x), sa = std::sqrt(a), sq = std::sqrt(q.value());
    CScalar rax = sa * sx, rqax = sq * sa * sx;
    CScalar last = q.value() * a * sx / (b * c0);
    double lo = std::max({std::abs(rax), std::abs(rqax), std::abs(last)});
    double hi = std::min(std::abs(sx), 1.0 / std::abs(sx));
    double tau = std::sqrt(lo * hi);
    return ratio_integrand(
        {f * sx, q.value() / (f * sx)},
        {f * sx, q.value() / (f * sx), q.value() * a * sx / b, q.value() * a * sx / c0,
         a * x * sx},
        {sx, CScalar(1.0) / sx}, {rax, -rax, rqax, -rqax, last}, tau, q, pol.trunc);
}

ScaledComplex phi32_pref(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), x = s.get("x"), f = s.get("f");
    ScaledComplex pref = scprod({q.value(), a, q.value() * a / (b * c0)}, q, pol.trunc);
    pref /= theta_scaled(f, q, pol.trunc);
    pref /= theta_scaled(f * x, q, pol.trunc);
    pref /= scprod({q.value() * a / b, q.value() * a / c0}, q, pol.trunc);
    return pref;
}

IdentityCase make_3phi2() {
    IdentityCase c;
    c.id = "3phi2-int";
    c.anchor = "contour-integral representation of a well-poised 3phi2";
    c.tol = 1e-7;
    c.branch_note = "principal per-parameter roots";
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        s.set("a", annulus(rng, 0.2, 0.4));
        s.set("b", annulus(rng, 0.65, 0.85));
        s.set("c", annulus(rng, 0.65, 0.85));
        s.set("x", annulus(rng, 0.6, 0.9));
        s.set("f", annulus(rng, 0.4, 1.8));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), x = s.get("x"), f = s.get("f");
        if (!(std::abs(q.value() * a * x) < 0.9 * std::abs(b * c0))) return false;
        CScalar sx = std::sqrt(x), sa = std::sqrt(a);
        CScalar rax = sa * sx, rqax = std::sqrt(q.value()) * sa * sx;
        CScalar last = q.value() * a * sx / (b * c0);
        double lo = std::max({std::abs(rax), std::abs(rqax), std::abs(last)});
        double hi = std::min(std::abs(sx), 1.0 / std::abs(sx));
        if (!(hi / lo > 1.1)) return false;
        if (!theta_ok(f, q, pol.guard) || !theta_ok(f * x, q, pol.guard)) return false;
        if (!poch_den_ok({q.value() * a / b, q.value() * a / c0}, q)) return false;
        CScalar expect = 2.0 * kPi * phi32_lhs(s, pol) / phi32_pref(s, pol).value();
        return is_finite(expect) &&
               std::abs(expect) * 3e6 > integrand_peak(phi32_integrand(s, pol));
    };
    c.lhs = phi32_lhs;
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        CScalar integral = integrate_periodic(phi32_integrand(s, pol), pol.quad);
        return phi32_pref(s, pol).value() * integral / (2.0 * kPi);
    };
    return c;
}

/// idem_{e;f} (etc, etd, a/e, b/e;q)inf / (etg, eth, f/e;q)inf
///            * 4phi3(etg, eth, qe/a, qe/b; etc, etd, qe/f; q, ab/(ef))
CScalar abcd2_side(CScalar e, CScalar f, CScalar a, CScalar b, CScalar cc, CScalar d, CScalar g,
                   CScalar h, CScalar t, const Nome& q, const RunPolicies& pol) {
    CScalar z = a * b / (e * f);
    auto term = [&](CScalar e1, CScalar f1) {
        ScaledComplex pre = scprod({e1 * t * cc, e1 * t * d, a / e1, b / e1}, q, pol.trunc);
        pre /= scprod({e1 * t * g, e1 * t * h, f1 / e1}, q, pol.trunc);
        SeriesSpec spec{{e1 * t * g, e1 * t * h, q.value() * e1 / a, q.value() * e1 / b},
                        {e1 * t * cc, e1 * t * d, q.value() * e1 / f1},
                        q,
                        z,
                        0,
                        std::nullopt};
        pre *= phi(spec, pol.trunc, pol.guard).value;
        return pre;
    };
    ScaledComplex total = term(e, f);
    total += term(f, e);
    return total.value();
}

Sample draw_abcd2(std::mt19937_64& rng, const RunPolicies& pol, bool unit_t) {
    Sample s;
    s.q = pick_q(rng, pol);
    for (const char* n : {"e", "f", "g", "h"}) s.set(n, annulus(rng, 0.5, 0.8));
    for (const char* n : {"a", "b", "c", "d"}) s.set(n, annulus(rng, 0.15, 0.35));
    s.set("t", unit_t ? CScalar(1.0) : annulus(rng, 0.3, 0.8));
    return s;
}

bool abcd2_admissible(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), cc = s.get("c"), d = s.get("d");
    CScalar e = s.get("e"), f = s.get("f"), g = s.get("g"), h = s.get("h");
    if (!(std::abs(a * b) < 0.9 * std::abs(e * f))) return false;
    if (!(std::abs(cc * d) < 0.9 * std::abs(g * h))) return false;
    if (!poch_den_ok({f / e, e / f, h / g, g / h}, q)) return false;
    for (auto [u, v] : {std::pair{e, f}, {f, e}, {g, h}, {h, g}}) {
        if (!omega_ok(q.value() * u / v, q, pol.guard)) return false;
    }
    for (CScalar u : {e, f})
        for (CScalar v : {a, b})
            if (!omega_ok(q.value() * u / v, q, pol.guard)) return false;
    for (CScalar u : {g, h})
        for (CScalar v : {cc, d})
            if (!omega_ok(q.value() * u / v, q, pol.guard)) return false;
    return true;
}

IdentityCase make_abcd2() {
    IdentityCase c;
    c.id = "abcd2";
    c.anchor = "A=B=C=D=2 symmetrization: two 4phi3 idem sums transform into each other";
    c.tol = 1e-6;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_abcd2(rng, pol, false);
    };
    c.admissible = abcd2_admissible;
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return abcd2_side(s.get("e"), s.get("f"), s.get("a"), s.get("b"), s.get("c"), s.get("d"),
                          s.get("g"), s.get("h"), s.get("t"), nm(s), pol);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return abcd2_side(s.get("g"), s.get("h"), s.get("c"), s.get("d"), s.get("a"), s.get("b"),
                          s.get("e"), s.get("f"), s.get("t"), nm(s), pol);
    };
    return c;
}

IdentityCase make_symcor() {
    IdentityCase c;
    c.id = "symcor";
    c.anchor = "t = 1 case of the A=B=C=D=2 symmetrization";
    c.tol = 1e-6;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_abcd2(rng, pol, true);
    };
    c.admissible = abcd2_admissible;
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return abcd2_side(s.get("e"), s.get("f"), s.get("a"), s.get("b"), s.get("c"), s.get("d"),
                          s.get("g"), s.get("h"), CScalar(1.0), nm(s), pol);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return abcd2_side(s.get("g"), s.get("h"), s.get("c"), s.get("d"), s.get("a"), s.get("b"),
                          s.get("e"), s.get("f"), CScalar(1.0), nm(s), pol);
    };
    return c;
}

// Parameter map that sends the t=1 symmetrization to argument q on both
// sides; the right side then sums by the q-Gauss formula.
struct QGaussMap {
    CScalar a, b, c, d, g, h;
};

QGaussMap qgauss_map(const Sample& s) {
    CScalar e = s.get("e"), f = s.get("f"), kap = s.get("kappa"), mu = s.get("mu");
    CScalar q = s.q;
    return {kap * e,        q * f / kap, q / (kap * e),
            kap / f,        CScalar(1.0) / (mu * e), mu / f};
}

/// One idem term of the t=1 symmetrization side with distinguished pair
/// (u, v) and role sets (A,B | C,D | G,H), evaluated via the 4phi3 series.
CScalar symcor_term_series(CScalar u, CScalar v, CScalar A, CScalar B, CScalar C, CScalar D,
                           CScalar G, CScalar H, const Nome& q, const RunPolicies& pol) {
    ScaledComplex pre = scprod({u * C, u * D, A / u, B / u}, q, pol.trunc);
    pre /= scprod({u * G, u * H, v / u}, q, pol.trunc);
    SeriesSpec spec{{u * G, u * H, q.value() * u / A, q.value() * u / B},
                    {u * C, u * D, q.value() * u / v},
                    q,
                    A * B / (u * v),
                    0,
                    std::nullopt};
    pre *= phi(spec, pol.trunc, pol.guard).value;
    return pre.value();
}

/// Same term under the argument-q parameter map, where the 4phi3 cancels to
/// 2phi1(uG, uH; qu/v; q, q) and sums by the q-Gauss formula.
CScalar symcor_term_qgauss(CScalar u, CScalar v, CScalar A, CScalar B, CScalar C, CScalar D,
                           CScalar G, CScalar H, const Nome& q, const RunPolicies& pol) {
    ScaledComplex pre = scprod({u * C, u * D, A / u, B / u}, q, pol.trunc);
    pre /= scprod({u * G, u * H, v / u}, q, pol.trunc);
    pre *= scprod({q.value() / (v * G), q.value() / (v * H)}, q, pol.trunc);
    pre /= scprod({q.value() * u / v, q.value()}, q, pol.trunc);
    return pre.value();
}

IdentityCase make_qgauss_reduction() {
    IdentityCase c;
    c.id = "qGauss-reduction";
    c.anchor =
        "argument-q specialization of the t=1 symmetrization; every term sums by q-Gauss and "
        "each idem pair cancels exactly, so both sides vanish";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        s.set("e", annulus(rng, 0.4, 0.9));
        s.set("f", annulus(rng, 0.4, 0.9));
        s.set("kappa", annulus(rng, 0.5, 1.8));
        s.set("mu", annulus(rng, 0.5, 1.8));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar e = s.get("e"), f = s.get("f"), kap = s.get("kappa"), mu = s.get("mu");
        CScalar qv = q.value();
        std::vector<CScalar> dens = {f / e,
                                     e / f,
                                     CScalar(1.0) / mu,
                                     mu,
                                     mu * e / f,
                                     f / (mu * e),
                                     mu * mu * e / f,
                                     f / (mu * mu * e),
                                     qv * f / (mu * mu * e),
                                     qv * mu * mu * e / f};
        if (!poch_den_ok(dens, q)) return false;
        for (CScalar v : {CScalar(1.0) / mu, mu * e / f, qv / kap, kap * e / f, f / (mu * e), mu,
                          qv * f / (kap * e), kap, qv * e / f, qv * f / e})
            if (std::abs(v) > 0.9 && !omega_ok(v, q, pol.guard)) return false;
        return true;
    };
    // primary: the first left term, series vs q-Gauss closed form
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        QGaussMap m = qgauss_map(s);
        return symcor_term_series(s.get("e"), s.get("f"), m.a, m.b, m.c, m.d, m.g, m.h, nm(s),
                                  pol);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        QGaussMap m = qgauss_map(s);
        return symcor_term_qgauss(s.get("e"), s.get("f"), m.a, m.b, m.c, m.d, m.g, m.h, nm(s),
                                  pol);
    };
    c.extra.push_back({"right-term-qGauss",
                       [](const Sample& s, const RunPolicies& pol) {
                           QGaussMap m = qgauss_map(s);
                           return symcor_term_series(m.g, m.h, m.c, m.d, m.a, m.b, s.get("e"),
                                                     s.get("f"), nm(s), pol);
                       },
                       [](const Sample& s, const RunPolicies& pol) {
                           QGaussMap m = qgauss_map(s);
                           return symcor_term_qgauss(m.g, m.h, m.c, m.d, m.a, m.b, s.get("e"),
                                                     s.get("f"), nm(s), pol);
                       }});
    // each idem pair cancels exactly, measured against the term magnitude
    c.extra.push_back({"left-idem-vanishes",
                       [](const Sample& s, const RunPolicies& pol) {
                           QGaussMap m = qgauss_map(s);
                           CScalar t1 = symcor_term_series(s.get("e"), s.get("f"), m.a, m.b, m.c,
                                                           m.d, m.g, m.h, nm(s), pol);
                           CScalar t2 = symcor_term_series(s.get("f"), s.get("e"), m.a, m.b, m.c,
                                                           m.d, m.g, m.h, nm(s), pol);
                           return CScalar(1.0) + (t1 + t2) / t1;
                       },
                       [](const Sample&, const RunPolicies&) { return CScalar(1.0); }});
    c.extra.push_back({"right-idem-vanishes",
                       [](const Sample& s, const RunPolicies& pol) {
                           QGaussMap m = qgauss_map(s);
                           CScalar t1 = symcor_term_series(m.g, m.h, m.c, m.d, m.a, m.b,
                                                           s.get("e"), s.get("f"), nm(s), pol);
                           CScalar t2 = symcor_term_series(m.h, m.g, m.c, m.d, m.a, m.b,
                                                           s.get("e"), s.get("f"), nm(s), pol);
                           return CScalar(1.0) + (t1 + t2) / t1;
                       },
                       [](const Sample&, const RunPolicies&) { return CScalar(1.0); }});
    return c;
}

}  // namespace

void register_phi_rep_cases(std::vector<IdentityCase>& out) {
    out.push_back(make_2phi1_a());
    out.push_back(make_2phi1_b());
    out.push_back(make_3phi2());
    out.push_back(make_abcd2());
    out.push_back(make_symcor());
    out.push_back(make_qgauss_reduction());
}

}  // namespace qk::detail
