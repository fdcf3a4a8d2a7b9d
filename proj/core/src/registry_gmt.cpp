// Verification cases for the master contour integral G_{m,t}, the H/J
// argument-q theorem, its q-integral form and the mirror corollary.

#include <cmath>

#include "qkernel/identities/gmt.hpp"
#include "registry_common.hpp"
#include "registry_detail.hpp"

namespace qk::detail {

namespace {

using sampling::annulus;
using sampling::omega_ok;
using sampling::on_circle;
using sampling::poch_den_ok;
using sampling::theta_ok;
using sampling::uniform;

GmtArgs gmt_args(const Sample& s, int A, int B, int C, int D) {
    auto take = [&](const char* stem, int n) {
        std::vector<CScalar> v;
        for (int i = 1; i <= n; ++i) v.push_back(s.get(std::string(stem) + std::to_string(i)));
        return ParamSet(std::move(v));
    };
    return GmtArgs{take("a", A), take("b", B), take("c", C), take("d", D)};
}

IdentityCase make_g_sym() {
    IdentityCase c;
    c.id = "G-sym";
    c.anchor = "G_{m,t}(a,b,c,d) = G_{-m,t}(b,a,d,c) by psi -> -psi";
    c.tol = 1e-8;
    c.branch_note = "principal sqrt(t) on both sides";
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        double sigma = uniform(rng, 0.9, 1.1);
        CScalar t = annulus(rng, 0.4, 0.9);
        double cap = 0.8 * std::min(1.0 / sigma, sigma / std::abs(t));
        s.set("sigma", sigma);
        s.set("t", t);
        s.set("m", CScalar(static_cast<double>(static_cast<int>(uniform(rng, -2.49, 2.49)))));
        s.set("a1", annulus(rng, 0.05, 0.7));
        s.set("b1", annulus(rng, 0.05, 0.7));
        s.set("c1", annulus(rng, 0.05, cap));
        s.set("d1", annulus(rng, 0.05, cap));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies&) {
        double sigma = s.getr("sigma"), at = std::abs(s.get("t"));
        double s2 = sigma * 0.95;  // the sigma-independence recheck must stay admissible
        for (double sg : {sigma, s2}) {
            double cap = std::min(1.0 / sg, sg / at);
            if (!(std::abs(s.get("c1")) < 0.9 * cap && std::abs(s.get("d1")) < 0.9 * cap))
                return false;
        }
        return true;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        GmtArgs g = gmt_args(s, 1, 1, 1, 1);
        return eval_G_integral(s.geti("m"), s.get("t"), g, s.getr("sigma"), nm(s), pol.quad,
                               pol.trunc);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        GmtArgs g = gmt_args(s, 1, 1, 1, 1);
        GmtArgs swapped{g.b, g.a, g.d, g.c};
        return eval_G_integral(-s.geti("m"), s.get("t"), swapped, s.getr("sigma"), nm(s),
                               pol.quad, pol.trunc);
    };
    c.extra.push_back({"sigma-independence", with_scaled(c.lhs, "sigma", 0.95), c.lhs});
    return c;
}

IdentityCase make_g_d_vs_c() {
    IdentityCase c;
    c.id = "G-d-vs-c";
    c.anchor = "series expansions over the d-set and the c-set agree (D=B, C=A)";
    c.tol = 1e-8;
    c.branch_note = "principal sqrt(t) on both sides";
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        s.set("t", annulus(rng, 0.4, 0.9));
        s.set("m", CScalar(static_cast<double>(static_cast<int>(uniform(rng, -2.49, 2.49)))));
        for (const char* n : {"a1", "a2", "b1", "b2"}) s.set(n, annulus(rng, 0.03, 0.15));
        for (const char* n : {"c1", "c2", "d1", "d2"}) s.set(n, annulus(rng, 0.55, 0.85));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar t = s.get("t");
        int m = s.geti("m");
        auto a = get_seq(s, "a", 2), b = get_seq(s, "b", 2), cc = get_seq(s, "c", 2),
             d = get_seq(s, "d", 2);
        CScalar zd = powi(q.value(), m) * product(b) / product(d);
        CScalar zc = powi(q.value(), -m) * product(a) / product(cc);
        if (std::abs(zd) > 0.9 || std::abs(zc) > 0.9) return false;
        std::vector<CScalar> dens = {d[0] / d[1], d[1] / d[0], cc[0] / cc[1], cc[1] / cc[0]};
        for (const auto& dk : d)
            for (const auto& ck : cc) dens.push_back(t * dk * ck);
        if (!poch_den_ok(dens, q)) return false;
        for (const auto& dk : d) {
            for (const auto& bj : b)
                if (!omega_ok(q.value() * dk / bj, q, pol.guard)) return false;
            for (const auto& dl : d)
                if (&dk != &dl && !omega_ok(q.value() * dk / dl, q, pol.guard)) return false;
        }
        for (const auto& ck : cc) {
            for (const auto& aj : a)
                if (!omega_ok(q.value() * ck / aj, q, pol.guard)) return false;
            for (const auto& cl : cc)
                if (&ck != &cl && !omega_ok(q.value() * ck / cl, q, pol.guard)) return false;
        }
        return true;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return eval_G_series_d(s.geti("m"), s.get("t"), gmt_args(s, 2, 2, 2, 2), nm(s), pol.trunc,
                               pol.guard);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return eval_G_series_c(s.geti("m"), s.get("t"), gmt_args(s, 2, 2, 2, 2), nm(s), pol.trunc,
                               pol.guard);
    };
    return c;
}

// Shared sampler for the argument-q theorem family: A = 1, C = 3, d-pair.
// The a-parameter floor keeps the q c_k/a_1 series entries moderate; far
// smaller values make the J expansion terms cancel catastrophically.
Sample draw_hj(std::mt19937_64& rng, const RunPolicies& pol) {
    Sample s;
    s.q = pick_q(rng, pol);
    double sigma = uniform(rng, 0.9, 1.1);
    s.set("sigma", sigma);
    s.set("a1", annulus(rng, 0.04, 0.06));
    for (int i = 1; i <= 3; ++i)
        s.set("c" + std::to_string(i), annulus(rng, 0.6 * sigma, 0.78 * sigma));
    s.set("d1", annulus(rng, 0.6 / sigma, 0.78 / sigma));
    s.set("d2", annulus(rng, 0.6 / sigma, 0.78 / sigma));
    s.set("f", annulus(rng, 0.4, 1.8));
    s.set("s", annulus(rng, 0.5, 1.5));
    return s;
}

std::function<CScalar(double)> qqform_integrand(const Sample& s, CScalar f,
                                                const RunPolicies& pol);

bool hj_admissible(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar d1 = s.get("d1"), d2 = s.get("d2"), f = s.get("f"), a1 = s.get("a1");
    auto cs = get_seq(s, "c", 3);
    if (!omega_ok(d2 / d1, q, pol.guard) || !omega_ok(d1 / d2, q, pol.guard)) return false;
    if (!omega_ok(q.value() * d1 / d2, q, pol.guard) ||
        !omega_ok(q.value() * d2 / d1, q, pol.guard))
        return false;
    if (!poch_den_ok({d2 / d1, d1 / d2}, q)) return false;
    for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
        if (!theta_ok(ff, q, pol.guard) || !theta_ok(ff * d1 / d2, q, pol.guard)) return false;
        for (const auto& ck : cs) {
            if (!theta_ok(ff * ck * d1, q, pol.guard)) return false;
            if (!theta_ok(ff / (ck * d2), q, pol.guard)) return false;
        }
    }
    CScalar zj = q.value() * a1 / (d1 * d2 * product(cs));
    if (std::abs(zj) > 0.9) return false;
    std::vector<CScalar> dens;
    for (const auto& ck : cs)
        for (const auto& cl : cs) {
            if (&ck == &cl) continue;
            dens.push_back(cl / ck);
            if (!omega_ok(q.value() * ck / cl, q, pol.guard)) return false;
        }
    if (!poch_den_ok(dens, q)) return false;
    // both expansions must keep their cancellation amplification in range,
    // and the contour integral must be resolvable against its peak
    double cond_h = 0;
    CScalar h = eval_H(ParamSet({a1}), ParamSet(cs), {d1, d2}, q, pol.trunc, pol.guard, &cond_h);
    if (!(cond_h < 1e4)) return false;
    for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
        double cond_j = 0;
        eval_J(ParamSet({a1}), ParamSet(cs), {d1, d2}, ff, q, pol.trunc, pol.guard, &cond_j);
        if (!(cond_j < 1e4)) return false;
    }
    for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
        ScaledComplex pre = theta_scaled(ff, q, pol.trunc);
        pre *= theta_scaled(ff * d1 / d2, q, pol.trunc);
        pre /= qpoch_infinite_scaled(q.value(), q, pol.trunc);
        CScalar val = 2.0 * kPi * pre.value() * h;
        double peak = 0.0;
        auto integrand = qqform_integrand(s, ff, pol);
        for (int j = 0; j < 16; ++j)
            peak = std::max(peak, std::abs(integrand(-kPi + 2.0 * kPi * (j + 0.37) / 16)));
        if (!(std::abs(val) * 1e6 > peak)) return false;
    }
    return true;
}

std::function<CScalar(double)> qqform_integrand(const Sample& s, CScalar f,
                                                const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar d1 = s.get("d1"), d2 = s.get("d2");
    return ratio_integrand({f * d1, q.value() / f * d2},
                           {f / d2, q.value() / (f * d1), s.get("a1")}, {d1, d2},
                           get_seq(s, "c", 3), s.getr("sigma"), q, pol.trunc);
}

CScalar qqform_integral(const Sample& s, const RunPolicies& pol) {
    return integrate_periodic(qqform_integrand(s, s.get("f"), pol), pol.quad);
}

CScalar h_value(const Sample& s, const RunPolicies& pol) {
    return eval_H(ParamSet({s.get("a1")}), ParamSet(get_seq(s, "c", 3)),
                  {s.get("d1"), s.get("d2")}, nm(s), pol.trunc, pol.guard);
}

CScalar h_rhs_closed(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    ScaledComplex pref = theta_scaled(s.get("f"), q, pol.trunc);
    pref *= theta_scaled(s.get("f") * s.get("d1") / s.get("d2"), q, pol.trunc);
    pref /= qpoch_infinite_scaled(q.value(), q, pol.trunc);
    return 2.0 * kPi * pref.value() * h_value(s, pol);
}

/// q-integral route: H as a Jackson integral between s sqrt(d2/d1) and
/// s sqrt(d1/d2), base roots per parameter so the pairing is branch-free.
CScalar h_qint_value(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar d1 = s.get("d1"), d2 = s.get("d2"), sv = s.get("s");
    // per-parameter base roots keep sqrt(d2/d1), sqrt(d1/d2) and
    // sqrt(d1 d2) mutually coherent for any arguments
    CScalar rho = std::sqrt(d2) / std::sqrt(d1);
    CScalar root12 = std::sqrt(d1) * std::sqrt(d2);
    auto cs = get_seq(s, "c", 3);
    CScalar a1 = s.get("a1");
    auto f = [&](CScalar u) -> CScalar {
        CScalar w = u / sv;
        CScalar num = qpoch_infinite(q.value() / rho * w, q, pol.trunc) *
                      qpoch_infinite(q.value() * rho * w, q, pol.trunc) *
                      qpoch_infinite(a1 * root12 * w, q, pol.trunc);
        CScalar den = 1.0;
        for (const auto& ck : cs) den *= qpoch_infinite(ck * root12 * w, q, pol.trunc);
        return num / den;
    };
    CScalar integral = jackson_qintegral(f, sv * rho, sv / rho, q, pol.trunc);
    ScaledComplex pref = ScaledComplex(rho);
    pref /= ScaledComplex((CScalar(1.0) - q.value()) * sv);
    pref /= qpoch_infinite_scaled(q.value(), q, pol.trunc);
    pref /= theta_scaled(d2 / d1, q, pol.trunc);
    return pref.value() * integral;
}

IdentityCase make_h_int() {
    IdentityCase c;
    c.id = "H-int";
    c.anchor = "contour integral equals the theta-weighted two-term H sum";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) { return draw_hj(rng, pol); };
    c.admissible = hj_admissible;
    c.lhs = qqform_integral;
    c.rhs = h_rhs_closed;
    c.extra.push_back({"f-independence",
                       with_scaled(qqform_integral, "f", 1.07 * std::polar(1.0, 0.41)),
                       with_scaled(h_rhs_closed, "f", 1.07 * std::polar(1.0, 0.41))});
    return c;
}

IdentityCase make_j_int() {
    IdentityCase c;
    c.id = "J-int";
    c.anchor = "contour integral equals the theta-weighted J sum (C = A + 2)";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) { return draw_hj(rng, pol); };
    c.admissible = hj_admissible;
    c.lhs = qqform_integral;
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar j = eval_J(ParamSet({s.get("a1")}), ParamSet(get_seq(s, "c", 3)),
                           {s.get("d1"), s.get("d2")}, s.get("f"), q, pol.trunc, pol.guard);
        return 2.0 * kPi / qpoch_infinite(q.value(), q, pol.trunc) * j;
    };
    c.extra.push_back({"f-independence",
                       with_scaled(c.lhs, "f", 1.07 * std::polar(1.0, 0.41)),
                       with_scaled(c.rhs, "f", 1.07 * std::polar(1.0, 0.41))});
    return c;
}

IdentityCase make_h_qint() {
    IdentityCase c;
    c.id = "H-qint";
    c.anchor = "H equals its Jackson q-integral form, symmetric in {d1, d2}";
    c.tol = 1e-8;
    c.branch_note = "principal per-parameter roots";
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) { return draw_hj(rng, pol); };
    c.admissible = hj_admissible;
    c.lhs = h_value;
    c.rhs = h_qint_value;
    c.extra.push_back({"s-independence",
                       with_scaled(h_qint_value, "s", CScalar(1.3, 0.21)), h_value});
    c.extra.push_back({"d1-d2-symmetry", with_swap(h_qint_value, "d1", "d2"), h_value});
    return c;
}

IdentityCase make_int_vs_qint() {
    IdentityCase c;
    c.id = "Int-vs-qint";
    c.anchor = "definite contour integral expressed through the Jackson q-integral";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) { return draw_hj(rng, pol); };
    c.admissible = hj_admissible;
    c.lhs = qqform_integral;
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        ScaledComplex pref = theta_scaled(s.get("f"), q, pol.trunc);
        pref *= theta_scaled(s.get("f") * s.get("d1") / s.get("d2"), q, pol.trunc);
        pref /= qpoch_infinite_scaled(q.value(), q, pol.trunc);
        return 2.0 * kPi * pref.value() * h_qint_value(s, pol);
    };
    return c;
}

IdentityCase make_mirror() {
    IdentityCase c;
    c.id = "mirror-corollary";
    c.anchor = "mirror form of the argument-q theorem (roles of the two pole families swapped)";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        double sigma = uniform(rng, 0.9, 1.1);
        s.set("sigma", sigma);
        s.set("b1", annulus(rng, 0.04, 0.06));
        for (int i = 1; i <= 3; ++i)
            s.set("d" + std::to_string(i), annulus(rng, 0.6 / sigma, 0.78 / sigma));
        s.set("c1", annulus(rng, 0.6 * sigma, 0.78 * sigma));
        s.set("c2", annulus(rng, 0.6 * sigma, 0.78 * sigma));
        s.set("f", annulus(rng, 0.4, 1.8));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar c1 = s.get("c1"), c2 = s.get("c2"), f = s.get("f"), b1 = s.get("b1");
        auto ds = get_seq(s, "d", 3);
        if (!omega_ok(c2 / c1, q, pol.guard) || !omega_ok(c1 / c2, q, pol.guard)) return false;
        if (!omega_ok(q.value() * c1 / c2, q, pol.guard) ||
            !omega_ok(q.value() * c2 / c1, q, pol.guard))
            return false;
        if (!poch_den_ok({c2 / c1, c1 / c2}, q)) return false;
        if (!theta_ok(f, q, pol.guard) || !theta_ok(f * c1 / c2, q, pol.guard)) return false;
        for (const auto& dk : ds) {
            if (!theta_ok(f * dk * c1, q, pol.guard)) return false;
            if (!theta_ok(f / (dk * c2), q, pol.guard)) return false;
        }
        CScalar zj = q.value() * b1 / (c1 * c2 * product(ds));
        if (std::abs(zj) > 0.9) return false;
        std::vector<CScalar> dens;
        for (const auto& dk : ds)
            for (const auto& dl : ds) {
                if (&dk == &dl) continue;
                dens.push_back(dl / dk);
                if (!omega_ok(q.value() * dk / dl, q, pol.guard)) return false;
            }
        if (!poch_den_ok(dens, q)) return false;
        double cond_h = 0, cond_j = 0;
        CScalar h = eval_H(ParamSet({b1}), ParamSet(ds), {c1, c2}, q, pol.trunc, pol.guard,
                           &cond_h);
        eval_J(ParamSet({b1}), ParamSet(ds), {c1, c2}, f, q, pol.trunc, pol.guard, &cond_j);
        if (!(cond_h < 1e4 && cond_j < 1e4)) return false;
        ScaledComplex pre = theta_scaled(f, q, pol.trunc);
        pre *= theta_scaled(f * c1 / c2, q, pol.trunc);
        pre /= qpoch_infinite_scaled(q.value(), q, pol.trunc);
        CScalar val = 2.0 * kPi * pre.value() * h;
        auto integrand = ratio_integrand({f / c2, q.value() / (f * c1), b1},
                                         {f * c1, q.value() / f * c2}, ds, {c1, c2},
                                         s.getr("sigma"), q, pol.trunc);
        double peak = 0.0;
        for (int j = 0; j < 16; ++j)
            peak = std::max(peak, std::abs(integrand(-kPi + 2.0 * kPi * (j + 0.37) / 16)));
        return std::abs(val) * 1e6 > peak;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar c1 = s.get("c1"), c2 = s.get("c2"), f = s.get("f");
        auto integrand =
            ratio_integrand({f / c2, q.value() / (f * c1), s.get("b1")},
                            {f * c1, q.value() / f * c2}, get_seq(s, "d", 3), {c1, c2},
                            s.getr("sigma"), q, pol.trunc);
        return integrate_periodic(integrand, pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        ScaledComplex pref = theta_scaled(s.get("f"), q, pol.trunc);
        pref *= theta_scaled(s.get("f") * s.get("c1") / s.get("c2"), q, pol.trunc);
        pref /= qpoch_infinite_scaled(q.value(), q, pol.trunc);
        CScalar h = eval_H(ParamSet({s.get("b1")}), ParamSet(get_seq(s, "d", 3)),
                           {s.get("c1"), s.get("c2")}, q, pol.trunc, pol.guard);
        return 2.0 * kPi * pref.value() * h;
    };
    c.extra.push_back({"J-form",
                       c.lhs,
                       [](const Sample& s, const RunPolicies& pol) {
                           Nome q = nm(s);
                           CScalar j = eval_J(ParamSet({s.get("b1")}),
                                              ParamSet(get_seq(s, "d", 3)),
                                              {s.get("c1"), s.get("c2")}, s.get("f"), q,
                                              pol.trunc, pol.guard);
                           return 2.0 * kPi / qpoch_infinite(q.value(), q, pol.trunc) * j;
                       }});
    return c;
}

Sample draw_intlem(std::mt19937_64& rng, const RunPolicies& pol, bool unit_t) {
    Sample s;
    s.q = pick_q(rng, pol);
    s.set("sigma", uniform(rng, 0.9, 1.1));
    s.set("tau", uniform(rng, 0.9, 1.1));
    s.set("t", unit_t ? CScalar(1.0) : annulus(rng, 0.4, 1.0));
    s.set("a1", annulus(rng, 0.05, 0.3));
    s.set("b1", annulus(rng, 0.05, 0.3));
    s.set("c1", annulus(rng, 0.45, 0.65));
    s.set("d1", annulus(rng, 0.45, 0.65));
    return s;
}

bool intlem_admissible(const Sample& s, const RunPolicies&) {
    double at = std::abs(s.get("t"));
    double sigma = s.getr("sigma"), tau = s.getr("tau");
    double ab = std::abs(s.get("a1")), bb = std::abs(s.get("b1"));
    double cb = std::abs(s.get("c1")), db = std::abs(s.get("d1"));
    return bb < db && db < 0.95 * std::min(tau / at, 1.0 / sigma) && ab < cb &&
           cb < 0.95 * std::min(sigma / at, 1.0 / tau) && db * ab < 0.95 / at;
}

CScalar intlem_lhs(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar t = s.get("t");
    auto integrand = ratio_integrand({s.get("b1")}, {t * s.get("a1")}, {s.get("d1")},
                                     {t * s.get("c1")}, s.getr("sigma"), q, pol.trunc);
    return integrate_periodic(integrand, pol.quad);
}

CScalar intlem_rhs(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar t = s.get("t");
    auto integrand = ratio_integrand({s.get("a1")}, {t * s.get("b1")}, {s.get("c1")},
                                     {t * s.get("d1")}, s.getr("tau"), q, pol.trunc);
    return integrate_periodic(integrand, pol.quad);
}

Evaluator intlem_series = [](const Sample& s, const RunPolicies& pol) -> CScalar {
    Nome q = nm(s);
    GmtArgs g{ParamSet({s.get("a1")}), ParamSet({s.get("b1")}), ParamSet({s.get("c1")}),
              ParamSet({s.get("d1")})};
    CScalar gval = eval_G_series_d(0, s.get("t"), g, q, pol.trunc, pol.guard);
    return 2.0 * kPi / qpoch_infinite(q.value(), q, pol.trunc) * gval;
};

IdentityCase make_intlem() {
    IdentityCase c;
    c.id = "intlem";
    c.anchor = "two contour integrals with swapped parameter roles both equal 2 pi G_{0,t}/(q;q)";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_intlem(rng, pol, false);
    };
    c.admissible = intlem_admissible;
    c.lhs = intlem_lhs;
    c.rhs = intlem_rhs;
    c.extra.push_back({"series-route", intlem_lhs, intlem_series});
    return c;
}

IdentityCase make_intlem2() {
    IdentityCase c;
    c.id = "intlem2";
    c.anchor = "t = 1 inversion relation between the two parameter orientations";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_intlem(rng, pol, true);
    };
    c.admissible = intlem_admissible;
    c.lhs = intlem_lhs;
    c.rhs = intlem_rhs;
    return c;
}

}  // namespace

void register_gmt_cases(std::vector<IdentityCase>& out) {
    out.push_back(make_g_sym());
    out.push_back(make_g_d_vs_c());
    out.push_back(make_h_int());
    out.push_back(make_j_int());
    out.push_back(make_h_qint());
    out.push_back(make_int_vs_qint());
    out.push_back(make_mirror());
    out.push_back(make_intlem());
    out.push_back(make_intlem2());
}

}  // namespace qk::detail
