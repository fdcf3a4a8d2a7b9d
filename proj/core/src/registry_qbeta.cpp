// Verification cases for the generalized q-beta integrals and the
// symmetrized very-well-poised sum transformations they imply.

#include <cmath>

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

// ---- closed forms --------------------------------------------------------

CScalar awint_rhs(std::span<const CScalar> a, const Nome& q, const TruncationPolicy& tp) {
    ScaledComplex num = qpoch_infinite_scaled(product(a), q, tp);
    ScaledComplex den = qpoch_infinite_scaled(q.value(), q, tp);
    den *= scprod(pairprods(a), q, tp);
    num /= den;
    return 2.0 * kPi * num.value();
}

CScalar nrint_rhs(std::span<const CScalar> a, CScalar lam, const Nome& q,
                  const TruncationPolicy& tp, const OmegaGuard& guard) {
    CScalar aprod = product(a);
    ScaledComplex num = scprod(scale_all(a, lam), q, tp);
    num *= qpoch_infinite_scaled(aprod / lam, q, tp);
    ScaledComplex den = qpoch_infinite_scaled(q.value(), q, tp);
    den *= scprod(pairprods(a), q, tp);
    den *= qpoch_infinite_scaled(lam * lam, q, tp);
    std::vector<CScalar> tail = scale_all(a, CScalar(1.0));
    for (auto& t : tail) t = lam / t;
    CScalar w = wphi(lam * lam / q.value(), tail, q, aprod / lam, tp, guard);
    num /= den;
    return 2.0 * kPi * num.value() * w;
}

CScalar rint_rhs(std::span<const CScalar> a, CScalar lam, CScalar mu, const Nome& q,
                 const TruncationPolicy& tp, const OmegaGuard& guard) {
    ScaledComplex front = ScaledComplex(CScalar(2.0 * kPi));
    front /= qpoch_infinite_scaled(q.value(), q, tp);
    front /= scprod(pairprods(a), q, tp);

    auto term = [&](CScalar l, CScalar m) {
        ScaledComplex t = scprod(scale_all(a, l), q, tp);
        for (const auto& ai : a) t *= qpoch_infinite_scaled(m / ai, q, tp);
        t /= scprod({l * l, m / l}, q, tp);
        std::vector<CScalar> tail;
        tail.push_back(l * m / q.value());
        for (const auto& ai : a) tail.push_back(l / ai);
        t *= ScaledComplex(wphi(l * l / q.value(), tail, q, q.value(), tp, guard));
        return t;
    };
    ScaledComplex total = term(lam, mu);
    total += term(mu, lam);
    total *= front;
    return total.value();
}

CScalar arint_rhs(CScalar a, CScalar b, CScalar c, CScalar d, CScalar f, const Nome& q,
                  const TruncationPolicy& tp) {
    ScaledComplex num = theta_scaled(f, q, tp);
    num *= theta_scaled(f * c / d, q, tp);
    num *= qpoch_infinite_scaled(a * b * c * d, q, tp);
    num /= scprod({q.value(), a * c, a * d, b * c, b * d}, q, tp);
    return 2.0 * kPi * num.value();
}

CScalar gint_rhs(CScalar a, CScalar b, CScalar c, CScalar d, CScalar e, CScalar f, const Nome& q,
                 const TruncationPolicy& tp) {
    ScaledComplex num = theta_scaled(f, q, tp);
    num *= theta_scaled(f * c / d, q, tp);
    num *= scprod({a * b * c * d, b * c * d * e, a * c * d * e}, q, tp);
    num /= scprod({q.value(), a * c, a * d, b * c, b * d, c * e, d * e}, q, tp);
    return 2.0 * kPi * num.value();
}

// Exercise-4.4-type integral: the 8W7-weighted closed form.
CScalar fourfour_rhs(CScalar a, CScalar b, CScalar c, CScalar d, CScalar g, CScalar h, CScalar k,
                     CScalar f, const Nome& q, const TruncationPolicy& tp,
                     const OmegaGuard& guard) {
    ScaledComplex num = theta_scaled(f, q, tp);
    num *= theta_scaled(f * c / d, q, tp);
    num *= scprod({k * c, k * d, a * c * d * g, b * c * d * g, c * d * g * h, a * b * c * d * h / k},
                  q, tp);
    num /= scprod({q.value(), a * c, a * d, b * c, b * d, c * g, d * g, c * h, d * h, k * c * d * g},
                  q, tp);
    std::vector<CScalar> tail = {c * g, d * g, k / a, k / b, k / h};
    CScalar w = wphi(k * c * d * g / q.value(), tail, q, a * b * c * d * h / k, tp, guard);
    return 2.0 * kPi * num.value() * w;
}

/// idem sum with conditioning report: cond_out (when given) receives
/// max |term| / |sum|, the cancellation amplification of the result.
template <typename Term>
ScaledComplex idem_sum_cond(const std::vector<CScalar>& v, Term term, double* cond_out) {
    ScaledComplex total;
    double max_log2 = -1e300;
    for (std::size_t k = 0; k < v.size(); ++k) {
        std::vector<CScalar> w = v;
        std::swap(w[0], w[k]);
        ScaledComplex t = term(w);
        max_log2 = std::max(max_log2, t.log2_abs());
        total += t;
    }
    if (cond_out)
        *cond_out = total.zero() ? 1e300 : std::exp2(max_log2 - total.log2_abs());
    return total;
}

CScalar genrah_rhs(std::span<const CScalar> a, CScalar lam, CScalar mu, const Nome& q,
                   const TruncationPolicy& tp, const OmegaGuard& guard,
                   double* cond_out = nullptr) {
    CScalar aprod = product(a);
    CScalar z = q.value() * lam * mu / aprod;
    std::vector<CScalar> v(a.begin(), a.end());
    ScaledComplex total = idem_sum_cond(
        v,
        [&](const std::vector<CScalar>& w) {
            CScalar a1 = w[0];
            ScaledComplex t = scprod(
                {CScalar(1.0) / (a1 * a1), a1 * lam, a1 * mu, lam / a1, mu / a1}, q, tp);
            std::vector<CScalar> tail;
            for (std::size_t j = 1; j < w.size(); ++j) tail.push_back(a1 * w[j]);
            std::vector<CScalar> dens;
            for (std::size_t j = 1; j < w.size(); ++j) {
                dens.push_back(a1 * w[j]);
                dens.push_back(w[j] / a1);
            }
            t /= scprod(dens, q, tp);
            tail.push_back(q.value() * a1 / lam);
            tail.push_back(q.value() * a1 / mu);
            t *= ScaledComplex(wphi(a1 * a1, tail, q, z, tp, guard));
            return t;
        },
        cond_out);
    total *= ScaledComplex(CScalar(2.0 * kPi));
    total /= qpoch_infinite_scaled(q.value(), q, tp);
    return total.value();
}

CScalar altnr_rhs(std::span<const CScalar> a, CScalar lam, const Nome& q,
                  const TruncationPolicy& tp, const OmegaGuard& guard,
                  double* cond_out = nullptr) {
    CScalar aprod = product(a);
    CScalar z = q.value() * lam / aprod;
    std::vector<CScalar> v(a.begin(), a.end());
    ScaledComplex total = idem_sum_cond(
        v,
        [&](const std::vector<CScalar>& w) {
            CScalar a1 = w[0];
            ScaledComplex t = scprod({CScalar(1.0) / (a1 * a1), a1 * lam, lam / a1}, q, tp);
            std::vector<CScalar> tail, dens;
            for (std::size_t j = 1; j < w.size(); ++j) {
                tail.push_back(a1 * w[j]);
                dens.push_back(a1 * w[j]);
                dens.push_back(w[j] / a1);
            }
            t /= scprod(dens, q, tp);
            tail.push_back(q.value() * a1 / lam);
            t *= ScaledComplex(wphi(a1 * a1, tail, q, z, tp, guard));
            return t;
        },
        cond_out);
    total *= ScaledComplex(CScalar(2.0 * kPi));
    total /= qpoch_infinite_scaled(q.value(), q, tp);
    return total.value();
}

/// Binary64 keeps ~16 digits; an idem sum amplifying term noise by more
/// than this leaves no room under the 1e-6 case tolerance.
constexpr double kMaxIdemCondition = 1e5;

// ---- samplers and admissibility ------------------------------------------

std::function<CScalar(double)> arint_integrand(const Sample& s, CScalar f,
                                               const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar c0 = s.get("c"), d0 = s.get("d");
    return ratio_integrand({f * c0, q.value() / f * d0}, {f / d0, q.value() / (f * c0)},
                           {c0, d0}, {s.get("a"), s.get("b")}, s.getr("sigma"), q, pol.trunc);
}

std::function<CScalar(double)> gint_integrand(const Sample& s, CScalar f,
                                              const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d0 = s.get("d"), e = s.get("e");
    return ratio_integrand({f * c0, q.value() / f * d0},
                           {f / d0, q.value() / (f * c0), a * b * c0 * d0 * e}, {c0, d0},
                           {a, b, e}, s.getr("sigma"), q, pol.trunc);
}

std::function<CScalar(double)> fourfour_integrand(const Sample& s, CScalar f,
                                                  const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d0 = s.get("d"), g = s.get("g"),
            h = s.get("h"), k = s.get("k");
    return ratio_integrand({c0 * f, q.value() * d0 / f},
                           {f / d0, q.value() / (f * c0), k, a * b * c0 * d0 * g * h / k},
                           {c0, d0}, {a, b, g, h}, 1.0, q, pol.trunc);
}

/// peak/|value| bounds the relative accuracy binary64 node sums can reach;
/// beyond ~1e7 the 1e-7 tolerances are out of range.
bool integral_resolvable(const std::function<CScalar(double)>& integrand, CScalar value,
                         double max_ratio) {
    double peak = integrand_peak(integrand);
    return std::isfinite(peak) && std::abs(value) * max_ratio > peak;
}

Sample draw_aw_like(std::mt19937_64& rng, const RunPolicies& pol, int count, double r_lo,
                    double r_hi) {
    Sample s;
    s.q = pick_q(rng, pol);
    for (int i = 1; i <= count; ++i)
        s.set("a" + std::to_string(i), annulus(rng, r_lo, r_hi));
    return s;
}

bool wphi_guards_ok(CScalar b, std::span<const CScalar> tail, const Nome& q,
                    const OmegaGuard& guard) {
    CScalar sb = std::sqrt(b);
    if (!omega_ok(sb, q, guard) || !omega_ok(-sb, q, guard)) return false;
    // numerators near Omega_q would half-trigger termination detection
    for (CScalar n : {b, q.value() * sb, -q.value() * sb})
        if (std::abs(n) > 0.999 && !omega_ok(n, q, guard)) return false;
    for (const auto& t : tail) {
        if (!omega_ok(q.value() * b / t, q, guard)) return false;
        if (std::abs(t) > 0.999 && !omega_ok(t, q, guard)) return false;
    }
    return true;
}

// ---- the cases -----------------------------------------------------------

IdentityCase make_awint() {
    IdentityCase c;
    c.id = "AWint";
    c.anchor = "Askey-Wilson integral: full weight integral equals the closed product form";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_aw_like(rng, pol, 4, 0.05, 0.5);
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 4);
        return poch_den_ok(pairprods(a), q) && poch_den_ok({product(a)}, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 4);
        return 0.5 * integrate_periodic(aw_integrand({}, a, q, pol.trunc), pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return awint_rhs(get_seq(s, "a", 4), nm(s), pol.trunc);
    };
    return c;
}

IdentityCase make_nrint() {
    IdentityCase c;
    c.id = "NRint";
    c.anchor = "Nassrallah-Rahman integral in symmetrical form (8W7-weighted RHS)";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s = draw_aw_like(rng, pol, 5, 0.05, 0.4);
        s.set("lambda", annulus(rng, 0.15, 0.8));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 5);
        CScalar lam = s.get("lambda");
        if (std::abs(product(a)) >= std::abs(lam)) return false;
        std::vector<CScalar> tail;
        for (const auto& ai : a) tail.push_back(lam / ai);
        if (!wphi_guards_ok(lam * lam / q.value(), tail, q, pol.guard)) return false;
        auto dens = pairprods(a);
        dens.push_back(lam * lam);
        return poch_den_ok(dens, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        return 0.5 * integrate_periodic(
                         aw_integrand({s.get("lambda")}, get_seq(s, "a", 5), q, pol.trunc),
                         pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return nrint_rhs(get_seq(s, "a", 5), s.get("lambda"), nm(s), pol.trunc, pol.guard);
    };
    return c;
}

IdentityCase make_nr_to_aw() {
    IdentityCase c;
    c.id = "NR-to-AW";
    c.anchor = "lambda = a5 collapses the Nassrallah-Rahman form to the Askey-Wilson integral";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s = draw_aw_like(rng, pol, 5, 0.05, 0.4);
        s.set("lambda", s.get("a5"));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 5);
        auto dens = pairprods(a);
        dens.push_back(s.get("a5") * s.get("a5"));
        return poch_den_ok(dens, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return nrint_rhs(get_seq(s, "a", 5), s.get("lambda"), nm(s), pol.trunc, pol.guard);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return awint_rhs(get_seq(s, "a", 4), nm(s), pol.trunc);
    };
    return c;
}

IdentityCase make_rint() {
    IdentityCase c;
    c.id = "Rint";
    c.anchor = "Rahman integral: two-term idem sum of 10W9(q,q) under lambda mu = a1..a6";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s = draw_aw_like(rng, pol, 6, 0.1, 0.4);
        CScalar lam = annulus(rng, 0.3, 0.8);
        s.set("lambda", lam);
        s.set("mu", product(get_seq(s, "a", 6)) / lam);
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 6);
        CScalar lam = s.get("lambda"), mu = s.get("mu");
        for (const auto& ai : a) {
            if (!omega_ok(lam / ai, q, pol.guard)) return false;
        }
        std::vector<CScalar> tail1 = {lam * mu / q.value()};
        std::vector<CScalar> tail2 = {lam * mu / q.value()};
        for (const auto& ai : a) {
            tail1.push_back(lam / ai);
            tail2.push_back(mu / ai);
        }
        if (!wphi_guards_ok(lam * lam / q.value(), tail1, q, pol.guard)) return false;
        if (!wphi_guards_ok(mu * mu / q.value(), tail2, q, pol.guard)) return false;
        auto dens = pairprods(a);
        dens.insert(dens.end(), {lam * lam, mu * mu, mu / lam, lam / mu});
        return poch_den_ok(dens, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        return 0.5 *
               integrate_periodic(aw_integrand({s.get("lambda"), s.get("mu")},
                                               get_seq(s, "a", 6), q, pol.trunc),
                                  pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return rint_rhs(get_seq(s, "a", 6), s.get("lambda"), s.get("mu"), nm(s), pol.trunc,
                        pol.guard);
    };
    return c;
}

IdentityCase make_rint_to_nr() {
    IdentityCase c;
    c.id = "Rint-to-NR";
    c.anchor = "mu -> 0 (a6 -> 0) limit of the Rahman integral recovers Nassrallah-Rahman";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s = draw_aw_like(rng, pol, 5, 0.1, 0.4);
        CScalar lam = annulus(rng, 0.3, 0.8);
        CScalar a6 = on_circle(rng, 1e-10);
        s.set("lambda", lam);
        s.set("a6", a6);
        s.set("mu", product(get_seq(s, "a", 5)) * a6 / lam);
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a5 = get_seq(s, "a", 5);
        CScalar lam = s.get("lambda"), mu = s.get("mu");
        for (const auto& ai : a5)
            if (!omega_ok(lam / ai, q, pol.guard)) return false;
        std::vector<CScalar> t5;
        for (const auto& ai : a5) t5.push_back(lam / ai);
        if (!wphi_guards_ok(lam * lam / q.value(), t5, q, pol.guard)) return false;
        auto dens = pairprods(a5);
        dens.insert(dens.end(), {lam * lam, lam / mu, q.value() * lam / mu});
        return poch_den_ok(dens, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return rint_rhs(get_seq(s, "a", 6), s.get("lambda"), s.get("mu"), nm(s), pol.trunc,
                        pol.guard);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return nrint_rhs(get_seq(s, "a", 5), s.get("lambda"), nm(s), pol.trunc, pol.guard);
    };
    return c;
}

IdentityCase make_arint() {
    IdentityCase c;
    c.id = "ARint";
    c.anchor = "Askey-Roy q-beta integral";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        double sigma = uniform(rng, 0.9, 1.1);
        s.set("sigma", sigma);
        s.set("a", annulus(rng, 0.05, 0.75 * sigma));
        s.set("b", annulus(rng, 0.05, 0.75 * sigma));
        s.set("c", annulus(rng, 0.05, 0.75 / sigma));
        s.set("d", annulus(rng, 0.05, 0.75 / sigma));
        s.set("f", annulus(rng, 0.4, 1.6));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar f = s.get("f"), c0 = s.get("c"), d0 = s.get("d");
        for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
            if (!theta_ok(ff, q, pol.guard) || !theta_ok(ff * c0 / d0, q, pol.guard)) return false;
        }
        if (!poch_den_ok({s.get("a") * c0, s.get("a") * d0, s.get("b") * c0, s.get("b") * d0},
                         q))
            return false;
        for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
            CScalar val = arint_rhs(s.get("a"), s.get("b"), c0, d0, ff, q, pol.trunc);
            if (!integral_resolvable(arint_integrand(s, ff, pol), val, 3e6)) return false;
        }
        return true;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return integrate_periodic(arint_integrand(s, s.get("f"), pol), pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return arint_rhs(s.get("a"), s.get("b"), s.get("c"), s.get("d"), s.get("f"), nm(s),
                         pol.trunc);
    };
    c.extra.push_back({"f-independence",
                       with_scaled(c.lhs, "f", 1.07 * std::polar(1.0, 0.41)),
                       with_scaled(c.rhs, "f", 1.07 * std::polar(1.0, 0.41))});
    return c;
}

IdentityCase make_gint() {
    IdentityCase c;
    c.id = "Gint";
    c.anchor = "Gasper q-beta integral extending Askey-Roy";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        double sigma = uniform(rng, 0.9, 1.1);
        s.set("sigma", sigma);
        s.set("a", annulus(rng, 0.05, 0.75 * sigma));
        s.set("b", annulus(rng, 0.05, 0.75 * sigma));
        s.set("e", annulus(rng, 0.05, 0.75 * sigma));
        s.set("c", annulus(rng, 0.05, 0.75 / sigma));
        s.set("d", annulus(rng, 0.05, 0.75 / sigma));
        s.set("f", annulus(rng, 0.4, 1.6));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar f = s.get("f"), c0 = s.get("c"), d0 = s.get("d");
        for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
            if (!theta_ok(ff, q, pol.guard) || !theta_ok(ff * c0 / d0, q, pol.guard)) return false;
        }
        CScalar a = s.get("a"), b = s.get("b"), e = s.get("e");
        if (!poch_den_ok({a * c0, a * d0, b * c0, b * d0, c0 * e, d0 * e}, q)) return false;
        for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
            CScalar val = gint_rhs(a, s.get("b"), c0, d0, e, ff, q, pol.trunc);
            if (!integral_resolvable(gint_integrand(s, ff, pol), val, 3e6)) return false;
        }
        return true;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return integrate_periodic(gint_integrand(s, s.get("f"), pol), pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return gint_rhs(s.get("a"), s.get("b"), s.get("c"), s.get("d"), s.get("e"), s.get("f"),
                        nm(s), pol.trunc);
    };
    c.extra.push_back({"f-independence",
                       with_scaled(c.lhs, "f", 1.07 * std::polar(1.0, 0.41)),
                       with_scaled(c.rhs, "f", 1.07 * std::polar(1.0, 0.41))});
    return c;
}

IdentityCase make_gint_to_ar() {
    IdentityCase c;
    c.id = "Gint-to-AR";
    c.anchor = "e = 0 reduces the Gasper integral to the Askey-Roy integral";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        s.set("a", annulus(rng, 0.05, 0.75));
        s.set("b", annulus(rng, 0.05, 0.75));
        s.set("c", annulus(rng, 0.05, 0.75));
        s.set("d", annulus(rng, 0.05, 0.75));
        s.set("f", annulus(rng, 0.4, 1.6));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar f = s.get("f"), c0 = s.get("c"), d0 = s.get("d");
        return theta_ok(f, q, pol.guard) && theta_ok(f * c0 / d0, q, pol.guard) &&
               poch_den_ok({s.get("a") * c0, s.get("a") * d0, s.get("b") * c0, s.get("b") * d0},
                           q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return gint_rhs(s.get("a"), s.get("b"), s.get("c"), s.get("d"), CScalar(0.0), s.get("f"),
                        nm(s), pol.trunc);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return arint_rhs(s.get("a"), s.get("b"), s.get("c"), s.get("d"), s.get("f"), nm(s),
                         pol.trunc);
    };
    return c;
}

IdentityCase make_fourfour() {
    IdentityCase c;
    c.id = "fourfour";
    c.anchor = "8W7-weighted integral (Exercise-4.4 consequence of the H/J theorem)";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        for (const char* n : {"a", "b", "g", "h", "c", "d"}) s.set(n, annulus(rng, 0.05, 0.6));
        s.set("k", annulus(rng, 0.35, 0.9));
        s.set("f", annulus(rng, 0.4, 1.6));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d0 = s.get("d"), g = s.get("g"),
                h = s.get("h"), k = s.get("k"), f = s.get("f");
        if (std::abs(a * b * c0 * d0 * h) >= std::abs(k)) return false;
        for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
            if (!theta_ok(ff, q, pol.guard) || !theta_ok(ff * c0 / d0, q, pol.guard)) return false;
        }
        std::vector<CScalar> tail = {c0 * g, d0 * g, k / a, k / b, k / h};
        if (!wphi_guards_ok(k * c0 * d0 * g / q.value(), tail, q, pol.guard)) return false;
        if (!poch_den_ok({a * c0, a * d0, b * c0, b * d0, c0 * g, d0 * g, c0 * h, d0 * h,
                          k * c0 * d0 * g},
                         q))
            return false;
        for (CScalar ff : {f, 1.07 * f * std::polar(1.0, 0.41)}) {
            CScalar val = fourfour_rhs(a, b, c0, d0, g, h, k, ff, q, pol.trunc, pol.guard);
            if (!integral_resolvable(fourfour_integrand(s, ff, pol), val, 3e6)) return false;
        }
        return true;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return integrate_periodic(fourfour_integrand(s, s.get("f"), pol), pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return fourfour_rhs(s.get("a"), s.get("b"), s.get("c"), s.get("d"), s.get("g"),
                            s.get("h"), s.get("k"), s.get("f"), nm(s), pol.trunc, pol.guard);
    };
    c.extra.push_back({"f-independence",
                       with_scaled(c.lhs, "f", 1.07 * std::polar(1.0, 0.41)),
                       with_scaled(c.rhs, "f", 1.07 * std::polar(1.0, 0.41))});
    return c;
}

IdentityCase make_fourfour_to_gint() {
    IdentityCase c;
    c.id = "fourfour-to-Gint";
    c.anchor = "h = k collapses the 8W7-weighted integral to Gasper's integral (g as e)";
    c.tol = 1e-7;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        for (const char* n : {"a", "b", "g", "c", "d"}) s.set(n, annulus(rng, 0.05, 0.6));
        s.set("k", annulus(rng, 0.35, 0.9));
        s.set("f", annulus(rng, 0.4, 1.6));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d0 = s.get("d"), g = s.get("g"),
                k = s.get("k"), f = s.get("f");
        if (!theta_ok(f, q, pol.guard) || !theta_ok(f * c0 / d0, q, pol.guard)) return false;
        // tail entry k/h = 1 terminates the 8W7 at order 0 by design; guard the rest
        std::vector<CScalar> tail = {c0 * g, d0 * g, k / a, k / b};
        if (!wphi_guards_ok(k * c0 * d0 * g / q.value(), tail, q, pol.guard)) return false;
        return poch_den_ok({a * c0, a * d0, b * c0, b * d0, c0 * g, d0 * g, c0 * k, d0 * k,
                            k * c0 * d0 * g},
                           q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        CScalar k = s.get("k");
        return fourfour_rhs(s.get("a"), s.get("b"), s.get("c"), s.get("d"), s.get("g"), k, k,
                            s.get("f"), nm(s), pol.trunc, pol.guard);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return gint_rhs(s.get("a"), s.get("b"), s.get("c"), s.get("d"), s.get("g"), s.get("f"),
                        nm(s), pol.trunc);
    };
    return c;
}

/// Moduli in [0.78, 0.88] with jittered-equispaced phases: the idem ratios
/// a_i/a_j then stay away from the positive real axis, where the
/// symmetrized sums lose all their significance to cancellation.
void draw_idem_set(std::mt19937_64& rng, Sample& s, int count) {
    auto phases = sampling::stratified_phases(rng, count);
    for (int i = 1; i <= count; ++i)
        s.set("a" + std::to_string(i),
              std::polar(uniform(rng, 0.78, 0.88), phases[static_cast<std::size_t>(i - 1)]));
}

IdentityCase make_genrah() {
    IdentityCase c;
    c.id = "genRah";
    c.anchor = "generalized Rahman integral without the lambda mu constraint (six 10W9 idem sum)";
    c.tol = 1e-6;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        draw_idem_set(rng, s, 6);
        double aprod = std::abs(product(get_seq(s, "a", 6)));
        double pm = uniform(rng, 0.15, 0.75) * aprod / std::abs(s.q);
        double split = std::exp(uniform(rng, -0.25, 0.25));
        s.set("lambda", on_circle(rng, std::sqrt(pm) * split));
        s.set("mu", on_circle(rng, std::sqrt(pm) / split));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 6);
        CScalar lam = s.get("lambda"), mu = s.get("mu");
        if (!(std::abs(q.value() * lam * mu) < 0.9 * std::abs(product(a)))) return false;
        std::vector<CScalar> dens;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (i != j) dens.push_back(a[i] / a[j]);
        auto pp = pairprods(a);
        dens.insert(dens.end(), pp.begin(), pp.end());
        if (!poch_den_ok(dens, q)) return false;
        for (const auto& ai : a) {
            if (!omega_ok(q.value() * ai / lam, q, pol.guard)) return false;
            if (!omega_ok(q.value() * ai / mu, q, pol.guard)) return false;
            if (!omega_ok(ai * ai, q, pol.guard)) return false;
            for (const auto& aj : a)
                if (&ai != &aj && !omega_ok(q.value() * ai / aj, q, pol.guard)) return false;
        }
        double cond = 0;
        genrah_rhs(a, lam, mu, q, pol.trunc, pol.guard, &cond);
        return cond < kMaxIdemCondition;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        return integrate_periodic(aw_integrand({s.get("lambda"), s.get("mu")},
                                               get_seq(s, "a", 6), q, pol.trunc),
                                  pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return genrah_rhs(get_seq(s, "a", 6), s.get("lambda"), s.get("mu"), nm(s), pol.trunc,
                          pol.guard);
    };
    return c;
}

IdentityCase make_sym10w9() {
    IdentityCase c;
    c.id = "sym-10W9";
    c.anchor = "six-term 10W9(q,q) idem sum equals twice the two-term sum (lambda mu = a1..a6)";
    c.tol = 1e-6;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        draw_idem_set(rng, s, 6);
        CScalar aprod = product(get_seq(s, "a", 6));
        double split = std::exp(uniform(rng, -0.35, 0.35));
        CScalar lam = on_circle(rng, std::sqrt(std::abs(aprod)) * split);
        s.set("lambda", lam);
        s.set("mu", aprod / lam);
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 6);
        CScalar lam = s.get("lambda"), mu = s.get("mu");
        std::vector<CScalar> dens;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (i != j) dens.push_back(a[i] / a[j]);
        auto pp = pairprods(a);
        dens.insert(dens.end(), pp.begin(), pp.end());
        dens.insert(dens.end(), {lam * lam, mu * mu, mu / lam, lam / mu});
        if (!poch_den_ok(dens, q)) return false;
        for (const auto& ai : a) {
            if (!omega_ok(q.value() * ai / lam, q, pol.guard)) return false;
            if (!omega_ok(q.value() * ai / mu, q, pol.guard)) return false;
            if (!omega_ok(ai * ai, q, pol.guard)) return false;
            for (const auto& aj : a)
                if (&ai != &aj && !omega_ok(q.value() * ai / aj, q, pol.guard)) return false;
        }
        std::vector<CScalar> t1 = {lam * mu / q.value()}, t2 = {lam * mu / q.value()};
        for (const auto& ai : a) {
            t1.push_back(lam / ai);
            t2.push_back(mu / ai);
        }
        if (!wphi_guards_ok(lam * lam / q.value(), t1, q, pol.guard) ||
            !wphi_guards_ok(mu * mu / q.value(), t2, q, pol.guard))
            return false;
        double cond = 0;
        genrah_rhs(a, lam, mu, q, pol.trunc, pol.guard, &cond);
        return cond < kMaxIdemCondition;
    };
    // both sides as printed: LHS the six-term sum, RHS twice the two-term sum
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar norm = qpoch_infinite(q.value(), q, pol.trunc) / (2.0 * kPi);
        return genrah_rhs(get_seq(s, "a", 6), s.get("lambda"), s.get("mu"), nm(s), pol.trunc,
                          pol.guard) *
               norm;
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 6);
        ScaledComplex front = ScaledComplex(CScalar(2.0));
        front /= scprod(pairprods(a), q, pol.trunc);
        auto term = [&](CScalar l, CScalar m) {
            ScaledComplex t = scprod(scale_all(a, l), q, pol.trunc);
            for (const auto& ai : a) t *= qpoch_infinite_scaled(m / ai, q, pol.trunc);
            t /= scprod({l * l, m / l}, q, pol.trunc);
            std::vector<CScalar> tail = {l * m / q.value()};
            for (const auto& ai : a) tail.push_back(l / ai);
            t *= ScaledComplex(wphi(l * l / q.value(), tail, q, q.value(), pol.trunc, pol.guard));
            return t;
        };
        ScaledComplex total = term(s.get("lambda"), s.get("mu"));
        total += term(s.get("mu"), s.get("lambda"));
        total *= front;
        return total.value();
    };
    return c;
}

IdentityCase make_altnr() {
    IdentityCase c;
    c.id = "altNR";
    c.anchor = "alternative Nassrallah-Rahman form: five-term 8W7 idem sum";
    c.tol = 1e-6;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        draw_idem_set(rng, s, 5);
        double aprod = std::abs(product(get_seq(s, "a", 5)));
        double r = uniform(rng, 0.45, 0.85) * aprod / std::abs(s.q);
        s.set("lambda", on_circle(rng, r));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 5);
        CScalar lam = s.get("lambda");
        if (!(std::abs(q.value() * lam) < 0.9 * std::abs(product(a)))) return false;
        std::vector<CScalar> dens;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (i != j) dens.push_back(a[i] / a[j]);
        auto pp = pairprods(a);
        dens.insert(dens.end(), pp.begin(), pp.end());
        if (!poch_den_ok(dens, q)) return false;
        for (const auto& ai : a) {
            if (!omega_ok(q.value() * ai / lam, q, pol.guard)) return false;
            if (!omega_ok(ai * ai, q, pol.guard)) return false;
            for (const auto& aj : a)
                if (&ai != &aj && !omega_ok(q.value() * ai / aj, q, pol.guard)) return false;
        }
        double cond = 0;
        altnr_rhs(a, lam, q, pol.trunc, pol.guard, &cond);
        return cond < kMaxIdemCondition;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        return integrate_periodic(
            aw_integrand({s.get("lambda")}, get_seq(s, "a", 5), q, pol.trunc), pol.quad);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        return altnr_rhs(get_seq(s, "a", 5), s.get("lambda"), nm(s), pol.trunc, pol.guard);
    };
    return c;
}

CScalar compnr_lhs_sum(std::span<const CScalar> a, CScalar lam, const Nome& q,
                       const TruncationPolicy& tp, const OmegaGuard& guard,
                       double* cond_out = nullptr) {
    CScalar aprod = product(a);
    CScalar z = q.value() * lam / aprod;
    std::vector<CScalar> v(a.begin(), a.end());
    ScaledComplex total = idem_sum_cond(
        v,
        [&](const std::vector<CScalar>& w) {
            CScalar a1 = w[0];
            ScaledComplex t = scprod({lam * a1, CScalar(1.0) / (a1 * a1), lam / a1}, q, tp);
            std::vector<CScalar> tail, dens;
            for (std::size_t j = 1; j < w.size(); ++j) {
                tail.push_back(a1 * w[j]);
                dens.push_back(a1 * w[j]);
                dens.push_back(w[j] / a1);
            }
            t /= scprod(dens, q, tp);
            tail.push_back(q.value() * a1 / lam);
            t *= ScaledComplex(wphi(a1 * a1, tail, q, z, tp, guard));
            return t;
        },
        cond_out);
    return total.value();
}

IdentityCase make_compnr() {
    IdentityCase c;
    c.id = "compNR";
    c.anchor = "five-term 8W7 idem sum equals a single symmetric 8W7";
    c.tol = 1e-6;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        draw_idem_set(rng, s, 5);
        double qa = std::abs(s.q);
        double u = uniform(rng, qa + 0.1 * (1.0 - qa), 0.9);
        CScalar v = on_circle(rng, u);  // target a1..a5/lambda
        s.set("lambda", product(get_seq(s, "a", 5)) / v);
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 5);
        CScalar lam = s.get("lambda");
        double ratio = std::abs(product(a) / lam);
        if (!(ratio < 0.95 && ratio > std::abs(q.value()) * 1.05)) return false;
        std::vector<CScalar> dens;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (i != j) dens.push_back(a[i] / a[j]);
        auto pp = pairprods(a);
        dens.insert(dens.end(), pp.begin(), pp.end());
        dens.push_back(lam * lam);
        if (!poch_den_ok(dens, q)) return false;
        std::vector<CScalar> tailc;
        for (const auto& ai : a) {
            if (!omega_ok(q.value() * ai / lam, q, pol.guard)) return false;
            if (!omega_ok(ai * ai, q, pol.guard)) return false;
            tailc.push_back(lam / ai);
            for (const auto& aj : a)
                if (&ai != &aj && !omega_ok(q.value() * ai / aj, q, pol.guard)) return false;
        }
        if (!wphi_guards_ok(lam * lam / q.value(), tailc, q, pol.guard)) return false;
        double cond = 0;
        compnr_lhs_sum(a, lam, q, pol.trunc, pol.guard, &cond);
        return cond < kMaxIdemCondition;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return compnr_lhs_sum(get_seq(s, "a", 5), s.get("lambda"), nm(s), pol.trunc, pol.guard);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 5);
        CScalar lam = s.get("lambda");
        CScalar aprod = product(a);
        ScaledComplex t = ScaledComplex(CScalar(2.0));
        t *= scprod(scale_all(a, lam), q, pol.trunc);
        t *= qpoch_infinite_scaled(aprod / lam, q, pol.trunc);
        t /= scprod(pairprods(a), q, pol.trunc);
        t /= qpoch_infinite_scaled(lam * lam, q, pol.trunc);
        std::vector<CScalar> tail;
        for (const auto& ai : a) tail.push_back(lam / ai);
        return t.value() * wphi(lam * lam / q.value(), tail, q, aprod / lam, pol.trunc, pol.guard);
    };
    return c;
}

CScalar sum6w5_lhs_sum(std::span<const CScalar> a, const Nome& q, const TruncationPolicy& tp,
                       const OmegaGuard& guard, double* cond_out = nullptr) {
    CScalar z = q.value() / product(a);
    std::vector<CScalar> v(a.begin(), a.end());
    ScaledComplex total = idem_sum_cond(
        v,
        [&](const std::vector<CScalar>& w) {
            CScalar a1 = w[0];
            ScaledComplex t = qpoch_infinite_scaled(CScalar(1.0) / (a1 * a1), q, tp);
            t /= scprod({a1 * w[1], a1 * w[2], a1 * w[3], w[1] / a1, w[2] / a1, w[3] / a1}, q,
                        tp);
            std::vector<CScalar> tail = {a1 * w[1], a1 * w[2], a1 * w[3]};
            t *= ScaledComplex(wphi(a1 * a1, tail, q, z, tp, guard));
            return t;
        },
        cond_out);
    return total.value();
}

IdentityCase make_sum6w5() {
    IdentityCase c;
    c.id = "sum-6W5";
    c.anchor = "four-term 6W5 idem sum equals twice an infinite product (|q| < |a1..a4| < 1)";
    c.tol = 1e-6;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        double qa = std::abs(s.q);
        double r_lo = std::pow(1.12 * qa, 0.25);
        auto phases = sampling::stratified_phases(rng, 4);
        for (int i = 1; i <= 4; ++i)
            s.set("a" + std::to_string(i),
                  std::polar(uniform(rng, r_lo, 0.97), phases[static_cast<std::size_t>(i - 1)]));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 4);
        double pr = std::abs(product(a));
        if (!(pr > 1.05 * std::abs(q.value()) && pr < 0.985)) return false;
        std::vector<CScalar> dens;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (i != j) dens.push_back(a[i] / a[j]);
        auto pp = pairprods(a);
        dens.insert(dens.end(), pp.begin(), pp.end());
        if (!poch_den_ok(dens, q)) return false;
        for (const auto& ai : a) {
            if (!omega_ok(ai, q, pol.guard) || !omega_ok(-ai, q, pol.guard)) return false;
            if (!omega_ok(ai * ai, q, pol.guard)) return false;
            if (!theta_ok(CScalar(1.0) / (ai * ai), q, pol.guard)) return false;
            for (const auto& aj : a) {
                if (&ai == &aj) continue;
                if (!omega_ok(q.value() * ai / aj, q, pol.guard)) return false;
                if (!theta_ok(ai / aj, q, pol.guard)) return false;
                if (!theta_ok(ai * aj, q, pol.guard)) return false;
            }
        }
        if (!theta_ok(product(a), q, pol.guard)) return false;
        double cond = 0;
        sum6w5_lhs_sum(a, q, pol.trunc, pol.guard, &cond);
        return cond < kMaxIdemCondition;
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return sum6w5_lhs_sum(get_seq(s, "a", 4), nm(s), pol.trunc, pol.guard);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 4);
        ScaledComplex t = ScaledComplex(CScalar(2.0));
        t *= qpoch_infinite_scaled(product(a), q, pol.trunc);
        t /= scprod(pairprods(a), q, pol.trunc);
        return t.value();
    };
    // the printed middle route: idem sum of theta ratios collapses to the constant 2
    c.extra.push_back(
        {"theta-ratio-route",
         [](const Sample& s, const RunPolicies& pol) {
             Nome q = nm(s);
             auto a = get_seq(s, "a", 4);
             ScaledComplex total = idem_sum(a, [&](const std::vector<CScalar>& w) {
                 CScalar a1 = w[0];
                 ScaledComplex t = theta_scaled(CScalar(1.0) / (a1 * a1), q, pol.trunc);
                 t *= theta_scaled(w[1] * w[2], q, pol.trunc);
                 t *= theta_scaled(w[1] * w[3], q, pol.trunc);
                 t *= theta_scaled(w[2] * w[3], q, pol.trunc);
                 t /= theta_scaled(product(w), q, pol.trunc);
                 t /= theta_scaled(w[1] / a1, q, pol.trunc);
                 t /= theta_scaled(w[2] / a1, q, pol.trunc);
                 t /= theta_scaled(w[3] / a1, q, pol.trunc);
                 return t;
             });
             ScaledComplex front = qpoch_infinite_scaled(product(a), q, pol.trunc);
             front /= scprod(pairprods(a), q, pol.trunc);
             total *= front;
             return total.value();
         },
         c.rhs});
    return c;
}

}  // namespace

void register_qbeta_cases(std::vector<IdentityCase>& out) {
    out.push_back(make_awint());
    out.push_back(make_nrint());
    out.push_back(make_nr_to_aw());
    out.push_back(make_rint());
    out.push_back(make_rint_to_nr());
    out.push_back(make_arint());
    out.push_back(make_gint());
    out.push_back(make_gint_to_ar());
    out.push_back(make_fourfour());
    out.push_back(make_fourfour_to_gint());
    out.push_back(make_genrah());
    out.push_back(make_sym10w9());
    out.push_back(make_altnr());
    out.push_back(make_compnr());
    out.push_back(make_sum6w5());
}

}  // namespace qk::detail
