// Askey-Wilson / continuous dual q-Hahn integral representations and the
// generating functions derived from them.

#include <cmath>

#include "qkernel/askey_wilson.hpp"
#include "registry_common.hpp"
#include "registry_detail.hpp"

namespace qk::detail {

namespace {

using sampling::annulus;
using sampling::annulus_clearance;
using sampling::omega_ok;
using sampling::poch_den_ok;
using sampling::theta_ok;
using sampling::uniform;

/// Truncated generating-function sum  sum_n coef(n) p_n  with the series
/// stop rule; pseq caps the depth (60 terms by construction).
CScalar gf_sum(std::span<const CScalar> pseq, const std::function<CScalar(int)>& coef,
               const TruncationPolicy& tp) {
    CScalar sum = 0.0;
    int below = 0;
    for (std::size_t n = 0; n < pseq.size(); ++n) {
        CScalar term = coef(static_cast<int>(n)) * pseq[n];
        sum += term;
        below = (std::abs(term) <= tp.eps_term * std::max(1.0, std::abs(sum))) ? below + 1 : 0;
        if (below >= tp.k_consecutive) break;
    }
    effort::note_series_terms(static_cast<int>(pseq.size()));
    return sum;
}

constexpr int kGfDepth = 60;

/// Deterministic sigma with the best pole clearance on a log grid.
double best_sigma(std::span<const CScalar> su_denoms, std::span<const CScalar> zs_denoms,
                  double lo, double hi, const Nome& q) {
    double best = std::sqrt(lo * hi), best_clear = 0.0;
    for (int k = 0; k <= 160; ++k) {
        double sg = lo * std::pow(hi / lo, k / 160.0);
        double cl = annulus_clearance(su_denoms, zs_denoms, sg, q);
        if (cl > best_clear) {
            best_clear = cl;
            best = sg;
        }
    }
    return best;
}

ScaledComplex conj_pair_poch(CScalar x, double th, const Nome& q, const TruncationPolicy& tp) {
    auto p = conj_pair(x, th);
    ScaledComplex r = qpoch_infinite_scaled(p[0], q, tp);
    r *= qpoch_infinite_scaled(p[1], q, tp);
    return r;
}

// --- Askey-Wilson / cdqH integral representations ---------------------------

Sample draw_ir(std::mt19937_64& rng, const RunPolicies& pol, bool with_d) {
    Sample s;
    s.q = pick_q(rng, pol);
    s.set("a", annulus(rng, 0.15, 0.6));
    s.set("b", annulus(rng, 0.15, 0.6));
    s.set("c", annulus(rng, 0.15, 0.6));
    if (with_d) s.set("d", annulus(rng, 0.15, 0.6));
    s.set("n", CScalar(std::floor(uniform(rng, 0.0, 6.999))));
    s.set("theta", uniform(rng, 0.3, kPi - 0.3));
    s.set("f", annulus(rng, 0.4, 1.7));
    return s;
}

bool ir_admissible_common(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    CScalar f = s.get("f");
    double th = s.getr("theta");
    return theta_ok(f, q, pol.guard) && theta_ok(f * std::polar(1.0, 2.0 * th), q, pol.guard);
}

/// Common prefactor (q, a e^{+-i th}, b e^{+-i th}, c e^{+-i th};q)inf
/// (ab,ac,bc;q)_n / (2 pi theta(f, f e^{2 i th};q) (ab,ac,bc;q)inf).
ScaledComplex ir_prefactor_abc(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    double th = s.getr("theta");
    int n = s.geti("n");
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), f = s.get("f");
    ScaledComplex pre = qpoch_infinite_scaled(q.value(), q, pol.trunc);
    pre *= conj_pair_poch(a, th, q, pol.trunc);
    pre *= conj_pair_poch(b, th, q, pol.trunc);
    pre *= conj_pair_poch(c0, th, q, pol.trunc);
    pre *= ScaledComplex(qpoch_finite(std::array<CScalar, 3>{a * b, a * c0, b * c0}, q, n));
    pre /= theta_scaled(f, q, pol.trunc);
    pre /= theta_scaled(f * std::polar(1.0, 2.0 * th), q, pol.trunc);
    pre /= scprod({a * b, a * c0, b * c0}, q, pol.trunc);
    pre /= ScaledComplex(CScalar(2.0 * kPi));
    return pre;
}

std::function<CScalar(double)> iraw_integrand(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    double th = s.getr("theta");
    int n = s.geti("n");
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d = s.get("d"), f = s.get("f");
    CScalar eip = std::polar(1.0, th), eim = std::conj(eip);
    CScalar abc = a * b * c0;
    std::vector<CScalar> zs_d = {a, b, c0, abc};
    std::vector<CScalar> su_d = {eip, eim};
    double sigma = best_sigma(su_d, zs_d, 0.65, 0.95, q);
    return [=](double psi) -> CScalar {
        CScalar z = std::polar(1.0, psi);
        CScalar su = sigma / z, zs = z / sigma;
        CScalar num = qpoch_infinite(f * eip * su, q, pol.trunc) *
                      qpoch_infinite(q.value() / f * eim * su, q, pol.trunc) *
                      qpoch_infinite(f * eip * zs, q, pol.trunc) *
                      qpoch_infinite(q.value() / f * eim * zs, q, pol.trunc) *
                      qpoch_infinite(abc * zs, q, pol.trunc);
        CScalar den = qpoch_infinite(eip * su, q, pol.trunc) *
                      qpoch_infinite(eim * su, q, pol.trunc) *
                      qpoch_infinite(a * zs, q, pol.trunc) *
                      qpoch_infinite(b * zs, q, pol.trunc) *
                      qpoch_infinite(c0 * zs, q, pol.trunc);
        CScalar ratio = qpoch_finite(d * su, q, n) / qpoch_finite(abc * zs, q, n);
        return num / den * ratio * powi(zs, n);
    };
}

CScalar ir_poly_lhs(const Sample& s, const RunPolicies& pol, bool with_d) {
    if (with_d) {
        AWParams p{s.get("a"), s.get("b"), s.get("c"), s.get("d"), nm(s)};
        return askey_wilson(s.geti("n"), std::cos(s.getr("theta")), p, pol.trunc);
    }
    CDQHParams p{s.get("a"), s.get("b"), s.get("c"), nm(s)};
    return cdqhahn(s.geti("n"), std::cos(s.getr("theta")), p, pol.trunc);
}

/// The contour integral must be large enough against the integrand peak
/// for the node sums to resolve it; the expected magnitude is the
/// polynomial value divided by the closed prefactor.
bool ir_resolvable(const std::function<CScalar(double)>& integrand, CScalar poly,
                   const ScaledComplex& pref, double max_ratio = 3e5) {
    CScalar expected = poly / pref.value();
    if (!is_finite(expected)) return false;
    return std::abs(expected) * max_ratio > integrand_peak(integrand);
}

IdentityCase make_iraw() {
    IdentityCase c;
    c.id = "IRAW";
    c.anchor = "contour-integral representation of the Askey-Wilson polynomial (D_n form)";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_ir(rng, pol, true);
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        if (!ir_admissible_common(s, pol)) return false;
        return ir_resolvable(iraw_integrand(s, pol), ir_poly_lhs(s, pol, true),
                             ir_prefactor_abc(s, pol));
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) { return ir_poly_lhs(s, pol, true); };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        CScalar dn = integrate_periodic(iraw_integrand(s, pol), pol.quad);
        return ir_prefactor_abc(s, pol).value() * dn;
    };
    return c;
}

std::function<CScalar(double)> iraw2_integrand(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    double th = s.getr("theta");
    int n = s.geti("n");
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d = s.get("d"), f = s.get("f");
    CScalar eip = std::polar(1.0, th), eim = std::conj(eip);
    CScalar abc = a * b * c0;
    // the reciprocal-pair denominators put their poles outside only for
    // sigma in (1/min pair, 1/|abc|), above the unit circle
    double m = std::min({std::abs(a * b), std::abs(a * c0), std::abs(b * c0)});
    double sigma = std::sqrt(1.05 / m * 0.95 / std::abs(abc));
    return [=](double psi) -> CScalar {
        CScalar z = std::polar(1.0, psi);
        CScalar su = sigma / z, zs = z / sigma;
        CScalar num = qpoch_infinite(f * abc * eip * su, q, pol.trunc) *
                      qpoch_infinite(q.value() / f * abc * eim * su, q, pol.trunc) *
                      qpoch_infinite(f / abc * eip * zs, q, pol.trunc) *
                      qpoch_infinite(q.value() / (f * abc) * eim * zs, q, pol.trunc) *
                      qpoch_infinite(zs, q, pol.trunc);
        CScalar den = qpoch_infinite(abc * eip * su, q, pol.trunc) *
                      qpoch_infinite(abc * eim * su, q, pol.trunc) *
                      qpoch_infinite(zs / (a * b), q, pol.trunc) *
                      qpoch_infinite(zs / (a * c0), q, pol.trunc) *
                      qpoch_infinite(zs / (b * c0), q, pol.trunc);
        CScalar ratio = qpoch_finite(abc * d * su, q, n) / qpoch_finite(zs, q, n);
        return num / den * ratio * powi(zs / abc, n);
    };
}

IdentityCase make_iraw2() {
    IdentityCase c;
    c.id = "IRAW2";
    c.anchor = "second integral representation of the Askey-Wilson polynomial";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_ir(rng, pol, true);
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        if (!ir_admissible_common(s, pol)) return false;
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c");
        double m = std::min({std::abs(a * b), std::abs(a * c0), std::abs(b * c0)});
        if (!(0.95 * m > 1.1 * std::abs(a * b * c0))) return false;  // separating window
        return ir_resolvable(iraw2_integrand(s, pol), ir_poly_lhs(s, pol, true),
                             ir_prefactor_abc(s, pol));
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) { return ir_poly_lhs(s, pol, true); };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        CScalar dn = integrate_periodic(iraw2_integrand(s, pol), pol.quad);
        return ir_prefactor_abc(s, pol).value() * dn;
    };
    return c;
}

std::function<CScalar(double)> ircdq_integrand(const Sample& s, int variant,
                                               const RunPolicies& pol) {
    Nome q = nm(s);
    double th = s.getr("theta");
    int n = s.geti("n");
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), f = s.get("f");
    CScalar eip = std::polar(1.0, th), eim = std::conj(eip);
    CScalar abc = a * b * c0;
    if (variant == 0) {
        // E_n: arises from the full representation with the third parameter
        // at 0 and c re-entering through (c sigma/z;q)_n, so the
        // (abc z/sigma;q)inf numerator entry drops out
        std::vector<CScalar> zs_d = {a, b};
        std::vector<CScalar> su_d = {eip, eim};
        double sigma = best_sigma(su_d, zs_d, 0.65, 0.95, q);
        return [=](double psi) -> CScalar {
            CScalar z = std::polar(1.0, psi);
            CScalar su = sigma / z, zs = z / sigma;
            CScalar num = qpoch_infinite(f * eip * su, q, pol.trunc) *
                          qpoch_infinite(q.value() / f * eim * su, q, pol.trunc) *
                          qpoch_infinite(f * eip * zs, q, pol.trunc) *
                          qpoch_infinite(q.value() / f * eim * zs, q, pol.trunc);
            CScalar den = qpoch_infinite(eip * su, q, pol.trunc) *
                          qpoch_infinite(eim * su, q, pol.trunc) *
                          qpoch_infinite(a * zs, q, pol.trunc) *
                          qpoch_infinite(b * zs, q, pol.trunc);
            return num / den * qpoch_finite(c0 * su, q, n) * powi(zs, n);
        };
    }
    if (variant == 1) {
        std::vector<CScalar> zs_d = {a, b, c0, abc};
        std::vector<CScalar> su_d = {eip, eim};
        double sigma = best_sigma(su_d, zs_d, 0.65, 0.95, q);
        return [=](double psi) -> CScalar {
            CScalar z = std::polar(1.0, psi);
            CScalar su = sigma / z, zs = z / sigma;
            CScalar num = qpoch_infinite(f * eip * su, q, pol.trunc) *
                          qpoch_infinite(q.value() / f * eim * su, q, pol.trunc) *
                          qpoch_infinite(f * eip * zs, q, pol.trunc) *
                          qpoch_infinite(q.value() / f * eim * zs, q, pol.trunc) *
                          qpoch_infinite(abc * zs, q, pol.trunc);
            CScalar den = qpoch_infinite(eip * su, q, pol.trunc) *
                          qpoch_infinite(eim * su, q, pol.trunc) *
                          qpoch_infinite(a * zs, q, pol.trunc) *
                          qpoch_infinite(b * zs, q, pol.trunc) *
                          qpoch_infinite(c0 * zs, q, pol.trunc) *
                          qpoch_finite(abc * zs, q, n);
            return num / den * powi(zs, n);
        };
    }
    // the abc-symmetric form; sigma in the separating window above the
    // unit circle, as for the second Askey-Wilson representation
    double m = std::min({std::abs(a * b), std::abs(a * c0), std::abs(b * c0)});
    double sigma = std::sqrt(1.05 / m * 0.95 / std::abs(abc));
    return [=](double psi) -> CScalar {
        CScalar z = std::polar(1.0, psi);
        CScalar su = sigma / z, zs = z / sigma;
        CScalar num = qpoch_infinite(f * abc * eip * su, q, pol.trunc) *
                      qpoch_infinite(q.value() / f * abc * eim * su, q, pol.trunc) *
                      qpoch_infinite(f / abc * eip * zs, q, pol.trunc) *
                      qpoch_infinite(q.value() / (f * abc) * eim * zs, q, pol.trunc) *
                      qpoch_infinite(zs, q, pol.trunc);
        CScalar den = qpoch_infinite(abc * eip * su, q, pol.trunc) *
                      qpoch_infinite(abc * eim * su, q, pol.trunc) *
                      qpoch_infinite(zs / (a * b), q, pol.trunc) *
                      qpoch_infinite(zs / (a * c0), q, pol.trunc) *
                      qpoch_infinite(zs / (b * c0), q, pol.trunc) *
                      qpoch_finite(zs, q, n);
        return num / den * powi(zs / abc, n);
    };
}

ScaledComplex ircdq_prefactor(const Sample& s, int variant, const RunPolicies& pol) {
    if (variant != 0) return ir_prefactor_abc(s, pol);
    Nome q = nm(s);
    double th = s.getr("theta");
    int n = s.geti("n");
    CScalar a = s.get("a"), b = s.get("b"), f = s.get("f");
    ScaledComplex pre = qpoch_infinite_scaled(q.value(), q, pol.trunc);
    pre *= conj_pair_poch(a, th, q, pol.trunc);
    pre *= conj_pair_poch(b, th, q, pol.trunc);
    pre *= ScaledComplex(qpoch_finite(a * b, q, n));
    pre /= theta_scaled(f, q, pol.trunc);
    pre /= theta_scaled(f * std::polar(1.0, 2.0 * th), q, pol.trunc);
    pre /= qpoch_infinite_scaled(a * b, q, pol.trunc);
    pre /= ScaledComplex(CScalar(2.0 * kPi));
    return pre;
}

IdentityCase make_ircdq(const char* id, int variant) {
    IdentityCase c;
    c.id = id;
    c.anchor = variant == 0
                   ? "continuous dual q-Hahn integral representation (E_n form)"
                   : (variant == 1 ? "continuous dual q-Hahn integral representation (F_n form)"
                                   : "continuous dual q-Hahn representation manifestly "
                                     "symmetric in a, b, c");
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        return draw_ir(rng, pol, false);
    };
    c.admissible = [variant](const Sample& s, const RunPolicies& pol) {
        if (!ir_admissible_common(s, pol)) return false;
        if (variant == 2) {
            CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c");
            double m = std::min({std::abs(a * b), std::abs(a * c0), std::abs(b * c0)});
            if (!(0.95 * m > 1.1 * std::abs(a * b * c0))) return false;
        }
        return ir_resolvable(ircdq_integrand(s, variant, pol), ir_poly_lhs(s, pol, false),
                             ircdq_prefactor(s, variant, pol));
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) { return ir_poly_lhs(s, pol, false); };
    c.rhs = [variant](const Sample& s, const RunPolicies& pol) {
        CScalar in = integrate_periodic(ircdq_integrand(s, variant, pol), pol.quad);
        return ircdq_prefactor(s, variant, pol).value() * in;
    };
    if (variant == 2) {
        // the (a,b,c)-symmetry the representation makes manifest
        Evaluator rotated = [rhs = c.rhs](const Sample& s, const RunPolicies& pol) {
            Sample s2 = s;
            s2.set("a", s.get("b"));
            s2.set("b", s.get("c"));
            s2.set("c", s.get("a"));
            return rhs(s2, pol);
        };
        c.extra.push_back({"abc-symmetry", rotated, c.lhs});
    }
    return c;
}

// --- generating functions ---------------------------------------------------

IdentityCase make_genfun2ask() {
    IdentityCase c;
    c.id = "genfun2ask";
    c.anchor = "Rahman generating function for the Askey-Wilson polynomials";
    c.tol = 1e-8;
    c.branch_note = "principal per-parameter roots";
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        for (int i = 1; i <= 4; ++i) s.set("a" + std::to_string(i), annulus(rng, 0.15, 0.6));
        s.set("t", annulus(rng, 0.1, 0.5));
        s.set("p", CScalar(std::floor(uniform(rng, 1.0, 4.999))));
        s.set("theta", uniform(rng, 0.3, kPi - 0.3));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 4);
        CScalar t = s.get("t");
        int p = s.geti("p") - 1;
        CScalar ap = a[static_cast<std::size_t>(p)];
        CScalar A = product(a);
        CScalar r1 = std::sqrt(A) / std::sqrt(q.value());
        for (CScalar v :
             {ap / t, q.value() * ap / t, q.value() * t / ap, t * A / (q.value() * ap),
              A * t * t / (q.value() * ap * ap), t / ap * r1, t / ap * std::sqrt(A)})
            if (std::abs(v) > 0.9 && !omega_ok(v, q, pol.guard)) return false;
        return poch_den_ok({ap / t, t / ap}, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 4);
        int p = s.geti("p") - 1;
        CScalar ap = a[static_cast<std::size_t>(p)];
        CScalar t = s.get("t");
        CScalar A = product(a);
        AWParams par{ap, a[(p + 1) % 4], a[(p + 2) % 4], a[(p + 3) % 4], q};
        auto pseq = askey_wilson_sequence(kGfDepth, std::cos(s.getr("theta")), par);
        // coef_n = t^n (A/q;q)_n / ((q;q)_n prod_{s != p} (a_p a_s;q)_n)
        std::vector<CScalar> coefs(pseq.size());
        CScalar run = 1.0, qn = 1.0;
        for (std::size_t n = 0; n < coefs.size(); ++n) {
            coefs[n] = run;
            CScalar den = (CScalar(1.0) - qn * q.value());
            for (int j = 0; j < 4; ++j)
                if (j != p) den *= (CScalar(1.0) - ap * a[static_cast<std::size_t>(j)] * qn);
            run *= t * (CScalar(1.0) - A / q.value() * qn) / den;
            qn *= q.value();
        }
        return gf_sum(pseq, [&](int n) { return coefs[static_cast<std::size_t>(n)]; },
                      pol.trunc);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 4);
        int p = s.geti("p") - 1;
        CScalar ap = a[static_cast<std::size_t>(p)];
        CScalar t = s.get("t");
        double th = s.getr("theta");
        CScalar A = product(a);
        CScalar r2 = std::sqrt(A), r1 = r2 / std::sqrt(q.value());
        auto ppair = conj_pair(ap, th);
        auto tpair = conj_pair(t, th);
        std::vector<CScalar> aps;  // {a_p a_s}_{s != p}
        std::vector<CScalar> tas;  // {t a_s}_{s != p}
        for (int j = 0; j < 4; ++j)
            if (j != p) {
                aps.push_back(ap * a[static_cast<std::size_t>(j)]);
                tas.push_back(t * a[static_cast<std::size_t>(j)]);
            }

        SeriesSpec s1{{r1, -r1, r2, -r2, ppair[0], ppair[1]},
                      {aps[0], aps[1], aps[2], t * A / (q.value() * ap), q.value() * ap / t},
                      q,
                      q.value(),
                      0,
                      std::nullopt};
        ScaledComplex pre1 = qpoch_infinite_scaled(t * A / (q.value() * ap), q, pol.trunc);
        pre1 /= qpoch_infinite_scaled(t / ap, q, pol.trunc);
        CScalar term1 = pre1.value() * phi(s1, pol.trunc, pol.guard).value;

        CScalar u = t / ap;
        SeriesSpec s2{{u * r1, -u * r1, u * r2, -u * r2, tpair[0], tpair[1]},
                      {tas[0], tas[1], tas[2], A / q.value() * u * u, q.value() * u},
                      q,
                      q.value(),
                      0,
                      std::nullopt};
        ScaledComplex pre2 = scprod(tas, q, pol.trunc);
        pre2 *= qpoch_infinite_scaled(A / q.value(), q, pol.trunc);
        pre2 *= conj_pair_poch(ap, th, q, pol.trunc);
        pre2 /= scprod(aps, q, pol.trunc);
        pre2 /= qpoch_infinite_scaled(ap / t, q, pol.trunc);
        pre2 /= conj_pair_poch(t, th, q, pol.trunc);
        CScalar term2 = pre2.value() * phi(s2, pol.trunc, pol.guard).value;
        return term1 + term2;
    };
    return c;
}

IdentityCase make_awgf2() {
    IdentityCase c;
    c.id = "AWgf2";
    c.anchor = "Ismail-Wilson generating function: product of two 2phi1's";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        for (const char* n : {"a", "b", "c", "d"}) s.set(n, annulus(rng, 0.15, 0.6));
        s.set("t", annulus(rng, 0.1, 0.5));
        s.set("theta", uniform(rng, 0.3, kPi - 0.3));
        return s;
    };
    c.admissible = [](const Sample&, const RunPolicies&) { return true; };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d = s.get("d"),
                t = s.get("t");
        AWParams par{a, b, c0, d, q};
        auto pseq = askey_wilson_sequence(kGfDepth, std::cos(s.getr("theta")), par);
        std::vector<CScalar> coefs(pseq.size());
        CScalar run = 1.0, qn = 1.0;
        for (std::size_t n = 0; n < coefs.size(); ++n) {
            coefs[n] = run;
            run *= t / ((CScalar(1.0) - qn * q.value()) * (CScalar(1.0) - a * d * qn) *
                        (CScalar(1.0) - b * c0 * qn));
            qn *= q.value();
        }
        return gf_sum(pseq, [&](int n) { return coefs[static_cast<std::size_t>(n)]; },
                      pol.trunc);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        double th = s.getr("theta");
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d = s.get("d"), t = s.get("t");
        CScalar eip = std::polar(1.0, th), eim = std::conj(eip);
        SeriesSpec g1{{a * eip, d * eip}, {a * d}, q, t * eim, 0, std::nullopt};
        SeriesSpec g2{{b * eim, c0 * eim}, {b * c0}, q, t * eip, 0, std::nullopt};
        return phi(g1, pol.trunc, pol.guard).value * phi(g2, pol.trunc, pol.guard).value;
    };
    return c;
}

std::function<CScalar(double)> awgf2int_integrand(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    double th = s.getr("theta");
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d = s.get("d"), f = s.get("f"),
            t = s.get("t");
    CScalar eip = std::polar(1.0, th), eim = std::conj(eip);
    CScalar abc = a * b * c0;
    std::vector<CScalar> su_d = {eip, eim};
    std::vector<CScalar> zs_d = {a, b, c0, abc};
    double sigma = best_sigma(su_d, zs_d, 0.65, 0.95, q);
    return [=](double psi) -> CScalar {
        CScalar z = std::polar(1.0, psi);
        CScalar su = sigma / z, zs = z / sigma;
        CScalar num = qpoch_infinite(f * eip * su, q, pol.trunc) *
                      qpoch_infinite(q.value() / f * eim * su, q, pol.trunc) *
                      qpoch_infinite(f * eip * zs, q, pol.trunc) *
                      qpoch_infinite(q.value() / f * eim * zs, q, pol.trunc) *
                      qpoch_infinite(abc * zs, q, pol.trunc);
        CScalar den = qpoch_infinite(eip * su, q, pol.trunc) *
                      qpoch_infinite(eim * su, q, pol.trunc) *
                      qpoch_infinite(a * zs, q, pol.trunc) *
                      qpoch_infinite(b * zs, q, pol.trunc) *
                      qpoch_infinite(c0 * zs, q, pol.trunc);
        SeriesSpec inner{{d * su, a * b, a * c0}, {abc * zs, a * d}, q, t * zs, 0,
                         std::nullopt};
        return num / den * phi(inner, pol.trunc, pol.guard).value;
    };
}

CScalar awgf2int_rhs(const Sample& s, const RunPolicies& pol);

IdentityCase make_awgf2_int() {
    IdentityCase c;
    c.id = "AWgf2-int";
    c.anchor = "integral representation of the product of two 2phi1 generating functions";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s = draw_ir(rng, pol, true);
        s.set("t", annulus(rng, 0.05, 0.45));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        if (!ir_admissible_common(s, pol)) return false;
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c");
        CScalar eip = std::polar(1.0, s.getr("theta"));
        std::vector<CScalar> su_d = {eip, std::conj(eip)};
        std::vector<CScalar> zs_d = {a, b, c0, a * b * c0};
        double sigma = best_sigma(su_d, zs_d, 0.65, 0.95, q);
        if (!(std::abs(s.get("t")) < 0.9 * sigma)) return false;
        CScalar expect = awgf2int_rhs(s, pol);
        return is_finite(expect) &&
               std::abs(expect) * 3e5 > integrand_peak(awgf2int_integrand(s, pol));
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        return integrate_periodic(awgf2int_integrand(s, pol), pol.quad);
    };
    c.rhs = awgf2int_rhs;
    return c;
}

CScalar awgf2int_rhs(const Sample& s, const RunPolicies& pol) {
    Nome q = nm(s);
    double th = s.getr("theta");
    CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), d = s.get("d"), f = s.get("f"),
            t = s.get("t");
    CScalar eip = std::polar(1.0, th), eim = std::conj(eip);
    ScaledComplex pre = theta_scaled(f, q, pol.trunc);
    pre *= theta_scaled(f * std::polar(1.0, 2.0 * th), q, pol.trunc);
    pre *= scprod({a * b, a * c0, b * c0}, q, pol.trunc);
    pre /= qpoch_infinite_scaled(q.value(), q, pol.trunc);
    pre /= conj_pair_poch(a, th, q, pol.trunc);
    pre /= conj_pair_poch(b, th, q, pol.trunc);
    pre /= conj_pair_poch(c0, th, q, pol.trunc);
    SeriesSpec g1{{a * eip, d * eip}, {a * d}, q, t * eim, 0, std::nullopt};
    SeriesSpec g2{{b * eim, c0 * eim}, {b * c0}, q, t * eip, 0, std::nullopt};
    return 2.0 * kPi * pre.value() * phi(g1, pol.trunc, pol.guard).value *
           phi(g2, pol.trunc, pol.guard).value;
}

IdentityCase make_genfun2cdh() {
    IdentityCase c;
    c.id = "genfun2cdH";
    c.anchor = "a4 -> 0 limit of the Rahman generating function (continuous dual q-Hahn)";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        for (int i = 1; i <= 3; ++i) s.set("a" + std::to_string(i), annulus(rng, 0.15, 0.6));
        s.set("t", annulus(rng, 0.1, 0.5));
        s.set("p", CScalar(std::floor(uniform(rng, 1.0, 3.999))));
        s.set("theta", uniform(rng, 0.3, kPi - 0.3));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 3);
        CScalar t = s.get("t");
        CScalar ap = a[static_cast<std::size_t>(s.geti("p") - 1)];
        for (CScalar v : {ap / t, q.value() * ap / t, q.value() * t / ap})
            if (std::abs(v) > 0.9 && !omega_ok(v, q, pol.guard)) return false;
        return poch_den_ok({ap / t, t / ap}, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 3);
        int p = s.geti("p") - 1;
        CScalar ap = a[static_cast<std::size_t>(p)];
        CScalar t = s.get("t");
        CDQHParams par{ap, a[(p + 1) % 3], a[(p + 2) % 3], q};
        auto pseq = cdqhahn_sequence(kGfDepth, std::cos(s.getr("theta")), par);
        std::vector<CScalar> coefs(pseq.size());
        CScalar run = 1.0, qn = 1.0;
        for (std::size_t n = 0; n < coefs.size(); ++n) {
            coefs[n] = run;
            CScalar den = (CScalar(1.0) - qn * q.value());
            for (int j = 0; j < 3; ++j)
                if (j != p) den *= (CScalar(1.0) - ap * a[static_cast<std::size_t>(j)] * qn);
            run *= t / den;
            qn *= q.value();
        }
        return gf_sum(pseq, [&](int n) { return coefs[static_cast<std::size_t>(n)]; },
                      pol.trunc);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        auto a = get_seq(s, "a", 3);
        int p = s.geti("p") - 1;
        CScalar ap = a[static_cast<std::size_t>(p)];
        CScalar t = s.get("t");
        double th = s.getr("theta");
        auto ppair = conj_pair(ap, th);
        auto tpair = conj_pair(t, th);
        std::vector<CScalar> aps, tas;
        for (int j = 0; j < 3; ++j)
            if (j != p) {
                aps.push_back(ap * a[static_cast<std::size_t>(j)]);
                tas.push_back(t * a[static_cast<std::size_t>(j)]);
            }
        SeriesSpec s1{{ppair[0], ppair[1]},
                      {aps[0], aps[1], q.value() * ap / t},
                      q,
                      q.value(),
                      -2,
                      std::nullopt};
        CScalar term1 =
            phi(s1, pol.trunc, pol.guard).value / qpoch_infinite(t / ap, q, pol.trunc);
        SeriesSpec s2{{tpair[0], tpair[1]},
                      {tas[0], tas[1], q.value() * t / ap},
                      q,
                      q.value(),
                      -2,
                      std::nullopt};
        ScaledComplex pre2 = scprod(tas, q, pol.trunc);
        pre2 *= conj_pair_poch(ap, th, q, pol.trunc);
        pre2 /= scprod(aps, q, pol.trunc);
        pre2 /= qpoch_infinite_scaled(ap / t, q, pol.trunc);
        pre2 /= conj_pair_poch(t, th, q, pol.trunc);
        return term1 + pre2.value() * phi(s2, pol.trunc, pol.guard).value;
    };
    return c;
}

IdentityCase make_nonstan() {
    IdentityCase c;
    c.id = "nonstan";
    c.anchor = "non-standard generating function for continuous dual q-Hahn polynomials";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        for (const char* n : {"a", "b", "c"}) s.set(n, annulus(rng, 0.15, 0.6));
        s.set("t", annulus(rng, 0.1, 0.5));
        s.set("theta", uniform(rng, 0.3, kPi - 0.3));
        return s;
    };
    c.admissible = [](const Sample&, const RunPolicies&) { return true; };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), t = s.get("t");
        CDQHParams par{a, b, c0, q};
        auto pseq = cdqhahn_sequence(kGfDepth, std::cos(s.getr("theta")), par);
        std::vector<CScalar> coefs(pseq.size());
        CScalar run = 1.0, qn = 1.0;
        for (std::size_t n = 0; n < coefs.size(); ++n) {
            coefs[n] = run;
            run *= t / ((CScalar(1.0) - qn * q.value()) *
                        (CScalar(1.0) - t * a * b * c0 * qn));
            qn *= q.value();
        }
        return gf_sum(pseq, [&](int n) { return coefs[static_cast<std::size_t>(n)]; },
                      pol.trunc);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        double th = s.getr("theta");
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), t = s.get("t");
        ScaledComplex r = scprod({t * a, t * b, t * c0}, q, pol.trunc);
        r /= qpoch_infinite_scaled(t * a * b * c0, q, pol.trunc);
        r /= conj_pair_poch(t, th, q, pol.trunc);
        return r.value();
    };
    return c;
}

IdentityCase make_missing() {
    IdentityCase c;
    c.id = "missing";
    c.anchor = "q-analogue of the continuous dual Hahn generating function with free gamma";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        for (const char* n : {"a", "b", "c"}) s.set(n, annulus(rng, 0.15, 0.6));
        s.set("t", annulus(rng, 0.1, 0.5));
        s.set("gamma", annulus(rng, 0.2, 1.5));
        s.set("theta", uniform(rng, 0.3, kPi - 0.3));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), t = s.get("t"), g = s.get("gamma");
        for (CScalar v : {g, g * t / a, a / t, q.value() * a / t, q.value() * t / a})
            if (std::abs(v) > 0.9 && !omega_ok(v, q, pol.guard)) return false;
        return poch_den_ok({a / t, t / a}, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), t = s.get("t"),
                g = s.get("gamma");
        CDQHParams par{a, b, c0, q};
        auto pseq = cdqhahn_sequence(kGfDepth, std::cos(s.getr("theta")), par);
        std::vector<CScalar> coefs(pseq.size());
        CScalar run = 1.0, qn = 1.0;
        for (std::size_t n = 0; n < coefs.size(); ++n) {
            coefs[n] = run;
            run *= t * (CScalar(1.0) - g * qn) /
                   ((CScalar(1.0) - qn * q.value()) * (CScalar(1.0) - a * b * qn) *
                    (CScalar(1.0) - a * c0 * qn));
            qn *= q.value();
        }
        return gf_sum(pseq, [&](int n) { return coefs[static_cast<std::size_t>(n)]; },
                      pol.trunc);
    };
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        double th = s.getr("theta");
        CScalar a = s.get("a"), b = s.get("b"), c0 = s.get("c"), t = s.get("t"),
                g = s.get("gamma");
        auto apair = conj_pair(a, th);
        auto tpair = conj_pair(t, th);

        SeriesSpec s1{{g, apair[0], apair[1]},
                      {a * b, a * c0, q.value() * a / t},
                      q,
                      q.value(),
                      -1,
                      std::nullopt};
        ScaledComplex pre1 = scprod({a * b, a * c0, g * t / a}, q, pol.trunc);
        pre1 /= conj_pair_poch(a, th, q, pol.trunc);
        pre1 /= qpoch_infinite_scaled(t / a, q, pol.trunc);
        CScalar term1 = pre1.value() * phi(s1, pol.trunc, pol.guard).value;

        SeriesSpec s2{{g * t / a, tpair[0], tpair[1]},
                      {t * b, t * c0, q.value() * t / a},
                      q,
                      q.value(),
                      -1,
                      std::nullopt};
        ScaledComplex pre2 = scprod({t * b, t * c0, g}, q, pol.trunc);
        pre2 /= conj_pair_poch(t, th, q, pol.trunc);
        pre2 /= qpoch_infinite_scaled(a / t, q, pol.trunc);
        CScalar term2 = pre2.value() * phi(s2, pol.trunc, pol.guard).value;

        ScaledComplex front = conj_pair_poch(a, th, q, pol.trunc);
        front /= scprod({a * b, a * c0}, q, pol.trunc);
        return front.value() * (term1 + term2);
    };
    // gamma -> 0 collapses this to the plain cdqH generating function
    c.extra.push_back({"gamma-to-0-reduction", with_value(c.lhs, "gamma", CScalar(0.0)),
                       with_value(c.rhs, "gamma", CScalar(0.0))});
    return c;
}

IdentityCase make_asc_gf() {
    IdentityCase c;
    c.id = "ASC-gf";
    c.anchor = "Al-Salam-Chihara generating function (a3 -> 0 limit), both printed forms";
    c.tol = 1e-8;
    c.raw_draw = [](std::mt19937_64& rng, const RunPolicies& pol) {
        Sample s;
        s.q = pick_q(rng, pol);
        s.set("a", annulus(rng, 0.15, 0.6));
        s.set("b", annulus(rng, 0.15, 0.6));
        s.set("t", annulus(rng, 0.1, 0.5));
        s.set("gamma", annulus(rng, 0.2, 1.5));
        s.set("theta", uniform(rng, 0.3, kPi - 0.3));
        return s;
    };
    c.admissible = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), t = s.get("t"), g = s.get("gamma");
        for (CScalar v : {g, g * t / a, a / t, q.value() * a / t, q.value() * t / a})
            if (std::abs(v) > 0.9 && !omega_ok(v, q, pol.guard)) return false;
        return poch_den_ok({a / t, t / a}, q);
    };
    c.lhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        CScalar a = s.get("a"), b = s.get("b"), t = s.get("t"), g = s.get("gamma");
        auto pseq = alsalam_chihara_sequence(kGfDepth, std::cos(s.getr("theta")), a, b, q);
        std::vector<CScalar> coefs(pseq.size());
        CScalar run = 1.0, qn = 1.0;
        for (std::size_t n = 0; n < coefs.size(); ++n) {
            coefs[n] = run;
            run *= t * (CScalar(1.0) - g * qn) /
                   ((CScalar(1.0) - qn * q.value()) * (CScalar(1.0) - a * b * qn));
            qn *= q.value();
        }
        return gf_sum(pseq, [&](int n) { return coefs[static_cast<std::size_t>(n)]; },
                      pol.trunc);
    };
    // single 3phi2 form
    c.rhs = [](const Sample& s, const RunPolicies& pol) {
        Nome q = nm(s);
        double th = s.getr("theta");
        CScalar a = s.get("a"), b = s.get("b"), t = s.get("t"), g = s.get("gamma");
        CScalar eip = std::polar(1.0, th), eim = std::conj(eip);
        SeriesSpec spec{{g, a * eip, b * eip}, {a * b, g * t * eip}, q, t * eim, 0,
                        std::nullopt};
        return qpoch_infinite(g * t * eip, q, pol.trunc) /
               qpoch_infinite(t * eip, q, pol.trunc) * phi(spec, pol.trunc, pol.guard).value;
    };
    // two-term symmetric-sum form
    Evaluator two_term = [](const Sample& s, const RunPolicies& pol) -> CScalar {
        Nome q = nm(s);
        double th = s.getr("theta");
        CScalar a = s.get("a"), b = s.get("b"), t = s.get("t"), g = s.get("gamma");
        auto apair = conj_pair(a, th);
        auto tpair = conj_pair(t, th);
        SeriesSpec s1{{g, apair[0], apair[1]},
                      {a * b, q.value() * a / t},
                      q,
                      q.value(),
                      0,
                      std::nullopt};
        ScaledComplex pre1 = scprod({a * b, g * t / a}, q, pol.trunc);
        pre1 /= conj_pair_poch(a, th, q, pol.trunc);
        pre1 /= qpoch_infinite_scaled(t / a, q, pol.trunc);
        SeriesSpec s2{{g * t / a, tpair[0], tpair[1]},
                      {t * b, q.value() * t / a},
                      q,
                      q.value(),
                      0,
                      std::nullopt};
        ScaledComplex pre2 = scprod({t * b, g}, q, pol.trunc);
        pre2 /= conj_pair_poch(t, th, q, pol.trunc);
        pre2 /= qpoch_infinite_scaled(a / t, q, pol.trunc);
        ScaledComplex front = conj_pair_poch(a, th, q, pol.trunc);
        front /= qpoch_infinite_scaled(a * b, q, pol.trunc);
        return front.value() * (pre1.value() * phi(s1, pol.trunc, pol.guard).value +
                                pre2.value() * phi(s2, pol.trunc, pol.guard).value);
    };
    c.extra.push_back({"symmetric-sum-form", two_term, c.rhs});
    return c;
}

}  // namespace

void register_genfun_cases(std::vector<IdentityCase>& out) {
    out.push_back(make_iraw());
    out.push_back(make_iraw2());
    out.push_back(make_genfun2ask());
    out.push_back(make_awgf2());
    out.push_back(make_awgf2_int());
    out.push_back(make_ircdq("IRcdqE", 0));
    out.push_back(make_ircdq("IRcdqF", 1));
    out.push_back(make_ircdq("IRcdqH2", 2));
    out.push_back(make_genfun2cdh());
    out.push_back(make_nonstan());
    out.push_back(make_missing());
    out.push_back(make_asc_gf());
}

}  // namespace qk::detail
