#include "qkernel/identities/gmt.hpp"

#include <cmath>

#include "qkernel/errors.hpp"
#include "qkernel/qpoch.hpp"
#include "qkernel/quadrature.hpp"
#include "qkernel/series.hpp"

namespace qk {

namespace {

ScaledComplex pochinf_prod(std::span<const CScalar> xs, const Nome& q,
                           const TruncationPolicy& tpol) {
    return qpoch_infinite_scaled(xs, q, tpol);
}

}  // namespace

CScalar eval_G_integral(int m, CScalar t, const GmtArgs& s, double sigma, const Nome& q,
                        const QuadraturePolicy& qpol, const TruncationPolicy& tpol) {
    if (s.a.empty() && s.b.empty() && s.c.empty() && s.d.empty())
        throw HypothesisViolated("all four parameter sets empty");
    if (!(sigma > 0)) throw HypothesisViolated("sigma must be positive");
    double at = std::abs(t);
    for (const auto& ck : s.c)
        if (!(std::abs(ck) < sigma / at)) throw HypothesisViolated("|c_k| < sigma/|t| required");
    for (const auto& dl : s.d)
        if (!(std::abs(dl) < 1.0 / sigma)) throw HypothesisViolated("|d_l| < 1/sigma required");

    auto f = [&](double psi) -> CScalar {
        CScalar z = std::polar(1.0, psi);
        CScalar su = sigma / z, zs = t * z / sigma;
        CScalar num = 1.0, den = 1.0;
        for (const auto& bj : s.b) num *= qpoch_infinite(bj * su, q, tpol);
        for (const auto& ai : s.a) num *= qpoch_infinite(ai * zs, q, tpol);
        for (const auto& dl : s.d) den *= qpoch_infinite(dl * su, q, tpol);
        for (const auto& ck : s.c) den *= qpoch_infinite(ck * zs, q, tpol);
        return num / den * std::polar(1.0, m * psi);
    };
    CScalar integral = integrate_periodic(f, qpol);
    CScalar front = qpoch_infinite(q.value(), q, tpol) / (2.0 * kPi) *
                    powi(std::sqrt(t) / sigma, m);
    return front * integral;
}

CScalar eval_G_series_d(int m, CScalar t, const GmtArgs& s, const Nome& q,
                        const TruncationPolicy& tpol, const OmegaGuard& guard) {
    const std::size_t A = s.a.size(), B = s.b.size(), C = s.c.size(), D = s.d.size();
    if (D == 0) throw HypothesisViolated("expansion over the d-set needs D >= 1");
    for (std::size_t l = 0; l < D; ++l)
        for (std::size_t k = 0; k < C; ++k)
            if (guard.near_omega(t * s.d[l] * s.c[k], q))
                throw PoleInDenominator("t d_l c_k within guard of Omega_q");
    for (std::size_t l = 0; l < D; ++l)
        for (std::size_t lp = 0; lp < D; ++lp)
            if (l != lp && guard.near_omega(s.d[l] / s.d[lp], q))
                throw PoleInDenominator("d_l/d_l' within guard of Omega_q");

    CScalar b_over_d = s.b.product() / s.d.product();
    CScalar qm = powi(q.value(), m);

    ScaledComplex total;
    for (std::size_t k = 0; k < D; ++k) {
        CScalar dk = s.d[k];
        ParamSet drest = s.d.drop(k);

        ScaledComplex pref = pochinf_prod(s.a.scale(t * dk).values(), q, tpol);
        pref *= pochinf_prod(s.b.scale(CScalar(1.0) / dk).values(), q, tpol);
        pref *= powi(dk, m);
        pref /= pochinf_prod(s.c.scale(t * dk).values(), q, tpol);
        pref /= pochinf_prod(drest.scale(CScalar(1.0) / dk).values(), q, tpol);

        SeriesSpec spec{{}, {}, q, 0.0, static_cast<int>(C) - static_cast<int>(A), std::nullopt};
        for (const auto& ck : s.c) spec.numer.push_back(t * dk * ck);
        for (const auto& bj : s.b) spec.numer.push_back(q.value() * dk / bj);
        for (const auto& ai : s.a) spec.denom.push_back(t * dk * ai);
        for (const auto& dl : drest) spec.denom.push_back(q.value() * dk / dl);
        spec.z = qm * powi(q.value() * dk, static_cast<int>(D) - static_cast<int>(B)) * b_over_d;

        pref *= phi(spec, tpol, guard).value;
        total += pref;
    }
    total *= powi(std::sqrt(t), m);
    return total.value();
}

CScalar eval_G_series_c(int m, CScalar t, const GmtArgs& s, const Nome& q,
                        const TruncationPolicy& tpol, const OmegaGuard& guard) {
    const std::size_t A = s.a.size(), B = s.b.size(), C = s.c.size(), D = s.d.size();
    if (C == 0) throw HypothesisViolated("expansion over the c-set needs C >= 1");
    for (std::size_t l = 0; l < D; ++l)
        for (std::size_t k = 0; k < C; ++k)
            if (guard.near_omega(t * s.d[l] * s.c[k], q))
                throw PoleInDenominator("t d_l c_k within guard of Omega_q");
    for (std::size_t k = 0; k < C; ++k)
        for (std::size_t kp = 0; kp < C; ++kp)
            if (k != kp && guard.near_omega(s.c[k] / s.c[kp], q))
                throw PoleInDenominator("c_k/c_k' within guard of Omega_q");

    CScalar a_over_c = s.a.product() / s.c.product();
    CScalar qmm = powi(q.value(), -m);

    ScaledComplex total;
    for (std::size_t k = 0; k < C; ++k) {
        CScalar ck = s.c[k];
        ParamSet crest = s.c.drop(k);

        ScaledComplex pref = pochinf_prod(s.b.scale(t * ck).values(), q, tpol);
        pref *= pochinf_prod(s.a.scale(CScalar(1.0) / ck).values(), q, tpol);
        pref *= powi(ck, -m);
        pref /= pochinf_prod(s.d.scale(t * ck).values(), q, tpol);
        pref /= pochinf_prod(crest.scale(CScalar(1.0) / ck).values(), q, tpol);

        SeriesSpec spec{{}, {}, q, 0.0, static_cast<int>(D) - static_cast<int>(B), std::nullopt};
        for (const auto& dl : s.d) spec.numer.push_back(t * ck * dl);
        for (const auto& ai : s.a) spec.numer.push_back(q.value() * ck / ai);
        for (const auto& bj : s.b) spec.denom.push_back(t * ck * bj);
        for (const auto& cl : crest) spec.denom.push_back(q.value() * ck / cl);
        spec.z = qmm * powi(q.value() * ck, static_cast<int>(C) - static_cast<int>(A)) * a_over_c;

        pref *= phi(spec, tpol, guard).value;
        total += pref;
    }
    total /= powi(std::sqrt(t), m);
    return total.value();
}

namespace {

ScaledComplex H_term(const ParamSet& a, const ParamSet& c, CScalar d1, CScalar d2, const Nome& q,
                     const TruncationPolicy& tpol, const OmegaGuard& guard) {
    ScaledComplex pref = qpoch_infinite_scaled(a.scale(d1).values(), q, tpol);
    pref /= qpoch_infinite_scaled(d2 / d1, q, tpol);
    pref /= qpoch_infinite_scaled(c.scale(d1).values(), q, tpol);

    SeriesSpec spec{{}, {}, q, q.value(),
                    static_cast<int>(c.size()) - static_cast<int>(a.size()) - 2, std::nullopt};
    for (const auto& ck : c) spec.numer.push_back(d1 * ck);
    for (const auto& ai : a) spec.denom.push_back(d1 * ai);
    spec.denom.push_back(q.value() * d1 / d2);
    pref *= phi(spec, tpol, guard).value;
    return pref;
}

}  // namespace

CScalar eval_H(const ParamSet& a, const ParamSet& c, std::array<CScalar, 2> d, const Nome& q,
               const TruncationPolicy& tpol, const OmegaGuard& guard, double* cond_out) {
    if (a.empty() && c.empty()) throw HypothesisViolated("a and c must not both be empty");
    if (guard.near_omega(d[1] / d[0], q) || guard.near_omega(d[0] / d[1], q))
        throw PoleInDenominator("d2/d1 within guard of Omega_q");
    for (const auto& ck : c)
        for (const auto& dl : d)
            if (guard.near_omega(ck * dl, q))
                throw PoleInDenominator("c_k d_l within guard of Omega_q");
    ScaledComplex t1 = H_term(a, c, d[0], d[1], q, tpol, guard);
    ScaledComplex t2 = H_term(a, c, d[1], d[0], q, tpol, guard);
    double max_log2 = std::max(t1.log2_abs(), t2.log2_abs());
    ScaledComplex total = t1;
    total += t2;
    if (cond_out)
        *cond_out = total.zero() ? 1e300 : std::exp2(max_log2 - total.log2_abs());
    return total.value();
}

CScalar eval_J(const ParamSet& a, const ParamSet& c, std::array<CScalar, 2> d, CScalar f,
               const Nome& q, const TruncationPolicy& tpol, const OmegaGuard& guard,
               double* cond_out) {
    const int A = static_cast<int>(a.size()), C = static_cast<int>(c.size());
    if (C < A + 2) throw Divergent("J requires C >= A + 2");
    CScalar a_prod = a.product(), c_prod = c.product();

    double max_log2 = -1e300;
    ScaledComplex total;
    for (int k = 0; k < C; ++k) {
        CScalar ck = c[static_cast<std::size_t>(k)];
        ParamSet crest = c.drop(static_cast<std::size_t>(k));
        CScalar th1_arg = f * ck * d[0], th2_arg = f / (ck * d[1]);
        if (guard.near_theta_zero(th1_arg, q) || guard.near_theta_zero(th2_arg, q))
            throw ThetaZero("theta argument within guard of q^Z");
        for (const auto& cl : crest)
            if (guard.near_omega(cl / ck, q))
                throw PoleInDenominator("c_k'/c_k within guard of Omega_q");

        ScaledComplex pref = theta_scaled(th1_arg, q, tpol);
        pref *= theta_scaled(th2_arg, q, tpol);
        pref *= qpoch_infinite_scaled(a.scale(CScalar(1.0) / ck).values(), q, tpol);
        pref /= qpoch_infinite_scaled(ck * d[0], q, tpol);
        pref /= qpoch_infinite_scaled(ck * d[1], q, tpol);
        pref /= qpoch_infinite_scaled(crest.scale(CScalar(1.0) / ck).values(), q, tpol);

        SeriesSpec spec{{}, {}, q, 0.0, 0, std::nullopt};
        spec.numer.push_back(ck * d[0]);
        spec.numer.push_back(ck * d[1]);
        for (const auto& ai : a) spec.numer.push_back(q.value() * ck / ai);
        for (const auto& cl : crest) spec.denom.push_back(q.value() * ck / cl);
        spec.z = q.value() * powi(q.value() * ck, C - A - 2) * a_prod / (d[0] * d[1] * c_prod);

        pref *= phi(spec, tpol, guard).value;
        max_log2 = std::max(max_log2, pref.log2_abs());
        total += pref;
    }
    if (cond_out)
        *cond_out = total.zero() ? 1e300 : std::exp2(max_log2 - total.log2_abs());
    return total.value();
}

}  // namespace qk
