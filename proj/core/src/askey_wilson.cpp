#include "qkernel/askey_wilson.hpp"

#include <algorithm>
#include <cmath>

#include "qkernel/errors.hpp"
#include "qkernel/qpoch.hpp"
#include "qkernel/series.hpp"

namespace qk {

namespace {

double recover_theta(double x) {
    if (std::abs(x) > 1.0 + 1e-12) throw DomainError("askey_wilson requires x in [-1, 1]");
    return std::acos(std::clamp(x, -1.0, 1.0));
}

/// The terminating series loses about n(n-1)/2 lg(1/|q|) + n lg(1/|a|)
/// bits to alternating cancellation; keep it only while that stays small.
bool series_path_ok(int n, CScalar a, const Nome& q) {
    if (n > kSeriesDegreeMax) return false;
    double bits = 0.5 * n * (n - 1) * std::log2(1.0 / q.abs()) +
                  n * std::log2(std::max(1.0, 1.0 / std::abs(a)));
    return bits <= 12.0;
}

bool conjugation_closed(std::vector<CScalar> vals, const Nome& q) {
    if (std::abs(q.value().imag()) > 1e-14) return false;
    while (!vals.empty()) {
        CScalar v = vals.back();
        vals.pop_back();
        if (std::abs(v.imag()) < 1e-12) continue;  // real entries pair with themselves
        bool matched = false;
        for (std::size_t j = 0; j < vals.size(); ++j) {
            if (std::abs(vals[j] - std::conj(v)) < 1e-12) {
                vals.erase(vals.begin() + static_cast<long>(j));
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

void assert_real_when_symmetric(CScalar& p, const std::vector<CScalar>& params, const Nome& q) {
    if (!conjugation_closed(params, q)) return;
    if (std::abs(p.imag()) > 1e-10 * std::max(1.0, std::abs(p)))
        throw NonFinite("polynomial value should be real for conjugation-closed parameters");
}

/// Terminating series evaluation of the family member with parameter list
/// {a, rest...}; zero entries in rest are folded out analytically: each
/// dropped pair (numerator q^{n-1} a prod, denominator a*rest_i) follows the
/// printed specializations.
CScalar family_series(int n, double theta, CScalar a, std::vector<CScalar> rest, const Nome& q,
                      const TruncationPolicy& policy) {
    // drop zero parameters symbolically
    std::erase(rest, CScalar(0.0));
    const int zeros = 3 - static_cast<int>(rest.size());

    CScalar abcd = a;
    for (const auto& r : rest) abcd *= r;

    SeriesSpec spec{{}, {}, q, q.value(), 0, n};
    spec.numer.push_back(powi(CScalar(1.0) / q.value(), n));
    if (zeros == 0) spec.numer.push_back(powi(q.value(), n - 1) * abcd);
    auto pair = conj_pair(a, theta);
    spec.numer.push_back(pair[0]);
    spec.numer.push_back(pair[1]);
    for (const auto& r : rest) spec.denom.push_back(a * r);
    // Zero offset bookkeeping against the full 4phi3: with any zero among
    // b,c,d the numerator q^{n-1}abcd vanishes (one dropped numerator) and
    // each zero drops one denominator; net m keeps the term factor at
    // ((-1)^k q^C(k,2))^0, i.e. plain argument q.
    spec.m = (zeros == 0) ? 0 : zeros - 1;

    CScalar pref = powi(a, -n);
    for (const auto& r : rest) pref *= qpoch_finite(a * r, q, n);
    return pref * phi(spec, policy).value;
}

/// p_0..p_{n_max} by the three-term recurrence in the normalization
/// ptil_n = a^n p_n / (ab,ac,ad;q)_n, which keeps both solutions of the
/// recurrence at comparable magnitude on x in (-1,1).
std::vector<CScalar> family_recurrence(int n_max, double x, CScalar a, CScalar b, CScalar c,
                                       CScalar d, const Nome& q) {
    if (a == CScalar(0.0)) throw DomainError("recurrence normalization requires a != 0");
    const CScalar qv = q.value();
    const CScalar abcd = a * b * c * d;
    std::vector<CScalar> p(static_cast<std::size_t>(n_max) + 1);
    CScalar ptil_prev = 0.0, ptil = 1.0;
    CScalar conv = 1.0;  // (ab,ac,ad;q)_n / a^n
    CScalar qn = 1.0;    // q^n
    p[0] = 1.0;
    for (int n = 0; n < n_max; ++n) {
        CScalar den1 = CScalar(1.0) - abcd * qn * qn / qv;  // 1 - abcd q^{2n-1}
        CScalar den2 = CScalar(1.0) - abcd * qn * qn;       // 1 - abcd q^{2n}
        if (std::abs(den1) < 1e-14 || std::abs(den2) < 1e-14)
            throw PoleInDenominator("recurrence coefficient pole (abcd q^k = 1)");
        CScalar A = (CScalar(1.0) - a * b * qn) * (CScalar(1.0) - a * c * qn) *
                    (CScalar(1.0) - a * d * qn) * (CScalar(1.0) - abcd * qn / qv) /
                    (a * den1 * den2);
        CScalar C = 0.0;
        if (n > 0) {
            CScalar den0 = CScalar(1.0) - abcd * qn * qn / (qv * qv);  // 1 - abcd q^{2n-2}
            if (std::abs(den0) < 1e-14)
                throw PoleInDenominator("recurrence coefficient pole (abcd q^k = 1)");
            C = a * (CScalar(1.0) - qn) * (CScalar(1.0) - b * c * qn / qv) *
                (CScalar(1.0) - b * d * qn / qv) * (CScalar(1.0) - c * d * qn / qv) /
                (den0 * den1);
        }
        if (std::abs(A) < 1e-300) throw PoleInDenominator("vanishing recurrence coefficient A_n");
        CScalar next = (CScalar(2.0) * x * ptil - (a + CScalar(1.0) / a - A - C) * ptil -
                        C * ptil_prev) /
                       A;
        ptil_prev = ptil;
        ptil = next;
        conv *= (CScalar(1.0) - a * b * qn) * (CScalar(1.0) - a * c * qn) *
                (CScalar(1.0) - a * d * qn) / a;
        qn *= qv;
        p[static_cast<std::size_t>(n) + 1] = ptil * conv;
    }
    return p;
}

}  // namespace

CScalar askey_wilson(int n, double x, const AWParams& p, const TruncationPolicy& policy) {
    if (n < 0) throw DomainError("degree must be nonnegative");
    double theta = recover_theta(x);
    OmegaGuard guard;
    for (CScalar prod : {p.a * p.b, p.a * p.c, p.a * p.d})
        if (prod != CScalar(0.0) && guard.near_omega(prod, p.q, n))
            throw PoleInDenominator("ab, ac or ad inside Omega_q^n");
    CScalar val;
    if (series_path_ok(n, p.a, p.q)) {
        val = family_series(n, theta, p.a, {p.b, p.c, p.d}, p.q, policy);
    } else {
        val = family_recurrence(n, x, p.a, p.b, p.c, p.d, p.q).back();
    }
    assert_real_when_symmetric(val, {p.a, p.b, p.c, p.d}, p.q);
    return val;
}

std::vector<CScalar> askey_wilson_sequence(int n_max, double x, const AWParams& p) {
    recover_theta(x);
    return family_recurrence(n_max, x, p.a, p.b, p.c, p.d, p.q);
}

std::array<CScalar, 2> aw_weight_forms(double theta, const AWParams& p,
                                       const TruncationPolicy& policy) {
    const Nome& q = p.q;
    CScalar den = 1.0;
    for (CScalar v : p.list()) {
        if (v == CScalar(0.0)) continue;
        auto pm = conj_pair(v, theta);
        den *= qpoch_infinite(pm[0], q, policy) * qpoch_infinite(pm[1], q, policy);
    }
    if (std::abs(den) < 1e-280) throw PoleInDenominator("weight denominator vanished");

    auto e2 = exp_pm(2.0 * theta);
    CScalar num1 = qpoch_infinite(e2[0], q, policy) * qpoch_infinite(e2[1], q, policy);

    CScalar sq = std::sqrt(q.value());
    CScalar num2 = 1.0;
    for (double s : {1.0, -1.0}) {
        auto u = conj_pair(CScalar(s), theta);
        auto v = conj_pair(s * sq, theta);
        num2 *= qpoch_infinite(u[0], q, policy) * qpoch_infinite(u[1], q, policy) *
                qpoch_infinite(v[0], q, policy) * qpoch_infinite(v[1], q, policy);
    }
    return {num1 / den, num2 / den};
}

CScalar aw_weight(double theta, const AWParams& p, const TruncationPolicy& policy) {
    auto forms = aw_weight_forms(theta, p, policy);
    if (std::abs(forms[0] - forms[1]) >
        1e-8 * std::max({std::abs(forms[0]), std::abs(forms[1]), 1e-12}))
        throw NonFinite("the two weight forms disagree beyond tolerance");
    return forms[0];
}

CScalar aw_norm(int n, const AWParams& p, const TruncationPolicy& policy) {
    if (n < 0) throw DomainError("degree must be nonnegative");
    const Nome& q = p.q;
    const CScalar qv = q.value();
    CScalar abcd = p.a * p.b * p.c * p.d;
    CScalar qn = powi(qv, n);

    CScalar num = qpoch_finite(abcd * qn / qv, q, n) *
                  qpoch_infinite(abcd * qn * qn, q, policy);
    CScalar den = qpoch_infinite(qn * qv, q, policy);
    OmegaGuard guard;
    std::array<CScalar, 6> pairs = {p.a * p.b, p.a * p.c, p.a * p.d,
                                    p.b * p.c, p.b * p.d, p.c * p.d};
    for (CScalar pr : pairs) {
        if (pr != CScalar(0.0) && guard.near_omega(pr * qn, q))
            throw PoleInDenominator("norm denominator within guard of Omega_q");
        den *= qpoch_infinite(pr * qn, q, policy);
    }
    if (std::abs(den) < 1e-280) throw PoleInDenominator("norm denominator vanished");
    return 2.0 * kPi * num / den;
}

CScalar cdqhahn(int n, double x, const CDQHParams& p, const TruncationPolicy& policy) {
    if (n < 0) throw DomainError("degree must be nonnegative");
    double theta = recover_theta(x);
    CScalar val;
    if (series_path_ok(n, p.a, p.q)) {
        val = family_series(n, theta, p.a, {p.b, p.c, CScalar(0.0)}, p.q, policy);
    } else {
        val = family_recurrence(n, x, p.a, p.b, p.c, CScalar(0.0), p.q).back();
    }
    assert_real_when_symmetric(val, {p.a, p.b, p.c}, p.q);
    return val;
}

std::vector<CScalar> cdqhahn_sequence(int n_max, double x, const CDQHParams& p) {
    recover_theta(x);
    return family_recurrence(n_max, x, p.a, p.b, p.c, CScalar(0.0), p.q);
}

CScalar alsalam_chihara(int n, double x, CScalar a, CScalar b, const Nome& q,
                        const TruncationPolicy& policy) {
    if (n < 0) throw DomainError("degree must be nonnegative");
    double theta = recover_theta(x);
    CScalar val;
    if (series_path_ok(n, a, q)) {
        val = family_series(n, theta, a, {b, CScalar(0.0), CScalar(0.0)}, q, policy);
    } else {
        val = family_recurrence(n, x, a, b, CScalar(0.0), CScalar(0.0), q).back();
    }
    assert_real_when_symmetric(val, {a, b}, q);
    return val;
}

std::vector<CScalar> alsalam_chihara_sequence(int n_max, double x, CScalar a, CScalar b,
                                              const Nome& q) {
    recover_theta(x);
    return family_recurrence(n_max, x, a, b, CScalar(0.0), CScalar(0.0), q);
}

}  // namespace qk
