#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qkernel/effort.hpp"
#include "qkernel/errors.hpp"
#include "qkernel/identities/registry.hpp"
#include "qkernel/identities/sampling.hpp"
#include "qkernel/param_set.hpp"
#include "qkernel/qpoch.hpp"
#include "qkernel/quadrature.hpp"
#include "qkernel/series.hpp"

namespace qk::detail {

inline Nome nm(const Sample& s) { return Nome(s.q); }

inline CScalar pick_q(std::mt19937_64& rng, const RunPolicies& pol) {
    return pol.q_override ? *pol.q_override : sampling::default_nome(rng);
}

inline ScaledComplex scprod(std::initializer_list<CScalar> xs, const Nome& q,
                            const TruncationPolicy& tpol) {
    return qpoch_infinite_scaled(std::span<const CScalar>(xs.begin(), xs.size()), q, tpol);
}

inline ScaledComplex scprod(std::span<const CScalar> xs, const Nome& q,
                            const TruncationPolicy& tpol) {
    return qpoch_infinite_scaled(xs, q, tpol);
}

/// Integrand  prod (u_i sigma/z;q)inf prod (v_j z/sigma;q)inf
///          / (prod (x_k sigma/z;q)inf prod (y_l z/sigma;q)inf),  z = e^{i psi}.
inline std::function<CScalar(double)> ratio_integrand(std::vector<CScalar> num_su,
                                                      std::vector<CScalar> num_zs,
                                                      std::vector<CScalar> den_su,
                                                      std::vector<CScalar> den_zs, double sigma,
                                                      Nome q, TruncationPolicy tpol) {
    return [=](double psi) -> CScalar {
        CScalar z = std::polar(1.0, psi);
        CScalar su = sigma / z, zs = z / sigma;
        CScalar num = 1.0, den = 1.0;
        for (const auto& u : num_su) num *= qpoch_infinite(u * su, q, tpol);
        for (const auto& v : num_zs) num *= qpoch_infinite(v * zs, q, tpol);
        for (const auto& x : den_su) den *= qpoch_infinite(x * su, q, tpol);
        for (const auto& y : den_zs) den *= qpoch_infinite(y * zs, q, tpol);
        return num / den;
    };
}

/// Askey-Wilson-type integrand over theta:
///   (e^{+-2 i th};q)inf prod_l (lam e^{+-i th};q)inf / prod_a (a e^{+-i th};q)inf
inline std::function<CScalar(double)> aw_integrand(std::vector<CScalar> lams,
                                                   std::vector<CScalar> as, Nome q,
                                                   TruncationPolicy tpol) {
    return [=](double th) -> CScalar {
        auto e2 = exp_pm(2.0 * th);
        CScalar num = qpoch_infinite(e2[0], q, tpol) * qpoch_infinite(e2[1], q, tpol);
        for (const auto& l : lams) {
            auto p = conj_pair(l, th);
            num *= qpoch_infinite(p[0], q, tpol) * qpoch_infinite(p[1], q, tpol);
        }
        CScalar den = 1.0;
        for (const auto& a : as) {
            auto p = conj_pair(a, th);
            den *= qpoch_infinite(p[0], q, tpol) * qpoch_infinite(p[1], q, tpol);
        }
        return num / den;
    };
}

/// Coarse probe of max |integrand| on the contour. Together with the
/// closed-form value this bounds the relative accuracy the node sums can
/// reach: binary64 resolves the integral to ~1e-16 * peak in absolute terms.
inline double integrand_peak(const std::function<CScalar(double)>& f, int n = 16) {
    double m = 0.0;
    for (int j = 0; j < n; ++j)
        m = std::max(m, std::abs(f(-kPi + 2.0 * kPi * (j + 0.37) / n)));
    return m;
}

/// idem(v[0]; v[1],...): term(v) plus term with v[0] swapped with each v[k].
template <typename Term>
ScaledComplex idem_sum(const std::vector<CScalar>& v, Term term) {
    ScaledComplex total = term(v);
    for (std::size_t k = 1; k < v.size(); ++k) {
        std::vector<CScalar> w = v;
        std::swap(w[0], w[k]);
        total += term(w);
    }
    return total;
}

inline Evaluator with_value(Evaluator ev, std::string name, CScalar value) {
    return [ev = std::move(ev), name = std::move(name), value](const Sample& s,
                                                               const RunPolicies& pol) {
        Sample s2 = s;
        s2.set(name, value);
        return ev(s2, pol);
    };
}

inline Evaluator with_scaled(Evaluator ev, std::string name, CScalar factor) {
    return [ev = std::move(ev), name = std::move(name), factor](const Sample& s,
                                                                const RunPolicies& pol) {
        Sample s2 = s;
        s2.set(name, factor * s.get(name));
        return ev(s2, pol);
    };
}

inline Evaluator with_swap(Evaluator ev, std::string n1, std::string n2) {
    return [ev = std::move(ev), n1 = std::move(n1), n2 = std::move(n2)](const Sample& s,
                                                                        const RunPolicies& pol) {
        Sample s2 = s;
        CScalar v1 = s.get(n1), v2 = s.get(n2);
        s2.set(n1, v2);
        s2.set(n2, v1);
        return ev(s2, pol);
    };
}

inline std::vector<CScalar> getv(const Sample& s, std::initializer_list<const char*> names) {
    std::vector<CScalar> out;
    out.reserve(names.size());
    for (const char* n : names) out.push_back(s.get(n));
    return out;
}

/// a1..aN convention
inline std::vector<CScalar> get_seq(const Sample& s, const char* stem, int n) {
    std::vector<CScalar> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back(s.get(std::string(stem) + std::to_string(i)));
    return out;
}

inline CScalar product(std::span<const CScalar> xs) {
    CScalar p = 1.0;
    for (const auto& x : xs) p *= x;
    return p;
}

inline std::vector<CScalar> pairprods(std::span<const CScalar> xs) {
    std::vector<CScalar> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) out.push_back(xs[i] * xs[j]);
    return out;
}

inline std::vector<CScalar> scale_all(std::span<const CScalar> xs, CScalar b) {
    std::vector<CScalar> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(b * x);
    return out;
}

}  // namespace qk::detail
