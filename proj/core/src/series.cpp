#include "qkernel/series.hpp"

#include <cmath>

#include "qkernel/effort.hpp"
#include "qkernel/errors.hpp"

namespace qk {

std::optional<int> is_terminating(std::span<const CScalar> numer, const Nome& q,
                                  const OmegaGuard& guard, int scan_max) {
    std::optional<int> best;
    for (const auto& a : numer) {
        double aa = std::abs(a);
        CScalar w = 1.0;  // q^{-n}
        double aw = 1.0;
        for (int n = 0; n <= scan_max && aw <= aa + guard.tol; ++n) {
            if (std::abs(a - w) <= guard.tol) {
                if (!best || n < *best) best = n;
                break;
            }
            w /= q.value();
            aw /= q.abs();
        }
    }
    return best;
}

ConvergenceClass classify(const SeriesSpec& spec, const OmegaGuard& guard) {
    if (spec.terminate_at) return {ConvergenceKind::terminating, spec.terminate_at};
    if (auto n = is_terminating(spec.numer, spec.q, guard))
        return {ConvergenceKind::terminating, n};
    int e = static_cast<int>(spec.denom.size()) - static_cast<int>(spec.numer.size()) + 1 + spec.m;
    if (e > 0) return {ConvergenceKind::entire, std::nullopt};
    if (e == 0) return {ConvergenceKind::unit_disk, std::nullopt};
    return {ConvergenceKind::divergent, std::nullopt};
}

PhiResult phi(const SeriesSpec& spec, const TruncationPolicy& policy, const OmegaGuard& guard) {
    policy.validate();
    for (const auto& b : spec.denom) {
        // exact zeros must enter through the offset m, not the list
        if (b == CScalar(0.0))
            throw PoleInDenominator("explicit zero denominator parameter (use the offset m)");
        if (guard.near_omega(b, spec.q))
            throw PoleInDenominator("denominator parameter within guard of Omega_q");
    }

    ConvergenceClass cls = classify(spec, guard);
    const bool terminating = cls.kind == ConvergenceKind::terminating;
    if (cls.kind == ConvergenceKind::divergent)
        throw Divergent("s - r + m < 0 and series does not terminate");
    if (cls.kind == ConvergenceKind::unit_disk && std::abs(spec.z) > 0.999)
        throw Divergent("|z| too close to or beyond the unit circle");

    const int e = static_cast<int>(spec.denom.size()) - static_cast<int>(spec.numer.size()) + 1 +
                  spec.m;
    const CScalar q = spec.q.value();

    CScalar sum = 1.0, term = 1.0, qk = 1.0;  // qk = q^k
    int below = 0;
    int k = 0;
    const int kmax = terminating ? *cls.n_terminate : policy.n_max;
    while (k < kmax) {
        CScalar ratio = spec.z;
        for (const auto& a : spec.numer) ratio *= (CScalar(1.0) - a * qk);
        for (const auto& b : spec.denom) {
            CScalar f = CScalar(1.0) - b * qk;
            if (std::abs(f) < 1e-14)
                throw PoleInDenominator("denominator Pochhammer factor vanished");
            ratio /= f;
        }
        CScalar f = CScalar(1.0) - q * qk;  // the (q;q)_k factor
        if (std::abs(f) < 1e-14) throw PoleInDenominator("(q;q)_k factor vanished");
        ratio /= f;
        if (e != 0) ratio *= powi(-qk, e);
        term *= ratio;
        sum += term;
        qk *= q;
        ++k;
        if (!terminating) {
            below = (std::abs(term) <= policy.eps_term * std::max(1.0, std::abs(sum))) ? below + 1
                                                                                       : 0;
            if (below >= policy.k_consecutive) break;
        }
    }
    if (!terminating && k >= policy.n_max)
        throw SlowConvergence("phi hit n_max before the stop rule");
    if (!is_finite(sum)) throw NonFinite("phi produced a non-finite value");
    effort::note_series_terms(k + 1);
    return {sum, cls, k + 1};
}

CScalar wphi(CScalar b, std::span<const CScalar> tail, const Nome& q, CScalar z,
             const TruncationPolicy& policy, const OmegaGuard& guard) {
    CScalar sb = std::sqrt(b);
    SeriesSpec spec{{}, {}, q, z, 0, std::nullopt};
    spec.numer.reserve(tail.size() + 3);
    spec.denom.reserve(tail.size() + 2);
    spec.numer.push_back(q.value() * sb);
    spec.numer.push_back(-q.value() * sb);
    spec.numer.push_back(b);
    spec.denom.push_back(sb);
    spec.denom.push_back(-sb);
    for (const auto& a : tail) {
        if (a == CScalar(0.0)) throw DomainError("wphi tail parameter must be nonzero");
        spec.numer.push_back(a);
        spec.denom.push_back(q.value() * b / a);
    }
    return phi(spec, policy, guard).value;
}

}  // namespace qk
