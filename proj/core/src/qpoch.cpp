#include "qkernel/qpoch.hpp"

#include <cmath>

#include "qkernel/errors.hpp"

namespace qk {

CScalar qpoch_finite(CScalar a, const Nome& q, int n) {
    if (n < 0) throw DomainError("qpoch_finite needs n >= 0");
    CScalar p = 1.0, aq = a;
    for (int j = 0; j < n; ++j) {
        p *= (CScalar(1.0) - aq);
        aq *= q.value();
    }
    return p;
}

CScalar qpoch_finite(std::span<const CScalar> as, const Nome& q, int n) {
    CScalar p = 1.0;
    for (const auto& a : as) p *= qpoch_finite(a, q, n);
    return p;
}

namespace {

/// Number of factors after which the tail bound |a||q|^N/(1-|q|) < eps.
int tail_cutoff(double abs_a, const Nome& q, const TruncationPolicy& policy) {
    if (abs_a == 0.0) return 0;
    double bound = abs_a / (1.0 - q.abs());
    int n = 0;
    while (bound >= policy.eps_term) {
        bound *= q.abs();
        ++n;
        if (n > policy.n_max)
            throw TruncationExceeded("(a;q)_inf needs more than n_max factors");
    }
    return n;
}

template <typename Acc>
void accumulate_poch(Acc& p, CScalar a, const Nome& q, const TruncationPolicy& policy) {
    policy.validate();
    if (a == CScalar(0.0)) return;
    if (policy.tail_mode == TruncationPolicy::TailMode::product_tail_bound) {
        int n = tail_cutoff(std::abs(a), q, policy);
        CScalar aq = a;
        for (int j = 0; j < n; ++j) {
            p *= (CScalar(1.0) - aq);
            aq *= q.value();
        }
    } else {
        CScalar aq = a;
        int below = 0;
        for (int j = 0; j < policy.n_max; ++j) {
            p *= (CScalar(1.0) - aq);
            aq *= q.value();
            below = (std::abs(aq) < policy.eps_term) ? below + 1 : 0;
            if (below >= policy.k_consecutive) return;
        }
        throw TruncationExceeded("(a;q)_inf needs more than n_max factors");
    }
}

}  // namespace

CScalar qpoch_infinite(CScalar a, const Nome& q, const TruncationPolicy& policy) {
    CScalar p = 1.0;
    accumulate_poch(p, a, q, policy);
    return p;
}

CScalar qpoch_infinite(std::span<const CScalar> as, const Nome& q, const TruncationPolicy& policy) {
    CScalar p = 1.0;
    for (const auto& a : as) accumulate_poch(p, a, q, policy);
    return p;
}

ScaledComplex qpoch_infinite_scaled(CScalar a, const Nome& q, const TruncationPolicy& policy) {
    ScaledComplex p = ScaledComplex::one();
    accumulate_poch(p, a, q, policy);
    return p;
}

ScaledComplex qpoch_infinite_scaled(std::span<const CScalar> as, const Nome& q,
                                    const TruncationPolicy& policy) {
    ScaledComplex p = ScaledComplex::one();
    for (const auto& a : as) accumulate_poch(p, a, q, policy);
    return p;
}

CScalar qpoch_general(CScalar a, const Nome& q, CScalar b, const TruncationPolicy& policy,
                      const OmegaGuard& guard) {
    // integer exponents collapse to finite products, avoiding the
    // cancellation between the two infinite products
    double br = std::round(b.real());
    if (std::abs(b.imag()) < 1e-14 && std::abs(b.real() - br) < 1e-14 && std::abs(br) < 1e9) {
        int n = static_cast<int>(br);
        if (n >= 0) return qpoch_finite(a, q, n);
        // (a;q)_{-n} = 1 / (a q^{-n};q)_n
        CScalar shifted = a * powi(CScalar(1.0) / q.value(), -n);
        CScalar denom = qpoch_finite(shifted, q, -n);
        if (std::abs(denom) == 0.0) throw PoleAtOmega("(a;q)_b pole at negative integer b");
        return CScalar(1.0) / denom;
    }
    CScalar qb = std::exp(b * std::log(q.value()));
    if (guard.near_omega(a * qb, q))
        throw PoleAtOmega("a q^b within guard tolerance of Omega_q");
    return qpoch_infinite(a, q, policy) / qpoch_infinite(a * qb, q, policy);
}

CScalar theta(CScalar x, const Nome& q, const TruncationPolicy& policy) {
    if (x == CScalar(0.0)) throw DomainError("theta requires x != 0");
    return qpoch_infinite(x, q, policy) * qpoch_infinite(q.value() / x, q, policy);
}

ScaledComplex theta_scaled(CScalar x, const Nome& q, const TruncationPolicy& policy) {
    if (x == CScalar(0.0)) throw DomainError("theta requires x != 0");
    ScaledComplex p = qpoch_infinite_scaled(x, q, policy);
    p *= qpoch_infinite_scaled(q.value() / x, q, policy);
    return p;
}

std::vector<CScalar> expand_shorthand(const Shorthand& s) {
    switch (s.kind) {
        case Shorthand::Kind::literal:
            return s.literal;
        case Shorthand::Kind::plus_minus:
            return {s.a, -s.a};
        case Shorthand::Kind::exp_pm: {
            auto p = exp_pm(s.theta);
            return {p[0], p[1]};
        }
        case Shorthand::Kind::scaled_exp_pm: {
            auto p = conj_pair(s.a, s.theta);
            return {p[0], p[1]};
        }
    }
    throw DomainError("unknown shorthand kind");
}

}  // namespace qk
