// Property drivers for the q-shifted-factorial identity suite, shared by
// the unit tests and the acceptance gate.
#pragma once

#include <random>

#include "qkernel/qpoch.hpp"
#include "qkernel/scalar.hpp"

namespace props {

using qk::CScalar;
using qk::Nome;

inline CScalar rand_annulus(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> rad(lo, hi), ph(0.0, 2.0 * qk::kPi);
    return std::polar(rad(rng), ph(rng));
}

inline double binom2(int n) { return 0.5 * n * (n - 1); }

/// Worst relative error over the identity suite at one nome:
///   reversal (base 1/q), inversion, index shift, square split,
///   theta ratio and the three duplication identities.
inline double poch_identity_suite(CScalar qv, int samples, std::mt19937_64& rng) {
    Nome q(qv);
    double worst = 0.0;
    auto note = [&](CScalar lhs, CScalar rhs) {
        worst = std::max(worst, qk::rel_diff(lhs, rhs));
    };
    std::uniform_int_distribution<int> small_n(0, 8), mid_n(0, 12);

    for (int s = 0; s < samples; ++s) {
        CScalar a = rand_annulus(rng, 0.1, 0.9);
        int n = mid_n(rng);

        // (a;q^{-1})_n = (1/a;q)_n (-a)^n q^{-C(n,2)}; left side by direct product
        {
            CScalar lhs = 1.0, aq = a, qinv = CScalar(1.0) / qv;
            for (int j = 0; j < n; ++j) {
                lhs *= (CScalar(1.0) - aq);
                aq *= qinv;
            }
            CScalar rhs = qk::qpoch_finite(CScalar(1.0) / a, q, n) * qk::powi(-a, n) *
                          std::pow(qv, -binom2(n));
            note(lhs, rhs);
        }
        // (a;q)_n = (q^{1-n}/a;q)_n (-a)^n q^{C(n,2)}
        note(qk::qpoch_finite(a, q, n),
             qk::qpoch_finite(qk::powi(qv, 1 - n) / a, q, n) * qk::powi(-a, n) *
                 std::pow(qv, binom2(n)));
        // (a q^{-n};q)_k = q^{-nk} (q/a;q)_n / (q^{1-k}/a;q)_n (a;q)_k
        {
            int k = small_n(rng), nn = small_n(rng);
            CScalar lhs = qk::qpoch_finite(a * qk::powi(qv, -nn), q, k);
            CScalar rhs = qk::powi(qv, -nn * k) * qk::qpoch_finite(qv / a, q, nn) /
                          qk::qpoch_finite(qk::powi(qv, 1 - k) / a, q, nn) *
                          qk::qpoch_finite(a, q, k);
            note(lhs, rhs);
        }
        // splitting (a;q)_{n+k} = (a;q)_k (a q^k;q)_n
        {
            int k = small_n(rng), nn = small_n(rng);
            note(qk::qpoch_finite(a, q, nn + k),
                 qk::qpoch_finite(a, q, k) * qk::qpoch_finite(a * qk::powi(qv, k), q, nn));
        }
        // square split (a^2;q)_inf = (+-a, +-q^(1/2) a;q)_inf
        {
            CScalar sq = std::sqrt(qv);
            CScalar rhs = qk::qpoch_infinite(a, q) * qk::qpoch_infinite(-a, q) *
                          qk::qpoch_infinite(sq * a, q) * qk::qpoch_infinite(-sq * a, q);
            note(qk::qpoch_infinite(a * a, q), rhs);
        }
        // theta ratio theta(a)/theta(qa) = -a  (a kept清 of the zero set)
        {
            qk::OmegaGuard guard{1e-3};
            if (!guard.near_theta_zero(a, q))
                note(qk::theta(a, q) / qk::theta(qv * a, q), -a);
        }
        // duplication (a^2;q^2)_n = (+-a;q)_n
        {
            int nn = small_n(rng);
            Nome q2(qv * qv);
            note(qk::qpoch_finite(a * a, q2, nn),
                 qk::qpoch_finite(a, q, nn) * qk::qpoch_finite(-a, q, nn));
        }
        // (a;q)_{2n} = (a, aq;q^2)_n = (+-sqrt a, +-sqrt(qa);q)_n
        {
            int nn = small_n(rng);
            Nome q2(qv * qv);
            CScalar lhs = qk::qpoch_finite(a, q, 2 * nn);
            note(lhs, qk::qpoch_finite(a, q2, nn) * qk::qpoch_finite(a * qv, q2, nn));
            CScalar sa = std::sqrt(a), sqa = std::sqrt(qv * a);
            note(lhs, qk::qpoch_finite(sa, q, nn) * qk::qpoch_finite(-sa, q, nn) *
                          qk::qpoch_finite(sqa, q, nn) * qk::qpoch_finite(-sqa, q, nn));
        }
        // (a q^n;q)_n = (+-sqrt a, +-sqrt(qa);q)_n / (a;q)_n, a outside Omega_q^n
        {
            int nn = small_n(rng);
            qk::OmegaGuard guard{1e-3};
            if (!guard.near_omega(a, q, nn) && std::abs(qk::qpoch_finite(a, q, nn)) > 1e-3) {
                CScalar sa = std::sqrt(a), sqa = std::sqrt(qv * a);
                CScalar rhs = qk::qpoch_finite(sa, q, nn) * qk::qpoch_finite(-sa, q, nn) *
                              qk::qpoch_finite(sqa, q, nn) * qk::qpoch_finite(-sqa, q, nn) /
                              qk::qpoch_finite(a, q, nn);
                note(qk::qpoch_finite(a * qk::powi(qv, nn), q, nn), rhs);
            }
        }
    }
    return worst;
}

}  // namespace props
