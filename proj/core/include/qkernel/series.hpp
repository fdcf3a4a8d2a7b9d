#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qkernel/policy.hpp"
#include "qkernel/qpoch.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

/// A basic hypergeometric series
///
///   sum_k  (a_1,...,a_{r+1};q)_k / (q, b_1,...,b_s;q)_k
///          * ((-1)^k q^C(k,2))^{s-r+m} * z^k
///
/// where m is the zero-offset: m < 0 stands for |m| extra zero numerator
/// parameters, m > 0 for m extra zero denominator slots, folded into the
/// exponent. Numerator entries may be zero; denominator entries must stay
/// outside Omega_q and away from 0.
struct SeriesSpec {
    std::vector<CScalar> numer;
    std::vector<CScalar> denom;
    Nome q;
    CScalar z = 0.0;
    int m = 0;
    /// Exact termination index when known a priori (e.g. a q^{-n}
    /// numerator written down analytically); bypasses numeric detection.
    std::optional<int> terminate_at;
};

enum class ConvergenceKind { entire, unit_disk, divergent, terminating };

struct ConvergenceClass {
    ConvergenceKind kind;
    std::optional<int> n_terminate;  // set iff kind == terminating
};

/// Smallest n with some numerator within guard tolerance of q^{-n},
/// scanning n <= scan_max; nullopt if none.
std::optional<int> is_terminating(std::span<const CScalar> numer, const Nome& q,
                                  const OmegaGuard& guard = {}, int scan_max = 512);

/// terminating, else by s - r + m: positive -> entire, zero -> unit disk,
/// negative -> divergent.
ConvergenceClass classify(const SeriesSpec& spec, const OmegaGuard& guard = {});

struct PhiResult {
    CScalar value;
    ConvergenceClass cls;
    int terms = 0;
};

PhiResult phi(const SeriesSpec& spec, const TruncationPolicy& policy = {},
              const OmegaGuard& guard = {});

inline CScalar phi_value(const SeriesSpec& spec, const TruncationPolicy& policy = {},
                         const OmegaGuard& guard = {}) {
    return phi(spec, policy, guard).value;
}

/// Very-well-poised series
///   {}_{r+1}W_r(b; a_4,...,a_{r+1}; q, z)
///     = phi with numerators {+-q sqrt(b), b, a_4,...} over
///       denominators {+-sqrt(b), qb/a_4,...}.
/// Principal sqrt(b); the +- pair makes the value branch-free.
CScalar wphi(CScalar b, std::span<const CScalar> tail, const Nome& q, CScalar z,
             const TruncationPolicy& policy = {}, const OmegaGuard& guard = {});

}  // namespace qk
