#pragma once

#include "qkernel/errors.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

/// The base q with 0 < |q| < 1. Construction rejects |q| >= 1 - delta_nome:
/// truncation lengths diverge as |q| -> 1, so near-unit nomes are refused
/// outright rather than failing slowly later.
class Nome {
public:
    static constexpr double kDeltaNome = 1e-3;

    explicit Nome(CScalar q);
    Nome(double q) : Nome(CScalar(q)) {}

    CScalar value() const { return q_; }
    double abs() const { return abs_; }

private:
    CScalar q_;
    double abs_;
};

/// Stop rules for infinite products and series.
struct TruncationPolicy {
    enum class TailMode { product_tail_bound, fixed_epsilon };

    double eps_term = 1e-15;   // relative term floor
    int n_max = 4000;          // hard cap on factors/terms
    int k_consecutive = 3;     // terms below floor required to stop
    TailMode tail_mode = TailMode::product_tail_bound;

    void validate() const;
};

/// Proximity classification against the pole set Omega_q = {q^-k} and the
/// theta zero set {q^m : m in Z}. Samples landing inside the guard are
/// rejected and resampled upstream, never patched.
struct OmegaGuard {
    double tol = 1e-6;  // absolute

    /// x within tol of q^-k for some 0 <= k (< n_limit when n_limit >= 0).
    bool near_omega(CScalar x, const Nome& q, int n_limit = -1) const;

    /// x within tol of q^m for some integer m (includes x near 0, where
    /// the positive powers accumulate).
    bool near_theta_zero(CScalar x, const Nome& q) const;
};

/// Node-doubling ladder for the periodic trapezoid rule.
struct QuadraturePolicy {
    int n0 = 64;        // initial node count, power of two, >= 16
    int n_max = 16384;  // node cap
    double tol = 1e-11; // successive-estimate agreement (relative, floor 0.1)

    void validate() const;
};

}  // namespace qk
