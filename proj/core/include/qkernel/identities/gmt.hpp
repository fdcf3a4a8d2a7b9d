#pragma once

#include <array>

#include "qkernel/param_set.hpp"
#include "qkernel/policy.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

/// Parameter sets of the master contour integral G_{m,t}(a,b,c,d; sigma, q).
struct GmtArgs {
    ParamSet a, b, c, d;
};

/// G_{m,t} = (q;q)_inf/(2 pi) (sqrt(t)/sigma)^m
///           int_{-pi}^{pi} (b sigma/z, t a z/sigma;q)_inf
///                        / (d sigma/z, t c z/sigma;q)_inf e^{i m psi} dpsi,
/// z = e^{i psi}; hypotheses |c_k| < sigma/|t|, |d_l| < 1/sigma.
/// sqrt(t) principal, matching the t^{m/2} on the series side.
CScalar eval_G_integral(int m, CScalar t, const GmtArgs& s, double sigma, const Nome& q,
                        const QuadraturePolicy& qpol = {}, const TruncationPolicy& tpol = {});

/// Series expansion over the d-set (requires D >= 1, D >= B for convergence;
/// at D == B the argument must lie inside the unit disk):
///
///   G_{m,t} = t^{m/2} sum_k (t d_k a, b/d_k;q)_inf d_k^m / (t d_k c, d_[k]/d_k;q)_inf
///             * phi[C-A](t d_k c, q d_k/b; t d_k a, q d_k/d_[k];
///                        q, q^m (q d_k)^{D-B} b_1..b_B/(d_1..d_D))
CScalar eval_G_series_d(int m, CScalar t, const GmtArgs& s, const Nome& q,
                        const TruncationPolicy& tpol = {}, const OmegaGuard& guard = {});

/// Mirror expansion over the c-set (C >= 1, C >= A):
///
///   G_{m,t} = t^{-m/2} sum_k (t c_k b, a/c_k;q)_inf c_k^{-m} / (t c_k d, c_[k]/c_k;q)_inf
///             * phi[D-B](t c_k d, q c_k/a; t c_k b, q c_k/c_[k];
///                        q, q^{-m} (q c_k)^{C-A} a_1..a_A/(c_1..c_C))
CScalar eval_G_series_c(int m, CScalar t, const GmtArgs& s, const Nome& q,
                        const TruncationPolicy& tpol = {}, const OmegaGuard& guard = {});

/// Two-term idem-symmetric sum with argument q:
///
///   H(a,c,d;q) = sum over (d1,d2),(d2,d1) of
///     (d1 a;q)_inf / (d2/d1, d1 c;q)_inf
///     * phi[C-A-2](d1 c; d1 a, q d1/d2; q, q)
/// cond_out (when non-null) receives max |term| / |sum|, the cancellation
/// amplification of the evaluation.
CScalar eval_H(const ParamSet& a, const ParamSet& c, std::array<CScalar, 2> d, const Nome& q,
               const TruncationPolicy& tpol = {}, const OmegaGuard& guard = {},
               double* cond_out = nullptr);

/// Theta-weighted C-term sum (C >= A+2):
///
///   J(a,c,d;f,q) = sum_k theta(f c_k d1; q) theta(f/(c_k d2); q) (a/c_k;q)_inf
///                  / (c_k d1, c_k d2, c_[k]/c_k;q)_inf
///                  * phi(c_k d1, c_k d2, q c_k/a; q c_k/c_[k];
///                        q, q (q c_k)^{C-A-2} a_1..a_A/(d1 d2 c_1..c_C))
CScalar eval_J(const ParamSet& a, const ParamSet& c, std::array<CScalar, 2> d, CScalar f,
               const Nome& q, const TruncationPolicy& tpol = {}, const OmegaGuard& guard = {},
               double* cond_out = nullptr);

}  // namespace qk
