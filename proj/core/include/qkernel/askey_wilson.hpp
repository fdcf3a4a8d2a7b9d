#pragma once

#include <array>
#include <vector>

#include "qkernel/policy.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

struct AWParams {
    CScalar a, b, c, d;
    Nome q;
    std::array<CScalar, 4> list() const { return {a, b, c, d}; }
};

struct CDQHParams {
    CScalar a, b, c;
    Nome q;
};

/// Askey-Wilson polynomial, x = cos(theta):
///
///   p_n(x) = a^{-n} (ab,ac,ad;q)_n
///            4phi3(q^{-n}, q^{n-1}abcd, a e^{+-i theta}; ab, ac, ad; q, q)
///
/// The terminating series is summed verbatim for small n. Beyond
/// kSeriesDegreeMax the alternating sum loses ~ n(n-1)/2 * lg(1/|q|) bits
/// to cancellation, so evaluation switches to the equivalent three-term
/// recurrence (the two paths are cross-checked in the tests).
CScalar askey_wilson(int n, double x, const AWParams& p, const TruncationPolicy& policy = {});

inline constexpr int kSeriesDegreeMax = 7;

/// p_0..p_{n_max} at fixed x via the recurrence (O(n_max) total).
std::vector<CScalar> askey_wilson_sequence(int n_max, double x, const AWParams& p);

/// Weight w_q(cos theta) = (e^{+-2i theta};q)_inf / ({a,b,c,d} e^{+-i theta};q)_inf.
/// Also evaluates the square-split form (+-e^{+-i theta}, +-q^(1/2) e^{+-i theta};q)_inf
/// over the same denominator and asserts the two agree.
CScalar aw_weight(double theta, const AWParams& p, const TruncationPolicy& policy = {});

/// Both printed forms of the weight (first, second); aw_weight returns the first.
std::array<CScalar, 2> aw_weight_forms(double theta, const AWParams& p,
                                       const TruncationPolicy& policy = {});

/// Orthogonality norm
///   h_n = 2 pi (q^{n-1} abcd;q)_n (q^{2n} abcd;q)_inf
///         / (q^{n+1}, q^n ab, q^n ac, q^n ad, q^n bc, q^n bd, q^n cd;q)_inf
CScalar aw_norm(int n, const AWParams& p, const TruncationPolicy& policy = {});

/// Continuous dual q-Hahn: the d -> 0 specialization folded analytically,
///   p_n(x) = a^{-n} (ab,ac;q)_n 3phi2(q^{-n}, a e^{+-i theta}; ab, ac; q, q).
CScalar cdqhahn(int n, double x, const CDQHParams& p, const TruncationPolicy& policy = {});
std::vector<CScalar> cdqhahn_sequence(int n_max, double x, const CDQHParams& p);

/// Al-Salam-Chihara: additionally c -> 0,
///   p_n(x) = a^{-n} (ab;q)_n 3phi2(q^{-n}, a e^{+-i theta}; ab, 0; q, q)
/// (the vanishing denominator slot enters through the zero offset).
CScalar alsalam_chihara(int n, double x, CScalar a, CScalar b, const Nome& q,
                        const TruncationPolicy& policy = {});
std::vector<CScalar> alsalam_chihara_sequence(int n_max, double x, CScalar a, CScalar b,
                                              const Nome& q);

}  // namespace qk
