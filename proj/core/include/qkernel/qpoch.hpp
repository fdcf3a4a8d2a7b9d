#pragma once

#include <array>
#include <span>
#include <vector>

#include "qkernel/policy.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

/// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); exact finite product.
CScalar qpoch_finite(CScalar a, const Nome& q, int n);

/// (a_1,...,a_k;q)_n
CScalar qpoch_finite(std::span<const CScalar> as, const Nome& q, int n);

/// (a;q)_inf, truncated once the multiplicative tail bound
/// |a||q|^N/(1-|q|) drops below eps_term.
CScalar qpoch_infinite(CScalar a, const Nome& q, const TruncationPolicy& policy = {});
CScalar qpoch_infinite(std::span<const CScalar> as, const Nome& q, const TruncationPolicy& policy = {});

/// Scaled variants for prefactor assembly whose magnitudes can leave the
/// binary64 range (limit checks with parameters ~1e10 and beyond).
ScaledComplex qpoch_infinite_scaled(CScalar a, const Nome& q, const TruncationPolicy& policy = {});
ScaledComplex qpoch_infinite_scaled(std::span<const CScalar> as, const Nome& q, const TruncationPolicy& policy = {});

/// General exponent: (a;q)_b = (a;q)_inf / (a q^b;q)_inf, a q^b not in
/// Omega_q. Integer b collapses to the finite product form to avoid
/// cancellation between the two infinite products.
CScalar qpoch_general(CScalar a, const Nome& q, CScalar b, const TruncationPolicy& policy = {},
                      const OmegaGuard& guard = {});

/// Modified theta function of nome q: theta(x;q) = (x, q/x;q)_inf.
/// Vanishes exactly at x = q^m, m in Z.
CScalar theta(CScalar x, const Nome& q, const TruncationPolicy& policy = {});
ScaledComplex theta_scaled(CScalar x, const Nome& q, const TruncationPolicy& policy = {});

// --- parameter shorthand -------------------------------------------------

/// Descriptor for the set shorthands used by multi-parameter formulas:
/// +-a, e^{+-i theta}, a e^{+-i theta} and literal lists.
struct Shorthand {
    enum class Kind { literal, plus_minus, exp_pm, scaled_exp_pm };
    Kind kind = Kind::literal;
    std::vector<CScalar> literal;
    CScalar a = 0.0;
    double theta = 0.0;

    static Shorthand list(std::vector<CScalar> xs) {
        Shorthand s; s.kind = Kind::literal; s.literal = std::move(xs); return s;
    }
    static Shorthand pm(CScalar a) {
        Shorthand s; s.kind = Kind::plus_minus; s.a = a; return s;
    }
    static Shorthand eipm(double theta) {
        Shorthand s; s.kind = Kind::exp_pm; s.theta = theta; return s;
    }
    static Shorthand aeipm(CScalar a, double theta) {
        Shorthand s; s.kind = Kind::scaled_exp_pm; s.a = a; s.theta = theta; return s;
    }
};

std::vector<CScalar> expand_shorthand(const Shorthand& s);

/// {a, -a}
inline std::array<CScalar, 2> plus_minus(CScalar a) { return {a, -a}; }

/// {e^{i theta}, e^{-i theta}}
inline std::array<CScalar, 2> exp_pm(double theta) {
    CScalar u = std::polar(1.0, theta);
    return {u, std::conj(u)};
}

/// {a e^{i theta}, a e^{-i theta}}
inline std::array<CScalar, 2> conj_pair(CScalar a, double theta) {
    CScalar u = std::polar(1.0, theta);
    return {a * u, a * std::conj(u)};
}

}  // namespace qk
