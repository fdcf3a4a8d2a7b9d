#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace qk {

/// Universal value type: binary64 complex.
using CScalar = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline bool is_finite(CScalar z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// |a-b| / max(|a|, |b|, 1e-300)
inline double rel_diff(CScalar a, CScalar b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

/// Integer power by repeated multiplication; negative exponents via 1/base.
CScalar powi(CScalar base, int e);

/// Parses "re", "re+imi", "re-imi", "imi", "i", "-i" and "exp(i<theta>)".
/// Throws DomainError on malformed input.
CScalar parse_complex(std::string_view s);

std::string format_complex(CScalar z);

/// Complex value kept as m * 2^e so that long products survive the
/// binary64 exponent range. |m| is renormalized into [1,2) after every
/// few operations; m == 0 represents exact zero.
class ScaledComplex {
public:
    ScaledComplex() : m_(0.0), e_(0) {}
    ScaledComplex(CScalar v) : m_(v), e_(0) { normalize(); }
    static ScaledComplex one() { return ScaledComplex(CScalar(1.0)); }

    ScaledComplex& operator*=(CScalar f) { m_ *= f; normalize(); return *this; }
    ScaledComplex& operator/=(CScalar f) { m_ /= f; normalize(); return *this; }
    ScaledComplex& operator*=(const ScaledComplex& o) { m_ *= o.m_; e_ += o.e_; normalize(); return *this; }
    ScaledComplex& operator/=(const ScaledComplex& o) { m_ /= o.m_; e_ -= o.e_; normalize(); return *this; }

    friend ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { a *= b; return a; }
    friend ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b) { a /= b; return a; }

    ScaledComplex& operator+=(const ScaledComplex& o);
    friend ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b) { a += b; return a; }

    bool zero() const { return m_ == CScalar(0.0); }

    /// log2 of the magnitude (-inf for zero).
    double log2_abs() const;

    /// Collapse to a plain complex; overflows to inf, underflows to 0.
    CScalar value() const;

private:
    void normalize();
    CScalar m_;
    long e_;
};

}  // namespace qk
