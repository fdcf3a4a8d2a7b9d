#include "qkernel/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>

#include "qkernel/errors.hpp"

namespace qk {

CScalar powi(CScalar base, int e) {
    if (e < 0) return CScalar(1.0) / powi(base, -e);
    CScalar r = 1.0, b = base;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

namespace {

bool parse_double_prefix(std::string_view s, std::size_t& pos, double& out) {
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first) return false;
    pos += static_cast<std::size_t>(ptr - first);
    return true;
}

}  // namespace

CScalar parse_complex(std::string_view s) {
    // strip whitespace
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw DomainError("empty complex literal");

    // exp(i<theta>) shorthand for unit-modulus values
    if (t.rfind("exp(i", 0) == 0 && t.back() == ')') {
        std::string_view inner(t.data() + 5, t.size() - 6);
        std::size_t pos = 0;
        double theta = 0;
        if (!parse_double_prefix(inner, pos, theta) || pos != inner.size())
            throw DomainError("malformed exp(i<theta>) literal: " + t);
        return std::polar(1.0, theta);
    }

    std::size_t pos = 0;
    double first = 0;
    bool first_is_imag = false;

    if (t == "i" || t == "+i") return CScalar(0, 1);
    if (t == "-i") return CScalar(0, -1);

    if (!parse_double_prefix(t, pos, first)) throw DomainError("malformed complex literal: " + t);
    if (pos < t.size() && t[pos] == 'i') {
        first_is_imag = true;
        ++pos;
    }
    if (pos == t.size()) return first_is_imag ? CScalar(0, first) : CScalar(first, 0);
    if (first_is_imag) throw DomainError("malformed complex literal: " + t);

    // remaining: signed imaginary part ending in i, or "+i"/"-i"
    double imag = 0;
    if (t.compare(pos, std::string::npos, "+i") == 0) return CScalar(first, 1);
    if (t.compare(pos, std::string::npos, "-i") == 0) return CScalar(first, -1);
    if (!parse_double_prefix(t, pos, imag) || pos + 1 != t.size() || t[pos] != 'i')
        throw DomainError("malformed complex literal: " + t);
    return CScalar(first, imag);
}

std::string format_complex(CScalar z) {
    char buf[80];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    }
    return buf;
}

void ScaledComplex::normalize() {
    double a = std::max(std::abs(m_.real()), std::abs(m_.imag()));
    if (a == 0.0 || !std::isfinite(a)) {
        if (!std::isfinite(a)) return;  // propagate inf/nan unnormalized
        e_ = 0;
        return;
    }
    int k = std::ilogb(a);
    if (k != 0) {
        m_ = CScalar(std::ldexp(m_.real(), -k), std::ldexp(m_.imag(), -k));
        e_ += k;
    }
}

ScaledComplex& ScaledComplex::operator+=(const ScaledComplex& o) {
    if (o.zero()) return *this;
    if (zero()) {
        *this = o;
        return *this;
    }
    long de = o.e_ - e_;
    if (de > 2100) {
        *this = o;  // we are negligible
    } else if (de >= -2100) {
        m_ += CScalar(std::ldexp(o.m_.real(), static_cast<int>(de)),
                      std::ldexp(o.m_.imag(), static_cast<int>(de)));
        normalize();
    }
    return *this;
}

double ScaledComplex::log2_abs() const {
    if (zero()) return -std::numeric_limits<double>::infinity();
    return std::log2(std::abs(m_)) + static_cast<double>(e_);
}

CScalar ScaledComplex::value() const {
    if (zero()) return CScalar(0.0);
    if (e_ > 1100) {
        double inf = std::numeric_limits<double>::infinity();
        return CScalar(m_.real() > 0 ? inf : (m_.real() < 0 ? -inf : 0.0),
                       m_.imag() > 0 ? inf : (m_.imag() < 0 ? -inf : 0.0));
    }
    if (e_ < -1100) return CScalar(0.0);
    return CScalar(std::ldexp(m_.real(), static_cast<int>(e_)),
                   std::ldexp(m_.imag(), static_cast<int>(e_)));
}

}  // namespace qk
