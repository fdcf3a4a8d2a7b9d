#include "qkernel/identities/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace qk::sampling {

CScalar annulus(std::mt19937_64& rng, double r_lo, double r_hi) {
    std::uniform_real_distribution<double> rad(r_lo, r_hi);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    double r = rad(rng);
    double ph = phase(rng);
    return std::polar(r, ph);
}

CScalar on_circle(std::mt19937_64& rng, double r) {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    return std::polar(r, phase(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

std::vector<double> stratified_phases(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double base = 2.0 * kPi * u(rng);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            base + 2.0 * kPi * (i + 0.1 + 0.8 * u(rng)) / n;
    return out;
}

CScalar default_nome(std::mt19937_64& rng) {
    static const CScalar qs[4] = {CScalar(0.3), CScalar(0.5), CScalar(0.7),
                                  0.5 * std::polar(1.0, kPi / 7.0)};
    std::uniform_int_distribution<int> pick(0, 3);
    return qs[pick(rng)];
}

bool poch_den_ok(std::span<const CScalar> xs, const Nome& q, double floor_mag) {
    double floor_log2 = std::log2(floor_mag);
    for (const auto& x : xs) {
        ScaledComplex p = qpoch_infinite_scaled(x, q);
        if (p.zero() || p.log2_abs() < floor_log2) return false;
    }
    return true;
}

bool poch_den_ok(std::initializer_list<CScalar> xs, const Nome& q, double floor_mag) {
    return poch_den_ok(std::span<const CScalar>(xs.begin(), xs.size()), q, floor_mag);
}

bool theta_ok(CScalar x, const Nome& q, const OmegaGuard& guard) {
    return x != CScalar(0.0) && !guard.near_theta_zero(x, q);
}

bool omega_ok(CScalar x, const Nome& q, const OmegaGuard& guard) {
    return !guard.near_omega(x, q);
}

double annulus_clearance(std::span<const CScalar> sigma_over_z_denoms,
                         std::span<const CScalar> z_over_sigma_denoms, double sigma,
                         const Nome& q) {
    double worst = std::numeric_limits<double>::infinity();
    auto visit = [&](double r) {
        if (r <= 0) return;
        worst = std::min(worst, std::max(r, 1.0 / r));
    };
    // poles of (xi sigma/z;q)_inf at |z| = |xi| sigma |q|^j, shrinking inward
    for (const auto& xi : sigma_over_z_denoms) {
        double r = std::abs(xi) * sigma;
        while (r > 1e-12) {
            visit(r);
            if (r < 0.5) break;  // deeper poles only recede from the contour
            r *= q.abs();
        }
    }
    // poles of (zeta z/sigma;q)_inf at |z| = sigma/(|zeta| |q|^j), growing outward
    for (const auto& zeta : z_over_sigma_denoms) {
        double az = std::abs(zeta);
        if (az == 0.0) continue;
        double r = sigma / az;
        while (r < 1e12) {
            visit(r);
            if (r > 2.0) break;
            r /= q.abs();
        }
    }
    return worst;
}

double separating_scale(std::span<const CScalar> sigma_over_z_denoms,
                        std::span<const CScalar> z_over_sigma_denoms, double lo_cap,
                        double hi_cap) {
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    for (const auto& zeta : z_over_sigma_denoms) lo = std::max(lo, std::abs(zeta));
    for (const auto& xi : sigma_over_z_denoms) {
        double ax = std::abs(xi);
        if (ax > 0) hi = std::min(hi, 1.0 / ax);
    }
    if (lo == 0.0) lo = lo_cap;
    if (!std::isfinite(hi)) hi = hi_cap;
    double mid = std::sqrt(lo * hi);
    return std::clamp(mid, lo_cap, hi_cap);
}

}  // namespace qk::sampling
