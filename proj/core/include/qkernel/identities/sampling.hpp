#pragma once

#include <random>
#include <span>

#include "qkernel/identities/registry.hpp"
#include "qkernel/policy.hpp"
#include "qkernel/qpoch.hpp"
#include "qkernel/scalar.hpp"

namespace qk::sampling {

/// Uniform modulus in [r_lo, r_hi], uniform phase.
CScalar annulus(std::mt19937_64& rng, double r_lo, double r_hi);

/// Uniform phase at fixed modulus.
CScalar on_circle(std::mt19937_64& rng, double r);

/// n jittered-equispaced phases (random global rotation). Keeps every
/// pairwise ratio bounded away from the positive real axis, which tames
/// the cancellation of idem-symmetrized sums.
std::vector<double> stratified_phases(std::mt19937_64& rng, int n);

double uniform(std::mt19937_64& rng, double lo, double hi);

/// The default nome sample set {0.3, 0.5, 0.7, 0.5 e^{i pi/7}}.
CScalar default_nome(std::mt19937_64& rng);

// --- admissibility helpers -----------------------------------------------

/// Every (x;q)_inf over xs has magnitude above `floor` (evaluated in scaled
/// arithmetic; rejects samples that would put a denominator Pochhammer
/// near one of its zeros).
bool poch_den_ok(std::span<const CScalar> xs, const Nome& q, double floor_mag = 1e-6);
bool poch_den_ok(std::initializer_list<CScalar> xs, const Nome& q, double floor_mag = 1e-6);

/// x stays clear of the theta zero set q^Z.
bool theta_ok(CScalar x, const Nome& q, const OmegaGuard& guard);

/// x stays clear of Omega_q = {q^-k}.
bool omega_ok(CScalar x, const Nome& q, const OmegaGuard& guard);

/// Multiplicative clearance of integrand poles from the unit contour for
/// integrands built of (xi sigma/z;q)_inf factors below the line (poles at
/// |z| = |xi| sigma |q|^j) and (zeta z/sigma;q)_inf factors (poles at
/// |z| = sigma/(|zeta| |q|^j)). Returns min over poles of max(r, 1/r);
/// quadrature converges geometrically at that rate.
double annulus_clearance(std::span<const CScalar> sigma_over_z_denoms,
                         std::span<const CScalar> z_over_sigma_denoms, double sigma,
                         const Nome& q);

/// Log-midpoint sigma (or tau) separating the two pole families:
/// needs max|zeta| < sigma < 1/max|xi| to hold with some slack; returns the
/// geometric midpoint clipped into (lo_cap, hi_cap).
double separating_scale(std::span<const CScalar> sigma_over_z_denoms,
                        std::span<const CScalar> z_over_sigma_denoms, double lo_cap = 0.05,
                        double hi_cap = 0.97);

}  // namespace qk::sampling
