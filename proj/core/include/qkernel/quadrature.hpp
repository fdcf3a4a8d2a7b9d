#pragma once

#include <functional>
#include <vector>

#include "qkernel/policy.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

/// Trapezoid rule over psi in [-pi, pi) for smooth 2pi-periodic f, doubling
/// the node count from policy.n0 until successive estimates agree within
/// policy.tol (relative, absolute floor 1). The integrands here are analytic
/// in e^{i psi} on an annulus, so the rule converges geometrically.
CScalar integrate_periodic(const std::function<CScalar(double)>& f,
                           const QuadraturePolicy& policy = {});

/// Successive doubling estimates (diagnostics; last entry is the result).
std::vector<CScalar> integrate_periodic_ladder(const std::function<CScalar(double)>& f,
                                               const QuadraturePolicy& policy = {});

/// Jackson q-integral
///   int_a^b f(u) d_q u = (1-q) b sum q^n f(q^n b) - (1-q) a sum q^n f(q^n a)
CScalar jackson_qintegral(const std::function<CScalar(CScalar)>& f, CScalar a, CScalar b,
                          const Nome& q, const TruncationPolicy& policy = {});

/// Symmetric-sum form
///   (1-q) a b/(a-b) * [ (1-a/b) sum q^n f(q^n a) + (1-b/a) sum q^n f(q^n b) ]
/// Equal to jackson_qintegral; requires a != b.
CScalar jackson_symmetric(const std::function<CScalar(CScalar)>& f, CScalar a, CScalar b,
                          const Nome& q, const TruncationPolicy& policy = {});

}  // namespace qk
