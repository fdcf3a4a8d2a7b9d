#include "qkernel/policy.hpp"

#include <cmath>

namespace qk {

Nome::Nome(CScalar q) : q_(q), abs_(std::abs(q)) {
    if (!(abs_ > 0.0)) throw DomainError("nome must be nonzero");
    if (abs_ >= 1.0 - kDeltaNome)
        throw DomainError("|q| = " + std::to_string(abs_) + " too close to 1 (limit 0.999)");
}

void TruncationPolicy::validate() const {
    if (!(eps_term > 0)) throw DomainError("eps_term must be positive");
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (k_consecutive < 1) throw DomainError("k_consecutive must be >= 1");
}

bool OmegaGuard::near_omega(CScalar x, const Nome& q, int n_limit) const {
    double ax = std::abs(x);
    CScalar w = 1.0;  // q^{-k}
    double aw = 1.0;
    int k = 0;
    while (aw <= ax + tol) {
        if (n_limit >= 0 && k >= n_limit) break;
        if (std::abs(x - w) <= tol) return true;
        w /= q.value();
        aw /= q.abs();
        ++k;
        if (k > 2000000) break;  // |q| ~ 1 - delta still terminates; belt and braces
    }
    return false;
}

bool OmegaGuard::near_theta_zero(CScalar x, const Nome& q) const {
    double ax = std::abs(x);
    if (ax <= tol) return true;  // positive powers of q accumulate at 0
    if (near_omega(x, q)) return true;
    CScalar w = q.value();  // q^m, m >= 1
    double aw = q.abs();
    while (aw >= ax - tol) {
        if (std::abs(x - w) <= tol) return true;
        w *= q.value();
        aw *= q.abs();
        if (aw < 1e-300) break;
    }
    return false;
}

void QuadraturePolicy::validate() const {
    if (n0 < 16 || (n0 & (n0 - 1)) != 0) throw DomainError("n0 must be a power of two >= 16");
    if (n_max < n0) throw DomainError("n_max must be >= n0");
    if (!(tol > 0)) throw DomainError("quadrature tol must be positive");
}

}  // namespace qk
