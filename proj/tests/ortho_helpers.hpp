// Quadrature-based orthogonality checks shared by the unit tests and the
// acceptance gate.
#pragma once

#include <vector>

#include "qkernel/askey_wilson.hpp"
#include "qkernel/quadrature.hpp"

namespace ortho {

using qk::AWParams;
using qk::CScalar;

struct GramResult {
    double worst_offdiag = 0;   // |G_mn| / sqrt(h_m h_n), m != n
    double worst_diag = 0;      // relative deviation of G_nn from h_n
};

inline GramResult gram_check(const AWParams& p, int n_max) {
    std::vector<CScalar> norms(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) norms[static_cast<std::size_t>(n)] = qk::aw_norm(n, p);

    GramResult r;
    for (int m = 0; m <= n_max; ++m) {
        for (int n = m; n <= n_max; ++n) {
            auto integrand = [&](double th) {
                double x = std::cos(th);
                return qk::askey_wilson(m, x, p) * qk::askey_wilson(n, x, p) *
                       qk::aw_weight(th, p);
            };
            CScalar g = 0.5 * qk::integrate_periodic(integrand);
            if (m == n) {
                r.worst_diag = std::max(
                    r.worst_diag, std::abs(g - norms[static_cast<std::size_t>(n)]) /
                                      std::abs(norms[static_cast<std::size_t>(n)]));
            } else {
                double scale = std::sqrt(std::abs(norms[static_cast<std::size_t>(m)]) *
                                         std::abs(norms[static_cast<std::size_t>(n)]));
                r.worst_offdiag = std::max(r.worst_offdiag, std::abs(g) / scale);
            }
        }
    }
    return r;
}

}  // namespace ortho
