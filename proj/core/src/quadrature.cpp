#include "qkernel/quadrature.hpp"

#include <cmath>

#include "qkernel/effort.hpp"
#include "qkernel/errors.hpp"

namespace qk {

namespace {

CScalar eval_checked(const std::function<CScalar(double)>& f, double psi) {
    CScalar v = f(psi);
    if (!is_finite(v)) throw NonFinite("integrand returned a non-finite value");
    return v;
}

}  // namespace

std::vector<CScalar> integrate_periodic_ladder(const std::function<CScalar(double)>& f,
                                               const QuadraturePolicy& policy) {
    policy.validate();
    std::vector<CScalar> ladder;
    int n = policy.n0;
    // uniform nodes psi_j = -pi + 2 pi j / n; doubling interleaves new nodes
    CScalar node_sum = 0.0;
    double abs_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        CScalar v = eval_checked(f, -kPi + 2.0 * kPi * j / n);
        node_sum += v;
        abs_sum += std::abs(v);
    }
    ladder.push_back(node_sum * (2.0 * kPi / n));
    while (true) {
        int n2 = 2 * n;
        if (n2 > policy.n_max) break;
        CScalar odd_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            CScalar v = eval_checked(f, -kPi + kPi * (2 * j + 1) / n);
            odd_sum += v;
            abs_sum += std::abs(v);
        }
        node_sum += odd_sum;
        n = n2;
        ladder.push_back(node_sum * (2.0 * kPi / n));
        CScalar cur = ladder[ladder.size() - 1], prev = ladder[ladder.size() - 2];
        // relative agreement, floored at the roundoff plateau of the node
        // sums (integrals cancelling to far below the integrand scale then
        // still resolve as well as binary64 allows)
        double l1 = abs_sum * (2.0 * kPi / n);
        double target = std::max(policy.tol * std::abs(cur), 3e-15 * l1);
        if (std::abs(cur - prev) <= target) {
            effort::note_quad_nodes(n);
            return ladder;
        }
    }
    throw NoConvergence("trapezoid ladder reached n_max without tol agreement");
}

CScalar integrate_periodic(const std::function<CScalar(double)>& f,
                           const QuadraturePolicy& policy) {
    return integrate_periodic_ladder(f, policy).back();
}

namespace {

/// sum_{n>=0} q^n f(q^n c) under the series stop rule.
CScalar geometric_sum(const std::function<CScalar(CScalar)>& f, CScalar c, const Nome& q,
                      const TruncationPolicy& policy) {
    CScalar sum = 0.0, qn = 1.0;
    int below = 0;
    for (int n = 0; n < policy.n_max; ++n) {
        CScalar term = qn * f(qn * c);
        if (!is_finite(term)) throw NonFinite("q-integral term is non-finite");
        sum += term;
        qn *= q.value();
        below = (std::abs(term) <= policy.eps_term * std::max(1.0, std::abs(sum))) ? below + 1 : 0;
        if (below >= policy.k_consecutive) {
            effort::note_series_terms(n + 1);
            return sum;
        }
    }
    throw SlowConvergence("q-integral sum hit n_max");
}

}  // namespace

CScalar jackson_qintegral(const std::function<CScalar(CScalar)>& f, CScalar a, CScalar b,
                          const Nome& q, const TruncationPolicy& policy) {
    policy.validate();
    CScalar one_minus_q = CScalar(1.0) - q.value();
    CScalar upper = (b == CScalar(0.0)) ? CScalar(0.0) : b * geometric_sum(f, b, q, policy);
    CScalar lower = (a == CScalar(0.0)) ? CScalar(0.0) : a * geometric_sum(f, a, q, policy);
    return one_minus_q * (upper - lower);
}

CScalar jackson_symmetric(const std::function<CScalar(CScalar)>& f, CScalar a, CScalar b,
                          const Nome& q, const TruncationPolicy& policy) {
    policy.validate();
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) < 1e-12 * scale)
        throw DegenerateEndpoints("jackson_symmetric requires a != b");
    if (a == CScalar(0.0) || b == CScalar(0.0))
        throw DegenerateEndpoints("symmetric form needs nonzero endpoints");
    CScalar sum_a = geometric_sum(f, a, q, policy);
    CScalar sum_b = geometric_sum(f, b, q, policy);
    CScalar front = (CScalar(1.0) - q.value()) * a * b / (a - b);
    return front * ((CScalar(1.0) - a / b) * sum_a + (CScalar(1.0) - b / a) * sum_b);
}

}  // namespace qk
