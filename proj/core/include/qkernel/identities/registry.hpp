#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qkernel/effort.hpp"
#include "qkernel/policy.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

/// One sampled parameter assignment: named complex values plus the nome.
/// Integer-valued quantities (degrees, offsets, index choices) are stored
/// as real entries.
struct Sample {
    std::vector<std::pair<std::string, CScalar>> params;
    CScalar q = 0.5;

    CScalar get(std::string_view name) const;
    double getr(std::string_view name) const { return get(name).real(); }
    int geti(std::string_view name) const;
    void set(std::string_view name, CScalar v);
    bool has(std::string_view name) const;
};

/// Policies a verification run threads through every evaluator.
struct RunPolicies {
    TruncationPolicy trunc{};
    QuadraturePolicy quad{};
    OmegaGuard guard{};
    std::optional<double> tol_override;
    std::optional<CScalar> q_override;
};

using Evaluator = std::function<CScalar(const Sample&, const RunPolicies&)>;

/// Auxiliary per-sample equality (sigma/f/s-independence, symmetry,
/// reduction to a limiting formula, a second printed form, ...).
struct SubCheck {
    std::string name;
    Evaluator lhs, rhs;
};

struct IdentityCase {
    std::string id;
    std::string anchor;  // which formula this encodes, in words
    double tol = 1e-8;
    // one draw, no rejection; honors pol.q_override when choosing the nome
    std::function<Sample(std::mt19937_64&, const RunPolicies&)> raw_draw;
    std::function<bool(const Sample&, const RunPolicies&)> admissible;
    Evaluator lhs, rhs;
    std::vector<SubCheck> extra;
    std::string branch_note;  // copied into each record's branch field
};

struct ResidualRecord {
    std::string case_id;
    int sample_index = 0;
    Sample sample;
    CScalar lhs = 0, rhs = 0;
    double abs_res = 0, rel_res = 0;
    bool pass = false;
    effort::Stats effort_stats;
    std::string error;   // evaluator error name; empty on clean evaluation
    std::string branch;  // root-branch bookkeeping where applicable
    int extra_checked = 0;
    double extra_worst = 0;
    int draw_tries = 1;  // raw draws needed to reach an admissible sample
};

/// The full registry, one IdentityCase per encoded theorem / corollary /
/// equation, keyed by stable IDs.
const std::vector<IdentityCase>& register_all();

const IdentityCase* find_case(std::string_view id);

/// Deterministic given (seed, case, sample count, policies). Evaluator
/// errors become failed records with the error name; the batch never aborts.
std::vector<ResidualRecord> run_case(const IdentityCase& c, std::uint64_t seed, int n_samples,
                                     const RunPolicies& pol = {});

ResidualRecord run_one(const IdentityCase& c, std::uint64_t seed, int sample_index,
                       const RunPolicies& pol = {});

/// Draw an admissible sample (rejection on guards), deterministic per
/// (seed, case id, index). tries_out reports raw draws used.
Sample draw_admissible(const IdentityCase& c, std::uint64_t seed, int sample_index,
                       const RunPolicies& pol, int* tries_out = nullptr);

}  // namespace qk
