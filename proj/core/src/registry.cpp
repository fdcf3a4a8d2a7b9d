#include "qkernel/identities/registry.hpp"

#include <cmath>
#include <set>

#include "qkernel/errors.hpp"
#include "registry_detail.hpp"

namespace qk {

CScalar Sample::get(std::string_view name) const {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    throw DomainError("sample has no parameter named '" + std::string(name) + "'");
}

int Sample::geti(std::string_view name) const {
    double r = get(name).real();
    return static_cast<int>(std::lround(r));
}

void Sample::set(std::string_view name, CScalar v) {
    for (auto& [k, val] : params) {
        if (k == name) {
            val = v;
            return;
        }
    }
    params.emplace_back(std::string(name), v);
}

bool Sample::has(std::string_view name) const {
    for (const auto& [k, v] : params)
        if (k == name) return true;
    return false;
}

const std::vector<IdentityCase>& register_all() {
    static const std::vector<IdentityCase> cases = [] {
        std::vector<IdentityCase> out;
        detail::register_gmt_cases(out);
        detail::register_qbeta_cases(out);
        detail::register_phi_rep_cases(out);
        detail::register_genfun_cases(out);
        std::set<std::string> ids;
        for (const auto& c : out)
            if (!ids.insert(c.id).second) throw DomainError("duplicate case id: " + c.id);
        return out;
    }();
    return cases;
}

const IdentityCase* find_case(std::string_view id) {
    for (const auto& c : register_all())
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Sample draw_admissible(const IdentityCase& c, std::uint64_t seed, int sample_index,
                       const RunPolicies& pol, int* tries_out) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(fnv1a(c.id))) +
                        static_cast<std::uint64_t>(sample_index));
    constexpr int kMaxTries = 1000;
    for (int t = 1; t <= kMaxTries; ++t) {
        Sample s = c.raw_draw(rng, pol);
        if (c.admissible(s, pol)) {
            if (tries_out) *tries_out = t;
            return s;
        }
    }
    throw DomainError("sampler for '" + c.id + "' found no admissible sample in 1000 draws");
}

ResidualRecord run_one(const IdentityCase& c, std::uint64_t seed, int sample_index,
                       const RunPolicies& pol) {
    ResidualRecord rec;
    rec.case_id = c.id;
    rec.sample_index = sample_index;
    rec.branch = c.branch_note;
    double tol = pol.tol_override.value_or(c.tol);
    try {
        rec.sample = draw_admissible(c, seed, sample_index, pol, &rec.draw_tries);
    } catch (const Error& e) {
        rec.error = e.name();
        return rec;
    }
    effort::reset();
    try {
        rec.lhs = c.lhs(rec.sample, pol);
        rec.rhs = c.rhs(rec.sample, pol);
        rec.abs_res = std::abs(rec.lhs - rec.rhs);
        rec.rel_res = rec.abs_res / std::max({std::abs(rec.lhs), std::abs(rec.rhs), 1e-300});
        rec.pass = is_finite(rec.lhs) && is_finite(rec.rhs) && rec.rel_res <= tol;
        for (const auto& chk : c.extra) {
            CScalar l2 = chk.lhs(rec.sample, pol);
            CScalar r2 = chk.rhs(rec.sample, pol);
            double rr = std::abs(l2 - r2) / std::max({std::abs(l2), std::abs(r2), 1e-300});
            ++rec.extra_checked;
            rec.extra_worst = std::max(rec.extra_worst, rr);
            if (!(is_finite(l2) && is_finite(r2) && rr <= tol)) rec.pass = false;
        }
    } catch (const Error& e) {
        rec.error = e.name();
        rec.pass = false;
    } catch (const std::exception& e) {
        rec.error = std::string("Unexpected: ") + e.what();
        rec.pass = false;
    }
    rec.effort_stats = effort::snapshot();
    return rec;
}

std::vector<ResidualRecord> run_case(const IdentityCase& c, std::uint64_t seed, int n_samples,
                                     const RunPolicies& pol) {
    std::vector<ResidualRecord> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) out.push_back(run_one(c, seed, i, pol));
    return out;
}

}  // namespace qk
