#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qkernel/identities/registry.hpp"

namespace qk {

struct ReportMeta {
    std::uint64_t seed = 0;
    int samples = 0;
    std::string version;
    RunPolicies policies;
};

/// JSON schema: {meta:{seed,samples,version,policies}, records:[...]}.
/// Complex numbers are two-element [re, im] arrays; field order is fixed
/// so identical runs serialize byte-identically.
std::string report_to_json(const ReportMeta& meta, const std::vector<ResidualRecord>& records);

/// CSV flattening: one row per record, complex fields as re/im column pairs,
/// per-case parameters packed into a single "params" column.
std::string report_to_csv(const ReportMeta& meta, const std::vector<ResidualRecord>& records);

struct CaseAggregate {
    std::string case_id;
    int samples = 0;
    int passed = 0;
    double worst_rel = 0;
    int median_terms = 0;
    int median_nodes = 0;
};

/// Parses a JSON report and aggregates per case (stable case order as
/// encountered). Throws DomainError on malformed input.
std::vector<CaseAggregate> aggregate_report(const std::string& json_text);

std::string aggregate_table(const std::vector<CaseAggregate>& rows);

}  // namespace qk
