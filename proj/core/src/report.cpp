#include "qkernel/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qkernel/errors.hpp"

namespace qk {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_pair(CScalar z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json policies_json(const RunPolicies& p) {
    ordered_json j;
    j["eps_term"] = p.trunc.eps_term;
    j["n_max"] = p.trunc.n_max;
    j["k_consecutive"] = p.trunc.k_consecutive;
    j["tail_mode"] = p.trunc.tail_mode == TruncationPolicy::TailMode::product_tail_bound
                         ? "product-tail-bound"
                         : "fixed-epsilon";
    j["quad_n0"] = p.quad.n0;
    j["quad_n_max"] = p.quad.n_max;
    j["quad_tol"] = p.quad.tol;
    j["guard_tol"] = p.guard.tol;
    if (p.tol_override)
        j["tol_override"] = *p.tol_override;
    else
        j["tol_override"] = nullptr;
    if (p.q_override)
        j["q_override"] = to_pair(*p.q_override);
    else
        j["q_override"] = nullptr;
    return j;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string report_to_json(const ReportMeta& meta, const std::vector<ResidualRecord>& records) {
    ordered_json root;
    root["meta"] = ordered_json{{"seed", meta.seed},
                                {"samples", meta.samples},
                                {"version", meta.version},
                                {"policies", policies_json(meta.policies)}};
    ordered_json recs = ordered_json::array();
    for (const auto& r : records) {
        ordered_json j;
        j["case"] = r.case_id;
        j["index"] = r.sample_index;
        j["q"] = to_pair(r.sample.q);
        ordered_json params;
        for (const auto& [k, v] : r.sample.params) params[k] = to_pair(v);
        j["params"] = params;
        j["lhs"] = to_pair(r.lhs);
        j["rhs"] = to_pair(r.rhs);
        j["abs_res"] = r.abs_res;
        j["rel_res"] = r.rel_res;
        j["pass"] = r.pass;
        j["effort"] = ordered_json{{"series_terms", r.effort_stats.max_series_terms},
                                   {"quad_nodes", r.effort_stats.max_quad_nodes}};
        j["error"] = r.error;
        j["branch"] = r.branch;
        j["extra"] = ordered_json{{"checked", r.extra_checked}, {"worst_rel", r.extra_worst}};
        j["draw_tries"] = r.draw_tries;
        recs.push_back(std::move(j));
    }
    root["records"] = std::move(recs);
    return root.dump(2) + "\n";
}

std::string report_to_csv(const ReportMeta& meta, const std::vector<ResidualRecord>& records) {
    std::ostringstream os;
    os << "# seed=" << meta.seed << " samples=" << meta.samples << " version=" << meta.version
       << "\n";
    os << "case,index,q_re,q_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_res,rel_res,pass,"
          "series_terms,quad_nodes,error,branch,extra_checked,extra_worst,draw_tries,params\n";
    for (const auto& r : records) {
        os << r.case_id << ',' << r.sample_index << ',' << fmt_double(r.sample.q.real()) << ','
           << fmt_double(r.sample.q.imag()) << ',' << fmt_double(r.lhs.real()) << ','
           << fmt_double(r.lhs.imag()) << ',' << fmt_double(r.rhs.real()) << ','
           << fmt_double(r.rhs.imag()) << ',' << fmt_double(r.abs_res) << ','
           << fmt_double(r.rel_res) << ',' << (r.pass ? 1 : 0) << ','
           << r.effort_stats.max_series_terms << ',' << r.effort_stats.max_quad_nodes << ','
           << r.error << ',' << r.branch << ',' << r.extra_checked << ','
           << fmt_double(r.extra_worst) << ',' << r.draw_tries << ',';
        os << '"';
        bool first = true;
        for (const auto& [k, v] : r.sample.params) {
            if (!first) os << ';';
            first = false;
            os << k << '=' << fmt_double(v.real()) << ':' << fmt_double(v.imag());
        }
        os << '"' << '\n';
    }
    return os.str();
}

std::vector<CaseAggregate> aggregate_report(const std::string& json_text) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("malformed report JSON: ") + e.what());
    }
    if (!root.contains("records") || !root["records"].is_array())
        throw DomainError("report JSON missing 'records' array");

    std::vector<CaseAggregate> rows;
    std::vector<std::vector<int>> terms, nodes;
    auto find_row = [&](const std::string& id) -> std::size_t {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].case_id == id) return i;
        rows.push_back(CaseAggregate{id, 0, 0, 0.0, 0, 0});
        terms.emplace_back();
        nodes.emplace_back();
        return rows.size() - 1;
    };
    try {
        for (const auto& r : root["records"]) {
            std::size_t i = find_row(r.at("case").get<std::string>());
            rows[i].samples += 1;
            rows[i].passed += r.at("pass").get<bool>() ? 1 : 0;
            double rel = r.at("rel_res").get<double>();
            if (r.contains("extra")) rel = std::max(rel, r["extra"].at("worst_rel").get<double>());
            rows[i].worst_rel = std::max(rows[i].worst_rel, rel);
            terms[i].push_back(r.at("effort").at("series_terms").get<int>());
            nodes[i].push_back(r.at("effort").at("quad_nodes").get<int>());
        }
    } catch (const std::exception& e) {
        throw DomainError(std::string("malformed report record: ") + e.what());
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto median = [](std::vector<int>& v) -> int {
            if (v.empty()) return 0;
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        rows[i].median_terms = median(terms[i]);
        rows[i].median_nodes = median(nodes[i]);
    }
    return rows;
}

std::string aggregate_table(const std::vector<CaseAggregate>& rows) {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-18s %7s %7s %12s %10s %10s\n", "case", "samples", "passed",
                  "worst_rel", "med_terms", "med_nodes");
    os << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-18s %7d %7d %12.3e %10d %10d\n", r.case_id.c_str(),
                      r.samples, r.passed, r.worst_rel, r.median_terms, r.median_nodes);
        os << buf;
    }
    return os.str();
}

}  // namespace qk
