// Command-line front end: evaluate kernel functions, run identity
// verification suites, aggregate residual reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkernel/askey_wilson.hpp"
#include "qkernel/effort.hpp"
#include "qkernel/errors.hpp"
#include "qkernel/identities/registry.hpp"
#include "qkernel/qpoch.hpp"
#include "qkernel/report.hpp"
#include "qkernel/series.hpp"

namespace {

constexpr const char* kVersion = "qkernel 0.1.0";

using qk::CScalar;

// argument-stage failures map to exit 1, evaluator failures to exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& args) {
    std::map<std::string, std::string> kv;
    for (const auto& a : args) {
        auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("expected key=value argument, got '" + a + "'");
        kv[a.substr(0, eq)] = a.substr(eq + 1);
    }
    return kv;
}

CScalar need_c(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError("missing argument " + key + "=...");
    try {
        return qk::parse_complex(it->second);
    } catch (const qk::Error& e) {
        throw UsageError(e.what());
    }
}

double need_r(const std::map<std::string, std::string>& kv, const std::string& key) {
    return need_c(kv, key).real();
}

int need_i(const std::map<std::string, std::string>& kv, const std::string& key) {
    return static_cast<int>(std::lround(need_r(kv, key)));
}

std::vector<CScalar> need_list(const std::map<std::string, std::string>& kv,
                               const std::string& key, bool allow_empty) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (allow_empty) return {};
        throw UsageError("missing argument " + key + "=...");
    }
    std::vector<CScalar> out;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(qk::parse_complex(tok));
        } catch (const qk::Error& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

qk::RunPolicies env_policies() {
    qk::RunPolicies pol;
    if (const char* nmax = std::getenv("QKERNEL_NMAX")) {
        int v = std::atoi(nmax);
        if (v > 0) {
            pol.trunc.n_max = std::max(pol.trunc.n_max, v);
            pol.quad.n_max = std::max(pol.quad.n_max, v);
        }
    }
    return pol;
}

int cmd_eval(const std::string& kind, const std::vector<std::string>& raw) {
    qk::RunPolicies pol = env_policies();
    auto kv = parse_kv(raw);
    qk::effort::reset();
    CScalar value;
    if (kind == "qpoch") {
        qk::Nome q(need_c(kv, "q"));
        CScalar a = need_c(kv, "a");
        if (kv.count("n"))
            value = qk::qpoch_finite(a, q, need_i(kv, "n"));
        else if (kv.count("b"))
            value = qk::qpoch_general(a, q, need_c(kv, "b"), pol.trunc, pol.guard);
        else
            value = qk::qpoch_infinite(a, q, pol.trunc);
    } else if (kind == "theta") {
        value = qk::theta(need_c(kv, "x"), qk::Nome(need_c(kv, "q")), pol.trunc);
    } else if (kind == "phi") {
        qk::SeriesSpec spec{need_list(kv, "numer", true), need_list(kv, "denom", true),
                            qk::Nome(need_c(kv, "q")), need_c(kv, "z"),
                            kv.count("m") ? need_i(kv, "m") : 0, std::nullopt};
        value = qk::phi(spec, pol.trunc, pol.guard).value;
    } else if (kind == "wphi") {
        value = qk::wphi(need_c(kv, "b"), need_list(kv, "tail", false),
                         qk::Nome(need_c(kv, "q")), need_c(kv, "z"), pol.trunc, pol.guard);
    } else if (kind == "aw") {
        qk::AWParams p{need_c(kv, "a"), need_c(kv, "b"), need_c(kv, "c"), need_c(kv, "d"),
                       qk::Nome(need_c(kv, "q"))};
        value = qk::askey_wilson(need_i(kv, "n"), need_r(kv, "x"), p, pol.trunc);
    } else if (kind == "cdqh") {
        qk::CDQHParams p{need_c(kv, "a"), need_c(kv, "b"), need_c(kv, "c"),
                         qk::Nome(need_c(kv, "q"))};
        value = qk::cdqhahn(need_i(kv, "n"), need_r(kv, "x"), p, pol.trunc);
    } else {
        throw UsageError("unknown eval kind '" + kind + "'");
    }
    auto eff = qk::effort::snapshot();
    std::cout << qk::format_complex(value) << "  terms=" << eff.max_series_terms
              << " nodes=" << eff.max_quad_nodes << "\n";
    return 0;
}

struct VerifyConfig {
    std::vector<std::string> cases;
    bool all = false;
    std::uint64_t seed = 1;
    int samples = 20;
    double tol = -1.0;
    std::string q_str;
    std::string out = "qkernel_report.json";
    std::string format = "json";
};

int cmd_verify(const VerifyConfig& cfg) {
    qk::RunPolicies pol = env_policies();
    if (cfg.tol > 0) pol.tol_override = cfg.tol;
    if (!cfg.q_str.empty()) pol.q_override = qk::parse_complex(cfg.q_str);

    std::vector<const qk::IdentityCase*> selected;
    if (cfg.all) {
        for (const auto& c : qk::register_all()) selected.push_back(&c);
    } else {
        for (const auto& id : cfg.cases) {
            const qk::IdentityCase* c = qk::find_case(id);
            if (!c) {
                std::cerr << "unknown case id: " << id << "\n";
                return 1;
            }
            selected.push_back(c);
        }
    }
    if (selected.empty()) {
        std::cerr << "no cases selected (use --cases or --all)\n";
        return 1;
    }

    std::vector<qk::ResidualRecord> records;
    bool all_pass = true;
    for (const auto* c : selected) {
        auto recs = qk::run_case(*c, cfg.seed, cfg.samples, pol);
        int passed = 0;
        for (const auto& r : recs) passed += r.pass ? 1 : 0;
        all_pass = all_pass && passed == cfg.samples;
        std::cout << c->id << ": " << (passed == cfg.samples ? "PASS " : "FAIL ") << passed << "/"
                  << cfg.samples << "\n";
        records.insert(records.end(), recs.begin(), recs.end());
    }

    qk::ReportMeta meta{cfg.seed, cfg.samples, kVersion, pol};
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write report to " << cfg.out << "\n";
        return 1;
    }
    out << (cfg.format == "csv" ? qk::report_to_csv(meta, records)
                                : qk::report_to_json(meta, records));
    out.close();
    return all_pass ? 0 : 3;
}

int cmd_report(const std::string& in_path, const std::string& format) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read " << in_path << "\n";
        return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    auto rows = qk::aggregate_report(ss.str());
    if (format == "csv") {
        std::cout << "case,samples,passed,worst_rel,med_terms,med_nodes\n";
        for (const auto& r : rows)
            std::cout << r.case_id << ',' << r.samples << ',' << r.passed << ',' << r.worst_rel
                      << ',' << r.median_terms << ',' << r.median_nodes << "\n";
    } else {
        std::cout << qk::aggregate_table(rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-hypergeometric kernel and identity verification harness"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate a kernel function (key=value arguments)");
    std::string eval_kind;
    std::vector<std::string> eval_args;
    eval->add_option("kind", eval_kind, "qpoch|theta|phi|wphi|aw|cdqh")->required();
    eval->add_option("args", eval_args, "key=value arguments");

    auto* verify = app.add_subcommand("verify", "run identity suites and write a residual report");
    VerifyConfig cfg;
    verify->add_option("--cases", cfg.cases, "case IDs to run")->delimiter(',');
    verify->add_flag("--all", cfg.all, "run the full registry");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--samples", cfg.samples, "samples per case")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol", cfg.tol, "tolerance override");
    verify->add_option("--q", cfg.q_str, "nome override (complex literal)");
    verify->add_option("--out", cfg.out, "report output path");
    verify->add_option("--format", cfg.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* report = app.add_subcommand("report", "aggregate a JSON residual report");
    std::string in_path, rep_format = "table";
    report->add_option("--in", in_path, "report JSON path")->required();
    report->add_option("--format", rep_format, "table|csv")
        ->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*eval) return cmd_eval(eval_kind, eval_args);
        if (*verify) return cmd_verify(cfg);
        if (*report) return cmd_report(in_path, rep_format);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const qk::Error& e) {
        std::cerr << e.name() << "\n";
        return *report ? 1 : 2;  // malformed report input is a usage-level failure
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
