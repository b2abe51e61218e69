#include "bergman/run_config.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "bergman/analysis.hpp"
#include "bergman/io.hpp"
#include "bergman/moments.hpp"
#include "bergman/operators.hpp"
#include "bergman/verify.hpp"

namespace bergman {

namespace {

namespace fs = std::filesystem;
using io::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::set<std::string> kSymbolKeys = {"bipoly", "modes", "radial"};

void require_keys(const json& config, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : config.items()) {
        if (allowed.count(key) == 0) {
            throw ConfigError("unexpected field \"" + key + "\" for kind \"" +
                              config.value("kind", std::string{}) + "\"");
        }
    }
}

int get_n(const json& config, const RunOverrides& overrides) {
    int n = 0;
    if (overrides.n.has_value()) {
        n = *overrides.n;
    } else if (config.contains("n") && config["n"].is_number_integer()) {
        n = config["n"].get<int>();
    } else {
        throw ConfigError("missing or non-integer field \"n\"");
    }
    if (n < 1 || n > 256) throw ConfigError("n must lie in [1, 256]");
    return n;
}

double get_tol(const json& config, const RunOverrides& overrides, double fallback) {
    if (overrides.tol.has_value()) return *overrides.tol;
    if (!config.contains("tol")) return fallback;
    if (!config["tol"].is_number()) throw ConfigError("field \"tol\" must be a number");
    return config["tol"].get<double>();
}

bool has_symbol_payload(const json& config) {
    for (const auto& key : kSymbolKeys) {
        if (config.contains(key)) return true;
    }
    return false;
}

Symbol get_symbol(const json& config) {
    json spec = json::object();
    for (const auto& key : kSymbolKeys) {
        if (config.contains(key)) spec[key] = config[key];
    }
    if (spec.empty()) throw ConfigError("missing symbol payload (bipoly, modes or radial)");
    return io::parse_symbol(spec);
}

RadialProfile get_radial(const json& config) {
    const Symbol f = get_symbol(config);
    if (!f.is_radial()) throw ConfigError("a radial symbol is required here");
    return f.is_zero() ? RadialProfile{} : f.mode(0);
}

AtomicMeasure get_measure(const json& config) {
    if (!config.contains("atoms")) throw ConfigError("missing field \"atoms\"");
    json spec = json::object();
    spec["atoms"] = config["atoms"];
    return io::parse_measure(spec);
}

std::vector<int> get_int_list(const json& config, const std::string& key) {
    if (!config.contains(key) || !config[key].is_array()) {
        throw ConfigError("missing integer array \"" + key + "\"");
    }
    std::vector<int> out;
    for (const auto& v : config[key]) {
        if (!v.is_number_integer()) throw ConfigError("\"" + key + "\" must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

json singular_values_json(const RankReport& report) {
    json arr = json::array();
    for (double s : report.singular_values) arr.push_back(s);
    return arr;
}

void write_report(const fs::path& out_dir, const json& report) {
    fs::create_directories(out_dir);
    std::ofstream out(out_dir / "report.json", std::ios::binary);
    out << io::dump_json(report);
    std::cout << io::dump_json(report);
}

void write_csv(const fs::path& out_dir, const std::string& name, const ComplexMatrix& m) {
    fs::create_directories(out_dir);
    std::ofstream out(out_dir / name, std::ios::binary);
    io::write_matrix_csv(out, m);
}

int run_matrix(const json& config, const RunOverrides& overrides, const fs::path& out_dir) {
    require_keys(config, {"kind", "bipoly", "modes", "radial", "atoms", "n"});
    const int n = get_n(config, overrides);
    TruncatedOperator op =
        has_symbol_payload(config)
            ? toeplitz_matrix(get_symbol(config), static_cast<std::size_t>(n))
            : measure_matrix(get_measure(config), static_cast<std::size_t>(n));
    json report;
    report["kind"] = "matrix";
    report["n"] = n;
    report["provenance"] = op.provenance;
    report["entries_csv"] = "matrix.csv";
    write_csv(out_dir, "matrix.csv", op.entries);
    write_report(out_dir, report);
    return 0;
}

int run_eigs(const json& config, const RunOverrides& overrides, const fs::path& out_dir) {
    require_keys(config, {"kind", "radial", "n"});
    const int n = get_n(config, overrides);
    const EigenvalueSequence seq =
        eigenvalue_sequence(get_radial(config), static_cast<std::size_t>(n));
    json report;
    report["kind"] = "eigs";
    report["n"] = n;
    report["source"] = seq.source;
    json values = json::array();
    for (const auto& v : seq.values) values.push_back(io::complex_to_json(v));
    report["values"] = values;
    write_report(out_dir, report);
    return 0;
}

int run_rank(const json& config, const RunOverrides& overrides, const fs::path& out_dir) {
    require_keys(config, {"kind", "bipoly", "modes", "radial", "atoms", "n", "tol"});
    const int n = get_n(config, overrides);
    const double tol = get_tol(config, overrides, 1e-8);
    TruncatedOperator op =
        has_symbol_payload(config)
            ? toeplitz_matrix(get_symbol(config), static_cast<std::size_t>(n))
            : measure_matrix(get_measure(config), static_cast<std::size_t>(n));
    const RankReport rank = numerical_rank(op, tol);
    json report;
    report["kind"] = "rank";
    report["n"] = n;
    report["tol"] = tol;
    report["provenance"] = op.provenance;
    report["rank"] = rank.rank;
    report["singular_values"] = singular_values_json(rank);
    ComplexMatrix sv(rank.singular_values.size(), 1);
    for (std::size_t i = 0; i < rank.singular_values.size(); ++i) {
        sv(i, 0) = cplx{rank.singular_values[i], 0.0};
    }
    write_csv(out_dir, "singular_values.csv", sv);
    write_report(out_dir, report);
    return 0;
}

int run_zeroset(const json& config, const RunOverrides& overrides, const fs::path& out_dir) {
    require_keys(config, {"kind", "radial", "n", "tol"});
    const int n = get_n(config, overrides);
    const double tol = get_tol(config, overrides, 1e-10);
    const ZeroSetReport zs =
        zero_set_report(eigenvalue_sequence(get_radial(config), static_cast<std::size_t>(n)), tol);
    json report;
    report["kind"] = "zeroset";
    report["n"] = n;
    report["tol"] = tol;
    report["indices"] = zs.indices;
    report["muntz_partial_sum"] = zs.muntz_partial_sum;
    write_report(out_dir, report);
    return 0;
}

int run_detid(const json& config, const fs::path& out_dir) {
    require_keys(config, {"kind", "atoms", "N", "m", "k"});
    if (!config.contains("N") || !config["N"].is_number_integer()) {
        throw ConfigError("missing integer field \"N\"");
    }
    const int N = config["N"].get<int>();
    if (N < 1) throw ConfigError("N must be positive");
    const cplx value = determinant_identity(get_measure(config), static_cast<std::size_t>(N),
                                            get_int_list(config, "m"),
                                            get_int_list(config, "k"));
    json report;
    report["kind"] = "detid";
    report["N"] = N;
    report["m"] = config["m"];
    report["k"] = config["k"];
    report["value"] = io::complex_to_json(value);
    write_report(out_dir, report);
    return 0;
}

int run_feval(const json& config, const fs::path& out_dir) {
    require_keys(config, {"kind", "atoms", "N", "m", "k", "w"});
    if (!config.contains("N") || !config["N"].is_number_integer()) {
        throw ConfigError("missing integer field \"N\"");
    }
    if (!config.contains("w")) throw ConfigError("missing field \"w\"");
    const int N = config["N"].get<int>();
    if (N < 1) throw ConfigError("N must be positive");
    const cplx w = io::complex_from_json(config["w"]);
    const cplx value = f_eval(get_measure(config), static_cast<std::size_t>(N),
                              get_int_list(config, "m"), get_int_list(config, "k"), w);
    json report;
    report["kind"] = "feval";
    report["N"] = N;
    report["m"] = config["m"];
    report["k"] = config["k"];
    report["w"] = io::complex_to_json(w);
    report["value"] = io::complex_to_json(value);
    write_report(out_dir, report);
    return 0;
}

int run_triangular(const json& config, const RunOverrides& overrides, const fs::path& out_dir) {
    require_keys(config, {"kind", "bipoly", "modes", "radial", "k", "n", "tol"});
    if (!config.contains("k") || !config["k"].is_number_integer()) {
        throw ConfigError("missing integer field \"k\"");
    }
    const int n = get_n(config, overrides);
    const double tol = get_tol(config, overrides, 1e-10);
    const int k = config["k"].get<int>();
    const TriangularResult res =
        triangular_reconstruction(get_symbol(config), k, static_cast<std::size_t>(n));
    const bool pass = res.residual <= tol;
    json report;
    report["kind"] = "triangular";
    report["n"] = n;
    report["k"] = k;
    report["tol"] = tol;
    report["residual"] = res.residual;
    report["leading_coefficient"] = io::complex_to_json(res.leading_coefficient);
    report["verdict"] = pass ? "pass" : "fail";
    write_report(out_dir, report);
    if (!pass) {
        std::cerr << "triangular residual " << io::format_double(res.residual)
                  << " exceeds tolerance\n";
        return 1;
    }
    return 0;
}

std::vector<RadialProfile> get_profile_list(const json& config, const std::string& key) {
    if (!config.contains(key) || !config[key].is_array()) {
        throw ConfigError("missing profile list \"" + key + "\"");
    }
    std::vector<RadialProfile> out;
    for (const auto& coeffs : config[key]) {
        json spec = json::object();
        spec["radial"] = coeffs;
        const Symbol s = io::parse_symbol(spec);
        out.push_back(s.is_zero() ? RadialProfile{} : s.mode(0));
    }
    return out;
}

int run_product(const json& config, const RunOverrides& overrides, const fs::path& out_dir) {
    require_keys(config, {"kind", "g", "f_mid", "f", "n", "tol"});
    if (!config.contains("f_mid")) throw ConfigError("missing field \"f_mid\"");
    const int n = get_n(config, overrides);
    const double tol = get_tol(config, overrides, 1e-8);
    const ExperimentReport res =
        product_rank_experiment(get_profile_list(config, "g"),
                                io::parse_symbol(config["f_mid"]),
                                get_profile_list(config, "f"),
                                static_cast<std::size_t>(n), tol);
    json report;
    report["kind"] = "product";
    report["n"] = n;
    report["tol"] = tol;
    report["config_echo"] = res.config_echo;
    if (res.predicted_rank.has_value()) {
        report["predicted_rank"] = *res.predicted_rank;
    } else {
        report["predicted_rank"] = "no prediction";
    }
    report["observed_rank"] = res.observed_rank.rank;
    report["singular_values"] = singular_values_json(res.observed_rank);
    report["s2_kernel_indices"] = res.s2_kernel_indices;
    json residuals = json::array();
    for (const auto& r : res.residuals) {
        json entry;
        entry["name"] = r.name;
        entry["value"] = r.value;
        entry["tolerance"] = r.tolerance;
        residuals.push_back(entry);
    }
    report["residuals"] = residuals;
    report["truncation_artifact_possible"] = res.truncation_artifact_possible;
    report["verdict"] = res.verdict ? "pass" : "fail";
    write_report(out_dir, report);
    if (!res.verdict) {
        std::cerr << "product rank experiment failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_verify_command() {
    const std::vector<CheckResult> results = run_verify_suite();
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name
                  << " residual=" << io::format_double(r.residual)
                  << " tol=" << io::format_double(r.tolerance) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int run_config(const std::string& config_path, const std::string& out_dir,
               const RunOverrides& overrides, const std::string& expected_kind) {
    json config;
    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << config_path << ": cannot open config file\n";
            return 2;
        }
        config = json::parse(in);
    } catch (const json::parse_error& e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return 2;
    }

    try {
        if (!config.is_object() || !config.contains("kind") || !config["kind"].is_string()) {
            throw ConfigError("config must be an object with a string \"kind\"");
        }
        const std::string kind = config["kind"].get<std::string>();
        if (!expected_kind.empty() && kind != expected_kind) {
            throw ConfigError("config kind \"" + kind + "\" does not match subcommand \"" +
                              expected_kind + "\"");
        }
        if (kind == "matrix") return run_matrix(config, overrides, out_dir);
        if (kind == "eigs") return run_eigs(config, overrides, out_dir);
        if (kind == "rank") return run_rank(config, overrides, out_dir);
        if (kind == "zeroset") return run_zeroset(config, overrides, out_dir);
        if (kind == "detid") return run_detid(config, out_dir);
        if (kind == "feval") return run_feval(config, out_dir);
        if (kind == "triangular") return run_triangular(config, overrides, out_dir);
        if (kind == "product") return run_product(config, overrides, out_dir);
        if (kind == "verify") {
            require_keys(config, {"kind"});
            return run_verify_command();
        }
        throw ConfigError("unknown kind \"" + kind + "\"");
    } catch (const HypothesisViolation& e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return 1;
    } catch (const SvdError& e) {
        std::cerr << config_path << ": " << e.what()
                  << " (residual " << io::format_double(e.residual) << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bergman
