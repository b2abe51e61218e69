#include <string>

#include <CLI11.hpp>

#include "bergman/run_config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Bergman-space Toeplitz operator toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    bergman::RunOverrides overrides;
    double tol_flag = 0.0;
    int n_flag = 0;

    const std::vector<std::string> kinds = {"matrix", "eigs",       "rank",    "zeroset",
                                            "detid",  "feval",      "triangular", "product"};
    std::vector<CLI::App*> subs;
    for (const auto& kind : kinds) {
        CLI::App* sub = app.add_subcommand(kind, "run a \"" + kind + "\" config");
        sub->add_option("--config", config_path, "experiment config document")->required();
        sub->add_option("--out", out_dir, "output directory for reports");
        sub->add_option("--tol", tol_flag, "override the config tolerance");
        sub->add_option("--n", n_flag, "override the truncation size");
        subs.push_back(sub);
    }
    CLI::App* verify = app.add_subcommand("verify", "run every library invariant check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (verify->parsed()) {
        return bergman::run_verify_command();
    }
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (subs[i]->parsed()) {
            if (subs[i]->count("--tol") > 0) overrides.tol = tol_flag;
            if (subs[i]->count("--n") > 0) overrides.n = n_flag;
            return bergman::run_config(config_path, out_dir, overrides, kinds[i]);
        }
    }
    return 2;
}
