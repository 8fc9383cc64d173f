// Command-line front end: parse arguments into a RunConfig and hand off to
// hillgap::run(). All real work lives in the library so it stays testable.

#include <CLI11.hpp>

#include "hillgap/cli_runner.hpp"

int main(int argc, char** argv) {
    using hillgap::RunConfig;
    RunConfig cfg;
    bool no_manifest = false;

    CLI::App app{"Spectral gaps of Hill operators with Fourier-coefficient potentials"};
    app.require_subcommand(1);
    app.add_flag("--no-manifest", no_manifest, "skip the <out>.manifest.json sidecar");

    auto add_out = [](CLI::App* sub, RunConfig& c) {
        sub->add_option("--out", c.out_file, "output file")->required();
    };
    auto add_potential = [](CLI::App* sub, RunConfig& c) {
        sub->add_option("--potential", c.potential_file, "potential spec JSON")
            ->required()
            ->check(CLI::ExistingFile);
    };
    auto add_weight = [](CLI::App* sub, RunConfig& c) {
        sub->add_option("--weight", c.weight_file, "weight spec JSON")
            ->required()
            ->check(CLI::ExistingFile);
    };

    CLI::App* gaps = app.add_subcommand("gaps", "compute spectral gap endpoints");
    add_potential(gaps, cfg);
    add_out(gaps, cfg);
    gaps->add_option("--M", cfg.M, "Fourier-Galerkin truncation");
    gaps->add_option("--n-max", cfg.n_max, "number of gaps");
    gaps->add_option("--M-list", cfg.M_list, "truncation sweep for extrapolation")
        ->delimiter(',');
    gaps->add_flag("--oracle", cfg.oracle,
                   "append discriminant-oracle columns (delta_comb only)");
    gaps->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* asym = app.add_subcommand("asymptotics", "gap asymptotics remainder report");
    add_potential(asym, cfg);
    add_out(asym, cfg);
    asym->add_option("--M", cfg.M, "Fourier-Galerkin truncation");
    asym->add_option("--n-max", cfg.n_max, "number of gaps");
    asym->add_option("--M-list", cfg.M_list, "truncation sweep for extrapolation")
        ->delimiter(',');
    asym->add_option("--fit-lo", cfg.fit_lo, "decay fit window start");
    asym->add_option("--fit-hi", cfg.fit_hi, "decay fit window end");

    CLI::App* mo = app.add_subcommand("mo-check",
                                      "coefficient vs gap-length membership verdicts");
    add_potential(mo, cfg);
    add_weight(mo, cfg);
    add_out(mo, cfg);
    mo->add_option("--M", cfg.M, "Fourier-Galerkin truncation");
    mo->add_option("--n-max", cfg.n_max, "number of gaps / diagnostic window");

    CLI::App* wts = app.add_subcommand("weights", "weight order estimation / tabulation");
    add_weight(wts, cfg);
    add_out(wts, cfg);
    wts->add_option("--k-min", cfg.order_k_min, "estimation window start");
    wts->add_option("--k-max", cfg.order_k_max, "estimation window end (0 = full prefix)");
    wts->add_option("--format", cfg.format, "json (orders) or csv (tabulation)")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* conv = app.add_subcommand("conv-lemma", "convolution inequality ratio sweep");
    add_out(conv, cfg);
    conv->add_option("--s", cfg.conv_s, "first factor exponent");
    conv->add_option("--r", cfg.conv_r, "second factor exponent");
    conv->add_option("--t", cfg.conv_t, "target exponent");
    conv->add_option("--family", cfg.conv_family, "log_damped or witness")
        ->check(CLI::IsMember({"log_damped", "witness"}));
    conv->add_option("--sizes", cfg.conv_sizes, "truncation sizes")->delimiter(',');
    conv->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hillgap::exit_config;
    }

    if (gaps->parsed()) cfg.command = RunConfig::Command::gaps;
    if (asym->parsed()) {
        cfg.command = RunConfig::Command::asymptotics;
        cfg.format = "json";
        if (asym->count("--n-max") == 0) cfg.n_max = 64;
        if (asym->count("--M") == 0 && cfg.M_list.empty()) cfg.M = 2 * cfg.n_max;
    }
    if (mo->parsed()) {
        cfg.command = RunConfig::Command::mo_check;
        cfg.format = "json";
        if (mo->count("--n-max") == 0) cfg.n_max = 128;
        if (mo->count("--M") == 0) cfg.M = 2 * cfg.n_max;
    }
    if (wts->parsed()) {
        cfg.command = RunConfig::Command::weights;
        if (wts->count("--format") == 0) cfg.format = "json";
    }
    if (conv->parsed()) cfg.command = RunConfig::Command::conv_lemma;
    cfg.manifest = !no_manifest;

    return hillgap::run(cfg);
}
