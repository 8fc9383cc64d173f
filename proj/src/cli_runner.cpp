#include "hillgap/cli_runner.hpp"

#include <chrono>
#include <ctime>
#include <iostream>
#include <utility>

#include "hillgap/errors.hpp"
#include "hillgap/io.hpp"
#include "hillgap/seq_spaces.hpp"

namespace hillgap {

namespace {

using nlohmann::ordered_json;

const char* command_name(RunConfig::Command c) {
    switch (c) {
    case RunConfig::Command::gaps: return "gaps";
    case RunConfig::Command::asymptotics: return "asymptotics";
    case RunConfig::Command::mo_check: return "mo-check";
    case RunConfig::Command::weights: return "weights";
    case RunConfig::Command::conv_lemma: return "conv-lemma";
    }
    return "unknown";
}

struct PendingOutput {
    std::filesystem::path file;
    std::string bytes;
};

SpectralResult solve_spectrum(const FourierSequence& q, const RunConfig& cfg) {
    SpectralResult r = cfg.M_list.empty()
                           ? spectral_endpoints(q, cfg.M, cfg.n_max)
                           : richardson_extrapolate(q, cfg.n_max, cfg.M_list);
    if (!r.interlacing_ok)
        throw InvariantError("cli: eigenvalue interlacing violated (relative overlap " +
                             format_double(r.max_interlacing_violation) + ")");
    return r;
}

void require_json(const RunConfig& cfg, const char* cmd) {
    if (cfg.format != "json")
        throw ConfigError(std::string("cli: ") + cmd + " only supports --format json");
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = command_name(cfg.command);
    if (!cfg.potential_file.empty()) j["potential"] = cfg.potential_file.string();
    if (!cfg.weight_file.empty()) j["weight"] = cfg.weight_file.string();
    j["format"] = cfg.format;
    switch (cfg.command) {
    case RunConfig::Command::gaps:
    case RunConfig::Command::asymptotics:
    case RunConfig::Command::mo_check:
        j["M"] = cfg.M;
        j["n_max"] = cfg.n_max;
        if (!cfg.M_list.empty()) j["M_list"] = cfg.M_list;
        if (cfg.command == RunConfig::Command::gaps) j["oracle"] = cfg.oracle;
        if (cfg.command == RunConfig::Command::asymptotics)
            j["fit_window"] = {cfg.fit_lo, cfg.fit_hi};
        break;
    case RunConfig::Command::weights:
        j["k_min"] = cfg.order_k_min;
        j["k_max"] = cfg.order_k_max;
        break;
    case RunConfig::Command::conv_lemma:
        j["s"] = cfg.conv_s;
        j["r"] = cfg.conv_r;
        j["t"] = cfg.conv_t;
        j["family"] = cfg.conv_family;
        j["sizes"] = cfg.conv_sizes;
        break;
    }
    return j;
}

std::vector<PendingOutput> execute(const RunConfig& cfg) {
    std::vector<PendingOutput> outs;
    switch (cfg.command) {
    case RunConfig::Command::gaps: {
        const PotentialSpec spec = load_potential_spec(cfg.potential_file);
        const FourierSequence q = make_potential(spec);
        const SpectralResult r = solve_spectrum(q, cfg);
        std::vector<GapInterval> oracle;
        if (cfg.oracle) {
            if (spec.kind != PotentialKind::delta_comb)
                throw ConfigError("cli: --oracle requires a delta_comb potential");
            oracle = kronig_penney_gaps(spec.alpha, cfg.n_max, 1e-10);
        }
        if (cfg.format == "csv") {
            outs.push_back({cfg.out_file,
                            cfg.oracle ? gaps_oracle_csv(r, oracle) : gaps_csv(r)});
        } else if (cfg.format == "json") {
            outs.push_back({cfg.out_file,
                            json_text(gaps_json(r, cfg.oracle ? &oracle : nullptr))});
        } else {
            throw ConfigError("cli: unknown format '" + cfg.format + "'");
        }
        break;
    }
    case RunConfig::Command::asymptotics: {
        require_json(cfg, "asymptotics");
        const PotentialSpec spec = load_potential_spec(cfg.potential_file);
        const FourierSequence q = make_potential(spec);
        const SpectralResult r = solve_spectrum(q, cfg);
        std::optional<double> power_s;
        if (spec.kind == PotentialKind::power_decay) power_s = spec.s;
        const GapAsymptotics a = gap_asymptotics(q, r, cfg.fit_lo, cfg.fit_hi, power_s);
        outs.push_back({cfg.out_file, json_text(asymptotics_json(a))});
        break;
    }
    case RunConfig::Command::mo_check: {
        require_json(cfg, "mo-check");
        const PotentialSpec spec = load_potential_spec(cfg.potential_file);
        const FourierSequence q = make_potential(spec);
        const Weight w = load_weight_spec(cfg.weight_file);
        const MoEquivalenceReport rep = mo_equivalence_report(q, w, cfg.M, cfg.n_max);
        if (rep.hypotheses_warning)
            std::cerr << "hillgap: warning: weight fails admissibility conditions: "
                      << rep.conditions.reason << "\n";
        outs.push_back({cfg.out_file, json_text(mo_json(rep))});
        break;
    }
    case RunConfig::Command::weights: {
        const Weight w = load_weight_spec(cfg.weight_file);
        if (cfg.format == "csv") {
            outs.push_back({cfg.out_file, weight_csv(w)});
            break;
        }
        require_json(cfg, "weights (other than csv tabulation)");
        const int k_max = cfg.order_k_max > 0
                              ? std::min(cfg.order_k_max, w.max_index())
                              : w.max_index();
        const OrderEstimate est = estimate_orders(w, cfg.order_k_min, k_max);
        const TheoremCheck chk = check_theorem_conditions(est.mu_hat, est.rho_hat);
        outs.push_back({cfg.out_file, json_text(orders_json(w, est, chk))});
        break;
    }
    case RunConfig::Command::conv_lemma: {
        const RatioFamily family = ratio_family_from_name(cfg.conv_family);
        const std::vector<double> ratios = convolution_bound_ratio(
            cfg.conv_s, cfg.conv_r, cfg.conv_t, cfg.conv_sizes, family);
        if (cfg.format == "csv") {
            outs.push_back({cfg.out_file, ratio_csv(cfg.conv_sizes, ratios)});
        } else if (cfg.format == "json") {
            ordered_json j;
            j["s"] = cfg.conv_s;
            j["r"] = cfg.conv_r;
            j["t"] = cfg.conv_t;
            j["family"] = cfg.conv_family;
            j["sizes"] = cfg.conv_sizes;
            j["ratios"] = ratios;
            outs.push_back({cfg.out_file, json_text(j)});
        } else {
            throw ConfigError("cli: unknown format '" + cfg.format + "'");
        }
        break;
    }
    }
    return outs;
}

} // namespace

int run(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (cfg.out_file.empty())
            throw ConfigError("cli: --out is required");

        // compute everything before writing anything, so a failing run
        // leaves no partial output behind
        std::vector<PendingOutput> outs = execute(cfg);
        for (const PendingOutput& o : outs) write_text(o.file, o.bytes);

        if (cfg.manifest) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            ordered_json m;
            m["tool"] = "hillgap";
            m["version"] = "1.0.0";
            m["config"] = config_json(cfg);
            ordered_json files = ordered_json::array();
            for (const PendingOutput& o : outs) files.push_back(o.file.string());
            m["outputs"] = std::move(files);
            m["wall_ms"] = ms;
            m["timestamp_utc"] = timestamp_utc();
            write_text(cfg.out_file.string() + ".manifest.json", json_text(m));
        }
        return exit_ok;
    } catch (const ConfigError& e) {
        std::cerr << "hillgap: config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hillgap: config error: " << e.what() << "\n";
        return exit_config;
    } catch (const NumericError& e) {
        std::cerr << "hillgap: numeric error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const InvariantError& e) {
        std::cerr << "hillgap: invariant violation: " << e.what() << "\n";
        return exit_invariant;
    } catch (const std::exception& e) {
        std::cerr << "hillgap: error: " << e.what() << "\n";
        return exit_numeric;
    }
}

} // namespace hillgap
