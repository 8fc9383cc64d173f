#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hillgap {

/// Resolved configuration of one CLI invocation. The command-line front end
/// only fills this in; run() does the work, so tests can drive it directly.
struct RunConfig {
    enum class Command { gaps, asymptotics, mo_check, weights, conv_lemma };

    Command command = Command::gaps;
    std::filesystem::path potential_file;
    std::filesystem::path weight_file;
    std::filesystem::path out_file;
    std::string format = "csv";        // csv | json
    int M = 64;
    int n_max = 8;
    std::vector<int> M_list;           // non-empty enables extrapolation (gaps)
    bool oracle = false;               // append discriminant-oracle columns (delta_comb only)
    int fit_lo = 8;                    // asymptotics fit window
    int fit_hi = 32;
    int order_k_min = 16;              // weights estimation window
    int order_k_max = 0;               // 0 = use full prefix
    double conv_s = 1.0;               // conv-lemma exponents
    double conv_r = 1.0;
    double conv_t = 0.0;
    std::string conv_family = "log_damped";
    std::vector<int> conv_sizes = {16, 32, 64, 128, 256, 512, 1024};
    bool manifest = true;
};

/// Execute one command: load inputs, compute, and only then write the result
/// file (plus <out>.manifest.json), so failures leave no partial output.
/// Returns the process exit code: 0 ok, 2 bad input, 3 numerical failure,
/// 4 invariant violation.
int run(const RunConfig& cfg);

/// Exit codes as named constants.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_numeric = 3;
inline constexpr int exit_invariant = 4;

} // namespace hillgap
