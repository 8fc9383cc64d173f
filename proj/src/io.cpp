#include "hillgap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hillgap/errors.hpp"

namespace hillgap {

using nlohmann::ordered_json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

nlohmann::json parse_file(const std::filesystem::path& file, const char* what) {
    std::ifstream in(file);
    if (!in)
        throw ConfigError(std::string("io: cannot open ") + what + " file '" +
                          file.string() + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("io: malformed ") + what + " file '" +
                          file.string() + "': " + e.what());
    }
}

// json accessors that turn type errors into ConfigError with context
double get_num(const nlohmann::json& j, const char* key, const char* ctx) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError(std::string("io: ") + ctx + " needs numeric field '" + key + "'");
    return j.at(key).get<double>();
}

double get_num_or(const nlohmann::json& j, const char* key, double dflt, const char* ctx) {
    if (!j.contains(key)) return dflt;
    if (!j.at(key).is_number())
        throw ConfigError(std::string("io: ") + ctx + " field '" + key + "' must be numeric");
    return j.at(key).get<double>();
}

int get_int(const nlohmann::json& j, const char* key, const char* ctx) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ConfigError(std::string("io: ") + ctx + " needs integer field '" + key + "'");
    return j.at(key).get<int>();
}

} // namespace

PotentialSpec load_potential_spec(const std::filesystem::path& file) {
    const nlohmann::json j = parse_file(file, "potential");
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("io: potential spec needs string field 'kind'");

    PotentialSpec spec;
    try {
        spec.kind = potential_kind_from_name(j.at("kind").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("io: ") + e.what());
    }
    const char* ctx = "potential spec";
    spec.mean = get_num_or(j, "mean", 0.0, ctx);
    switch (spec.kind) {
    case PotentialKind::power_decay:
        spec.s = get_num(j, "s", ctx);
        spec.half_width = get_int(j, "half_width", ctx);
        spec.amplitude = get_num_or(j, "amplitude", 1.0, ctx);
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_integer())
                throw ConfigError("io: potential spec field 'seed' must be an integer");
            spec.seed = j.at("seed").get<std::uint64_t>();
        }
        break;
    case PotentialKind::mathieu:
        spec.a = get_num(j, "a", ctx);
        break;
    case PotentialKind::delta_comb:
        spec.alpha = get_num(j, "alpha", ctx);
        spec.half_width = get_int(j, "half_width", ctx);
        break;
    case PotentialKind::finite_band: {
        if (!j.contains("coeffs") || !j.at("coeffs").is_array())
            throw ConfigError("io: finite_band potential needs array field 'coeffs'");
        for (const auto& c : j.at("coeffs")) {
            if (c.is_number()) {
                spec.coeffs.emplace_back(c.get<double>(), 0.0);
            } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
                spec.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
            } else {
                throw ConfigError("io: finite_band coeffs entries must be numbers or [re, im]");
            }
        }
        break;
    }
    }
    return spec;
}

Weight load_weight_spec(const std::filesystem::path& file) {
    const nlohmann::json j = parse_file(file, "weight");
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("io: weight spec needs string field 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    const char* ctx = "weight spec";
    try {
        if (kind == "power")
            return power_weight(get_num(j, "s", ctx), get_int(j, "K", ctx));
        if (kind == "example_a")
            return example_a_weight(get_num(j, "s", ctx), get_int(j, "K", ctx));
        if (kind == "table") {
            if (!j.contains("values") || !j.at("values").is_array())
                throw ConfigError("io: table weight needs array field 'values'");
            std::vector<double> v;
            for (const auto& x : j.at("values")) {
                if (!x.is_number())
                    throw ConfigError("io: table weight values must be numbers");
                v.push_back(x.get<double>());
            }
            std::string label = "table";
            if (j.contains("label") && j.at("label").is_string())
                label = j.at("label").get<std::string>();
            return Weight(std::move(v), std::move(label));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("io: weight spec invalid: ") + e.what());
    }
    throw ConfigError("io: unknown weight kind '" + kind + "'");
}

std::string gaps_csv(const SpectralResult& r) {
    std::string out = "n,lambda_minus,lambda_plus,gamma\n";
    for (int n = 1; n <= r.n_max(); ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        out += std::to_string(n) + "," + format_double(r.minus[i]) + "," +
               format_double(r.plus[i]) + "," + format_double(r.gamma[i]) + "\n";
    }
    return out;
}

std::string gaps_oracle_csv(const SpectralResult& r, const std::vector<GapInterval>& oracle) {
    if (oracle.size() < static_cast<std::size_t>(r.n_max()))
        throw std::invalid_argument("io: oracle shorter than computed gaps");
    std::string out = "n,lambda_minus,lambda_plus,gamma,oracle_gamma,abs_err\n";
    for (int n = 1; n <= r.n_max(); ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        out += std::to_string(n) + "," + format_double(r.minus[i]) + "," +
               format_double(r.plus[i]) + "," + format_double(r.gamma[i]) + "," +
               format_double(oracle[i].gamma) + "," +
               format_double(std::abs(r.gamma[i] - oracle[i].gamma)) + "\n";
    }
    return out;
}

std::string coeffs_csv(const FourierSequence& q) {
    std::string out = "k,re,im\n";
    for (int k = -q.half_width(); k <= q.half_width(); ++k) {
        const cplx v = q.at(k);
        out += std::to_string(k) + "," + format_double(v.real()) + "," +
               format_double(v.imag()) + "\n";
    }
    return out;
}

std::string weight_csv(const Weight& w) {
    std::string out = "k,omega\n";
    for (int k = 1; k <= w.max_index(); ++k)
        out += std::to_string(k) + "," + format_double(w.at(k)) + "\n";
    return out;
}

std::string ratio_csv(const std::vector<int>& sizes, const std::vector<double>& ratios) {
    if (sizes.size() != ratios.size())
        throw std::invalid_argument("io: sizes/ratios length mismatch");
    std::string out = "N,ratio\n";
    for (std::size_t i = 0; i < sizes.size(); ++i)
        out += std::to_string(sizes[i]) + "," + format_double(ratios[i]) + "\n";
    return out;
}

ordered_json gaps_json(const SpectralResult& r, const std::vector<GapInterval>* oracle) {
    ordered_json j;
    j["lambda0"] = r.lambda0;
    j["truncation"] = r.truncation;
    j["extrapolated"] = r.extrapolated;
    if (r.extrapolated) {
        j["extrapolation_fallback"] = r.extrapolation_fallback;
        j["fit_order"] = r.fit_order;
    }
    j["interlacing_ok"] = r.interlacing_ok;
    j["max_interlacing_violation"] = r.max_interlacing_violation;
    ordered_json arr = ordered_json::array();
    for (int n = 1; n <= r.n_max(); ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        ordered_json g;
        g["n"] = n;
        g["lambda_minus"] = r.minus[i];
        g["lambda_plus"] = r.plus[i];
        g["gamma"] = r.gamma[i];
        if (oracle && i < oracle->size()) {
            g["oracle_gamma"] = (*oracle)[i].gamma;
            g["abs_err"] = std::abs(r.gamma[i] - (*oracle)[i].gamma);
        }
        arr.push_back(std::move(g));
    }
    j["gaps"] = std::move(arr);
    return j;
}

namespace {

ordered_json opt_num(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace

ordered_json asymptotics_json(const GapAsymptotics& a) {
    ordered_json j;
    j["n_range"] = {a.n_lo, a.n_hi};
    j["remainder"] = a.remainder;
    j["refined_remainder"] = a.refined_remainder;
    j["tau_hat"] = opt_num(a.tau_hat);
    j["tau_refined"] = opt_num(a.tau_refined);
    j["predicted_tau"] = opt_num(a.predicted_tau);
    return j;
}

ordered_json membership_json(const MembershipDiagnostic& d) {
    ordered_json j;
    j["grid"] = d.grid;
    j["partial_sums"] = d.partial_sums;
    j["increment_ratios"] = d.increment_ratios;
    j["verdict"] = verdict_name(d.verdict);
    j["slow_decay"] = d.slow_decay;
    return j;
}

ordered_json mo_json(const MoEquivalenceReport& r) {
    ordered_json j;
    j["orders"] = {{"mu_hat", r.orders.mu_hat},
                   {"rho_hat", r.orders.rho_hat},
                   {"k_min", r.orders.k_min},
                   {"k_max", r.orders.k_max}};
    j["conditions"] = {{"satisfied", r.conditions.satisfied},
                       {"reason", r.conditions.reason}};
    j["hypotheses_warning"] = r.hypotheses_warning;
    j["verdicts"] = {{"q", verdict_name(r.q_diag.verdict)},
                     {"gamma", verdict_name(r.gamma_diag.verdict)}};
    j["agree"] = r.agree;
    j["comparable"] = r.comparable;
    j["q_diag"] = membership_json(r.q_diag);
    j["gamma_diag"] = membership_json(r.gamma_diag);
    return j;
}

ordered_json orders_json(const Weight& w, const OrderEstimate& e, const TheoremCheck& c) {
    ordered_json j;
    j["label"] = w.label();
    j["K"] = w.max_index();
    j["mu_hat"] = e.mu_hat;
    j["rho_hat"] = e.rho_hat;
    j["window"] = {e.k_min, e.k_max};
    j["conditions"] = {{"satisfied", c.satisfied}, {"reason", c.reason}};
    return j;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& file, const std::string& text) {
    std::error_code ec;
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw ConfigError("io: cannot write '" + file.string() + "'");
    out << text;
    if (!out)
        throw ConfigError("io: write failed for '" + file.string() + "'");
}

} // namespace hillgap
