#pragma once

#include <string>
#include <vector>

namespace hillgap {

/// Positive weight sequence omega(k), k = 1..K, with the standard even
/// extension omega(-k) = omega(k), omega(0) = 1 used for two-sided norms.
class Weight {
public:
    Weight(std::vector<double> values, std::string label);

    int max_index() const { return static_cast<int>(values_.size()); }

    /// omega(k) for |k| <= max_index(); throws outside the stored range.
    double at(int k) const;

    const std::vector<double>& values() const { return values_; }
    const std::string& label() const { return label_; }

private:
    std::vector<double> values_;
    std::string label_;
};

/// omega(k) = (1 + 2k)^s.
Weight power_weight(double s, int K);

/// omega(k) = k^s * log(1+k) for even k, k^s for odd k: same power order
/// above and below, but not equivalent to any monotone weight.
Weight example_a_weight(double s, int K);

struct OrderEstimate {
    double mu_hat = 0.0;   // lower power order estimate (liminf side)
    double rho_hat = 0.0;  // upper power order estimate (limsup side)
    int k_min = 0;
    int k_max = 0;
};

/// Estimate the power orders of omega from the tail of [k_min, k_max].
/// The ratio r(k) = log omega(k) / log k is scanned over the top quarter of
/// the window, per-block extrema are taken over eight geometric blocks, and
/// each envelope is extrapolated affinely in 1/log k to its k -> infinity
/// intercept. This removes the O(1/log k) bias that makes raw min/max ratios
/// useless at desk scale (for (1+2k)^s the raw ratio is off by s*log2/log k).
OrderEstimate estimate_orders(const Weight& w, int k_min, int k_max);

struct TheoremCheck {
    bool satisfied = false;
    std::string reason;
};

/// Admissibility of a weight with power orders (mu, rho) for the two-sided
/// gap-decay equivalence: requires mu > -1, rho finite, and
/// rho < 1 + 2*mu when mu <= 0, rho < 1 + mu when mu >= 0.
TheoremCheck check_theorem_conditions(double mu, double rho);

} // namespace hillgap
