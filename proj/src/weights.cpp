#include "hillgap/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hillgap {

Weight::Weight(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty())
        throw std::invalid_argument("weights: empty weight sequence");
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("weights: weight values must be positive finite");
    }
}

double Weight::at(int k) const {
    if (k == 0) return 1.0;
    const int a = std::abs(k);
    if (a > max_index())
        throw std::out_of_range("weights: index beyond stored prefix");
    return values_[static_cast<std::size_t>(a - 1)];
}

Weight power_weight(double s, int K) {
    if (K < 1) throw std::invalid_argument("weights: power_weight needs K >= 1");
    std::vector<double> v(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k)
        v[static_cast<std::size_t>(k - 1)] = std::pow(1.0 + 2.0 * k, s);
    return Weight(std::move(v), "power(s=" + std::to_string(s) + ")");
}

Weight example_a_weight(double s, int K) {
    if (K < 1) throw std::invalid_argument("weights: example_a_weight needs K >= 1");
    std::vector<double> v(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        const double base = std::pow(static_cast<double>(k), s);
        v[static_cast<std::size_t>(k - 1)] =
            (k % 2 == 0) ? base * std::log(1.0 + k) : base;
    }
    return Weight(std::move(v), "example_a(s=" + std::to_string(s) + ")");
}

namespace {

struct EnvelopePoint {
    double x = 0.0;  // 1 / log k at the extremal k
    double r = 0.0;  // log omega(k) / log k
};

// Least-squares intercept of r against x at x = 0. With all r equal the
// slope is exactly zero and the intercept is the common value.
double intercept_at_zero(const std::vector<EnvelopePoint>& pts) {
    const std::size_t n = pts.size();
    double sx = 0.0, sr = 0.0;
    for (const auto& p : pts) { sx += p.x; sr += p.r; }
    const double mx = sx / static_cast<double>(n);
    const double mr = sr / static_cast<double>(n);
    double sxx = 0.0, sxr = 0.0;
    for (const auto& p : pts) {
        sxx += (p.x - mx) * (p.x - mx);
        sxr += (p.x - mx) * (p.r - mr);
    }
    if (sxx <= 0.0) return mr;
    const double slope = sxr / sxx;
    return mr - slope * mx;
}

} // namespace

OrderEstimate estimate_orders(const Weight& w, int k_min, int k_max) {
    if (k_min < 2)
        throw std::invalid_argument("weights: estimate_orders needs k_min >= 2");
    if (k_max <= k_min)
        throw std::invalid_argument("weights: estimate_orders needs k_max > k_min");
    if (k_max > w.max_index())
        throw std::invalid_argument("weights: estimate_orders window exceeds stored prefix");

    // only the top quarter of the window carries asymptotic information
    const int lo = std::max(k_min, k_max / 4);

    // eight geometric block edges across [lo, k_max]
    constexpr int n_blocks = 8;
    std::vector<int> edges;
    edges.reserve(n_blocks + 1);
    const double llo = std::log(static_cast<double>(lo));
    const double lhi = std::log(static_cast<double>(k_max));
    for (int b = 0; b <= n_blocks; ++b) {
        const double t = llo + (lhi - llo) * static_cast<double>(b) / n_blocks;
        int e = static_cast<int>(std::lround(std::exp(t)));
        e = std::clamp(e, lo, k_max);
        if (edges.empty() || e > edges.back()) edges.push_back(e);
    }
    if (edges.size() < 2) edges = {lo, k_max};

    std::vector<EnvelopePoint> mins, maxs;
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
        const int a = (b == 0) ? edges[b] : edges[b] + 1;
        const int z = edges[b + 1];
        if (a > z) continue;
        EnvelopePoint pmin{0.0, std::numeric_limits<double>::infinity()};
        EnvelopePoint pmax{0.0, -std::numeric_limits<double>::infinity()};
        for (int k = a; k <= z; ++k) {
            const double lk = std::log(static_cast<double>(k));
            const double r = std::log(w.at(k)) / lk;
            if (r < pmin.r) pmin = {1.0 / lk, r};
            if (r > pmax.r) pmax = {1.0 / lk, r};
        }
        mins.push_back(pmin);
        maxs.push_back(pmax);
    }

    OrderEstimate est;
    est.k_min = k_min;
    est.k_max = k_max;
    est.mu_hat = intercept_at_zero(mins);
    est.rho_hat = intercept_at_zero(maxs);
    if (est.mu_hat > est.rho_hat) std::swap(est.mu_hat, est.rho_hat);
    return est;
}

TheoremCheck check_theorem_conditions(double mu, double rho) {
    if (std::isnan(mu) || std::isnan(rho) || mu > rho)
        throw std::invalid_argument("weights: need mu <= rho, not NaN");
    TheoremCheck c;
    if (!(mu > -1.0)) {
        c.satisfied = false;
        c.reason = "lower order must exceed -1 (got mu = " + std::to_string(mu) + ")";
        return c;
    }
    if (!std::isfinite(rho)) {
        c.satisfied = false;
        c.reason = "upper order must be finite";
        return c;
    }
    if (mu <= 0.0) {
        c.satisfied = rho < 1.0 + 2.0 * mu;
        c.reason = c.satisfied
                       ? "ok: -1 < mu <= 0 and rho < 1 + 2*mu"
                       : "rho >= 1 + 2*mu on the branch -1 < mu <= 0";
    } else {
        c.satisfied = rho < 1.0 + mu;
        c.reason = c.satisfied ? "ok: mu > 0 and rho < 1 + mu"
                               : "rho >= 1 + mu on the branch mu > 0";
    }
    return c;
}

} // namespace hillgap
