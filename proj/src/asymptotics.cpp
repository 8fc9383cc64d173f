#include "hillgap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hillgap/seq_spaces.hpp"

namespace hillgap {

namespace {

constexpr double pi = std::numbers::pi;

void check_zero_mean_hermitian(const FourierSequence& q, const char* who) {
    if (!q.hermitian())
        throw std::invalid_argument(std::string(who) + ": potential must be hermitian");
    if (q.at(0) != cplx{0.0, 0.0})
        throw std::invalid_argument(std::string(who) + ": potential must have q_hat(0) = 0");
}

} // namespace

cplx rho_correction(const FourierSequence& q, int n) {
    if (n < 1) throw std::invalid_argument("asymptotics: rho_correction needs n >= 1");
    check_zero_mean_hermitian(q, "asymptotics: rho_correction");
    const int N = q.half_width();
    cplx acc{0.0, 0.0};
    for (int j = n - N; j <= N - n; ++j) {
        if (j == n || j == -n) continue;
        const double denom = static_cast<double>(n - j) * static_cast<double>(n + j);
        acc += q.at(n - j) * q.at(n + j) / denom;
    }
    return acc / (pi * pi);
}

std::vector<cplx> rho_correction_range(const FourierSequence& q, int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("asymptotics: rho_correction_range needs n_max >= 1");
    check_zero_mean_hermitian(q, "asymptotics: rho_correction_range");
    const int N = q.half_width();
    TwoSidedSequence g(N);
    for (int k = -N; k <= N; ++k) {
        if (k == 0) continue;
        g.set(k, q.at(k) / static_cast<double>(k));
    }
    const TwoSidedSequence gg = convolve(g, g);
    std::vector<cplx> rho(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        rho[static_cast<std::size_t>(n - 1)] = gg.at(2 * n) / (pi * pi);
    return rho;
}

std::optional<double> fit_decay_exponent(const std::vector<double>& values_by_n,
                                         int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi <= n_lo)
        throw std::invalid_argument("asymptotics: bad fit window");
    if (static_cast<std::size_t>(n_hi) > values_by_n.size())
        throw std::invalid_argument("asymptotics: fit window exceeds data");
    double sx = 0.0, sy = 0.0;
    int m = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double v = std::abs(values_by_n[static_cast<std::size_t>(n - 1)]);
        if (v == 0.0) continue;
        sx += std::log(static_cast<double>(n));
        sy += std::log(v);
        ++m;
    }
    if (m < 5) return std::nullopt;
    const double mx = sx / m, my = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double v = std::abs(values_by_n[static_cast<std::size_t>(n - 1)]);
        if (v == 0.0) continue;
        const double x = std::log(static_cast<double>(n)) - mx;
        sxx += x * x;
        sxy += x * (std::log(v) - my);
    }
    if (sxx <= 0.0) return std::nullopt;
    return -sxy / sxx;
}

GapAsymptotics gap_asymptotics(const FourierSequence& q, const SpectralResult& spec,
                               int n_lo, int n_hi, std::optional<double> power_s) {
    const int n_max = spec.n_max();
    if (n_lo < 1 || n_hi <= n_lo || n_hi > n_max)
        throw std::invalid_argument("asymptotics: fit window must satisfy 1 <= n_lo < n_hi <= n_max");
    check_zero_mean_hermitian(q, "asymptotics: gap_asymptotics");

    GapAsymptotics a;
    a.n_lo = n_lo;
    a.n_hi = n_hi;
    a.remainder.resize(static_cast<std::size_t>(n_max));
    a.refined_remainder.resize(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        const cplx qn = q.at(n);
        a.remainder[i] = spec.gamma[i] - 2.0 * std::abs(qn);
        a.refined_remainder[i] = spec.gamma[i] - 2.0 * std::abs(qn + rho_correction(q, n));
    }
    a.tau_hat = fit_decay_exponent(a.remainder, n_lo, n_hi);
    a.tau_refined = fit_decay_exponent(a.refined_remainder, n_lo, n_hi);
    if (power_s) {
        const double s = *power_s;
        if (s >= 0.0) a.predicted_tau = 1.0 + s;
        else if (s > -1.0) a.predicted_tau = 1.0 + 2.0 * s - 0.1;
    }
    return a;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::in: return "in";
    case Verdict::out: return "out";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

MembershipDiagnostic membership_diagnostic(const std::vector<double>& magnitudes,
                                           const Weight& w, int K_max) {
    if (K_max < 8)
        throw std::invalid_argument("asymptotics: membership needs K_max >= 8");
    if (magnitudes.size() < static_cast<std::size_t>(K_max))
        throw std::invalid_argument("asymptotics: magnitudes shorter than K_max");
    if (w.max_index() < K_max)
        throw std::invalid_argument("asymptotics: weight prefix shorter than K_max");
    for (double v : magnitudes)
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("asymptotics: magnitudes must be finite and >= 0");

    MembershipDiagnostic d;
    for (int K = 1; K <= K_max; K *= 2) d.grid.push_back(K);

    double running = 0.0;
    std::size_t gi = 0;
    for (int k = 1; k <= d.grid.back(); ++k) {
        const double term = w.at(k) * magnitudes[static_cast<std::size_t>(k - 1)];
        running += term * term;
        if (k == d.grid[gi]) {
            d.partial_sums.push_back(running);
            ++gi;
        }
    }

    std::vector<double> inc;
    for (std::size_t i = 0; i + 1 < d.partial_sums.size(); ++i)
        inc.push_back(d.partial_sums[i + 1] - d.partial_sums[i]);
    for (std::size_t i = 0; i + 1 < inc.size(); ++i)
        d.increment_ratios.push_back(inc[i] > 0.0 ? inc[i + 1] / inc[i]
                                                  : (inc[i + 1] > 0.0
                                                         ? std::numeric_limits<double>::infinity()
                                                         : 1.0));

    const std::size_t m = inc.size();
    const double I1 = inc[m - 3], I2 = inc[m - 2], I3 = inc[m - 1];
    const double total = d.partial_sums.back();
    const double eps = 1e-14 * std::max(total, 1e-300);

    const bool zero_tail = I1 <= eps && I2 <= eps && I3 <= eps;
    const bool monotone = I2 <= I1 * (1.0 + 1e-12) && I3 <= I2 * (1.0 + 1e-12);
    const double r1 = I1 > 0.0 ? I2 / I1 : 0.0;
    const double r2 = I2 > 0.0 ? I3 / I2 : 0.0;
    const bool stagnant = I1 > eps && I2 > eps &&
                          r1 >= 0.9 && r1 <= 1.1 && r2 >= 0.9 && r2 <= 1.1;

    if (zero_tail) {
        d.verdict = Verdict::in;
    } else if (monotone && I3 <= 0.5 * I1) {
        d.verdict = Verdict::in;  // increments at least halve across the window
    } else if (I1 < I2 && I2 < I3) {
        d.verdict = Verdict::out;  // divergent growth
    } else if (stagnant) {
        d.verdict = Verdict::out;  // harmonic-like plateau
    } else {
        d.verdict = Verdict::inconclusive;
    }
    d.slow_decay = d.verdict != Verdict::in && monotone && I3 > eps;
    return d;
}

MoEquivalenceReport mo_equivalence_report(const FourierSequence& q, const Weight& w,
                                          int M, int n_max) {
    if (n_max < 8)
        throw std::invalid_argument("asymptotics: mo_equivalence needs n_max >= 8");
    if (w.max_index() < n_max)
        throw std::invalid_argument("asymptotics: weight prefix shorter than n_max");

    MoEquivalenceReport rep;
    rep.orders = estimate_orders(w, 2, w.max_index());
    rep.conditions = check_theorem_conditions(rep.orders.mu_hat, rep.orders.rho_hat);
    rep.hypotheses_warning = !rep.conditions.satisfied;

    const SpectralResult spec = spectral_endpoints(q, M, n_max);

    std::vector<double> qmag(static_cast<std::size_t>(n_max));
    for (int k = 1; k <= n_max; ++k)
        qmag[static_cast<std::size_t>(k - 1)] = std::abs(q.at(k));

    rep.q_diag = membership_diagnostic(qmag, w, n_max);
    rep.gamma_diag = membership_diagnostic(spec.gamma, w, n_max);
    rep.comparable = rep.q_diag.verdict != Verdict::inconclusive &&
                     rep.gamma_diag.verdict != Verdict::inconclusive;
    rep.agree = !(rep.comparable && rep.q_diag.verdict != rep.gamma_diag.verdict);
    return rep;
}

} // namespace hillgap
