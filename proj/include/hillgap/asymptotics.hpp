#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hillgap/fourier_sequence.hpp"
#include "hillgap/spectral_solver.hpp"
#include "hillgap/weights.hpp"

namespace hillgap {

/// Second-order gap correction
///   rho(n) = (1/pi^2) sum_{j != +-n} q_hat(n-j) q_hat(n+j) / ((n-j)(n+j)),
/// computed by the direct sum over the stored range of q. Requires n >= 1
/// and a zero-mean hermitian q.
cplx rho_correction(const FourierSequence& q, int n);

/// Same quantity for n = 1..n_max via the convolution identity
/// rho(n) = (1/pi^2) (g*g)(2n) with g(k) = q_hat(k)/k, g(0) = 0.
/// Independent route used to cross-check rho_correction.
std::vector<cplx> rho_correction_range(const FourierSequence& q, int n_max);

struct GapAsymptotics {
    int n_lo = 0;                       // fit window
    int n_hi = 0;
    std::vector<double> remainder;          // gamma(n) - 2|q_hat(n)|, n = 1..n_max
    std::vector<double> refined_remainder;  // gamma(n) - 2|q_hat(n) + rho(n)|
    std::optional<double> tau_hat;          // decay exponent of |remainder|
    std::optional<double> tau_refined;      // decay exponent of |refined_remainder|
    std::optional<double> predicted_tau;    // expected exponent for power-law q
};

/// Remainders of the two-term and three-term gap asymptotics for a solved
/// spectrum, with log-log decay fits over [n_lo, n_hi]. If q has power-law
/// coefficient decay with exponent s + 0.51 (see power_decay_potential),
/// predicted_tau is 1 + s for s >= 0 and 1 + 2s - 0.1 for s in (-1, 0).
GapAsymptotics gap_asymptotics(const FourierSequence& q, const SpectralResult& spec,
                               int n_lo, int n_hi,
                               std::optional<double> power_s = std::nullopt);

/// Least-squares slope of log|v(n)| against log n over n in [n_lo, n_hi],
/// returned as a decay exponent (positive = decaying). Exact zeros are
/// skipped; fewer than 5 usable points yields nullopt.
std::optional<double> fit_decay_exponent(const std::vector<double>& values_by_n,
                                         int n_lo, int n_hi);

enum class Verdict { in, out, inconclusive };

const char* verdict_name(Verdict v);

/// Dyadic partial-sum diagnostic for sum_k omega(k)^2 a(k)^2 < infinity.
/// Partial sums S(K) are taken at K = 1, 2, 4, ..., K_max; the verdict looks
/// at the last three increments I_j = S(2K) - S(K):
///   in:  increments non-increasing and the last is at most half the first
///        (or the tail is exactly zero);
///   out: increments strictly increasing, or both consecutive ratios within
///        [0.9, 1.1] of 1 (stagnant band);
///   inconclusive: anything else.
/// slow_decay marks shrinking-but-not-halving tails among non-"in" verdicts.
struct MembershipDiagnostic {
    std::vector<int> grid;
    std::vector<double> partial_sums;
    std::vector<double> increment_ratios;  // I_{j+1} / I_j
    Verdict verdict = Verdict::inconclusive;
    bool slow_decay = false;
};

/// magnitudes[k-1] = a(k) >= 0 for k = 1..K_max at least.
/// Requires K_max >= 8 and w.max_index() >= K_max.
MembershipDiagnostic membership_diagnostic(const std::vector<double>& magnitudes,
                                           const Weight& w, int K_max);

/// Side-by-side membership verdicts for the coefficient sequence |q_hat(n)|
/// and the gap-length sequence gamma(n) in the same weighted space, the
/// numerical face of the gap-decay equivalence. Both diagnostics use
/// K_max = n_max. `agree` is false only when both verdicts are decisive and
/// differ. hypotheses_warning is set when the estimated weight orders fail
/// the admissibility conditions (the equivalence is then not expected).
struct MoEquivalenceReport {
    OrderEstimate orders;
    TheoremCheck conditions;
    bool hypotheses_warning = false;
    MembershipDiagnostic q_diag;
    MembershipDiagnostic gamma_diag;
    bool comparable = false;  // both verdicts decisive
    bool agree = true;
};

MoEquivalenceReport mo_equivalence_report(const FourierSequence& q, const Weight& w,
                                          int M, int n_max);

} // namespace hillgap
