#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hillgap/fourier_sequence.hpp"

namespace hillgap {

enum class PotentialKind { power_decay, mathieu, delta_comb, finite_band };

/// Parsed description of a potential, as read from a JSON spec file or
/// assembled programmatically. Fields are used per kind; see make_potential.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::finite_band;
    int half_width = 0;          // N for power_decay / delta_comb
    double s = 0.0;              // power_decay smoothness parameter
    double amplitude = 1.0;      // power_decay scale c
    std::uint64_t seed = 0;      // power_decay sign pattern
    double a = 1.0;              // mathieu: q = 2a cos(2 pi x)
    double alpha = 1.0;          // delta_comb: alpha * periodic delta
    std::vector<cplx> coeffs;    // finite_band one-sided coefficients
    double mean = 0.0;
};

/// |q_hat(k)| = c * k^{-(s + 0.51)} with deterministic pseudo-random signs:
/// the k-th sign is the top bit of the k-th draw of mt19937_64(seed). Lies in the
/// weighted space with exponent s but in none with a larger exponent.
FourierSequence power_decay_potential(double s, int half_width, double amplitude,
                                      std::uint64_t seed);

/// q(x) = 2a cos(2 pi x): q_hat(+-1) = a, all other coefficients zero.
FourierSequence mathieu_potential(double a);

/// Truncated Fourier expansion of alpha * (periodic Dirac comb minus its
/// mean): q_hat(k) = alpha for 0 < |k| <= N. Mean alpha is tracked separately.
FourierSequence delta_comb_potential(double alpha, int half_width);

/// Directly specified one-sided coefficients q_hat(1..N).
FourierSequence finite_band_potential(const std::vector<cplx>& one_sided,
                                      double mean = 0.0);

FourierSequence make_potential(const PotentialSpec& spec);

const char* potential_kind_name(PotentialKind kind);
PotentialKind potential_kind_from_name(const std::string& name);

} // namespace hillgap
