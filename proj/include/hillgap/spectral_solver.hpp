#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hillgap/fourier_sequence.hpp"

namespace hillgap {

/// Endpoints of the first n_max spectral gaps of -u'' + q u on the line with
/// 1-periodic q. Arrays are indexed by n-1 for n = 1..n_max:
/// the n-th gap is (minus[n-1], plus[n-1]), gamma[n-1] = its length.
/// lambda0 is the bottom of the spectrum. Even n comes from the periodic
/// problem, odd n from the semiperiodic one.
struct SpectralResult {
    double lambda0 = 0.0;
    std::vector<double> minus;
    std::vector<double> plus;
    std::vector<double> gamma;
    int truncation = 0;               // largest Fourier-Galerkin size used
    bool extrapolated = false;
    bool extrapolation_fallback = false;  // differences non-monotone somewhere
    double fit_order = 0.0;           // observed convergence order (median)
    bool interlacing_ok = true;
    double max_interlacing_violation = 0.0;  // relative overlap, 0 if none

    int n_max() const { return static_cast<int>(gamma.size()); }
};

/// (2M+1) x (2M+1) Fourier-Galerkin matrix of the periodic problem:
/// rows/columns indexed by m = -M..M, entry (m, j) = q_hat(m - j), diagonal
/// shifted by (2 pi m)^2. Hermitian for real q.
Eigen::MatrixXcd build_periodic_matrix(const FourierSequence& q, int M);

/// 2M x 2M matrix of the semiperiodic problem, modes m = -M..M-1 with
/// diagonal (pi (2m + 1))^2 and the same off-diagonal coupling.
Eigen::MatrixXcd build_semiperiodic_matrix(const FourierSequence& q, int M);

/// Solve both truncated problems at size M and pair sorted eigenvalues into
/// gap endpoints. The tracked mean of q is added to every endpoint.
/// Gaps below the collapse threshold (1e-10 relative) are snapped to zero.
/// Interlacing of the two eigenvalue families is checked, not enforced:
/// violations beyond 1e-9 relative set interlacing_ok = false.
/// Requires hermitian q, M >= 1, and 1 <= n_max <= M/2.
SpectralResult spectral_endpoints(const FourierSequence& q, int M, int n_max);

struct GapInterval {
    double lambda_minus = 0.0;
    double lambda_plus = 0.0;
    double gamma = 0.0;
};

/// Floquet discriminant of the Kronig-Penney operator with coupling alpha:
/// Delta(lambda) = 2 cos(sqrt(lambda)) + alpha sin(sqrt(lambda))/sqrt(lambda),
/// continued through lambda <= 0 via hyperbolic functions.
double kronig_penney_discriminant(double lambda, double alpha);

/// First n_max gaps of the Kronig-Penney operator from the discriminant:
/// one endpoint of gap n is exactly (pi n)^2, the other is the bisection root
/// of (-1)^n Delta(lambda) = 2 adjacent to it. Independent of the Galerkin
/// solver; used as its oracle. Requires tol > 0.
std::vector<GapInterval> kronig_penney_gaps(double alpha, int n_max, double tol);

/// Solve at each size in M_list (strictly increasing, each >= 2*n_max, at
/// least 3 entries) and accelerate every endpoint with Aitken's delta-squared
/// applied to the last three values. Non-monotone difference patterns fall
/// back to the largest-M value and set extrapolation_fallback. fit_order is
/// the median of log(d1/d2)/log(M3/M2) over endpoints where it is defined.
SpectralResult richardson_extrapolate(const FourierSequence& q, int n_max,
                                      const std::vector<int>& M_list);

} // namespace hillgap
