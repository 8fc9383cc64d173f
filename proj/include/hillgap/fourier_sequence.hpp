#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hillgap {

using cplx = std::complex<double>;

/// Two-sided Fourier coefficient sequence q_hat(k), |k| <= half_width,
/// representing a 1-periodic potential q(x) = sum q_hat(k) e^{i 2 pi k x}.
/// Coefficients outside the stored range are implicitly zero.
/// The mean value q_hat(0) of a potential is kept out of the stored
/// sequence and tracked separately, so spectra shift exactly with it.
class FourierSequence {
public:
    FourierSequence() = default;

    /// Build a real-valued potential from one-sided data: positive[k-1] = q_hat(k)
    /// for k = 1..N. Negative coefficients follow by conjugate symmetry and
    /// q_hat(0) = 0; `mean` is the separately tracked constant term.
    static FourierSequence from_one_sided(const std::vector<cplx>& positive,
                                          double mean = 0.0);

    /// Build from a full two-sided table values[k + half_width] = q_hat(k).
    /// Hermitian symmetry is detected, not required.
    static FourierSequence from_two_sided(std::vector<cplx> values, int half_width,
                                          double mean = 0.0);

    int half_width() const { return half_width_; }
    double mean() const { return mean_; }
    bool hermitian() const { return hermitian_; }

    /// q_hat(k); zero outside the stored range.
    cplx at(int k) const {
        if (k < -half_width_ || k > half_width_) return {0.0, 0.0};
        return values_[static_cast<std::size_t>(k + half_width_)];
    }

    const std::vector<cplx>& raw() const { return values_; }

    /// Same coefficients, different constant term.
    FourierSequence with_mean(double m) const;
    /// Coefficients of q(-x), i.e. index-reversed sequence.
    FourierSequence reflected() const;
    /// Real scalar multiple c*q (mean scales too).
    FourierSequence scaled(double c) const;

private:
    std::vector<cplx> values_{cplx{0.0, 0.0}};
    int half_width_ = 0;
    double mean_ = 0.0;
    bool hermitian_ = true;
};

/// Weighted l2 norm over all of Z with weight (1+2|k|)^s:
/// ( sum_{|k|<=N} (1+2|k|)^{2s} |q_hat(k)|^2 )^{1/2}, including the k=0 slot
/// of the stored sequence (zero for potentials built from one-sided data).
double sobolev_norm(const FourierSequence& q, double s);

/// One-sided variant, summing k = 1..N only. For a real potential with zero
/// mean this is sobolev_norm/sqrt(2).
double sobolev_norm_one_sided(const FourierSequence& q, double s);

} // namespace hillgap
