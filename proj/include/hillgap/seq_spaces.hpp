#pragma once

#include <cstdint>
#include <vector>

#include "hillgap/fourier_sequence.hpp"
#include "hillgap/weights.hpp"

namespace hillgap {

/// Plain two-sided complex sequence a(k), |k| <= half_width, with no
/// symmetry assumptions. Entries outside the stored range are zero.
class TwoSidedSequence {
public:
    explicit TwoSidedSequence(int half_width);
    TwoSidedSequence(std::vector<cplx> values, int half_width);

    static TwoSidedSequence unit_impulse(int k, int half_width);
    static TwoSidedSequence from_fourier(const FourierSequence& q);

    int half_width() const { return half_width_; }

    cplx at(int k) const {
        if (k < -half_width_ || k > half_width_) return {0.0, 0.0};
        return values_[static_cast<std::size_t>(k + half_width_)];
    }

    void set(int k, cplx v);

    const std::vector<cplx>& raw() const { return values_; }

private:
    std::vector<cplx> values_;
    int half_width_ = 0;
};

/// ( sum_{|k| <= N} omega(k)^2 |a(k)|^2 )^{1/2} with the even extension of w.
/// Requires w.max_index() >= a.half_width().
double weighted_norm(const TwoSidedSequence& a, const Weight& w);

/// Same norm with omega(k) = (1 + 2|k|)^s, no prefix-length restriction.
double power_weighted_norm(const TwoSidedSequence& a, double s);

/// Exact discrete convolution (a*b)(k) = sum_j a(j) b(k-j), computed by the
/// O(N^2) direct sum; result half_width is the sum of the operands'.
TwoSidedSequence convolve(const TwoSidedSequence& a, const TwoSidedSequence& b);

enum class RatioFamily {
    log_damped,  // a(k) = (1+2|k|)^{-s} / (1 + log(1+|k|)): |.|_{h^s} grows ~ sqrt(log)
    witness      // a(k) = (1+2|k|)^{-s}: just outside h^s, ratio blows up at t=0
};

/// For each N in sizes, build the family pair at exponents (s, r), convolve,
/// and return |a*b|_{h^t} / (|a|_{h^s} |b|_{h^r}). Bounded spread over N is
/// the numerical signature of the convolution inequality h^s * h^r -> h^t;
/// the witness family shows the t = s + r - 1/2 endpoint failing.
/// Preconditions: s, r >= 0 and t <= min(s, r). `seed` is reserved for
/// randomized families and unused by the two deterministic ones.
std::vector<double> convolution_bound_ratio(double s, double r, double t,
                                            const std::vector<int>& sizes,
                                            RatioFamily family,
                                            std::uint64_t seed = 0);

const char* ratio_family_name(RatioFamily family);
RatioFamily ratio_family_from_name(const std::string& name);

} // namespace hillgap
