#include "hillgap/fourier_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hillgap {

namespace {

bool check_hermitian(const std::vector<cplx>& v, int N) {
    if (v[static_cast<std::size_t>(N)].imag() != 0.0) return false;
    for (int k = 1; k <= N; ++k) {
        const cplx& p = v[static_cast<std::size_t>(N + k)];
        const cplx& m = v[static_cast<std::size_t>(N - k)];
        if (m != std::conj(p)) return false;
    }
    return true;
}

} // namespace

FourierSequence FourierSequence::from_one_sided(const std::vector<cplx>& positive,
                                                double mean) {
    const int N = static_cast<int>(positive.size());
    FourierSequence q;
    q.half_width_ = N;
    q.mean_ = mean;
    q.hermitian_ = true;
    q.values_.assign(static_cast<std::size_t>(2 * N + 1), cplx{0.0, 0.0});
    for (int k = 1; k <= N; ++k) {
        q.values_[static_cast<std::size_t>(N + k)] = positive[static_cast<std::size_t>(k - 1)];
        q.values_[static_cast<std::size_t>(N - k)] = std::conj(positive[static_cast<std::size_t>(k - 1)]);
    }
    return q;
}

FourierSequence FourierSequence::from_two_sided(std::vector<cplx> values, int half_width,
                                                double mean) {
    if (half_width < 0)
        throw std::invalid_argument("fourier_sequence: negative half_width");
    if (values.size() != static_cast<std::size_t>(2 * half_width + 1))
        throw std::invalid_argument("fourier_sequence: values size must be 2*half_width+1");
    FourierSequence q;
    q.half_width_ = half_width;
    q.mean_ = mean;
    q.hermitian_ = check_hermitian(values, half_width);
    q.values_ = std::move(values);
    return q;
}

FourierSequence FourierSequence::with_mean(double m) const {
    FourierSequence q = *this;
    q.mean_ = m;
    return q;
}

FourierSequence FourierSequence::reflected() const {
    FourierSequence q = *this;
    std::reverse(q.values_.begin(), q.values_.end());
    return q;
}

FourierSequence FourierSequence::scaled(double c) const {
    FourierSequence q = *this;
    for (cplx& v : q.values_) v *= c;
    q.mean_ *= c;
    return q;
}

double sobolev_norm(const FourierSequence& q, double s) {
    const int N = q.half_width();
    double acc = 0.0;
    for (int k = -N; k <= N; ++k) {
        const double w = std::pow(1.0 + 2.0 * std::abs(k), s);
        acc += w * w * std::norm(q.at(k));
    }
    return std::sqrt(acc);
}

double sobolev_norm_one_sided(const FourierSequence& q, double s) {
    const int N = q.half_width();
    double acc = 0.0;
    for (int k = 1; k <= N; ++k) {
        const double w = std::pow(1.0 + 2.0 * k, s);
        acc += w * w * std::norm(q.at(k));
    }
    return std::sqrt(acc);
}

} // namespace hillgap
