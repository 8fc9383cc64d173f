#include "hillgap/seq_spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace hillgap {

TwoSidedSequence::TwoSidedSequence(int half_width) : half_width_(half_width) {
    if (half_width < 0)
        throw std::invalid_argument("seq_spaces: negative half_width");
    values_.assign(static_cast<std::size_t>(2 * half_width + 1), cplx{0.0, 0.0});
}

TwoSidedSequence::TwoSidedSequence(std::vector<cplx> values, int half_width)
    : half_width_(half_width) {
    if (half_width < 0)
        throw std::invalid_argument("seq_spaces: negative half_width");
    if (values.size() != static_cast<std::size_t>(2 * half_width + 1))
        throw std::invalid_argument("seq_spaces: values size must be 2*half_width+1");
    values_ = std::move(values);
}

TwoSidedSequence TwoSidedSequence::unit_impulse(int k, int half_width) {
    TwoSidedSequence a(half_width);
    a.set(k, cplx{1.0, 0.0});
    return a;
}

TwoSidedSequence TwoSidedSequence::from_fourier(const FourierSequence& q) {
    return TwoSidedSequence(q.raw(), q.half_width());
}

void TwoSidedSequence::set(int k, cplx v) {
    if (k < -half_width_ || k > half_width_)
        throw std::out_of_range("seq_spaces: index outside half_width");
    values_[static_cast<std::size_t>(k + half_width_)] = v;
}

double weighted_norm(const TwoSidedSequence& a, const Weight& w) {
    if (w.max_index() < a.half_width())
        throw std::invalid_argument("seq_spaces: weight prefix shorter than sequence");
    double acc = 0.0;
    for (int k = -a.half_width(); k <= a.half_width(); ++k) {
        const double om = w.at(k);
        acc += om * om * std::norm(a.at(k));
    }
    return std::sqrt(acc);
}

double power_weighted_norm(const TwoSidedSequence& a, double s) {
    double acc = 0.0;
    for (int k = -a.half_width(); k <= a.half_width(); ++k) {
        const double om = std::pow(1.0 + 2.0 * std::abs(k), s);
        acc += om * om * std::norm(a.at(k));
    }
    return std::sqrt(acc);
}

TwoSidedSequence convolve(const TwoSidedSequence& a, const TwoSidedSequence& b) {
    const int Na = a.half_width();
    const int Nb = b.half_width();
    TwoSidedSequence out(Na + Nb);
    std::vector<cplx> acc(out.raw().size(), cplx{0.0, 0.0});
    // fixed iteration order keeps the floating-point result reproducible
    for (int i = -Na; i <= Na; ++i) {
        const cplx ai = a.at(i);
        if (ai == cplx{0.0, 0.0}) continue;
        for (int j = -Nb; j <= Nb; ++j)
            acc[static_cast<std::size_t>(i + j + Na + Nb)] += ai * b.at(j);
    }
    return TwoSidedSequence(std::move(acc), Na + Nb);
}

namespace {

TwoSidedSequence family_member(RatioFamily family, double s, int N) {
    TwoSidedSequence a(N);
    for (int k = -N; k <= N; ++k) {
        const double head = std::pow(1.0 + 2.0 * std::abs(k), -s);
        const double v = (family == RatioFamily::log_damped)
                             ? head / (1.0 + std::log1p(std::abs(k)))
                             : head;
        a.set(k, cplx{v, 0.0});
    }
    return a;
}

} // namespace

std::vector<double> convolution_bound_ratio(double s, double r, double t,
                                            const std::vector<int>& sizes,
                                            RatioFamily family,
                                            std::uint64_t /*seed*/) {
    if (s < 0.0 || r < 0.0)
        throw std::invalid_argument("seq_spaces: convolution ratio needs s, r >= 0");
    if (t > std::min(s, r))
        throw std::invalid_argument("seq_spaces: convolution ratio needs t <= min(s, r)");
    if (sizes.empty())
        throw std::invalid_argument("seq_spaces: no sizes given");
    std::vector<double> ratios;
    ratios.reserve(sizes.size());
    for (int N : sizes) {
        if (N < 1) throw std::invalid_argument("seq_spaces: sizes must be >= 1");
        const TwoSidedSequence a = family_member(family, s, N);
        const TwoSidedSequence b = family_member(family, r, N);
        const double num = power_weighted_norm(convolve(a, b), t);
        const double den = power_weighted_norm(a, s) * power_weighted_norm(b, r);
        ratios.push_back(num / den);
    }
    return ratios;
}

const char* ratio_family_name(RatioFamily family) {
    return family == RatioFamily::log_damped ? "log_damped" : "witness";
}

RatioFamily ratio_family_from_name(const std::string& name) {
    if (name == "log_damped") return RatioFamily::log_damped;
    if (name == "witness") return RatioFamily::witness;
    throw std::invalid_argument("seq_spaces: unknown ratio family '" + name + "'");
}

} // namespace hillgap
