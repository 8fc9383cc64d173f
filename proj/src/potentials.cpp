#include "hillgap/potentials.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hillgap {

FourierSequence power_decay_potential(double s, int half_width, double amplitude,
                                      std::uint64_t seed) {
    if (half_width < 1)
        throw std::invalid_argument("potentials: power_decay needs half_width >= 1");
    std::mt19937_64 rng(seed);
    std::vector<cplx> one_sided(static_cast<std::size_t>(half_width));
    for (int k = 1; k <= half_width; ++k) {
        const double sign = (rng() >> 63) ? 1.0 : -1.0;
        const double mag = amplitude * std::pow(static_cast<double>(k), -(s + 0.51));
        one_sided[static_cast<std::size_t>(k - 1)] = cplx{sign * mag, 0.0};
    }
    return FourierSequence::from_one_sided(one_sided);
}

FourierSequence mathieu_potential(double a) {
    return FourierSequence::from_one_sided({cplx{a, 0.0}});
}

FourierSequence delta_comb_potential(double alpha, int half_width) {
    if (half_width < 1)
        throw std::invalid_argument("potentials: delta_comb needs half_width >= 1");
    std::vector<cplx> one_sided(static_cast<std::size_t>(half_width), cplx{alpha, 0.0});
    return FourierSequence::from_one_sided(one_sided, alpha);
}

FourierSequence finite_band_potential(const std::vector<cplx>& one_sided, double mean) {
    return FourierSequence::from_one_sided(one_sided, mean);
}

FourierSequence make_potential(const PotentialSpec& spec) {
    switch (spec.kind) {
    case PotentialKind::power_decay: {
        FourierSequence q =
            power_decay_potential(spec.s, spec.half_width, spec.amplitude, spec.seed);
        return spec.mean != 0.0 ? q.with_mean(spec.mean) : q;
    }
    case PotentialKind::mathieu:
        return mathieu_potential(spec.a).with_mean(spec.mean);
    case PotentialKind::delta_comb: {
        FourierSequence q = delta_comb_potential(spec.alpha, spec.half_width);
        // the comb's own mean is alpha; an explicit spec mean overrides it
        return spec.mean != 0.0 ? q.with_mean(spec.mean) : q;
    }
    case PotentialKind::finite_band:
        return finite_band_potential(spec.coeffs, spec.mean);
    }
    throw std::invalid_argument("potentials: unknown kind");
}

const char* potential_kind_name(PotentialKind kind) {
    switch (kind) {
    case PotentialKind::power_decay: return "power_decay";
    case PotentialKind::mathieu: return "mathieu";
    case PotentialKind::delta_comb: return "delta_comb";
    case PotentialKind::finite_band: return "finite_band";
    }
    return "unknown";
}

PotentialKind potential_kind_from_name(const std::string& name) {
    if (name == "power_decay") return PotentialKind::power_decay;
    if (name == "mathieu") return PotentialKind::mathieu;
    if (name == "delta_comb") return PotentialKind::delta_comb;
    if (name == "finite_band") return PotentialKind::finite_band;
    throw std::invalid_argument("potentials: unknown kind '" + name + "'");
}

} // namespace hillgap
