#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hillgap/fourier_sequence.hpp"
#include "hillgap/potentials.hpp"

using namespace hillgap;

TEST_CASE("one-sided construction enforces hermitian symmetry and zero mean") {
    const FourierSequence q = FourierSequence::from_one_sided({cplx{1.0, 2.0}, cplx{0.5, 0.0}});
    CHECK(q.half_width() == 2);
    CHECK(q.hermitian());
    CHECK(q.mean() == 0.0);
    CHECK(q.at(0) == cplx{0.0, 0.0});
    CHECK(q.at(1) == cplx{1.0, 2.0});
    CHECK(q.at(-1) == cplx{1.0, -2.0});
    CHECK(q.at(2) == cplx{0.5, 0.0});
    CHECK(q.at(7) == cplx{0.0, 0.0});
    CHECK(q.at(-7) == cplx{0.0, 0.0});
}

TEST_CASE("two-sided construction detects symmetry") {
    const FourierSequence h = FourierSequence::from_two_sided(
        {cplx{2.0, -1.0}, cplx{0.0, 0.0}, cplx{2.0, 1.0}}, 1);
    CHECK(h.hermitian());
    const FourierSequence g = FourierSequence::from_two_sided(
        {cplx{2.0, 1.0}, cplx{0.0, 0.0}, cplx{3.0, 1.0}}, 1);
    CHECK_FALSE(g.hermitian());
    const FourierSequence c = FourierSequence::from_two_sided(
        {cplx{1.0, 0.0}, cplx{0.0, 0.5}, cplx{1.0, 0.0}}, 1);
    CHECK_FALSE(c.hermitian());  // nonreal center entry

    CHECK_THROWS_AS(FourierSequence::from_two_sided({cplx{1.0, 0.0}}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(FourierSequence::from_two_sided({}, -1), std::invalid_argument);
}

TEST_CASE("default sequence is the zero potential") {
    const FourierSequence q;
    CHECK(q.half_width() == 0);
    CHECK(q.hermitian());
    CHECK(q.at(0) == cplx{0.0, 0.0});
    CHECK(sobolev_norm(q, 3.0) == 0.0);
}

TEST_CASE("mean is tracked separately from coefficients") {
    const FourierSequence q =
        FourierSequence::from_one_sided({cplx{1.0, 0.0}}).with_mean(4.5);
    CHECK(q.mean() == 4.5);
    CHECK(q.at(0) == cplx{0.0, 0.0});
    CHECK(q.at(1) == cplx{1.0, 0.0});
}

TEST_CASE("reflected and scaled") {
    const FourierSequence q =
        FourierSequence::from_one_sided({cplx{1.0, 2.0}, cplx{3.0, 0.0}}).with_mean(2.0);
    const FourierSequence r = q.reflected();
    CHECK(r.at(1) == q.at(-1));
    CHECK(r.at(-2) == q.at(2));
    CHECK(r.hermitian());

    const FourierSequence s = q.scaled(-2.0);
    CHECK(s.at(1) == cplx{-2.0, -4.0});
    CHECK(s.mean() == -4.0);
    CHECK(s.hermitian());
}

TEST_CASE("sobolev norm reference values") {
    // single mode q_hat(+-1) = 1
    const FourierSequence q = FourierSequence::from_one_sided({cplx{1.0, 0.0}});
    CHECK(sobolev_norm(q, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sobolev_norm(q, 1.0) == doctest::Approx(std::sqrt(18.0)).epsilon(1e-15));
    CHECK(sobolev_norm_one_sided(q, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sobolev_norm_one_sided(q, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("two-sided norm is sqrt(2) times the one-sided norm for real potentials") {
    const FourierSequence q = power_decay_potential(0.3, 40, 1.5, 11);
    for (double s : {-0.6, 0.0, 0.8}) {
        CHECK(sobolev_norm(q, s) ==
              doctest::Approx(std::sqrt(2.0) * sobolev_norm_one_sided(q, s)).epsilon(1e-13));
    }
}

TEST_CASE("sobolev norm scales absolutely homogeneously and grows with s") {
    const FourierSequence q = power_decay_potential(0.0, 30, 1.0, 3);
    CHECK(sobolev_norm(q.scaled(-3.0), 0.5) ==
          doctest::Approx(3.0 * sobolev_norm(q, 0.5)).epsilon(1e-13));
    CHECK(sobolev_norm(q, -0.5) <= sobolev_norm(q, 0.0));
    CHECK(sobolev_norm(q, 0.0) <= sobolev_norm(q, 1.0));
}

TEST_CASE("power_decay magnitudes are exact and signs are seed-deterministic") {
    const double s = 0.25;
    const FourierSequence q1 = power_decay_potential(s, 64, 2.0, 42);
    const FourierSequence q2 = power_decay_potential(s, 64, 2.0, 42);
    const FourierSequence q3 = power_decay_potential(s, 64, 2.0, 43);
    bool signs_differ = false;
    for (int k = 1; k <= 64; ++k) {
        const double mag = 2.0 * std::pow(static_cast<double>(k), -(s + 0.51));
        CHECK(std::abs(q1.at(k)) == doctest::Approx(mag).epsilon(1e-15));
        CHECK(q1.at(k).imag() == 0.0);
        CHECK(q1.at(k) == q2.at(k));  // same seed, bit-identical
        CHECK(std::abs(std::abs(q3.at(k).real()) - mag) <= 1e-15 * mag);
        if (q3.at(k) != q1.at(k)) signs_differ = true;
    }
    CHECK(signs_differ);  // different seed flips at least one sign
    CHECK(q1.mean() == 0.0);
}

TEST_CASE("mathieu potential is the single cosine mode") {
    const FourierSequence q = mathieu_potential(1.5);
    CHECK(q.half_width() == 1);
    CHECK(q.at(1) == cplx{1.5, 0.0});
    CHECK(q.at(-1) == cplx{1.5, 0.0});
    CHECK(q.mean() == 0.0);
}

TEST_CASE("delta comb has flat coefficients and carries its mean") {
    const FourierSequence q = delta_comb_potential(-0.75, 16);
    CHECK(q.mean() == -0.75);
    for (int k = 1; k <= 16; ++k) {
        CHECK(q.at(k) == cplx{-0.75, 0.0});
        CHECK(q.at(-k) == cplx{-0.75, 0.0});
    }
    CHECK(q.at(0) == cplx{0.0, 0.0});
    CHECK(q.at(17) == cplx{0.0, 0.0});
}

TEST_CASE("make_potential dispatches and validates") {
    PotentialSpec spec;
    spec.kind = PotentialKind::power_decay;
    spec.s = 0.5;
    spec.half_width = 8;
    spec.seed = 7;
    const FourierSequence q = make_potential(spec);
    CHECK(q.half_width() == 8);

    spec.half_width = 0;
    CHECK_THROWS_AS(make_potential(spec), std::invalid_argument);

    PotentialSpec comb;
    comb.kind = PotentialKind::delta_comb;
    comb.alpha = 2.0;
    comb.half_width = 4;
    CHECK(make_potential(comb).mean() == 2.0);

    CHECK(potential_kind_from_name("mathieu") == PotentialKind::mathieu);
    CHECK_THROWS_AS(potential_kind_from_name("nope"), std::invalid_argument);
    CHECK(potential_kind_name(PotentialKind::finite_band) == std::string("finite_band"));
}
