#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hillgap/potentials.hpp"
#include "hillgap/seq_spaces.hpp"

using namespace hillgap;

TEST_CASE("construction and indexing") {
    TwoSidedSequence a(2);
    CHECK(a.half_width() == 2);
    CHECK(a.at(1) == cplx{0.0, 0.0});
    a.set(-2, cplx{1.0, 3.0});
    CHECK(a.at(-2) == cplx{1.0, 3.0});
    CHECK(a.at(5) == cplx{0.0, 0.0});
    CHECK_THROWS_AS(a.set(3, cplx{1.0, 0.0}), std::out_of_range);
    CHECK_THROWS_AS(TwoSidedSequence({cplx{1.0, 0.0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(TwoSidedSequence(-1), std::invalid_argument);
}

TEST_CASE("from_fourier preserves entries") {
    const FourierSequence q = FourierSequence::from_one_sided({cplx{1.0, 2.0}});
    const TwoSidedSequence a = TwoSidedSequence::from_fourier(q);
    CHECK(a.half_width() == 1);
    CHECK(a.at(1) == cplx{1.0, 2.0});
    CHECK(a.at(-1) == cplx{1.0, -2.0});
}

TEST_CASE("convolving unit impulses adds their positions") {
    for (int i : {-2, 0, 1}) {
        for (int j : {-1, 0, 3}) {
            const TwoSidedSequence c =
                convolve(TwoSidedSequence::unit_impulse(i, 2),
                         TwoSidedSequence::unit_impulse(j, 3));
            CHECK(c.half_width() == 5);
            for (int k = -5; k <= 5; ++k) {
                const cplx expect = (k == i + j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
                CHECK(c.at(k) == expect);
            }
        }
    }
}

TEST_CASE("convolution matches a hand-computed product") {
    // a = (1, 2, 3) on {-1,0,1}, b = (4, 5) q: use half_width 1 with zero tail
    TwoSidedSequence a({cplx{1, 0}, cplx{2, 0}, cplx{3, 0}}, 1);
    TwoSidedSequence b({cplx{4, 0}, cplx{5, 0}, cplx{0, 0}}, 1);
    const TwoSidedSequence c = convolve(a, b);
    // polynomial multiply (1 + 2x + 3x^2)(4 + 5x) = 4 + 13x + 22x^2 + 15x^3
    CHECK(c.at(-2) == cplx{4, 0});
    CHECK(c.at(-1) == cplx{13, 0});
    CHECK(c.at(0) == cplx{22, 0});
    CHECK(c.at(1) == cplx{15, 0});
    CHECK(c.at(2) == cplx{0, 0});
}

TEST_CASE("convolution is commutative and bilinear") {
    const FourierSequence q1 = power_decay_potential(0.2, 12, 1.0, 5);
    const FourierSequence q2 = power_decay_potential(0.7, 9, 2.0, 6);
    const TwoSidedSequence a = TwoSidedSequence::from_fourier(q1);
    const TwoSidedSequence b = TwoSidedSequence::from_fourier(q2);
    const TwoSidedSequence ab = convolve(a, b);
    const TwoSidedSequence ba = convolve(b, a);
    for (int k = -21; k <= 21; ++k) {
        CHECK(std::abs(ab.at(k) - ba.at(k)) <= 1e-14 * (1.0 + std::abs(ab.at(k))));
    }
    TwoSidedSequence a2(a.half_width());
    for (int k = -12; k <= 12; ++k) a2.set(k, 2.0 * a.at(k));
    const TwoSidedSequence a2b = convolve(a2, b);
    for (int k = -21; k <= 21; ++k)
        CHECK(std::abs(a2b.at(k) - 2.0 * ab.at(k)) <= 1e-14 * (1.0 + std::abs(ab.at(k))));
}

TEST_CASE("weighted norms") {
    const TwoSidedSequence d = TwoSidedSequence::unit_impulse(3, 4);
    CHECK(power_weighted_norm(d, 0.5) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
    CHECK(power_weighted_norm(d, 0.0) == 1.0);

    const Weight w = power_weight(0.5, 4);
    CHECK(weighted_norm(d, w) == doctest::Approx(power_weighted_norm(d, 0.5)).epsilon(1e-15));

    const TwoSidedSequence wide = TwoSidedSequence::unit_impulse(0, 10);
    CHECK_THROWS_AS(weighted_norm(wide, w), std::invalid_argument);

    // norm ignores nothing: hermitian pair counts twice
    const TwoSidedSequence pair =
        TwoSidedSequence::from_fourier(FourierSequence::from_one_sided({cplx{1.0, 0.0}}));
    CHECK(power_weighted_norm(pair, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("ratio preconditions") {
    CHECK_THROWS_AS(convolution_bound_ratio(-0.1, 1.0, 0.0, {8}, RatioFamily::log_damped),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolution_bound_ratio(1.0, -1.0, 0.0, {8}, RatioFamily::log_damped),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolution_bound_ratio(1.0, 1.0, 1.5, {8}, RatioFamily::log_damped),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolution_bound_ratio(1.0, 1.0, 0.0, {}, RatioFamily::log_damped),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolution_bound_ratio(1.0, 1.0, 0.0, {0}, RatioFamily::log_damped),
                    std::invalid_argument);
}

TEST_CASE("ratio families behave as designed at small sizes") {
    const std::vector<int> sizes = {16, 32, 64, 128};
    const std::vector<double> damped =
        convolution_bound_ratio(1.0, 1.0, 0.0, sizes, RatioFamily::log_damped);
    REQUIRE(damped.size() == sizes.size());
    for (double r : damped) {
        CHECK(r > 0.0);
        CHECK(std::isfinite(r));
    }
    // rerunning is bit-identical
    CHECK(damped == convolution_bound_ratio(1.0, 1.0, 0.0, sizes, RatioFamily::log_damped));

    // witness family at the failing endpoint grows monotonically
    const std::vector<double> wit =
        convolution_bound_ratio(0.0, 0.0, 0.0, sizes, RatioFamily::witness);
    for (std::size_t i = 1; i < wit.size(); ++i) CHECK(wit[i] > wit[i - 1]);
}

TEST_CASE("family name round trip") {
    CHECK(ratio_family_from_name("log_damped") == RatioFamily::log_damped);
    CHECK(ratio_family_from_name("witness") == RatioFamily::witness);
    CHECK(ratio_family_name(RatioFamily::witness) == std::string("witness"));
    CHECK_THROWS_AS(ratio_family_from_name("bogus"), std::invalid_argument);
}
