#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "photon_bell/emitter_model.hpp"

using namespace photon_bell;

TEST_SUITE("emitter_model") {

TEST_CASE("build_chain splits into a contiguous minus prefix") {
    const EmitterChain two = build_chain(2);
    CHECK(two.group_minus() == std::vector<int>{1});
    CHECK(two.group_plus() == std::vector<int>{2});

    const EmitterChain three = build_chain(3);
    CHECK(three.group_minus() == std::vector<int>{1});
    CHECK(three.group_plus() == std::vector<int>{2, 3});

    const EmitterChain four = build_chain(4);
    CHECK(four.group_minus() == std::vector<int>{1, 2});
    CHECK(four.group_plus() == std::vector<int>{3, 4});
}

TEST_CASE("build_chain rejects fewer than two emitters") {
    CHECK_THROWS_AS(build_chain(1), std::invalid_argument);
    CHECK_THROWS_AS(build_chain(0), std::invalid_argument);
    CHECK_THROWS_AS(build_chain(-3), std::invalid_argument);
}

TEST_CASE("group sizes partition 1..N and differ by N mod 2") {
    for (int n = 2; n <= 64; ++n) {
        const EmitterChain c(n);
        const auto minus = c.group_minus();
        const auto plus = c.group_plus();
        CHECK(static_cast<int>(minus.size() + plus.size()) == n);
        CHECK(static_cast<int>(plus.size() - minus.size()) == n % 2);
        for (int i = 1; i <= n; ++i) {
            const bool in_minus = i <= static_cast<int>(minus.size());
            CHECK(c.in_minus_group(i) == in_minus);
        }
        CHECK(c.pair_count() == n * (n - 1) / 2);
    }
    CHECK_THROWS_AS(EmitterChain(4).in_minus_group(5), std::out_of_range);
    CHECK_THROWS_AS(EmitterChain(4).in_minus_group(0), std::out_of_range);
}

TEST_CASE("phase_from_geometry") {
    CHECK(phase_from_geometry(kTwoPi, kPi / 6) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(phase_from_geometry(3.7, 0.0) == 0.0);
    CHECK(phase_from_geometry(0.0, 1.2) == 0.0);
    CHECK(phase_from_geometry(4 * kPi, kPi / 2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(phase_from_geometry(-1.0, 0.3), std::invalid_argument);
}

TEST_CASE("phase_from_geometry is odd in theta before reduction") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> kd(0.0, 40.0);
    std::uniform_real_distribution<double> th(-kPi / 2, kPi / 2);
    for (int i = 0; i < 1000; ++i) {
        const double k = kd(rng);
        const double t = th(rng);
        const double plus = phase_from_geometry(k, t);
        const double minus = phase_from_geometry(k, -t);
        CHECK(plus >= 0.0);
        CHECK(plus < kTwoPi);
        // p(-t) = -p(t) mod 2pi
        CHECK(canonical_phase(plus + minus) == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("canonical_phase is half-open [0, 2pi)") {
    CHECK(canonical_phase(0.0) == 0.0);
    CHECK(canonical_phase(kTwoPi) == 0.0);
    CHECK(canonical_phase(-kTwoPi) == 0.0);
    CHECK(canonical_phase(-1e-300) < kTwoPi);
    CHECK(canonical_phase(-kPi / 2) == doctest::Approx(3 * kPi / 2));
    CHECK(canonical_phase(7 * kPi) == doctest::Approx(kPi));
    CHECK_THROWS(canonical_phase(std::nan("")));
}

TEST_CASE("polarizer and detector settings") {
    const PolarizerSetting p = PolarizerSetting::angle(5 * kPi / 4);
    CHECK_FALSE(p.is_removed());
    CHECK(p.theta() == doctest::Approx(kPi / 4));
    CHECK(PolarizerSetting::removed().is_removed());
    CHECK_THROWS_AS(PolarizerSetting::removed().theta(), std::logic_error);

    const DetectorSetting d(-kPi, PolarizerSetting::removed());
    CHECK(d.phase == doctest::Approx(kPi));
}

TEST_CASE("physical constants validation") {
    CHECK_NOTHROW(PhysicalConstants{}.validate());
    CHECK_NOTHROW((PhysicalConstants{0.3, 1.0}.validate()));
    CHECK_THROWS_AS((PhysicalConstants{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PhysicalConstants{1.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PhysicalConstants{1.0, 1.5}.validate()), std::invalid_argument);
}

}
