#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hddlogic/errors.hpp"
#include "hddlogic/medium.hpp"

using namespace hddlogic;

namespace {

constexpr double pi = std::numbers::pi;

double opposed_mc(double h2, std::size_t n, std::uint64_t seed) {
    auto e = sample_ensemble(n, seed);
    apply_field(e, h2, Direction::Negative);
    return net_magnetization(e);
}

}  // namespace

TEST_CASE("sample_ensemble is deterministic per seed") {
    const auto a = sample_ensemble(4, 7);
    const auto b = sample_ensemble(4, 7);
    CHECK(a.angles == b.angles);
    CHECK(a.signs == b.signs);
    CHECK(sample_ensemble(4, 8).angles != a.angles);
}

TEST_CASE("sample_ensemble single particle") {
    const auto e = sample_ensemble(1, 0);
    REQUIRE(e.size() == 1);
    CHECK(e.angles[0] > -pi / 2);
    CHECK(e.angles[0] <= pi / 2);
    CHECK(e.signs[0] == 1);
}

TEST_CASE("sample_ensemble angle moments match the uniform distribution") {
    const std::size_t n = 1'000'000;
    const auto e = sample_ensemble(n, 1);
    double sum = 0.0;
    for (double phi : e.angles) {
        REQUIRE(phi > -pi / 2);
        REQUIRE(phi <= pi / 2);
        sum += phi;
    }
    const double sigma = (pi / std::sqrt(12.0)) / std::sqrt(static_cast<double>(n));
    CHECK(std::fabs(sum / n) <= 3.0 * sigma);
}

TEST_CASE("sample_ensemble rejects an empty ensemble") {
    CHECK_THROWS_AS(sample_ensemble(0, 1), InvalidArgument);
}

TEST_CASE("threshold_angle") {
    CHECK(threshold_angle(std::sqrt(3.0) / 2.0) == doctest::Approx(pi / 6).epsilon(1e-14));
    CHECK(threshold_angle(1.0) == 0.0);
    CHECK(threshold_angle(0.5) == doctest::Approx(pi / 3).epsilon(1e-14));
    CHECK(threshold_angle(balanced_field()) == doctest::Approx(pi / 6).epsilon(1e-14));
    CHECK_THROWS_AS(threshold_angle(0.0), OutOfRange);
    CHECK_THROWS_AS(threshold_angle(-0.1), OutOfRange);
    CHECK_THROWS_AS(threshold_angle(1.0001), OutOfRange);
}

TEST_CASE("apply_field switching rule") {
    auto e = sample_ensemble(2000, 3);

    SUBCASE("saturating opposed field reverses everything") {
        apply_field(e, 1.0, Direction::Negative);
        for (auto s : e.signs) CHECK(s == -1);
        CHECK(net_magnetization(e) == -1.0);
    }
    SUBCASE("balanced opposed field reverses exactly the particles beyond pi/6") {
        const auto before = e;
        apply_field(e, balanced_field(), Direction::Negative);
        for (std::size_t i = 0; i < e.size(); ++i) {
            const bool beyond = std::cos(before.angles[i]) <= balanced_field();
            CHECK(e.signs[i] == (beyond ? -1 : 1));
        }
    }
    SUBCASE("aligned field changes nothing") {
        const auto before = e;
        apply_field(e, balanced_field(), Direction::Positive);
        CHECK(e.signs == before.signs);
    }
    SUBCASE("negative amplitude rejected") { CHECK_THROWS_AS(apply_field(e, -0.5, Direction::Negative), InvalidArgument); }
}

TEST_CASE("ensemble invariants over many pass sequences") {
    // Hand-rolled generator: random pass sequences on small ensembles.
    std::uint64_t state = 12345;
    auto next = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto e = sample_ensemble(64, static_cast<std::uint64_t>(trial));
        const int passes = 1 + static_cast<int>(next() * 4);
        for (int p = 0; p < passes; ++p)
            apply_field(e, next(), next() < 0.5 ? Direction::Negative : Direction::Positive);

        const double h = next();
        const Direction d = next() < 0.5 ? Direction::Negative : Direction::Positive;
        auto once = e;
        apply_field(once, h, d);
        auto twice = once;
        apply_field(twice, h, d);
        CHECK(twice.signs == once.signs);   // idempotence

        const double m = net_magnetization(e);
        CHECK(m >= -1.0);
        CHECK(m <= 1.0);

        auto saturated = e;
        apply_field(saturated, 1.0 + next(), d);
        CHECK(net_magnetization(saturated) == static_cast<double>(sign_of(d)));

        auto aligned = saturated;
        apply_field(aligned, next(), d);
        CHECK(aligned.signs == saturated.signs);
    }
}

TEST_CASE("net_magnetization") {
    CHECK(net_magnetization(sample_ensemble(1000, 5)) == 1.0);
    CHECK(opposed_mc(1.0, 1000, 5) == -1.0);
    CHECK(std::fabs(opposed_mc(balanced_field(), 1'000'000, 2)) <= 0.005);
    CHECK_THROWS_AS(net_magnetization(ParticleEnsemble{}), InvalidArgument);
}

TEST_CASE("remanence_after_opposed closed form") {
    CHECK(remanence_after_opposed(balanced_field()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::fabs(remanence_after_opposed(balanced_field())) <= 1e-12);
    CHECK(remanence_after_opposed(0.0) == 1.0);
    CHECK(remanence_after_opposed(1.0) == -1.0);
    CHECK(remanence_after_opposed(0.5) == doctest::Approx(0.7320508075688772).epsilon(1e-12));
    CHECK_THROWS_AS(remanence_after_opposed(-0.01), InvalidArgument);
    CHECK_THROWS_AS(remanence_after_opposed(1.01), InvalidArgument);
}

TEST_CASE("remanence closed form agrees with Monte Carlo at h2 = 0.5") {
    CHECK(std::fabs(opposed_mc(0.5, 1'000'000, 11) - remanence_after_opposed(0.5)) <= 0.005);
}

TEST_CASE("remanence is strictly decreasing on [0, 1]") {
    double prev = remanence_after_opposed(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double cur = remanence_after_opposed(i / 1000.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("balanced field") {
    CHECK(balanced_field() == std::sqrt(3.0) / 2.0);
    CHECK(balanced_field() == doctest::Approx(0.8660254).epsilon(1e-7));
}

TEST_CASE("type-1 and type-2 populations carry equal weight at the balanced field") {
    const auto e = sample_ensemble(1'000'000, 4);
    const double phi0 = threshold_angle(balanced_field());
    double type1 = 0.0;
    double total = 0.0;
    for (double phi : e.angles) {
        const double c = std::cos(phi);
        total += c;
        if (std::fabs(phi) < phi0) type1 += c;
    }
    CHECK(std::fabs(type1 / total - 0.5) <= 0.0025);
}

TEST_CASE("analytic_cell_write") {
    CHECK(analytic_cell_write(+1, +1).magnetization == 1.0);
    CHECK(analytic_cell_write(+1, -1).magnetization == 0.0);
    CHECK(analytic_cell_write(-1, +1).magnetization == 0.0);
    CHECK(analytic_cell_write(-1, -1).magnetization == -1.0);
    CHECK_THROWS_AS(analytic_cell_write(0, 1), InvalidArgument);
}

TEST_CASE("AnalyticCell reproduces the closed form and the three-state algebra exactly") {
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            AnalyticCell c;
            c.apply(1.0, direction_from_sign(s1));
            c.apply(balanced_field(), direction_from_sign(s2));
            CHECK(c.magnetization() == analytic_cell_write(s1, s2).magnetization);
        }
    for (int i = 0; i <= 10; ++i) {
        const double h2 = i / 10.0;
        AnalyticCell c;
        c.apply(h2, Direction::Negative);
        CHECK(c.magnetization() == doctest::Approx(remanence_after_opposed(h2)).epsilon(1e-14));
    }
}

TEST_CASE("AnalyticCell tracks nested partial passes") {
    AnalyticCell c;
    c.apply(0.9, Direction::Negative);
    c.apply(0.5, Direction::Positive);
    // Bands by |phi|: [0, acos .9) +, [acos .9, acos .5) -, [acos .5, pi/2] +.
    const double s9 = std::sin(std::acos(0.9));
    const double s5 = std::sin(std::acos(0.5));
    CHECK(c.magnetization() == doctest::Approx(s9 - (s5 - s9) + (1.0 - s5)).epsilon(1e-14));
    CHECK(c.segments().size() == 3);
}

TEST_CASE("perpendicular_apply_field") {
    const PerpendicularMedium pm{1.0, 0.5};
    const PerpendicularState up{};

    auto s = perpendicular_apply_field(up, pm.hk1, Direction::Negative, pm);
    CHECK(s == PerpendicularState{-1, -1});
    CHECK(s.magnetization() == -1.0);

    s = perpendicular_apply_field(up, 0.75, Direction::Negative, pm);
    CHECK(s == PerpendicularState{+1, -1});
    CHECK(s.magnetization() == 0.0);

    const PerpendicularState mixed{+1, -1};
    CHECK(perpendicular_apply_field(mixed, 0.4, Direction::Positive, pm) == mixed);
}

TEST_CASE("perpendicular three-state algebra equals the longitudinal one") {
    const PerpendicularMedium pm{2.0, 1.2};
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            auto s = perpendicular_apply_field(PerpendicularState{}, pm.hk1, direction_from_sign(s1), pm);
            s = perpendicular_apply_field(s, superimpose_field(pm), direction_from_sign(s2), pm);
            CHECK(s.magnetization() == analytic_cell_write(s1, s2).magnetization);
        }
}

TEST_CASE("medium validation") {
    CHECK_THROWS_AS(PerpendicularMedium({0.5, 1.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(PerpendicularMedium({1.0, 0.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(LongitudinalMedium({0.0}).validate(), InvalidArgument);
    LongitudinalMedium mc{1.0, MediumMode::MonteCarlo, 0};
    CHECK_THROWS_AS(mc.validate(), InvalidArgument);
    CHECK(erase_field(PerpendicularMedium{3.0, 1.0}) == 3.0);
    CHECK(superimpose_field(PerpendicularMedium{3.0, 1.0}) == 2.0);
    CHECK(erase_field(LongitudinalMedium{}) == 1.0);
}
