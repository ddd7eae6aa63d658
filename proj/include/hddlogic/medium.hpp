#pragma once

// Recording medium models.
//
// Longitudinal medium: identical uniaxial particles whose easy axes are spread
// uniformly in the disk plane, at angle phi from the track direction. A
// particle opposing an applied field of normalized amplitude h = H / H_K
// reverses iff h >= cos(phi). Each particle contributes cos(phi) to the
// track-axis magnetization; values are normalized so that the saturated
// state is exactly +/-1 (the unit M).
//
// Perpendicular medium: two equal-weight populations with anisotropy fields
// hk1 > hk2. Fields are kept in absolute units there.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace hddlogic {

enum class Direction : int { Negative = -1, Positive = +1 };

constexpr int sign_of(Direction d) noexcept { return static_cast<int>(d); }
Direction direction_from_sign(int sign);

struct ParticleEnsemble {
    std::vector<double> angles;       // easy-axis angle, (-pi/2, pi/2]
    std::vector<std::int8_t> signs;   // +1 / -1 projection on the track axis
    std::uint64_t seed = 0;

    std::size_t size() const noexcept { return angles.size(); }
};

struct CellState {
    double magnetization = 0.0;   // units of M, in [-1, +1]
};

enum class MediumMode { Analytic, MonteCarlo };

struct LongitudinalMedium {
    double hk = 1.0;
    MediumMode mode = MediumMode::Analytic;
    std::size_t particles_per_cell = 10000;
    std::uint64_t seed = 1;

    void validate() const;
};

struct PerpendicularMedium {
    double hk1 = 1.0;
    double hk2 = 0.5;

    static constexpr double population_weight = 0.5;

    void validate() const;
};

using Medium = std::variant<LongitudinalMedium, PerpendicularMedium>;

void validate(const Medium& medium);

// Amplitude a first (erasing) pass must reach: 1 for longitudinal (normalized),
// hk1 for perpendicular.
double erase_field(const Medium& medium);
// Default amplitude of the superimposing pass: the balanced field for
// longitudinal, the midpoint of [hk2, hk1) for perpendicular.
double superimpose_field(const Medium& medium);

ParticleEnsemble sample_ensemble(std::size_t n, std::uint64_t seed);

/// Easy-axis angle phi0 = arccos(h2) separating retained and reversed particles.
double threshold_angle(double h2);

void apply_field(ParticleEnsemble& ensemble, double h, Direction direction);
double net_magnetization(const ParticleEnsemble& ensemble);

/// Closed-form remanence of a +saturated medium after one opposed pass at h2.
double remanence_after_opposed(double h2);

/// Weak-field amplitude sqrt(3)/2 at which the opposed remanence vanishes.
constexpr double balanced_field() noexcept { return 0.86602540378443864676; }

CellState analytic_cell_write(int s1, int s2);

/**
 * Exact continuum description of one longitudinal cell.
 *
 * Because the switching rule depends only on |phi|, the state is a
 * piecewise-constant sign over |phi| in [0, pi/2]. Segment k starts at
 * `starts[k]` and runs to the next start (or pi/2). A pass of amplitude h
 * overwrites every particle with |phi| >= arccos(h).
 */
class AnalyticCell {
public:
    AnalyticCell();

    void apply(double h, Direction direction);
    double magnetization() const;

    const std::vector<std::pair<double, std::int8_t>>& segments() const noexcept { return segments_; }

private:
    std::vector<std::pair<double, std::int8_t>> segments_;
};

struct PerpendicularState {
    std::int8_t sign1 = +1;
    std::int8_t sign2 = +1;

    double magnetization() const noexcept { return 0.5 * sign1 + 0.5 * sign2; }

    friend bool operator==(const PerpendicularState&, const PerpendicularState&) = default;
};

PerpendicularState perpendicular_apply_field(PerpendicularState state, double h_absolute,
                                             Direction direction, const PerpendicularMedium& medium);

}  // namespace hddlogic
