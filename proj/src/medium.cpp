#include "hddlogic/medium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hddlogic/errors.hpp"
#include "hddlogic/rng.hpp"

namespace hddlogic {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

// Angle at or above which a particle reverses under amplitude h.
double switching_angle(double h) {
    if (h >= 1.0) return 0.0;
    return std::acos(h);
}

}  // namespace

Direction direction_from_sign(int sign) {
    if (sign == 1) return Direction::Positive;
    if (sign == -1) return Direction::Negative;
    throw InvalidArgument("direction must be -1 or +1, got " + std::to_string(sign));
}

void LongitudinalMedium::validate() const {
    if (!(hk > 0.0)) throw InvalidArgument("anisotropy field hk must be positive");
    if (mode == MediumMode::MonteCarlo && particles_per_cell < 1)
        throw InvalidArgument("Monte Carlo medium needs at least one particle per cell");
}

void PerpendicularMedium::validate() const {
    if (!(hk2 > 0.0)) throw InvalidArgument("hk2 must be positive");
    if (!(hk1 > hk2)) throw InvalidArgument("perpendicular medium requires hk1 > hk2");
}

void validate(const Medium& medium) {
    std::visit([](const auto& m) { m.validate(); }, medium);
}

double erase_field(const Medium& medium) {
    if (std::holds_alternative<PerpendicularMedium>(medium))
        return std::get<PerpendicularMedium>(medium).hk1;
    return 1.0;
}

double superimpose_field(const Medium& medium) {
    if (const auto* p = std::get_if<PerpendicularMedium>(&medium)) return 0.5 * (p->hk1 + p->hk2);
    return balanced_field();
}

ParticleEnsemble sample_ensemble(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("ensemble needs at least one particle");
    ParticleRng rng(seed);
    ParticleEnsemble ensemble;
    ensemble.seed = seed;
    ensemble.angles.resize(n);
    ensemble.signs.assign(n, std::int8_t{1});
    // u in [0, 1) maps onto (-pi/2, pi/2] with u = 0 landing on +pi/2.
    for (auto& phi : ensemble.angles) phi = half_pi - std::numbers::pi * rng.uniform();
    return ensemble;
}

double threshold_angle(double h2) {
    if (!(h2 > 0.0) || h2 > 1.0)
        throw OutOfRange("threshold angle needs 0 < h2 <= 1, got " + std::to_string(h2));
    return std::acos(h2);
}

void apply_field(ParticleEnsemble& ensemble, double h, Direction direction) {
    if (!(h >= 0.0)) throw InvalidArgument("field amplitude must be non-negative");
    const auto d = static_cast<std::int8_t>(sign_of(direction));
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        if (ensemble.signs[i] != d && h >= std::cos(ensemble.angles[i])) ensemble.signs[i] = d;
    }
}

double net_magnetization(const ParticleEnsemble& ensemble) {
    if (ensemble.size() == 0) throw InvalidArgument("net magnetization of an empty ensemble");
    double projected = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const double c = std::cos(ensemble.angles[i]);
        projected += ensemble.signs[i] * c;
        total += c;
    }
    return projected / total;
}

double remanence_after_opposed(double h2) {
    if (!(h2 >= 0.0) || h2 > 1.0)
        throw InvalidArgument("remanence needs 0 <= h2 <= 1, got " + std::to_string(h2));
    // sin(acos h) rather than sqrt(1 - h^2): exact 0.5 at the balanced field.
    return 2.0 * std::sin(std::acos(h2)) - 1.0;
}

CellState analytic_cell_write(int s1, int s2) {
    direction_from_sign(s1);
    direction_from_sign(s2);
    return CellState{0.5 * s1 + 0.5 * s2};
}

AnalyticCell::AnalyticCell() : segments_{{0.0, std::int8_t{1}}} {}

void AnalyticCell::apply(double h, Direction direction) {
    if (!(h >= 0.0)) throw InvalidArgument("field amplitude must be non-negative");
    const double phi0 = switching_angle(h);
    if (phi0 >= half_pi) return;
    const auto d = static_cast<std::int8_t>(sign_of(direction));

    auto first_overwritten = std::lower_bound(segments_.begin(), segments_.end(), phi0,
                                              [](const auto& seg, double a) { return seg.first < a; });
    segments_.erase(first_overwritten, segments_.end());
    if (segments_.empty() || segments_.back().second != d) segments_.emplace_back(phi0, d);
}

double AnalyticCell::magnetization() const {
    // Mass of the band [a, b] in |phi| is sin(b) - sin(a) (cos-weighted,
    // normalized over [0, pi/2]).
    double m = 0.0;
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        const double lo = std::sin(segments_[k].first);
        const double hi = k + 1 < segments_.size() ? std::sin(segments_[k + 1].first) : 1.0;
        m += segments_[k].second * (hi - lo);
    }
    return m;
}

PerpendicularState perpendicular_apply_field(PerpendicularState state, double h_absolute,
                                             Direction direction, const PerpendicularMedium& medium) {
    if (!(h_absolute >= 0.0)) throw InvalidArgument("field amplitude must be non-negative");
    const auto d = static_cast<std::int8_t>(sign_of(direction));
    if (h_absolute >= medium.hk1) state.sign1 = d;
    if (h_absolute >= medium.hk2) state.sign2 = d;
    return state;
}

}  // namespace hddlogic
