#include "hddlogic/channel.hpp"

#include <string>

#include "hddlogic/errors.hpp"
#include "hddlogic/rng.hpp"

namespace hddlogic {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string sign_string(const std::vector<std::int8_t>& signs) {
    std::string s;
    s.reserve(signs.size());
    for (auto v : signs) s.push_back(v > 0 ? '+' : '-');
    return s;
}

}  // namespace

Track::Track(Medium medium, std::size_t bit_count, int guard)
    : medium_(std::move(medium)), guard_(guard), bit_count_(bit_count) {
    validate(medium_);
    if (bit_count < 1) throw GeometryError("track needs at least one bit window");
    if (guard < 1) throw GeometryError("guard cells must be >= 1");

    const std::size_t n = train_length(bit_count, guard);
    cells_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto* lm = std::get_if<LongitudinalMedium>(&medium_)) {
            if (lm->mode == MediumMode::MonteCarlo)
                cells_.emplace_back(sample_ensemble(lm->particles_per_cell, derive_seed(lm->seed, i)));
            else
                cells_.emplace_back(AnalyticCell{});
        } else {
            cells_.emplace_back(PerpendicularState{});
        }
    }
}

Track Track::from_recorded(Medium medium, std::vector<double> magnetizations, int guard,
                           std::vector<PassRecord> pass_log) {
    if (guard < 1) throw GeometryError("guard cells must be >= 1");
    const std::size_t n = magnetizations.size();
    const auto window = static_cast<std::size_t>(1 + guard);
    if (n < 3 || (n - 2) % window != 0)
        throw GeometryError(std::to_string(n) + " cells do not fit guard " + std::to_string(guard));
    Track t;
    t.medium_ = std::move(medium);
    t.guard_ = guard;
    t.bit_count_ = (n - 2) / window;
    t.cells_.reserve(n);
    for (double m : magnetizations) t.cells_.emplace_back(RecordedCell{m});
    t.pass_log_ = std::move(pass_log);
    t.writable_ = false;
    return t;
}

double Track::magnetization(std::size_t cell) const {
    return std::visit(overloaded{
                          [](const AnalyticCell& c) { return c.magnetization(); },
                          [](const ParticleEnsemble& e) { return net_magnetization(e); },
                          [](const PerpendicularState& p) { return p.magnetization(); },
                          [](const RecordedCell& r) { return r.magnetization; },
                      },
                      cells_.at(cell));
}

std::vector<double> Track::magnetizations() const {
    std::vector<double> m(cells_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = magnetization(i);
    return m;
}

void write_pass(Track& track, const PulseTrain& train) {
    if (!track.writable_) throw GeometryError("track restored from an image has no microstate to write");
    if (train.signs.size() != track.cells_.size())
        throw GeometryError("pulse train has " + std::to_string(train.signs.size()) + " half-cells, track has " +
                            std::to_string(track.cells_.size()));
    if (train.guard != track.guard_) throw GeometryError("pulse train guard does not match track guard");
    if (!(train.amplitude >= 0.0)) throw InvalidArgument("field amplitude must be non-negative");

    const double h = train.amplitude;
    for (std::size_t i = 0; i < track.cells_.size(); ++i) {
        const Direction d = direction_from_sign(train.signs[i]);
        std::visit(overloaded{
                       [&](AnalyticCell& c) { c.apply(h, d); },
                       [&](ParticleEnsemble& e) { apply_field(e, h, d); },
                       [&](PerpendicularState& p) {
                           p = perpendicular_apply_field(p, h, d, std::get<PerpendicularMedium>(track.medium_));
                       },
                       [](RecordedCell&) {},
                   },
                   track.cells_[i]);
    }
    track.pass_log_.push_back(PassRecord{h, sign_string(train.signs)});
}

ReadbackSignal read_ideal(const Track& track) {
    const auto m = track.magnetizations();
    ReadbackSignal signal;
    signal.transitions.resize(m.size() - 1);
    for (std::size_t i = 0; i + 1 < m.size(); ++i) signal.transitions[i] = m[i + 1] - m[i];
    return signal;
}

double lorentzian(double offset, double pw50) {
    const double u = 2.0 * offset / pw50;
    return 1.0 / (1.0 + u * u);
}

ReadbackSignal read_shaped(const Track& track, const ShapingConfig& shaping) {
    if (!(shaping.pw50 > 0.0)) throw InvalidArgument("pw50 must be positive");
    if (shaping.samples_per_cell < 4) throw InvalidArgument("need at least 4 samples per cell");

    ReadbackSignal signal = read_ideal(track);
    const std::size_t count = track.cell_count() * shaping.samples_per_cell + 1;
    const double step = 1.0 / static_cast<double>(shaping.samples_per_cell);

    std::vector<Sample> wave(count);
    for (std::size_t s = 0; s < count; ++s) {
        const double x = static_cast<double>(s) * step;
        double v = 0.0;
        for (std::size_t i = 0; i < signal.transitions.size(); ++i) {
            const double dm = signal.transitions[i];
            if (dm != 0.0) v += dm * lorentzian(x - transition_position(i), shaping.pw50);
        }
        wave[s] = Sample{x, v};
    }
    signal.waveform = std::move(wave);
    return signal;
}

Superimposition run_superimposition(const Medium& medium, const Word& a, const TrainSpec& spec_a, const Word& b,
                                    const TrainSpec& spec_b, const std::optional<ShapingConfig>& shaping) {
    validate(medium);
    if (spec_a.guard != spec_b.guard) throw GeometryError("operands use different guard parameters");
    if (a.size() != b.size())
        throw GeometryError("operand widths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));

    const double erase = erase_field(medium);
    const double amp_a = spec_a.amplitude.value_or(erase);
    if (amp_a < erase)
        throw WeakEraseError("first pass amplitude " + std::to_string(amp_a) + " is below the erase field " +
                             std::to_string(erase));
    const double amp_b = spec_b.amplitude.value_or(superimpose_field(medium));

    Superimposition out{Track(medium, a.size(), spec_a.guard), {}, to_pulse_train(a, spec_a.polarity, spec_a.guard, amp_a),
                        to_pulse_train(b, spec_b.polarity, spec_b.guard, amp_b)};
    write_pass(out.track, out.train_a);
    write_pass(out.track, out.train_b);
    out.signal = shaping ? read_shaped(out.track, *shaping) : read_ideal(out.track);
    return out;
}

}  // namespace hddlogic
