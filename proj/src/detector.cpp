#include "hddlogic/detector.hpp"

#include <cmath>
#include <string>

#include "hddlogic/errors.hpp"

namespace hddlogic {

namespace {

PeakClass classify(double amplitude, const DetectorConfig& cfg) {
    return std::fabs(amplitude) >= cfg.theta_high ? PeakClass::Large : PeakClass::Medium;
}

bool accepted(PeakClass cls, DetectMode mode) {
    switch (mode) {
        case DetectMode::Any: return true;
        case DetectMode::LargeOnly: return cls == PeakClass::Large;
        case DetectMode::MediumOnly: return cls == PeakClass::Medium;
    }
    return false;
}

}  // namespace

void DetectorConfig::validate() const {
    if (!(theta_low > 0.0) || !(theta_low < theta_high))
        throw InvalidArgument("detector thresholds must satisfy 0 < theta_low < theta_high");
}

std::vector<PeakEvent> detect_peaks(const ReadbackSignal& signal, const DetectorConfig& cfg) {
    cfg.validate();
    std::vector<PeakEvent> events;
    for (std::size_t i = 0; i < signal.transitions.size(); ++i) {
        const double dm = signal.transitions[i];
        if (std::fabs(dm) >= cfg.theta_low) events.push_back({i, dm, classify(dm, cfg)});
    }
    return events;
}

std::vector<PeakEvent> detect_peaks_shaped(const ReadbackSignal& signal, const DetectorConfig& cfg) {
    cfg.validate();
    if (!signal.waveform) throw InvalidArgument("signal has no sampled waveform");
    const auto& w = *signal.waveform;
    std::vector<PeakEvent> events;
    for (std::size_t s = 0; s < w.size(); ++s) {
        const double a = std::fabs(w[s].voltage);
        if (a < cfg.theta_low) continue;
        const double left = s > 0 ? std::fabs(w[s - 1].voltage) : 0.0;
        const double right = s + 1 < w.size() ? std::fabs(w[s + 1].voltage) : 0.0;
        // Plateau ties go to the left sample.
        if (!(a > left && a >= right)) continue;

        const long nearest = std::lround(w[s].position) - 1;
        if (nearest < 0 || static_cast<std::size_t>(nearest) >= signal.transitions.size()) continue;
        const auto boundary = static_cast<std::size_t>(nearest);
        if (!events.empty() && events.back().boundary_index == boundary) continue;
        events.push_back({boundary, w[s].voltage, classify(w[s].voltage, cfg)});
    }
    return events;
}

std::vector<FlagPair> window_flags(const std::vector<PeakEvent>& events, std::size_t bit_count, int guard,
                                   DetectMode mode) {
    const std::size_t transitions = bit_count * static_cast<std::size_t>(1 + guard) + 1;
    std::vector<int> hit(transitions, 0);
    for (const auto& e : events) {
        if (e.boundary_index >= transitions)
            throw GeometryError("peak at boundary " + std::to_string(e.boundary_index) + " is outside the track");
        if (accepted(e.cls, mode)) hit[e.boundary_index] = 1;
    }
    std::vector<FlagPair> flags(bit_count);
    for (std::size_t bit = 0; bit < bit_count; ++bit) {
        const auto [first, second] = window_boundaries(bit, bit_count, guard);
        flags[bit] = FlagPair{hit[first - 1], hit[second - 1]};
    }
    return flags;
}

Word decode_word(const std::vector<FlagPair>& flags) {
    if (flags.empty()) throw InvalidArgument("no bit windows to decode");
    std::vector<std::uint8_t> bits;
    bits.reserve(flags.size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i].start != flags[i].mid)
            throw DesyncError("window " + std::to_string(i) + " has mixed flags (" + std::to_string(flags[i].start) +
                              std::to_string(flags[i].mid) + ")");
        bits.push_back(static_cast<std::uint8_t>(flags[i].start));
    }
    return Word(std::move(bits));
}

}  // namespace hddlogic
