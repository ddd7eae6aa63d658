#pragma once

#include <cstddef>
#include <vector>

#include "hddlogic/channel.hpp"
#include "hddlogic/encode.hpp"

namespace hddlogic {

enum class PeakClass { Medium, Large };

// ANY: simple peak detector. LARGE_ONLY: only 2M transitions.
// MEDIUM_ONLY: only M transitions, 2M treated as no signal.
enum class DetectMode { Any, LargeOnly, MediumOnly };

struct PeakEvent {
    std::size_t boundary_index = 0;   // readback transition index
    double amplitude = 0.0;           // signed, units of M
    PeakClass cls = PeakClass::Medium;
};

struct DetectorConfig {
    double theta_low = 0.5;
    double theta_high = 1.5;
    DetectMode mode = DetectMode::Any;

    void validate() const;
};

struct FlagPair {
    int start = 0;
    int mid = 0;

    friend bool operator==(const FlagPair&, const FlagPair&) = default;
};

/// One event per transition with |dm| >= theta_low, classified against theta_high.
std::vector<PeakEvent> detect_peaks(const ReadbackSignal& signal, const DetectorConfig& cfg = {});

/**
 * Peaks taken from the sampled Lorentzian waveform instead of the exact
 * transition list. Local extrema of |V| above theta_low are attributed to the
 * nearest transition position. The isolated unit pulse peaks at 1, so no
 * further amplitude rescaling is applied. Reliable while pw50 <= 1 half-cell.
 */
std::vector<PeakEvent> detect_peaks_shaped(const ReadbackSignal& signal, const DetectorConfig& cfg = {});

std::vector<FlagPair> window_flags(const std::vector<PeakEvent>& events, std::size_t bit_count, int guard,
                                   DetectMode mode);

/// (1,1) -> 1, (0,0) -> 0; a mixed pair throws DesyncError.
Word decode_word(const std::vector<FlagPair>& flags);

}  // namespace hddlogic
