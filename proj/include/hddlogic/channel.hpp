#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hddlogic/encode.hpp"
#include "hddlogic/medium.hpp"

namespace hddlogic {

/// One applied write pass: amplitude and the per-half-cell sign pattern.
struct PassRecord {
    double amplitude = 0.0;
    std::string signs;   // one '+' or '-' per half-cell

    friend bool operator==(const PassRecord&, const PassRecord&) = default;
};

// Magnetization restored from a track image. It carries no microstate, so it
// can be read but not written over.
struct RecordedCell {
    double magnetization = 0.0;
};

using CellPhysics = std::variant<AnalyticCell, ParticleEnsemble, PerpendicularState, RecordedCell>;

class Track {
public:
    /// Fresh track of `bit_count` windows, every particle at +1.
    Track(Medium medium, std::size_t bit_count, int guard);

    /// Track rebuilt from stored magnetizations (read-only physics).
    static Track from_recorded(Medium medium, std::vector<double> magnetizations, int guard,
                               std::vector<PassRecord> pass_log);

    const Medium& medium() const noexcept { return medium_; }
    int guard() const noexcept { return guard_; }
    std::size_t bit_count() const noexcept { return bit_count_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    const std::vector<PassRecord>& pass_log() const noexcept { return pass_log_; }
    bool writable() const noexcept { return writable_; }

    double magnetization(std::size_t cell) const;
    std::vector<double> magnetizations() const;

    friend void write_pass(Track& track, const PulseTrain& train);

private:
    Track() = default;

    Medium medium_;
    int guard_ = 1;
    std::size_t bit_count_ = 0;
    std::vector<CellPhysics> cells_;
    std::vector<PassRecord> pass_log_;
    bool writable_ = true;
};

void write_pass(Track& track, const PulseTrain& train);

struct Sample {
    double position = 0.0;   // half-cell units from the start of the track
    double voltage = 0.0;
};

struct ReadbackSignal {
    std::vector<double> transitions;   // transitions[i] = m[i+1] - m[i]
    std::optional<std::vector<Sample>> waveform;
};

/// Position of readback transition i (between cells i and i+1).
constexpr double transition_position(std::size_t i) noexcept { return static_cast<double>(i + 1); }

ReadbackSignal read_ideal(const Track& track);

struct ShapingConfig {
    double pw50 = 0.5;               // half-cells
    std::size_t samples_per_cell = 16;
};

/// Lorentzian readback: V(x) = sum_i dm_i / (1 + (2 (x - x_i) / pw50)^2).
ReadbackSignal read_shaped(const Track& track, const ShapingConfig& shaping = {});

/// Isolated-transition response for a unit magnetization step.
double lorentzian(double offset, double pw50);

struct TrainSpec {
    Polarity polarity = Polarity::Positive;
    int guard = 1;
    std::optional<double> amplitude;   // defaults: erase field / superimpose field
};

struct Superimposition {
    Track track;
    ReadbackSignal signal;
    PulseTrain train_a;
    PulseTrain train_b;
};

/**
 * Erasing pass with A, superimposing pass with B, then readback.
 *
 * The first pass must reach the medium's erase field. Shaped readback is
 * produced only if `shaping` is set.
 */
Superimposition run_superimposition(const Medium& medium, const Word& a, const TrainSpec& spec_a, const Word& b,
                                    const TrainSpec& spec_b, const std::optional<ShapingConfig>& shaping = {});

}  // namespace hddlogic
