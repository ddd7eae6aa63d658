#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hddlogic/channel.hpp"
#include "hddlogic/logic.hpp"

namespace hddlogic {

enum class HeadType { Standard, Tandem };

HeadType parse_head(std::string_view name);

struct DriveGeometry {
    double revolutions_per_second = 100.0;
    std::uint64_t bits_per_track = 1'000'000;
    HeadType head = HeadType::Standard;

    void validate() const;
};

struct CostLedger {
    std::uint64_t rotations = 0;
    std::uint64_t operations = 0;   // elementary superimpose/read cycles
};

/// Standard head: write A, write B, read on three rotations. Tandem: one.
/// Composed gates are two elementary operations back to back.
int rotations_for_op(HeadType head, bool composed);

/// Bit operations per second: rps * bits / rotations per elementary op.
double throughput_bits_per_second(const DriveGeometry& geom);

// Track image: text, one field per line.
//
//   MAGTRACK <version>
//   guard <g>
//   cells <n>
//   medium longitudinal analytic <hk>
//        | longitudinal montecarlo <hk> <particles> <seed>
//        | perpendicular <hk1> <hk2>
//   passes <k>
//   pass <amplitude> <+/- per half-cell>      (k lines)
//   <magnetization>                            (n lines)
//
// Reals are written in shortest round-trip form, so load(save(t)) is exact.
inline constexpr int track_image_version = 1;

void save_track(const Track& track, std::ostream& out);
void save_track(const Track& track, const std::filesystem::path& path);
Track load_track(std::istream& in);
Track load_track(const std::filesystem::path& path);

struct ProgramStep {
    std::optional<Gate> gate;   // empty: addition
    Word a;
    std::optional<Word> b;

    static ProgramStep gate_step(Gate g, Word a, std::optional<Word> b = std::nullopt);
    static ProgramStep add_step(Word a, Word b);
    bool is_add() const noexcept { return !gate.has_value(); }
};

/// Parses a linear command file: `<gate|add> A [B]` per line, '#' comments.
std::vector<ProgramStep> parse_program(std::istream& in);

struct StepOutcome {
    Word result;
    std::uint64_t operations = 0;
    std::uint64_t rotations = 0;
    int adder_iterations = 0;
};

struct ProgramResult {
    std::vector<Word> results;
    std::vector<StepOutcome> steps;
    CostLedger ledger;
};

ProgramResult run_program(const DriveGeometry& geom, const PipelineConfig& cfg, const std::vector<ProgramStep>& steps);

/// Named tracks plus the running cost ledger of everything executed so far.
class VirtualDrive {
public:
    explicit VirtualDrive(DriveGeometry geom = {}, PipelineConfig cfg = {});

    const DriveGeometry& geometry() const noexcept { return geom_; }
    const PipelineConfig& pipeline() const noexcept { return cfg_; }
    const CostLedger& ledger() const noexcept { return ledger_; }

    /// Executes a gate, keeps its final track under `name`, charges the ledger.
    GateRun execute(const std::string& name, Gate gate, const Word& a, const std::optional<Word>& b = std::nullopt);
    ProgramResult run(const std::vector<ProgramStep>& steps);

    void store(const std::string& name, Track track);
    const Track& track(const std::string& name) const;
    bool has_track(const std::string& name) const { return tracks_.contains(name); }
    std::vector<std::string> track_names() const;

    void save(const std::string& name, const std::filesystem::path& path) const;
    void load(const std::string& name, const std::filesystem::path& path);

private:
    DriveGeometry geom_;
    PipelineConfig cfg_;
    CostLedger ledger_;
    std::map<std::string, Track> tracks_;
};

}  // namespace hddlogic
