#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hddlogic/channel.hpp"
#include "hddlogic/detector.hpp"
#include "hddlogic/encode.hpp"
#include "hddlogic/medium.hpp"

namespace hddlogic {

enum class Gate { Or, And, Xor, XorNeg, Not, Nand, Nor, Xnor };

std::string_view gate_name(Gate g);
/// Accepts the CLI spellings: or, and, xor, xorneg, not, nand, nor, xnor.
Gate parse_gate(std::string_view name);
constexpr bool is_unary(Gate g) noexcept { return g == Gate::Not; }
constexpr bool is_composed(Gate g) noexcept { return g == Gate::Nand || g == Gate::Nor || g == Gate::Xnor; }

/// Everything the physical pipeline needs besides the operands.
struct PipelineConfig {
    Medium medium = LongitudinalMedium{};
    int guard = 1;
    double theta_low = 0.5;
    double theta_high = 1.5;
    std::optional<ShapingConfig> shaping;   // detect on the Lorentzian waveform when set
};

/// One superimpose-read-decode cycle (an elementary operation).
struct StageTrace {
    Superimposition run;
    std::vector<PeakEvent> events;
    std::vector<FlagPair> flags;
    DetectMode mode = DetectMode::Any;
    Word result;
};

struct GateRun {
    Word result;
    std::vector<StageTrace> stages;
};

GateRun run_gate(Gate gate, const Word& a, const std::optional<Word>& b, const PipelineConfig& cfg = {});

Word gate_or(const Word& a, const Word& b, const PipelineConfig& cfg = {});
Word gate_and(const Word& a, const Word& b, const PipelineConfig& cfg = {});
Word gate_xor(const Word& a, const Word& b, const PipelineConfig& cfg = {});
Word gate_xor_neg(const Word& a, const Word& b, const PipelineConfig& cfg = {});
Word gate_not(const Word& a, const PipelineConfig& cfg = {});
Word gate_composed(Gate kind, const Word& a, const Word& b, const PipelineConfig& cfg = {});

/// Appends a 0 on the right; the word grows by one bit.
Word left_shift(const Word& w);

struct AddResult {
    Word sum;
    int iterations = 0;   // XOR/AND rounds executed
};

/// Ripple of XOR (sum) and AND (carry) rounds until the carry word is zero.
AddResult add(const Word& a, const Word& b, const PipelineConfig& cfg = {});

/// Bitwise evaluation with no physics.
Word boolean_oracle(Gate gate, const Word& a, const std::optional<Word>& b = std::nullopt);

}  // namespace hddlogic
