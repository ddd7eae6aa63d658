#include "hddlogic/logic.hpp"

#include <algorithm>
#include <string>

#include "hddlogic/errors.hpp"

namespace hddlogic {

namespace {

void require_same_width(const Word& a, const Word& b) {
    if (a.size() != b.size())
        throw InvalidArgument("operand widths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

StageTrace elementary(const Word& a, const Word& b, Polarity b_polarity, DetectMode mode, const PipelineConfig& cfg) {
    DetectorConfig det{cfg.theta_low, cfg.theta_high, mode};
    det.validate();
    TrainSpec spec_a{Polarity::Positive, cfg.guard, std::nullopt};
    TrainSpec spec_b{b_polarity, cfg.guard, std::nullopt};

    StageTrace st{run_superimposition(cfg.medium, a, spec_a, b, spec_b, cfg.shaping), {}, {}, mode, {}};
    st.events = cfg.shaping ? detect_peaks_shaped(st.run.signal, det) : detect_peaks(st.run.signal, det);
    st.flags = window_flags(st.events, a.size(), cfg.guard, mode);
    st.result = decode_word(st.flags);
    return st;
}

}  // namespace

std::string_view gate_name(Gate g) {
    switch (g) {
        case Gate::Or: return "or";
        case Gate::And: return "and";
        case Gate::Xor: return "xor";
        case Gate::XorNeg: return "xorneg";
        case Gate::Not: return "not";
        case Gate::Nand: return "nand";
        case Gate::Nor: return "nor";
        case Gate::Xnor: return "xnor";
    }
    return "?";
}

Gate parse_gate(std::string_view name) {
    for (Gate g : {Gate::Or, Gate::And, Gate::Xor, Gate::XorNeg, Gate::Not, Gate::Nand, Gate::Nor, Gate::Xnor})
        if (gate_name(g) == name) return g;
    throw InvalidArgument("unknown gate '" + std::string(name) + "'");
}

GateRun run_gate(Gate gate, const Word& a, const std::optional<Word>& b, const PipelineConfig& cfg) {
    if (is_unary(gate)) {
        if (b) throw InvalidArgument("not takes a single operand");
    } else {
        if (!b) throw InvalidArgument(std::string(gate_name(gate)) + " needs two operands");
        require_same_width(a, *b);
    }

    GateRun run;
    auto push = [&run](StageTrace st) {
        run.result = st.result;
        run.stages.push_back(std::move(st));
    };
    switch (gate) {
        case Gate::Or: push(elementary(a, *b, Polarity::Positive, DetectMode::Any, cfg)); break;
        case Gate::And: push(elementary(a, *b, Polarity::Positive, DetectMode::LargeOnly, cfg)); break;
        case Gate::Xor: push(elementary(a, *b, Polarity::Positive, DetectMode::MediumOnly, cfg)); break;
        case Gate::XorNeg: push(elementary(a, *b, Polarity::Negative, DetectMode::Any, cfg)); break;
        case Gate::Not: push(elementary(a, Word::ones(a.size()), Polarity::Negative, DetectMode::Any, cfg)); break;
        case Gate::Nand:
        case Gate::Nor:
        case Gate::Xnor: {
            const Gate inner = gate == Gate::Nand ? Gate::And : gate == Gate::Nor ? Gate::Or : Gate::Xor;
            auto first = run_gate(inner, a, b, cfg);
            // The intermediate word is recorded again for the NOT stage.
            auto second = run_gate(Gate::Not, first.result, std::nullopt, cfg);
            for (auto& st : first.stages) push(std::move(st));
            for (auto& st : second.stages) push(std::move(st));
            break;
        }
    }
    return run;
}

Word gate_or(const Word& a, const Word& b, const PipelineConfig& cfg) { return run_gate(Gate::Or, a, b, cfg).result; }
Word gate_and(const Word& a, const Word& b, const PipelineConfig& cfg) { return run_gate(Gate::And, a, b, cfg).result; }
Word gate_xor(const Word& a, const Word& b, const PipelineConfig& cfg) { return run_gate(Gate::Xor, a, b, cfg).result; }
Word gate_xor_neg(const Word& a, const Word& b, const PipelineConfig& cfg) {
    return run_gate(Gate::XorNeg, a, b, cfg).result;
}
Word gate_not(const Word& a, const PipelineConfig& cfg) { return run_gate(Gate::Not, a, std::nullopt, cfg).result; }

Word gate_composed(Gate kind, const Word& a, const Word& b, const PipelineConfig& cfg) {
    if (!is_composed(kind)) throw InvalidArgument("gate_composed takes nand, nor or xnor");
    return run_gate(kind, a, b, cfg).result;
}

Word left_shift(const Word& w) {
    auto bits = w.bits();
    bits.push_back(0);
    return Word(std::move(bits));
}

AddResult add(const Word& a, const Word& b, const PipelineConfig& cfg) {
    const std::size_t width = std::max(a.size(), b.size());
    Word x = a.padded(width);
    Word y = b.padded(width);

    AddResult out;
    while (true) {
        if (++out.iterations > static_cast<int>(width) + 1)
            throw NonterminationError("adder did not settle within " + std::to_string(width + 1) + " iterations");
        const std::size_t w = std::max(x.size(), y.size());
        x = x.padded(w);
        y = y.padded(w);
        Word sum = gate_xor(x, y, cfg);
        Word carry = gate_and(x, y, cfg);
        x = std::move(sum);
        if (carry.all_zero()) break;
        y = left_shift(carry);
    }

    const auto& bits = x.bits();
    auto first_one = std::find(bits.begin(), bits.end(), std::uint8_t{1});
    if (first_one == bits.end()) first_one = bits.end() - 1;
    out.sum = Word(std::vector<std::uint8_t>(first_one, bits.end()));
    return out;
}

Word boolean_oracle(Gate gate, const Word& a, const std::optional<Word>& b) {
    if (is_unary(gate)) {
        if (b) throw InvalidArgument("not takes a single operand");
    } else {
        if (!b) throw InvalidArgument(std::string(gate_name(gate)) + " needs two operands");
        require_same_width(a, *b);
    }
    std::vector<std::uint8_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool x = a[i];
        const bool y = b ? (*b)[i] != 0 : false;
        bool r = false;
        switch (gate) {
            case Gate::Or: r = x || y; break;
            case Gate::And: r = x && y; break;
            case Gate::Xor:
            case Gate::XorNeg: r = x != y; break;
            case Gate::Not: r = !x; break;
            case Gate::Nand: r = !(x && y); break;
            case Gate::Nor: r = !(x || y); break;
            case Gate::Xnor: r = x == y; break;
        }
        out[i] = r ? 1 : 0;
    }
    return Word(std::move(out));
}

}  // namespace hddlogic
