#include "hddlogic/encode.hpp"

#include <algorithm>

#include "hddlogic/errors.hpp"

namespace hddlogic {

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw InvalidArgument("word must have at least one bit");
    for (auto b : bits_)
        if (b > 1) throw InvalidArgument("word bits must be 0 or 1");
}

Word Word::parse(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty word");
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw InvalidArgument("word '" + std::string(text) + "' is not a 0/1 string");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Word(std::move(bits));
}

Word Word::zeros(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 0)); }
Word Word::ones(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 1)); }

bool Word::all_zero() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

std::string Word::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

Word Word::padded(std::size_t width) const {
    if (width <= bits_.size()) return *this;
    std::vector<std::uint8_t> bits(width - bits_.size(), 0);
    bits.insert(bits.end(), bits_.begin(), bits_.end());
    return Word(std::move(bits));
}

Word double_bits(const Word& w) {
    std::vector<std::uint8_t> out;
    out.reserve(2 * w.size());
    for (auto b : w.bits()) {
        out.push_back(b);
        out.push_back(b);
    }
    return Word(std::move(out));
}

Word undouble_bits(const Word& w) {
    if (w.size() % 2 != 0) throw MalformedDoubling("doubled word has odd length " + std::to_string(w.size()));
    std::vector<std::uint8_t> out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) {
        if (w[i] != w[i + 1])
            throw MalformedDoubling("mixed pair at position " + std::to_string(i) + " of " + w.str());
        out.push_back(w[i]);
    }
    return Word(std::move(out));
}

PulseTrain to_pulse_train(const Word& w, Polarity polarity, int guard, double amplitude) {
    if (guard < 1) throw InvalidArgument("guard cells must be >= 1");
    if (w.size() == 0) throw InvalidArgument("empty word");
    const std::int8_t base = polarity == Polarity::Positive ? -1 : +1;
    const std::int8_t pulse = -base;

    PulseTrain train;
    train.amplitude = amplitude;
    train.guard = guard;
    train.bit_count = w.size();
    train.signs.reserve(train_length(w.size(), guard));
    train.signs.push_back(base);
    for (auto b : w.bits()) {
        train.signs.push_back(b ? pulse : base);
        train.signs.insert(train.signs.end(), static_cast<std::size_t>(guard), base);
    }
    train.signs.push_back(base);
    return train;
}

std::pair<std::size_t, std::size_t> window_boundaries(std::size_t bit_index, std::size_t bit_count, int guard) {
    if (guard < 1) throw InvalidArgument("guard cells must be >= 1");
    if (bit_index >= bit_count)
        throw GeometryError("bit index " + std::to_string(bit_index) + " outside word of " +
                            std::to_string(bit_count) + " bits");
    const std::size_t start = 1 + bit_index * static_cast<std::size_t>(1 + guard);
    return {start, start + 1};
}

}  // namespace hddlogic
