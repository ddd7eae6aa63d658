#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hddlogic {

/// Binary word, most significant bit first.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters (MSB first). Throws InvalidArgument.
    static Word parse(std::string_view text);
    static Word zeros(std::size_t n);
    static Word ones(std::size_t n);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    bool all_zero() const noexcept;

    std::string str() const;

    /// Left-pads with zeros up to `width` (no-op if already that wide).
    Word padded(std::size_t width) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

enum class Polarity { Positive, Negative };

/**
 * Field-direction signs for one write pass, one per half-cell.
 *
 * Layout for guard parameter g: a leading baseline half-cell, then one window
 * of (1 + g) half-cells per bit, then a trailing baseline half-cell. A 1-bit
 * puts the pulse in the first half-cell of its window; everything else sits at
 * the baseline (-1 for POSITIVE, +1 for NEGATIVE).
 */
struct PulseTrain {
    std::vector<std::int8_t> signs;
    double amplitude = 1.0;
    int guard = 1;
    std::size_t bit_count = 0;
};

Word double_bits(const Word& w);
Word undouble_bits(const Word& w);

PulseTrain to_pulse_train(const Word& w, Polarity polarity, int guard, double amplitude);

constexpr std::size_t train_length(std::size_t bit_count, int guard) noexcept {
    return bit_count * static_cast<std::size_t>(1 + guard) + 2;
}

/**
 * Cell edges bounding the pulse of window `bit_index`.
 *
 * Edge k lies in front of half-cell k, so it is readback transition k - 1.
 * The first edge opens the window; the second follows the pulse half-cell.
 */
std::pair<std::size_t, std::size_t> window_boundaries(std::size_t bit_index, std::size_t bit_count, int guard);

}  // namespace hddlogic
