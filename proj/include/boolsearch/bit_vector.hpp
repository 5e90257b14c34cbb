#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolsearch {

// Packed sequence of bits. Bit i lives in word i / 64 at position i % 64.
// Padding bits past size() in the last word are always zero.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size, bool value = false);

    // Parses a string of '0'/'1' characters; index 0 is the first character.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value) noexcept
    {
        const Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t count() const noexcept;

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }
    // Clears padding bits after direct word writes.
    void trim() noexcept;

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

// Hex text form shared by truth tables and bitstring genotypes: digits read
// left to right give bits 0, 1, 2, ...; the most significant bit of the
// first digit is bit 0. When size() is not a multiple of four the last digit
// is padded with trailing zero bits.
std::string to_hex(const BitVector& bits);
BitVector bits_from_hex(std::string_view hex, std::size_t size);

} // namespace boolsearch
