#include "boolsearch/bit_vector.hpp"

#include <numeric>
#include <stdexcept>

namespace boolsearch {

BitVector::BitVector(std::size_t size, bool value)
    : size_(size)
    , words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0})
{
    trim();
}

BitVector BitVector::from_string(std::string_view bits)
{
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            out.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return out;
}

std::size_t BitVector::count() const noexcept
{
    return std::accumulate(words_.begin(), words_.end(), std::size_t{0},
        [](std::size_t acc, Word w) { return acc + static_cast<std::size_t>(std::popcount(w)); });
}

void BitVector::trim() noexcept
{
    const std::size_t tail = size_ % kWordBits;
    if (tail != 0) {
        words_.back() &= (Word{1} << tail) - 1;
    }
}

std::string BitVector::to_string() const
{
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

std::string to_hex(const BitVector& bits)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t digits = (bits.size() + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        unsigned value = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t i = 4 * d + k;
            value <<= 1;
            if (i < bits.size() && bits.get(i)) {
                value |= 1U;
            }
        }
        out[d] = kDigits[value];
    }
    return out;
}

BitVector bits_from_hex(std::string_view hex, std::size_t size)
{
    const std::size_t digits = (size + 3) / 4;
    if (hex.size() != digits) {
        throw std::invalid_argument("hex string has " + std::to_string(hex.size()) + " digits, expected "
            + std::to_string(digits));
    }
    BitVector out(size);
    for (std::size_t d = 0; d < digits; ++d) {
        const char c = hex[d];
        unsigned value = 0;
        if (c >= '0' && c <= '9') {
            value = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            value = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            value = static_cast<unsigned>(c - 'A' + 10);
        } else {
            throw std::invalid_argument(std::string("malformed hex digit '") + c + "'");
        }
        for (std::size_t k = 0; k < 4; ++k) {
            const bool bit = (value >> (3 - k)) & 1U;
            const std::size_t i = 4 * d + k;
            if (i < size) {
                out.set(i, bit);
            } else if (bit) {
                throw std::invalid_argument("hex padding bits must be zero");
            }
        }
    }
    return out;
}

} // namespace boolsearch
