#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "boolsearch/bit_vector.hpp"

namespace boolsearch {

inline constexpr int kMinDimension = 1;
inline constexpr int kMaxDimension = 16;

// Throws std::invalid_argument unless kMinDimension <= n <= kMaxDimension.
void check_dimension(int n);

/// Output column of an n-variable Boolean function.
///
/// Entry i is f(x) where x = (x_1, ..., x_n) is the big-endian n-bit
/// expansion of i, so x_1 is the most significant bit of the index and the
/// entries are in lexicographic order of the inputs.
class TruthTable {
public:
    explicit TruthTable(int n);
    TruthTable(int n, BitVector bits);

    // '0'/'1' characters, entry 0 first.
    static TruthTable from_bit_string(int n, std::string_view bits);
    // Hex text form: the first digit's most significant bit is f(0).
    static TruthTable from_hex(int n, std::string_view hex);

    int dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return bits_.size(); }

    bool operator[](std::size_t i) const noexcept { return bits_.get(i); }
    void set(std::size_t i, bool value) noexcept { bits_.set(i, value); }
    void flip(std::size_t i) noexcept { bits_.flip(i); }

    const BitVector& bits() const noexcept { return bits_; }

    std::size_t hamming_weight() const noexcept { return bits_.count(); }
    TruthTable complement() const;

    std::string to_hex() const { return boolsearch::to_hex(bits_); }
    std::string to_bit_string() const { return bits_.to_string(); }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    int n_;
    BitVector bits_;
};

} // namespace boolsearch
