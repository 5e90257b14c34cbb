#include "boolsearch/truth_table.hpp"

#include <stdexcept>
#include <utility>

namespace boolsearch {

void check_dimension(int n)
{
    if (n < kMinDimension || n > kMaxDimension) {
        throw std::invalid_argument("dimension " + std::to_string(n) + " outside supported range "
            + std::to_string(kMinDimension) + ".." + std::to_string(kMaxDimension));
    }
}

namespace {
std::size_t table_size(int n)
{
    check_dimension(n);
    return std::size_t{1} << n;
}
} // namespace

TruthTable::TruthTable(int n)
    : n_(n)
    , bits_(table_size(n))
{
}

TruthTable::TruthTable(int n, BitVector bits)
    : n_(n)
    , bits_(std::move(bits))
{
    if (bits_.size() != table_size(n)) {
        throw std::invalid_argument("truth table of dimension " + std::to_string(n) + " needs "
            + std::to_string(table_size(n)) + " entries, got " + std::to_string(bits_.size()));
    }
}

TruthTable TruthTable::from_bit_string(int n, std::string_view bits)
{
    return TruthTable(n, BitVector::from_string(bits));
}

TruthTable TruthTable::from_hex(int n, std::string_view hex)
{
    return TruthTable(n, bits_from_hex(hex, table_size(n)));
}

TruthTable TruthTable::complement() const
{
    TruthTable out = *this;
    for (auto& w : out.bits_.words()) {
        w = ~w;
    }
    out.bits_.trim();
    return out;
}

} // namespace boolsearch
