#include "boolsearch/genotype.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace boolsearch {

std::size_t genotype_length(int n, BitstringMode mode)
{
    check_dimension(n);
    if (mode == BitstringMode::General) {
        return std::size_t{1} << n;
    }
    return static_cast<std::size_t>(orbit_count(n));
}

TruthTable decode_bitstring(const BitstringGenotype& g, int n, const OrbitTable* orbits)
{
    const std::size_t expected = genotype_length(n, g.mode);
    if (g.bits.size() != expected) {
        throw std::invalid_argument("bitstring genotype has " + std::to_string(g.bits.size())
            + " bits, expected " + std::to_string(expected));
    }
    if (g.mode == BitstringMode::General) {
        return TruthTable(n, g.bits);
    }
    if (orbits == nullptr || orbits->dimension() != n) {
        throw std::invalid_argument("rotation-symmetric decoding needs the orbit table for n = " + std::to_string(n));
    }
    return expand(*orbits, g.bits);
}

void validate_float_genotype(const FloatGenotype& g, int n)
{
    if (g.decode < 1 || g.decode > 30) {
        throw std::invalid_argument("decode must be between 1 and 30");
    }
    const std::size_t target = genotype_length(n, g.mode);
    if (g.dimension() * static_cast<std::size_t>(g.decode) != target) {
        throw std::invalid_argument("float genotype of dimension " + std::to_string(g.dimension()) + " with decode "
            + std::to_string(g.decode) + " yields " + std::to_string(g.dimension() * g.decode)
            + " bits, target length is " + std::to_string(target));
    }
    for (double d : g.values) {
        if (!(d >= 0.0 && d <= 1.0)) {
            throw std::invalid_argument("float genotype value outside [0, 1]");
        }
    }
}

BitVector decode_float(const FloatGenotype& g)
{
    if (g.decode < 1 || g.decode > 30) {
        throw std::invalid_argument("decode must be between 1 and 30");
    }
    const auto levels = std::uint32_t{1} << g.decode;
    const double interval = 1.0 / levels;
    BitVector out(g.dimension() * static_cast<std::size_t>(g.decode));
    std::size_t pos = 0;
    for (double d : g.values) {
        if (!(d >= 0.0 && d <= 1.0)) {
            throw std::invalid_argument("float genotype value outside [0, 1]");
        }
        auto value = static_cast<std::uint32_t>(std::floor(d / interval));
        if (value >= levels) {
            value = levels - 1;
        }
        for (int b = g.decode - 1; b >= 0; --b) {
            out.set(pos++, (value >> b) & 1U);
        }
    }
    return out;
}

TruthTable decode_float_genotype(const FloatGenotype& g, int n, const OrbitTable* orbits)
{
    validate_float_genotype(g, n);
    return decode_bitstring(BitstringGenotype{decode_float(g), g.mode}, n, orbits);
}

BitstringGenotype random_bitstring(int n, BitstringMode mode, Rng& rng)
{
    BitVector bits(genotype_length(n, mode));
    for (auto& w : bits.words()) {
        w = rng.next();
    }
    bits.trim();
    return BitstringGenotype{std::move(bits), mode};
}

FloatGenotype random_float(std::size_t dimension, int decode, BitstringMode mode, Rng& rng)
{
    FloatGenotype g{std::vector<double>(dimension), decode, mode};
    for (auto& d : g.values) {
        d = rng.uniform01();
    }
    return g;
}

} // namespace boolsearch
