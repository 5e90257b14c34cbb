#include "boolsearch/orbits.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace boolsearch {

std::uint32_t rotate_inputs(std::uint32_t x, int n) noexcept
{
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    return ((x >> 1) | ((x & 1U) << (n - 1))) & mask;
}

namespace {

std::uint64_t euler_phi(std::uint64_t t)
{
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= t; ++k) {
        if (std::gcd(k, t) == 1) {
            ++count;
        }
    }
    return count;
}

} // namespace

std::uint64_t orbit_count(int n)
{
    check_dimension(n);
    std::uint64_t sum = 0;
    for (int t = 1; t <= n; ++t) {
        if (n % t == 0) {
            sum += euler_phi(static_cast<std::uint64_t>(t)) * (std::uint64_t{1} << (n / t));
        }
    }
    return sum / static_cast<std::uint64_t>(n);
}

OrbitTable::OrbitTable(int n)
    : n_(n)
{
    check_dimension(n);
    const std::size_t size = std::size_t{1} << n;
    constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
    orbit_of_.assign(size, kUnassigned);
    // Scanning upward meets each orbit first at its minimum.
    for (std::uint32_t x = 0; x < size; ++x) {
        if (orbit_of_[x] != kUnassigned) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(representatives_.size());
        representatives_.push_back(x);
        std::uint32_t members = 0;
        std::uint32_t y = x;
        do {
            orbit_of_[y] = id;
            ++members;
            y = rotate_inputs(y, n);
        } while (y != x);
        sizes_.push_back(members);
    }
}

std::shared_ptr<const OrbitTable> shared_orbits(int n)
{
    check_dimension(n);
    static std::mutex mutex;
    static std::array<std::shared_ptr<const OrbitTable>, kMaxDimension + 1> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
        slot = std::make_shared<const OrbitTable>(n);
    }
    return slot;
}

TruthTable expand(const OrbitTable& orbits, const BitVector& genotype)
{
    if (genotype.size() != orbits.num_orbits()) {
        throw std::invalid_argument("rotation-symmetric genotype has " + std::to_string(genotype.size())
            + " bits, expected " + std::to_string(orbits.num_orbits()));
    }
    const std::size_t size = std::size_t{1} << orbits.dimension();
    BitVector bits(size);
    auto words = bits.words();
    const auto index = orbits.orbit_index();
    for (std::size_t w = 0; w < words.size(); ++w) {
        const std::size_t base = w * BitVector::kWordBits;
        const std::size_t end = std::min(size - base, BitVector::kWordBits);
        BitVector::Word word = 0;
        for (std::size_t b = 0; b < end; ++b) {
            word |= static_cast<BitVector::Word>(genotype.get(index[base + b])) << b;
        }
        words[w] = word;
    }
    return TruthTable(orbits.dimension(), std::move(bits));
}

BitVector collapse(const OrbitTable& orbits, const TruthTable& tt)
{
    if (tt.dimension() != orbits.dimension()) {
        throw std::invalid_argument("orbit table and truth table dimensions differ");
    }
    BitVector out(orbits.num_orbits());
    for (std::size_t k = 0; k < orbits.num_orbits(); ++k) {
        out.set(k, tt[orbits.representative(k)]);
    }
    return out;
}

bool is_rotation_symmetric(const TruthTable& tt)
{
    const int n = tt.dimension();
    for (std::uint32_t x = 0; x < tt.size(); ++x) {
        if (tt[x] != tt[rotate_inputs(x, n)]) {
            return false;
        }
    }
    return true;
}

} // namespace boolsearch
