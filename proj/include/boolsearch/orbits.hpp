#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "boolsearch/bit_vector.hpp"
#include "boolsearch/truth_table.hpp"

namespace boolsearch {

// One cyclic shift (x_0, ..., x_{n-1}) -> (x_{n-1}, x_0, ..., x_{n-2}) of the
// big-endian n-bit vector of x. On the index this is a rotate right by one.
std::uint32_t rotate_inputs(std::uint32_t x, int n) noexcept;

// Number of rotation orbits g_n = (1/n) sum_{t | n} phi(t) 2^(n/t).
std::uint64_t orbit_count(int n);

/// Partition of {0, ..., 2^n - 1} into rotation orbits. Orbits are numbered
/// in increasing order of their smallest member.
class OrbitTable {
public:
    explicit OrbitTable(int n);

    int dimension() const noexcept { return n_; }
    std::size_t num_orbits() const noexcept { return representatives_.size(); }

    std::uint32_t orbit_of(std::size_t x) const noexcept { return orbit_of_[x]; }
    std::uint32_t representative(std::size_t orbit) const noexcept { return representatives_[orbit]; }
    std::span<const std::uint32_t> representatives() const noexcept { return representatives_; }
    std::span<const std::uint32_t> orbit_index() const noexcept { return orbit_of_; }
    std::uint32_t orbit_size(std::size_t orbit) const noexcept { return sizes_[orbit]; }

private:
    int n_;
    std::vector<std::uint32_t> orbit_of_;
    std::vector<std::uint32_t> representatives_;
    std::vector<std::uint32_t> sizes_;
};

inline OrbitTable compute_orbits(int n) { return OrbitTable(n); }

// Process-wide cache; safe to call from several threads.
std::shared_ptr<const OrbitTable> shared_orbits(int n);

// bits[i] = genotype[orbit_of(i)].
TruthTable expand(const OrbitTable& orbits, const BitVector& genotype);
// Value at each orbit representative; inverse of expand on RS functions.
BitVector collapse(const OrbitTable& orbits, const TruthTable& tt);

bool is_rotation_symmetric(const TruthTable& tt);

} // namespace boolsearch
