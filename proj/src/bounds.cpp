#include "boolsearch/bounds.hpp"

#include <array>
#include <cstdint>

#include "boolsearch/truth_table.hpp"

namespace boolsearch {

namespace {

void require_odd(int n)
{
    if (n < kMinDimension || n > kMaxDimension) {
        throw DimensionError(DimensionError::Kind::OutOfRange, "dimension " + std::to_string(n) + " out of range");
    }
    if (n % 2 == 0) {
        throw DimensionError(DimensionError::Kind::EvenDimension,
            "dimension " + std::to_string(n) + " is even; odd-dimension bounds need odd n");
    }
}

// Smallest r with r*r >= m.
std::uint64_t ceil_sqrt(std::uint64_t m)
{
    std::uint64_t r = 0;
    while (r * r < m) {
        ++r;
    }
    return r;
}

struct BestKnown {
    int n;
    int nonlinearity;
};

constexpr std::array<BestKnown, 4> kBestKnown{{{7, 56}, {9, 242}, {11, 996}, {13, 4040}}};

} // namespace

int quadratic_bound(int n)
{
    require_odd(n);
    return (1 << (n - 1)) - (1 << ((n - 1) / 2));
}

int odd_upper_bound(int n)
{
    require_odd(n);
    if (n < 5) {
        // n = 1: floor(1/2 - 2^-1.5) = 0; n = 3: floor(2 - 2^-0.5) = 1.
        return n == 1 ? 0 : 2;
    }
    // 2^(n/2-2) = sqrt(2^(n-4)) is irrational for odd n, so
    // floor(2^(n-2) - sqrt(m)) = 2^(n-2) - ceil(sqrt(m)).
    const std::uint64_t m = std::uint64_t{1} << (n - 4);
    return 2 * ((1 << (n - 2)) - static_cast<int>(ceil_sqrt(m)));
}

int covering_radius_bound(int n)
{
    if (n < 2 || n > kMaxDimension) {
        throw DimensionError(DimensionError::Kind::OutOfRange, "dimension " + std::to_string(n) + " out of range");
    }
    if (n % 2 != 0) {
        throw DimensionError(DimensionError::Kind::OutOfRange,
            "covering radius bound is only attained for even n");
    }
    return (1 << (n - 1)) - (1 << (n / 2 - 1));
}

NonlinearityBounds bounds(int n)
{
    require_odd(n);
    for (const auto& row : kBestKnown) {
        if (row.n == n) {
            return NonlinearityBounds{quadratic_bound(n), row.nonlinearity, odd_upper_bound(n)};
        }
    }
    throw DimensionError(DimensionError::Kind::NotTabulated,
        "no best-known nonlinearity tabulated for n = " + std::to_string(n));
}

} // namespace boolsearch
