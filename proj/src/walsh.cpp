#include "boolsearch/walsh.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace boolsearch {

WalshSpectrum::WalshSpectrum(int n, std::vector<std::int32_t> values)
    : n_(n)
    , values_(std::move(values))
{
    check_dimension(n);
    if (values_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("spectrum length does not match dimension");
    }
}

std::int32_t WalshSpectrum::max_abs() const noexcept
{
    std::int32_t best = 0;
    for (auto v : values_) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

std::size_t WalshSpectrum::num_max_values() const noexcept
{
    const auto top = max_abs();
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [top](std::int32_t v) { return std::abs(v) == top; }));
}

std::int64_t WalshSpectrum::parseval_sum() const noexcept
{
    std::int64_t sum = 0;
    for (auto v : values_) {
        sum += static_cast<std::int64_t>(v) * v;
    }
    return sum;
}

void fast_walsh_hadamard(std::span<std::int32_t> values) noexcept
{
    const std::size_t size = values.size();
    std::int32_t* v = values.data();
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * half) {
            std::int32_t* lo = v + block;
            std::int32_t* hi = lo + half;
            for (std::size_t j = 0; j < half; ++j) {
                const std::int32_t a = lo[j];
                const std::int32_t b = hi[j];
                lo[j] = a + b;
                hi[j] = a - b;
            }
        }
    }
}

namespace {

// (-1)^f(x) for every x.
void fill_signs(const TruthTable& tt, std::span<std::int32_t> out) noexcept
{
    const auto words = tt.bits().words();
    const std::size_t size = tt.size();
    for (std::size_t w = 0; w < words.size(); ++w) {
        const BitVector::Word word = words[w];
        const std::size_t base = w * BitVector::kWordBits;
        const std::size_t end = std::min(size - base, BitVector::kWordBits);
        for (std::size_t b = 0; b < end; ++b) {
            out[base + b] = 1 - 2 * static_cast<std::int32_t>((word >> b) & 1U);
        }
    }
}

Fitness fitness_of(int n, std::span<const std::int32_t> values) noexcept
{
    std::int32_t top = 0;
    std::uint32_t count = 0;
    for (auto v : values) {
        const std::int32_t m = v < 0 ? -v : v;
        if (m > top) {
            top = m;
            count = 1;
        } else if (m == top) {
            ++count;
        }
    }
    return Fitness{n, (1 << (n - 1)) - top / 2, count};
}

} // namespace

WalshSpectrum walsh_transform(const TruthTable& tt)
{
    std::vector<std::int32_t> values(tt.size());
    fill_signs(tt, values);
    fast_walsh_hadamard(values);
    return WalshSpectrum(tt.dimension(), std::move(values));
}

int nonlinearity(const WalshSpectrum& ws)
{
    return (1 << (ws.dimension() - 1)) - ws.max_abs() / 2;
}

Balance balancedness(const TruthTable& tt)
{
    const std::size_t weight = tt.hamming_weight();
    return Balance{weight == tt.size() / 2, weight};
}

double Fitness::value() const noexcept
{
    const double size = static_cast<double>(std::size_t{1} << dimension);
    return nonlinearity + (size - num_max_values) / size;
}

Fitness fitness(const WalshSpectrum& ws)
{
    return fitness_of(ws.dimension(), ws.values());
}

Fitness fitness(const TruthTable& tt)
{
    thread_local std::vector<std::int32_t> scratch;
    scratch.resize(tt.size());
    fill_signs(tt, scratch);
    fast_walsh_hadamard(scratch);
    return fitness_of(tt.dimension(), scratch);
}

PropertyReport analyze(const TruthTable& tt)
{
    const auto ws = walsh_transform(tt);
    const auto balance = balancedness(tt);
    const auto fit = fitness(ws);
    return PropertyReport{
        .nonlinearity = fit.nonlinearity,
        .balanced = balance.balanced,
        .hamming_weight = balance.hamming_weight,
        .max_abs_walsh = ws.max_abs(),
        .num_max_values = fit.num_max_values,
        .fitness = fit,
    };
}

} // namespace boolsearch
