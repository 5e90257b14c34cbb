#include "boolsearch/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace boolsearch {

namespace {

void require_same_size(std::size_t a, std::size_t b)
{
    if (a != b) {
        throw std::invalid_argument("crossover parents differ in length (" + std::to_string(a) + " vs "
            + std::to_string(b) + ")");
    }
}

} // namespace

void flip_bit_mutation(BitVector& bits, std::size_t position)
{
    bits.flip(position);
}

void shuffle_mutation(BitVector& bits, std::size_t start, std::size_t end, Rng& rng)
{
    for (std::size_t i = end; i > start; --i) {
        const std::size_t j = start + rng.index(i - start + 1);
        const bool tmp = bits.get(i);
        bits.set(i, bits.get(j));
        bits.set(j, tmp);
    }
}

BitVector one_point_crossover(const BitVector& a, const BitVector& b, std::size_t breakpoint)
{
    require_same_size(a.size(), b.size());
    BitVector child = b;
    for (std::size_t i = 0; i < breakpoint && i < a.size(); ++i) {
        child.set(i, a.get(i));
    }
    return child;
}

BitVector uniform_crossover(const BitVector& a, const BitVector& b, Rng& rng)
{
    require_same_size(a.size(), b.size());
    BitVector child = a;
    auto out = child.words();
    const auto aw = a.words();
    const auto bw = b.words();
    for (std::size_t w = 0; w < out.size(); ++w) {
        const BitVector::Word take_b = rng.next();
        out[w] = (aw[w] & ~take_b) | (bw[w] & take_b);
    }
    return child;
}

BitstringGenotype mutate_bitstring(const BitstringGenotype& g, Rng& rng)
{
    BitstringGenotype out = g;
    const std::size_t size = out.bits.size();
    if (size == 0) {
        return out;
    }
    if (rng.bit()) {
        flip_bit_mutation(out.bits, rng.index(size));
    } else {
        std::size_t start = rng.index(size);
        std::size_t end = rng.index(size);
        if (start > end) {
            std::swap(start, end);
        }
        shuffle_mutation(out.bits, start, end, rng);
    }
    return out;
}

BitstringGenotype crossover_bitstring(const BitstringGenotype& a, const BitstringGenotype& b, Rng& rng)
{
    require_same_size(a.bits.size(), b.bits.size());
    const std::size_t size = a.bits.size();
    if (rng.bit()) {
        const std::size_t breakpoint = size < 2 ? rng.index(size + 1) : rng.between(1, size - 1);
        return BitstringGenotype{one_point_crossover(a.bits, b.bits, breakpoint), a.mode};
    }
    return BitstringGenotype{uniform_crossover(a.bits, b.bits, rng), a.mode};
}

FloatGenotype mutate_float(const FloatGenotype& g, Rng& rng)
{
    FloatGenotype out = g;
    if (!out.values.empty()) {
        out.values[rng.index(out.values.size())] = rng.uniform01();
    }
    return out;
}

FloatGenotype crossover_float(const FloatGenotype& a, const FloatGenotype& b, Rng& rng)
{
    require_same_size(a.values.size(), b.values.size());
    FloatGenotype child = a;
    if (rng.bit()) {
        for (std::size_t i = 0; i < child.values.size(); ++i) {
            child.values[i] = 0.5 * (a.values[i] + b.values[i]);
        }
    } else {
        for (std::size_t i = 0; i < child.values.size(); ++i) {
            if (rng.bit()) {
                child.values[i] = b.values[i];
            }
        }
    }
    return child;
}

// --- trees ---------------------------------------------------------------------

bool within_limits(const GpTree& t, const TreeLimits& limits)
{
    return t.size() <= limits.max_nodes && t.depth() <= limits.max_depth;
}

namespace {

std::vector<std::size_t> subtree_sizes(const GpTree& t)
{
    std::vector<std::size_t> sizes(t.size());
    std::vector<std::size_t> stack;
    for (std::size_t i = t.size(); i-- > 0;) {
        std::size_t total = 1;
        for (int k = 0; k < arity(t[i].op); ++k) {
            total += stack.back();
            stack.pop_back();
        }
        sizes[i] = total;
        stack.push_back(total);
    }
    return sizes;
}

// Koza's point selection: an internal node with probability 0.9 when one exists.
std::size_t koza_point(const GpTree& t, Rng& rng)
{
    std::vector<std::size_t> internal;
    std::vector<std::size_t> leaves;
    for (std::size_t i = 0; i < t.size(); ++i) {
        (arity(t[i].op) > 0 ? internal : leaves).push_back(i);
    }
    if (!internal.empty() && rng.coin(0.9)) {
        return internal[rng.index(internal.size())];
    }
    return leaves[rng.index(leaves.size())];
}

// Node pairs reached by walking both trees from the root in lockstep. With
// `equal_arity` the walk only descends where both nodes have the same arity
// (the common region); otherwise it follows every child position present in
// both nodes (shared coordinates).
void aligned_pairs(const GpTree& a, std::size_t i, const GpTree& b, std::size_t j, bool equal_arity,
    std::vector<std::pair<std::size_t, std::size_t>>& out)
{
    out.emplace_back(i, j);
    const int ka = arity(a[i].op);
    const int kb = arity(b[j].op);
    if (equal_arity && ka != kb) {
        return;
    }
    const int shared = std::min(ka, kb);
    if (shared == 0) {
        return;
    }
    const auto ca = a.children(i);
    const auto cb = b.children(j);
    for (int k = 0; k < shared; ++k) {
        aligned_pairs(a, ca[static_cast<std::size_t>(k)], b, cb[static_cast<std::size_t>(k)], equal_arity, out);
    }
}

GpTree simple_crossover(const GpTree& a, const GpTree& b, Rng& rng)
{
    const std::size_t at = koza_point(a, rng);
    const std::size_t from = koza_point(b, rng);
    return a.replace_subtree(at, b, from);
}

void uniform_build(const GpTree& a, std::size_t i, const GpTree& b, std::size_t j, Rng& rng, std::vector<Node>& out)
{
    const int ka = arity(a[i].op);
    const int kb = arity(b[j].op);
    if (ka == kb && ka > 0) {
        // Interior of the common region: swap the node, keep walking.
        out.push_back(rng.bit() ? b[j] : a[i]);
        const auto ca = a.children(i);
        const auto cb = b.children(j);
        for (std::size_t k = 0; k < ca.size(); ++k) {
            uniform_build(a, ca[k], b, cb[k], rng, out);
        }
        return;
    }
    // Boundary of the common region: swap whole subtrees.
    const GpTree& src = rng.bit() ? b : a;
    const std::size_t at = (&src == &b) ? j : i;
    const auto nodes = src.nodes();
    out.insert(out.end(), nodes.begin() + static_cast<std::ptrdiff_t>(at),
        nodes.begin() + static_cast<std::ptrdiff_t>(src.subtree_end(at)));
}

GpTree uniform_tree_crossover(const GpTree& a, const GpTree& b, Rng& rng)
{
    std::vector<Node> out;
    out.reserve(std::max(a.size(), b.size()));
    uniform_build(a, 0, b, 0, rng, out);
    return GpTree(std::move(out));
}

GpTree aligned_crossover(const GpTree& a, const GpTree& b, bool equal_arity, Rng& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    aligned_pairs(a, 0, b, 0, equal_arity, pairs);
    const auto [at, from] = pairs[rng.index(pairs.size())];
    return a.replace_subtree(at, b, from);
}

// Langdon's size-fair crossover: the inserted subtree is at most 1 + 2s nodes
// for a removed subtree of s nodes, with the size class chosen so the
// expected size change is zero.
GpTree size_fair_crossover(const GpTree& a, const GpTree& b, Rng& rng)
{
    const std::size_t at = rng.index(a.size());
    const auto removed = static_cast<double>(a.subtree_end(at) - at);
    const auto sizes = subtree_sizes(b);

    std::vector<std::size_t> smaller, equal, larger;
    double smaller_mean = 0.0;
    double larger_mean = 0.0;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        const auto s = static_cast<double>(sizes[j]);
        if (s > 1.0 + 2.0 * removed) {
            continue;
        }
        if (s < removed) {
            smaller.push_back(j);
            smaller_mean += s;
        } else if (s > removed) {
            larger.push_back(j);
            larger_mean += s;
        } else {
            equal.push_back(j);
        }
    }
    if (!smaller.empty()) {
        smaller_mean /= static_cast<double>(smaller.size());
    }
    if (!larger.empty()) {
        larger_mean /= static_cast<double>(larger.size());
    }

    const double p_equal = equal.empty() ? 0.0 : (smaller.empty() && larger.empty() ? 1.0 : 1.0 / removed);
    double p_smaller = 0.0;
    if (!smaller.empty() && !larger.empty()) {
        const double down = removed - smaller_mean;
        const double up = larger_mean - removed;
        p_smaller = (1.0 - p_equal) * up / (up + down);
    } else if (!smaller.empty()) {
        p_smaller = 1.0 - p_equal;
    }

    const double r = rng.uniform01();
    const std::vector<std::size_t>* pool = &larger;
    if (r < p_equal) {
        pool = &equal;
    } else if (r < p_equal + p_smaller) {
        pool = &smaller;
    }
    if (pool->empty()) {
        pool = !equal.empty() ? &equal : (!smaller.empty() ? &smaller : &larger);
    }
    const std::size_t from = (*pool)[rng.index(pool->size())];
    return a.replace_subtree(at, b, from);
}

} // namespace

GpTree mutate_tree(const GpTree& t, int n, const TreeLimits& limits, Rng& rng)
{
    const auto levels = t.levels();
    for (int attempt = 0; attempt < kTreeRetries; ++attempt) {
        const std::size_t at = rng.index(t.size());
        const int room = limits.max_depth - levels[at] + 1;
        if (room < 1) {
            continue;
        }
        const int depth = static_cast<int>(rng.between(1, static_cast<std::size_t>(room)));
        const GpTree fresh = random_tree(n, depth, false, rng);
        GpTree child = t.replace_subtree(at, fresh.nodes());
        if (within_limits(child, limits)) {
            return child;
        }
    }
    return t;
}

GpTree crossover_tree(const GpTree& a, const GpTree& b, TreeCrossover kind, const TreeLimits& limits, Rng& rng)
{
    for (int attempt = 0; attempt < kTreeRetries; ++attempt) {
        GpTree child;
        switch (kind) {
        case TreeCrossover::Simple:
            child = simple_crossover(a, b, rng);
            break;
        case TreeCrossover::Uniform:
            child = uniform_tree_crossover(a, b, rng);
            break;
        case TreeCrossover::SizeFair:
            child = size_fair_crossover(a, b, rng);
            break;
        case TreeCrossover::OnePoint:
            child = aligned_crossover(a, b, true, rng);
            break;
        case TreeCrossover::ContextPreserving:
            child = aligned_crossover(a, b, false, rng);
            break;
        }
        if (within_limits(child, limits)) {
            return child;
        }
    }
    return a;
}

GpTree crossover_tree(const GpTree& a, const GpTree& b, const TreeLimits& limits, Rng& rng)
{
    const auto kind = static_cast<TreeCrossover>(rng.index(5));
    return crossover_tree(a, b, kind, limits, rng);
}

} // namespace boolsearch
