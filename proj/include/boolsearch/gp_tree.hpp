#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolsearch/rng.hpp"
#include "boolsearch/truth_table.hpp"

namespace boolsearch {

enum class Op : std::uint8_t {
    Var,
    Not,
    Or,
    Xor,
    And,
    And2, // a AND NOT b
    Xnor,
    If,   // a ? b : c
};

inline constexpr std::array<Op, 7> kFunctionSet{Op::Or, Op::Xor, Op::And, Op::And2, Op::Xnor, Op::If, Op::Not};

constexpr int arity(Op op) noexcept
{
    switch (op) {
    case Op::Var:
        return 0;
    case Op::Not:
        return 1;
    case Op::If:
        return 3;
    default:
        return 2;
    }
}

std::string_view op_name(Op op) noexcept;

struct Node {
    Op op = Op::Var;
    std::uint8_t var = 0; // 0-based variable index for Op::Var (x_{var+1})

    static constexpr Node variable(int index) noexcept { return Node{Op::Var, static_cast<std::uint8_t>(index)}; }
    static constexpr Node function(Op op) noexcept { return Node{op, 0}; }

    friend bool operator==(const Node&, const Node&) = default;
};

struct TreeLimits {
    int max_depth = 7; // a lone leaf has depth 1
    std::size_t max_nodes = 500;
};

/// Expression tree stored in prefix order. The subtree rooted at node i is
/// the contiguous range [i, subtree_end(i)).
class GpTree {
public:
    GpTree() = default;
    // Throws if the sequence is not exactly one well-formed prefix expression.
    explicit GpTree(std::vector<Node> prefix);

    std::span<const Node> nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const Node& operator[](std::size_t i) const noexcept { return nodes_[i]; }

    std::size_t subtree_end(std::size_t i) const noexcept;
    // Start indices of the children of node i, in order.
    std::vector<std::size_t> children(std::size_t i) const;
    int depth() const;
    // Level of every node; the root is at level 1.
    std::vector<int> levels() const;
    int max_variable() const noexcept; // -1 when there are no leaves

    // Copy of this tree with the subtree at `at` replaced by `donor`'s subtree
    // rooted at `donor_at`.
    GpTree replace_subtree(std::size_t at, const GpTree& donor, std::size_t donor_at) const;
    GpTree replace_subtree(std::size_t at, std::span<const Node> subtree) const;

    // Prefix text form such as IF(x1, AND2(x2, x3), NOT(x4)).
    std::string to_string() const;
    static GpTree parse(std::string_view text);

    friend bool operator==(const GpTree&, const GpTree&) = default;

private:
    std::vector<Node> nodes_;
};

// Evaluates the tree on all 2^n inputs, 64 assignments per machine word.
// Throws if a leaf references a variable index >= n.
TruthTable evaluate_tree(const GpTree& tree, int n);

// Random tree by the full or grow method with the given maximum depth.
GpTree random_tree(int n, int depth, bool full, Rng& rng);
// Ramped half-and-half: depth uniform in [2, limits.max_depth], full or grow
// with equal probability; retries trees that exceed limits.max_nodes.
GpTree random_tree(int n, const TreeLimits& limits, Rng& rng);

} // namespace boolsearch
