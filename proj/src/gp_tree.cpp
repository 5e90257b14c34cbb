#include "boolsearch/gp_tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace boolsearch {

std::string_view op_name(Op op) noexcept
{
    switch (op) {
    case Op::Var:
        return "x";
    case Op::Not:
        return "NOT";
    case Op::Or:
        return "OR";
    case Op::Xor:
        return "XOR";
    case Op::And:
        return "AND";
    case Op::And2:
        return "AND2";
    case Op::Xnor:
        return "XNOR";
    case Op::If:
        return "IF";
    }
    return "?";
}

GpTree::GpTree(std::vector<Node> prefix)
    : nodes_(std::move(prefix))
{
    std::ptrdiff_t open = 1;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (open == 0) {
            throw std::invalid_argument("prefix sequence has trailing nodes");
        }
        open += arity(nodes_[i].op) - 1;
    }
    if (open != 0) {
        throw std::invalid_argument("prefix sequence is not a complete expression");
    }
}

std::size_t GpTree::subtree_end(std::size_t i) const noexcept
{
    std::ptrdiff_t need = 1;
    while (need > 0) {
        need += arity(nodes_[i].op) - 1;
        ++i;
    }
    return i;
}

std::vector<std::size_t> GpTree::children(std::size_t i) const
{
    std::vector<std::size_t> out;
    const int count = arity(nodes_[i].op);
    std::size_t next = i + 1;
    for (int k = 0; k < count; ++k) {
        out.push_back(next);
        next = subtree_end(next);
    }
    return out;
}

int GpTree::depth() const
{
    std::vector<int> stack;
    stack.reserve(nodes_.size());
    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
        int deepest = 0;
        for (int k = 0; k < arity(it->op); ++k) {
            deepest = std::max(deepest, stack.back());
            stack.pop_back();
        }
        stack.push_back(deepest + 1);
    }
    return stack.empty() ? 0 : stack.back();
}

std::vector<int> GpTree::levels() const
{
    std::vector<int> out(nodes_.size());
    // Pending child slots per open ancestor.
    std::vector<std::pair<int, int>> open; // (level, remaining children)
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const int level = open.empty() ? 1 : open.back().first + 1;
        out[i] = level;
        if (!open.empty() && --open.back().second == 0) {
            open.pop_back();
        }
        if (arity(nodes_[i].op) > 0) {
            open.emplace_back(level, arity(nodes_[i].op));
        }
        while (!open.empty() && open.back().second == 0) {
            open.pop_back();
        }
    }
    return out;
}

int GpTree::max_variable() const noexcept
{
    int best = -1;
    for (const auto& node : nodes_) {
        if (node.op == Op::Var) {
            best = std::max(best, static_cast<int>(node.var));
        }
    }
    return best;
}

GpTree GpTree::replace_subtree(std::size_t at, std::span<const Node> subtree) const
{
    std::vector<Node> out;
    const std::size_t end = subtree_end(at);
    out.reserve(nodes_.size() - (end - at) + subtree.size());
    out.insert(out.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(at));
    out.insert(out.end(), subtree.begin(), subtree.end());
    out.insert(out.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(end), nodes_.end());
    GpTree tree;
    tree.nodes_ = std::move(out);
    return tree;
}

GpTree GpTree::replace_subtree(std::size_t at, const GpTree& donor, std::size_t donor_at) const
{
    const auto donor_nodes = donor.nodes();
    return replace_subtree(at, donor_nodes.subspan(donor_at, donor.subtree_end(donor_at) - donor_at));
}

namespace {

void write_node(const GpTree& tree, std::size_t i, std::string& out)
{
    const Node& node = tree[i];
    if (node.op == Op::Var) {
        out += 'x';
        out += std::to_string(node.var + 1);
        return;
    }
    out += op_name(node.op);
    out += '(';
    const auto kids = tree.children(i);
    for (std::size_t k = 0; k < kids.size(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        write_node(tree, kids[k], out);
    }
    out += ')';
}

class Parser {
public:
    explicit Parser(std::string_view text)
        : text_(text)
    {
    }

    std::vector<Node> parse()
    {
        std::vector<Node> out;
        expression(out);
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return out;
    }

private:
    void expression(std::vector<Node>& out)
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word.empty()) {
            fail("expected an operator or variable");
        }
        if (word[0] == 'x' && word.size() > 1
            && std::all_of(word.begin() + 1, word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const int index = std::stoi(std::string(word.substr(1)));
            if (index < 1 || index > kMaxDimension) {
                fail("variable index out of range");
            }
            out.push_back(Node::variable(index - 1));
            return;
        }
        Op op = Op::Var;
        for (Op candidate : kFunctionSet) {
            if (op_name(candidate) == word) {
                op = candidate;
            }
        }
        if (op == Op::Var) {
            fail("unknown operator '" + std::string(word) + "'");
        }
        out.push_back(Node::function(op));
        expect('(');
        for (int k = 0; k < arity(op); ++k) {
            if (k > 0) {
                expect(',');
            }
            expression(out);
        }
        expect(')');
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        throw std::invalid_argument("tree parse error at offset " + std::to_string(pos_) + ": " + message);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

using Word = BitVector::Word;

// Bit b of kLowPatterns[s] is bit s of b: the value of an input bit with
// shift s < 6 across the 64 assignments packed into one word.
constexpr std::array<Word, 6> kLowPatterns{
    0xAAAAAAAAAAAAAAAAULL,
    0xCCCCCCCCCCCCCCCCULL,
    0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL,
    0xFFFF0000FFFF0000ULL,
    0xFFFFFFFF00000000ULL,
};

void grow(int n, int remaining, bool full, Rng& rng, std::vector<Node>& out)
{
    const auto functions = kFunctionSet.size();
    bool terminal = remaining <= 1;
    std::size_t pick = 0;
    if (!terminal) {
        if (full) {
            pick = rng.index(functions);
        } else {
            pick = rng.index(functions + static_cast<std::size_t>(n));
            terminal = pick >= functions;
        }
    }
    if (terminal) {
        out.push_back(Node::variable(static_cast<int>(rng.index(static_cast<std::size_t>(n)))));
        return;
    }
    const Op op = kFunctionSet[pick];
    out.push_back(Node::function(op));
    for (int k = 0; k < arity(op); ++k) {
        grow(n, remaining - 1, full, rng, out);
    }
}

} // namespace

std::string GpTree::to_string() const
{
    std::string out;
    if (!nodes_.empty()) {
        write_node(*this, 0, out);
    }
    return out;
}

GpTree GpTree::parse(std::string_view text)
{
    return GpTree(Parser(text).parse());
}

TruthTable evaluate_tree(const GpTree& tree, int n)
{
    check_dimension(n);
    if (tree.size() == 0) {
        throw std::invalid_argument("cannot evaluate an empty tree");
    }
    if (tree.max_variable() >= n) {
        throw std::invalid_argument("tree references x" + std::to_string(tree.max_variable() + 1)
            + " but the function has only " + std::to_string(n) + " inputs");
    }
    const std::size_t size = std::size_t{1} << n;
    BitVector bits(size);
    auto words = bits.words();
    const auto nodes = tree.nodes();
    std::vector<Word> stack(nodes.size());

    for (std::size_t w = 0; w < words.size(); ++w) {
        const std::size_t base = w * BitVector::kWordBits;
        std::size_t top = 0;
        for (std::size_t i = nodes.size(); i-- > 0;) {
            const Node node = nodes[i];
            Word value = 0;
            if (node.op == Op::Var) {
                const int shift = n - 1 - node.var;
                if (shift < 6) {
                    value = kLowPatterns[static_cast<std::size_t>(shift)];
                } else {
                    value = ((base >> shift) & 1U) ? ~Word{0} : Word{0};
                }
            } else {
                // Reverse prefix order leaves the first child on top.
                const Word a = stack[--top];
                const Word b = arity(node.op) >= 2 ? stack[--top] : 0;
                const Word c = arity(node.op) == 3 ? stack[--top] : 0;
                switch (node.op) {
                case Op::Not:
                    value = ~a;
                    break;
                case Op::Or:
                    value = a | b;
                    break;
                case Op::Xor:
                    value = a ^ b;
                    break;
                case Op::And:
                    value = a & b;
                    break;
                case Op::And2:
                    value = a & ~b;
                    break;
                case Op::Xnor:
                    value = ~(a ^ b);
                    break;
                case Op::If:
                    value = (a & b) | (~a & c);
                    break;
                case Op::Var:
                    break;
                }
            }
            stack[top++] = value;
        }
        words[w] = stack[0];
    }
    bits.trim();
    return TruthTable(n, std::move(bits));
}

GpTree random_tree(int n, int depth, bool full, Rng& rng)
{
    check_dimension(n);
    std::vector<Node> nodes;
    grow(n, std::max(depth, 1), full, rng, nodes);
    return GpTree(std::move(nodes));
}

GpTree random_tree(int n, const TreeLimits& limits, Rng& rng)
{
    const int max_depth = std::max(limits.max_depth, 1);
    const int min_depth = std::min(2, max_depth);
    for (int attempt = 0; attempt < 20; ++attempt) {
        const int depth = static_cast<int>(rng.between(static_cast<std::size_t>(min_depth), static_cast<std::size_t>(max_depth)));
        GpTree tree = random_tree(n, depth, rng.bit(), rng);
        if (tree.size() <= limits.max_nodes) {
            return tree;
        }
    }
    // Persistent size overflow: shrink depth until grow fits.
    for (int depth = max_depth; depth > 1; --depth) {
        GpTree tree = random_tree(n, depth, false, rng);
        if (tree.size() <= limits.max_nodes) {
            return tree;
        }
    }
    return random_tree(n, 1, false, rng);
}

} // namespace boolsearch
