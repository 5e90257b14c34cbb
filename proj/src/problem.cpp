#include "boolsearch/problem.hpp"

#include <charconv>
#include <stdexcept>

#include "boolsearch/operators.hpp"

namespace boolsearch {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string shortest(double value)
{
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

} // namespace

std::string genotype_text(const Genotype& g)
{
    return std::visit(Overloaded{
                          [](const BitstringGenotype& b) { return to_hex(b.bits); },
                          [](const GpTree& t) { return t.to_string(); },
                          [](const FloatGenotype& f) {
                              std::string out;
                              for (std::size_t i = 0; i < f.values.size(); ++i) {
                                  if (i > 0) {
                                      out += ',';
                                  }
                                  out += shortest(f.values[i]);
                              }
                              return out;
                          },
                      },
        g);
}

Problem::Problem(int n, Encoding encoding, BitstringMode mode, int decode, TreeLimits limits)
    : n_(n)
    , encoding_(encoding)
    , mode_(mode)
    , decode_(decode)
    , limits_(limits)
{
    check_dimension(n);
    if (mode == BitstringMode::RotationSymmetric && encoding != Encoding::Tree) {
        orbits_ = shared_orbits(n);
    }
    if (encoding == Encoding::FloatingPoint) {
        const std::size_t target = genotype_length(n, mode);
        if (decode < 1 || decode > 30 || target % static_cast<std::size_t>(decode) != 0) {
            throw std::invalid_argument("decode = " + std::to_string(decode) + " does not divide the genotype length "
                + std::to_string(target));
        }
        float_dimension_ = target / static_cast<std::size_t>(decode);
    }
    if (encoding == Encoding::Tree) {
        if (mode == BitstringMode::RotationSymmetric) {
            throw std::invalid_argument("the tree encoding has no rotation-symmetric mode");
        }
        if (limits.max_depth < 1 || limits.max_nodes < 1) {
            throw std::invalid_argument("tree limits must be positive");
        }
    }
}

TruthTable Problem::decode(const Genotype& g) const
{
    return std::visit(Overloaded{
                          [&](const BitstringGenotype& b) { return decode_bitstring(b, n_, orbits_.get()); },
                          [&](const FloatGenotype& f) { return decode_float_genotype(f, n_, orbits_.get()); },
                          [&](const GpTree& t) { return evaluate_tree(t, n_); },
                      },
        g);
}

Genotype Problem::random(Rng& rng) const
{
    switch (encoding_) {
    case Encoding::Bitstring:
        return random_bitstring(n_, mode_, rng);
    case Encoding::FloatingPoint:
        return random_float(float_dimension_, decode_, mode_, rng);
    case Encoding::Tree:
        return random_tree(n_, limits_, rng);
    }
    throw std::logic_error("unknown encoding");
}

Genotype Problem::mutate(const Genotype& g, Rng& rng) const
{
    return std::visit(Overloaded{
                          [&](const BitstringGenotype& b) -> Genotype { return mutate_bitstring(b, rng); },
                          [&](const FloatGenotype& f) -> Genotype { return mutate_float(f, rng); },
                          [&](const GpTree& t) -> Genotype { return mutate_tree(t, n_, limits_, rng); },
                      },
        g);
}

Genotype Problem::crossover(const Genotype& a, const Genotype& b, Rng& rng) const
{
    if (a.index() != b.index()) {
        throw std::invalid_argument("crossover parents use different encodings");
    }
    return std::visit(Overloaded{
                          [&](const BitstringGenotype& x) -> Genotype {
                              return crossover_bitstring(x, std::get<BitstringGenotype>(b), rng);
                          },
                          [&](const FloatGenotype& x) -> Genotype {
                              return crossover_float(x, std::get<FloatGenotype>(b), rng);
                          },
                          [&](const GpTree& x) -> Genotype {
                              return crossover_tree(x, std::get<GpTree>(b), limits_, rng);
                          },
                      },
        a);
}

std::size_t best_index(const Population& pop)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness > pop[best].fitness) {
            best = i;
        }
    }
    return best;
}

Evaluator::Evaluator(const Problem& problem, RunLimits limits)
    : problem_(problem)
    , limits_(limits)
    , start_(std::chrono::steady_clock::now())
{
    update_stop();
}

Fitness Evaluator::evaluate(const Genotype& g)
{
    const Fitness fit = fitness(problem_.decode(g));
    ++evaluations_;
    if (!best_ || fit > best_->fitness) {
        best_ = Individual{g, fit};
        trajectory_.push_back(TrajectoryPoint{evaluations_, fit});
    }
    update_stop();
    return fit;
}

Individual Evaluator::make_individual(Genotype g)
{
    const Fitness fit = evaluate(g);
    return Individual{std::move(g), fit};
}

double Evaluator::elapsed_seconds() const
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

void Evaluator::update_stop()
{
    if (stop_) {
        return;
    }
    if (limits_.target_nonlinearity && best_ && best_->fitness.nonlinearity >= *limits_.target_nonlinearity) {
        stop_ = StopReason::Target;
    } else if (evaluations_ >= limits_.evaluation_budget) {
        stop_ = StopReason::Budget;
    } else if (limits_.time_limit_seconds && evaluations_ % kClockInterval == 0
        && elapsed_seconds() >= *limits_.time_limit_seconds) {
        stop_ = StopReason::TimeLimit;
    }
}

} // namespace boolsearch
