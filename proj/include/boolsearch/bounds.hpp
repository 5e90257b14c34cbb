#pragma once

#include <stdexcept>
#include <string>

namespace boolsearch {

class DimensionError : public std::invalid_argument {
public:
    enum class Kind {
        EvenDimension,
        NotTabulated,
        OutOfRange,
    };

    DimensionError(Kind kind, const std::string& what)
        : std::invalid_argument(what)
        , kind_(kind)
    {
    }

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Nonlinearity reference points for odd n.
struct NonlinearityBounds {
    int quadratic;
    int best_known;
    int upper;
};

// 2^(n-1) - 2^((n-1)/2): bent-concatenation value. Odd n >= 1.
int quadratic_bound(int n);
// 2 * floor(2^(n-2) - 2^(n/2-2)). Odd n >= 1.
int odd_upper_bound(int n);
// 2^(n-1) - 2^(n/2-1), attained by bent functions. Even n >= 2.
int covering_radius_bound(int n);

// Full row for n in {7, 9, 11, 13}.
NonlinearityBounds bounds(int n);

} // namespace boolsearch
