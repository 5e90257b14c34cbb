#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "boolsearch/bounds.hpp"
#include "boolsearch/walsh.hpp"

namespace boolsearch {

struct VerifyReport {
    int n = 0;
    PropertyReport properties{};
    bool rotation_symmetric = false;
    // Odd n only.
    std::optional<int> quadratic_bound;
    std::optional<int> best_known;
    std::optional<int> upper_bound;
    // Even n only.
    std::optional<int> covering_radius_bound;
    std::string classification;
};

// Parses a hex truth table and checks it against the known bounds for n.
// Throws std::invalid_argument on malformed hex or a length mismatch.
VerifyReport verify(std::string_view hex, int n);

// Human-readable "key: value" lines.
std::string format_report(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);

} // namespace boolsearch
