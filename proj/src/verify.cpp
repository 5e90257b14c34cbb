#include "boolsearch/verify.hpp"

#include <sstream>

#include "json.hpp"

#include "boolsearch/campaign.hpp"
#include "boolsearch/orbits.hpp"

namespace boolsearch {

namespace {

std::string classify(const VerifyReport& r)
{
    const int nl = r.properties.nonlinearity;
    if (r.covering_radius_bound) {
        return nl == *r.covering_radius_bound ? "bent: equals the covering radius bound"
                                              : "below the covering radius bound";
    }
    if (r.upper_bound && nl > *r.upper_bound) {
        return "exceeds the odd-dimension upper bound (inconsistent)";
    }
    if (r.best_known) {
        if (nl > *r.best_known) {
            return "exceeds the best known nonlinearity";
        }
        if (nl == *r.best_known) {
            return "equals the best known nonlinearity";
        }
    }
    if (r.quadratic_bound) {
        if (nl > *r.quadratic_bound) {
            return "above the quadratic bound";
        }
        if (nl == *r.quadratic_bound) {
            return "equals the quadratic bound";
        }
        return "below the quadratic bound";
    }
    return "no reference bound";
}

} // namespace

VerifyReport verify(std::string_view hex, int n)
{
    const TruthTable tt = TruthTable::from_hex(n, hex);
    VerifyReport r;
    r.n = n;
    r.properties = analyze(tt);
    r.rotation_symmetric = is_rotation_symmetric(tt);
    if (n % 2 == 1) {
        r.quadratic_bound = quadratic_bound(n);
        r.upper_bound = odd_upper_bound(n);
        try {
            r.best_known = bounds(n).best_known;
        } catch (const DimensionError&) {
        }
    } else {
        r.covering_radius_bound = covering_radius_bound(n);
    }
    r.classification = classify(r);
    return r;
}

std::string format_report(const VerifyReport& r)
{
    std::ostringstream out;
    const auto& p = r.properties;
    out << "n: " << r.n << '\n';
    out << "nonlinearity: " << p.nonlinearity << '\n';
    out << "fitness: " << format_double(p.fitness.value()) << '\n';
    out << "max_abs_walsh: " << p.max_abs_walsh << '\n';
    out << "num_max_values: " << p.num_max_values << '\n';
    out << "hamming_weight: " << p.hamming_weight << '\n';
    out << "balanced: " << (p.balanced ? "yes" : "no") << '\n';
    out << "rotation_symmetric: " << (r.rotation_symmetric ? "yes" : "no") << '\n';
    if (r.quadratic_bound) {
        out << "quadratic_bound: " << *r.quadratic_bound << '\n';
    }
    if (r.best_known) {
        out << "best_known: " << *r.best_known << '\n';
    }
    if (r.upper_bound) {
        out << "upper_bound: " << *r.upper_bound << '\n';
    }
    if (r.covering_radius_bound) {
        out << "covering_radius_bound: " << *r.covering_radius_bound << '\n';
    }
    out << "classification: " << r.classification << '\n';
    return out.str();
}

std::string report_to_json(const VerifyReport& r)
{
    nlohmann::ordered_json j;
    const auto& p = r.properties;
    j["n"] = r.n;
    j["nonlinearity"] = p.nonlinearity;
    j["fitness"] = p.fitness.value();
    j["max_abs_walsh"] = p.max_abs_walsh;
    j["num_max_values"] = p.num_max_values;
    j["hamming_weight"] = p.hamming_weight;
    j["balanced"] = p.balanced;
    j["rotation_symmetric"] = r.rotation_symmetric;
    auto put = [&](const char* key, const std::optional<int>& v) {
        j[key] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    put("quadratic_bound", r.quadratic_bound);
    put("best_known", r.best_known);
    put("upper_bound", r.upper_bound);
    put("covering_radius_bound", r.covering_radius_bound);
    j["classification"] = r.classification;
    return j.dump();
}

} // namespace boolsearch
