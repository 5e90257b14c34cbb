#include "boolsearch/config_file.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace boolsearch {

namespace {

namespace pt = boost::property_tree;

template <typename T>
T value_as(const pt::ptree& node, const std::string& key)
{
    try {
        return node.get_value<T>();
    } catch (const pt::ptree_error&) {
        throw ConfigError("config key '" + key + "' has an invalid value '" + node.data() + "'");
    }
}

bool bool_value(const pt::ptree& node, const std::string& key)
{
    const std::string& v = node.data();
    if (v == "true" || v == "1" || v == "yes" || v == "on") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no" || v == "off") {
        return false;
    }
    throw ConfigError("config key '" + key + "' expects a boolean, got '" + v + "'");
}

using Setter = std::function<void(const pt::ptree&, const std::string&, Campaign&)>;

const std::map<std::string, Setter>& setters()
{
    static const std::map<std::string, Setter> table{
        {"problem.n", [](auto& v, auto& k, Campaign& c) { c.base.n = value_as<int>(v, k); }},
        {"problem.encoding", [](auto& v, auto&, Campaign& c) { c.base.encoding = parse_encoding(v.data()); }},
        {"problem.rs", [](auto& v, auto& k, Campaign& c) { c.base.rotation_symmetric = bool_value(v, k); }},
        {"problem.decode", [](auto& v, auto& k, Campaign& c) { c.base.decode = value_as<int>(v, k); }},
        {"problem.max_depth", [](auto& v, auto& k, Campaign& c) { c.base.tree.max_depth = value_as<int>(v, k); }},
        {"problem.max_nodes",
            [](auto& v, auto& k, Campaign& c) { c.base.tree.max_nodes = value_as<std::size_t>(v, k); }},
        {"algorithm.name", [](auto& v, auto&, Campaign& c) { c.base.algorithm = parse_algorithm(v.data()); }},
        {"algorithm.population",
            [](auto& v, auto& k, Campaign& c) { c.base.population_size = value_as<std::size_t>(v, k); }},
        {"algorithm.p_mut", [](auto& v, auto& k, Campaign& c) { c.base.p_mut = value_as<double>(v, k); }},
        {"algorithm.budget",
            [](auto& v, auto& k, Campaign& c) { c.base.evaluation_budget = value_as<std::uint64_t>(v, k); }},
        {"algorithm.seed", [](auto& v, auto& k, Campaign& c) { c.base.seed = value_as<std::uint64_t>(v, k); }},
        {"algorithm.target",
            [](auto& v, auto& k, Campaign& c) { c.base.target_nonlinearity = value_as<int>(v, k); }},
        {"algorithm.time_limit",
            [](auto& v, auto& k, Campaign& c) { c.base.time_limit_seconds = value_as<double>(v, k); }},
        {"algorithm.de_f", [](auto& v, auto& k, Campaign& c) { c.base.de.scale = value_as<double>(v, k); }},
        {"algorithm.de_cr", [](auto& v, auto& k, Campaign& c) { c.base.de.crossover_rate = value_as<double>(v, k); }},
        {"algorithm.de_population",
            [](auto& v, auto& k, Campaign& c) { c.base.de.population_size = value_as<std::size_t>(v, k); }},
        {"local_search.variant",
            [](auto& v, auto&, Campaign& c) { c.base.ls.variant = parse_ls_variant(v.data()); }},
        {"local_search.fraction", [](auto& v, auto& k, Campaign& c) { c.base.ls.fraction = value_as<double>(v, k); }},
        {"local_search.trials", [](auto& v, auto& k, Campaign& c) { c.base.ls.trials = value_as<unsigned>(v, k); }},
        {"local_search.period",
            [](auto& v, auto& k, Campaign& c) { c.base.ls.period = value_as<std::size_t>(v, k); }},
        {"campaign.runs", [](auto& v, auto& k, Campaign& c) { c.num_runs = value_as<std::size_t>(v, k); }},
        {"campaign.seed_base", [](auto& v, auto& k, Campaign& c) { c.seed_base = value_as<std::uint64_t>(v, k); }},
        {"campaign.workers", [](auto& v, auto& k, Campaign& c) { c.workers = value_as<std::size_t>(v, k); }},
    };
    return table;
}

} // namespace

void apply_config_text(const std::string& text, Campaign& campaign)
{
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    for (const auto& [section, entries] : tree) {
        if (entries.empty() && !entries.data().empty()) {
            throw ConfigError("config key '" + section + "' must be inside a section");
        }
        for (const auto& [key, value] : entries) {
            const std::string full = section + "." + key;
            const auto it = setters().find(full);
            if (it == setters().end()) {
                throw ConfigError("unknown config key '" + full + "'");
            }
            try {
                it->second(value, full, campaign);
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError("config key '" + full + "': " + e.what());
            }
        }
    }
}

void apply_config_file(const std::filesystem::path& path, Campaign& campaign)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_text(text.str(), campaign);
}

} // namespace boolsearch
