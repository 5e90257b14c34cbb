#pragma once

#include <filesystem>
#include <string>

#include "boolsearch/campaign.hpp"

namespace boolsearch {

/// Reads INI-style settings into `campaign` (and its base RunConfig),
/// leaving keys that are absent untouched. Recognised sections and keys:
///
///   [problem]       n, encoding (tt|fp|gp), rs, decode, max_depth, max_nodes
///   [algorithm]     name (sst|de), population, p_mut, budget, seed, target,
///                   time_limit, de_f, de_cr, de_population
///   [local_search]  variant (none|ls1|ls2|ls3), fraction, trials, period
///   [campaign]      runs, seed_base, workers
///
/// Unknown sections or keys and unparsable values throw ConfigError.
void apply_config_text(const std::string& text, Campaign& campaign);
void apply_config_file(const std::filesystem::path& path, Campaign& campaign);

} // namespace boolsearch
