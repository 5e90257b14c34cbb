#include "boolsearch/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace boolsearch {

using Json = nlohmann::ordered_json;

void Campaign::validate() const
{
    if (num_runs < 1) {
        throw ConfigError("a campaign needs at least one run");
    }
    if (workers < 1) {
        throw ConfigError("a campaign needs at least one worker");
    }
    base.validate();
}

SummaryRow summarize(const std::string& label, std::span<const double> values)
{
    SummaryRow row{label, values.size(), 0.0, 0.0, 0.0};
    if (values.empty()) {
        return row;
    }
    row.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    row.avg = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double squares = 0.0;
        for (double v : values) {
            squares += (v - row.avg) * (v - row.avg);
        }
        row.std = std::sqrt(squares / static_cast<double>(values.size() - 1));
    }
    return row;
}

SummaryRow summarize(std::span<const RunRecord> records)
{
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& r : records) {
        values.push_back(r.best.value());
    }
    return summarize(records.empty() ? std::string{} : records.front().label, values);
}

std::vector<RunRecord> run_with_seeds(
    const RunConfig& base, std::span<const std::uint64_t> seeds, std::size_t workers, const RunCallback& on_done)
{
    base.validate();
    std::vector<RunRecord> records(seeds.size());
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) {
                return;
            }
            try {
                RunConfig cfg = base;
                cfg.seed = seeds[i];
                RunRecord record = run(cfg, i);
                std::lock_guard lock(mutex);
                records[i] = std::move(record);
                if (on_done) {
                    on_done(records[i]);
                }
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = seeds.size();
                return;
            }
        }
    };

    const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(seeds.size(), 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

CampaignResult run_campaign(const Campaign& c, const RunCallback& on_done)
{
    c.validate();
    std::vector<std::uint64_t> seeds(c.num_runs);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        seeds[i] = c.seed_base + i;
    }
    CampaignResult result;
    result.records = run_with_seeds(c.base, seeds, c.workers, on_done);
    result.summary = summarize(result.records);
    return result;
}

// --- JSON -------------------------------------------------------------------------

namespace {

Json config_to_json(const RunConfig& c)
{
    Json j;
    j["n"] = c.n;
    j["encoding"] = encoding_name(c.encoding);
    j["rs"] = c.rotation_symmetric;
    j["algorithm"] = algorithm_name(c.algorithm);
    j["population"] = c.population_size;
    j["p_mut"] = c.p_mut;
    j["budget"] = c.evaluation_budget;
    j["seed"] = c.seed;
    j["decode"] = c.decode;
    j["max_depth"] = c.tree.max_depth;
    j["max_nodes"] = c.tree.max_nodes;
    j["de_f"] = c.de.scale;
    j["de_cr"] = c.de.crossover_rate;
    j["de_population"] = c.de.population_size;
    j["ls"] = ls_name(c.ls.variant);
    j["ls_fraction"] = c.ls.fraction;
    j["ls_trials"] = c.ls.trials;
    j["ls_period"] = c.ls.period;
    j["target"] = c.target_nonlinearity ? Json(*c.target_nonlinearity) : Json(nullptr);
    j["time_limit"] = c.time_limit_seconds ? Json(*c.time_limit_seconds) : Json(nullptr);
    return j;
}

RunConfig config_from_json(const Json& j)
{
    RunConfig c;
    c.n = j.at("n").get<int>();
    c.encoding = parse_encoding(j.at("encoding").get<std::string>());
    c.rotation_symmetric = j.at("rs").get<bool>();
    c.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    c.population_size = j.at("population").get<std::size_t>();
    c.p_mut = j.at("p_mut").get<double>();
    c.evaluation_budget = j.at("budget").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.decode = j.at("decode").get<int>();
    c.tree.max_depth = j.at("max_depth").get<int>();
    c.tree.max_nodes = j.at("max_nodes").get<std::size_t>();
    c.de.scale = j.at("de_f").get<double>();
    c.de.crossover_rate = j.at("de_cr").get<double>();
    c.de.population_size = j.at("de_population").get<std::size_t>();
    c.ls.variant = parse_ls_variant(j.at("ls").get<std::string>());
    c.ls.fraction = j.at("ls_fraction").get<double>();
    c.ls.trials = j.at("ls_trials").get<unsigned>();
    c.ls.period = j.at("ls_period").get<std::size_t>();
    if (!j.at("target").is_null()) {
        c.target_nonlinearity = j.at("target").get<int>();
    }
    if (!j.at("time_limit").is_null()) {
        c.time_limit_seconds = j.at("time_limit").get<double>();
    }
    return c;
}

} // namespace

std::string record_to_json_line(const RunRecord& r, bool include_timing)
{
    Json j;
    j["label"] = r.label;
    j["run"] = r.run_index;
    j["seed"] = r.config.seed;
    j["n"] = r.config.n;
    j["evaluations"] = r.evaluations;
    j["stop"] = stop_reason_name(r.stop_reason);
    j["nonlinearity"] = r.best.nonlinearity;
    j["num_max_values"] = r.best.num_max_values;
    j["fitness"] = r.best.value();
    j["truth_table"] = r.truth_table_hex;
    j["rotation_symmetric"] = r.rotation_symmetric;
    j["genotype"] = r.best_genotype;
    Json trajectory = Json::array();
    for (const auto& p : r.trajectory) {
        trajectory.push_back(Json::array({p.evaluations, p.fitness.nonlinearity, p.fitness.num_max_values}));
    }
    j["trajectory"] = std::move(trajectory);
    j["config"] = config_to_json(r.config);
    if (include_timing) {
        j["elapsed_seconds"] = r.elapsed_seconds;
    }
    return j.dump();
}

RunRecord record_from_json_line(const std::string& line)
{
    const Json j = Json::parse(line);
    RunRecord r;
    r.label = j.at("label").get<std::string>();
    r.run_index = j.at("run").get<std::size_t>();
    r.config = config_from_json(j.at("config"));
    r.evaluations = j.at("evaluations").get<std::uint64_t>();
    r.stop_reason = parse_stop_reason(j.at("stop").get<std::string>());
    r.best = Fitness{r.config.n, j.at("nonlinearity").get<int>(), j.at("num_max_values").get<std::uint32_t>()};
    r.truth_table_hex = j.at("truth_table").get<std::string>();
    r.rotation_symmetric = j.at("rotation_symmetric").get<bool>();
    r.best_genotype = j.at("genotype").get<std::string>();
    for (const auto& p : j.at("trajectory")) {
        r.trajectory.push_back(TrajectoryPoint{
            p.at(0).get<std::uint64_t>(), Fitness{r.config.n, p.at(1).get<int>(), p.at(2).get<std::uint32_t>()}});
    }
    if (j.contains("elapsed_seconds")) {
        r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    }
    return r;
}

void write_jsonl(std::ostream& out, std::span<const RunRecord> records, bool include_timing)
{
    for (const auto& r : records) {
        out << record_to_json_line(r, include_timing) << '\n';
    }
}

std::vector<RunRecord> read_jsonl(std::istream& in)
{
    std::vector<RunRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        out.push_back(record_from_json_line(line));
    }
    return out;
}

std::string format_double(double value)
{
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows)
{
    out << "label,runs,max,avg,std\n";
    for (const auto& row : rows) {
        out << row.label << ',' << row.runs << ',' << format_double(row.max) << ',' << format_double(row.avg) << ','
            << format_double(row.std) << '\n';
    }
}

void export_boxplot_csv(std::ostream& out, std::span<const RunRecord> records)
{
    if (records.empty()) {
        throw std::invalid_argument("no run records to export");
    }
    std::map<std::string, std::vector<double>> columns;
    for (const auto& r : records) {
        columns[r.label].push_back(r.best.value());
    }
    std::size_t rows = 0;
    bool first = true;
    for (const auto& [label, values] : columns) {
        out << (first ? "" : ",") << label;
        first = false;
        rows = std::max(rows, values.size());
    }
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        first = true;
        for (const auto& [label, values] : columns) {
            out << (first ? "" : ",");
            first = false;
            if (i < values.size()) {
                out << format_double(values[i]);
            }
        }
        out << '\n';
    }
}

} // namespace boolsearch
