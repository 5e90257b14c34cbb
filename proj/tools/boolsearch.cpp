// Command-line front end: single searches, multi-run campaigns and utilities
// for checking functions, orbits and bounds.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"

#include "boolsearch/bounds.hpp"
#include "boolsearch/campaign.hpp"
#include "boolsearch/config_file.hpp"
#include "boolsearch/orbits.hpp"
#include "boolsearch/verify.hpp"

namespace fs = std::filesystem;
using namespace boolsearch;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Search settings given on the command line; they win over the config file.
struct SearchFlags {
    std::optional<std::string> config;
    std::optional<int> n;
    std::optional<std::string> encoding;
    bool rs = false;
    std::optional<std::string> algorithm;
    std::optional<std::size_t> population;
    std::optional<double> p_mut;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    std::optional<int> decode;
    std::optional<int> max_depth;
    std::optional<std::size_t> max_nodes;
    std::optional<double> de_f;
    std::optional<double> de_cr;
    std::optional<std::size_t> de_population;
    std::optional<std::string> ls;
    std::optional<double> ls_fraction;
    std::optional<unsigned> ls_trials;
    std::optional<std::size_t> ls_period;
    std::optional<std::string> target;
    std::optional<double> time_limit;
    bool record_time = false;
};

void add_search_flags(CLI::App& app, SearchFlags& f)
{
    app.add_option("--config", f.config, "INI config file; flags override its values");
    app.add_option("--n", f.n, "Number of input variables");
    app.add_option("--encoding", f.encoding, "Genotype encoding: tt (bitstring), fp (floating point), gp (tree)");
    app.add_flag("--rs", f.rs, "Search rotation-symmetric functions only (tt and fp)");
    app.add_option("--algorithm", f.algorithm, "Optimizer: sst (steady-state tournament) or de (fp only)");
    app.add_option("--population", f.population, "Population size for sst (default 500)");
    app.add_option("--p-mut", f.p_mut, "Mutation probability of a new child (default 0.5)");
    app.add_option("--budget", f.budget, "Fitness evaluations per run (default 1000000)");
    app.add_option("--seed", f.seed, "Random seed");
    app.add_option("--decode", f.decode, "Bits per real value for fp (default 3)");
    app.add_option("--max-depth", f.max_depth, "Maximum tree depth for gp (default 7)");
    app.add_option("--max-nodes", f.max_nodes, "Maximum tree size for gp (default 500)");
    app.add_option("--de-f", f.de_f, "DE scale factor F (default 0.5)");
    app.add_option("--de-cr", f.de_cr, "DE crossover rate CR (default 0.9)");
    app.add_option("--de-population", f.de_population, "DE population size (default 50)");
    app.add_option("--ls", f.ls, "Local search: none, ls1, ls2, ls3");
    app.add_option("--ls-fraction", f.ls_fraction, "Share of the population receiving local search (default 0.05)");
    app.add_option("--ls-trials", f.ls_trials, "Failed mutations before ls1 gives up (default 25)");
    app.add_option("--ls-period", f.ls_period, "Steady-state steps between local search passes (default: population size)");
    app.add_option("--target", f.target,
        "Stop once this nonlinearity is reached: an integer or quadratic, best, upper");
    app.add_option("--time-limit", f.time_limit, "Wall-clock limit per run in seconds");
    app.add_flag("--record-time", f.record_time, "Include elapsed_seconds in JSON records (breaks byte-for-byte reproducibility)");
}

int resolve_target(const std::string& text, int n)
{
    if (text == "quadratic") {
        return quadratic_bound(n);
    }
    if (text == "best") {
        return bounds(n).best_known;
    }
    if (text == "upper") {
        return odd_upper_bound(n);
    }
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used == text.size()) {
            return value;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError("invalid --target '" + text + "'");
}

Campaign build_campaign(const SearchFlags& f)
{
    Campaign c;
    if (f.config) {
        apply_config_file(*f.config, c);
    }
    RunConfig& r = c.base;
    if (f.n) r.n = *f.n;
    if (f.encoding) r.encoding = parse_encoding(*f.encoding);
    if (f.rs) r.rotation_symmetric = true;
    if (f.algorithm) r.algorithm = parse_algorithm(*f.algorithm);
    if (f.population) r.population_size = *f.population;
    if (f.p_mut) r.p_mut = *f.p_mut;
    if (f.budget) r.evaluation_budget = *f.budget;
    if (f.seed) r.seed = *f.seed;
    if (f.decode) r.decode = *f.decode;
    if (f.max_depth) r.tree.max_depth = *f.max_depth;
    if (f.max_nodes) r.tree.max_nodes = *f.max_nodes;
    if (f.de_f) r.de.scale = *f.de_f;
    if (f.de_cr) r.de.crossover_rate = *f.de_cr;
    if (f.de_population) r.de.population_size = *f.de_population;
    if (f.ls) r.ls.variant = parse_ls_variant(*f.ls);
    if (f.ls_fraction) r.ls.fraction = *f.ls_fraction;
    if (f.ls_trials) r.ls.trials = *f.ls_trials;
    if (f.ls_period) r.ls.period = *f.ls_period;
    if (f.target) r.target_nonlinearity = resolve_target(*f.target, r.n);
    if (f.time_limit) r.time_limit_seconds = *f.time_limit;
    return c;
}

std::ofstream open_output(const fs::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    return out;
}

void print_record(const RunRecord& r)
{
    fmt::print("label: {}\nseed: {}\nevaluations: {}\nstopped_by: {}\nnonlinearity: {}\nfitness: {:.4f}\n"
               "num_max_values: {}\nrotation_symmetric: {}\ntruth_table: {}\ngenotype: {}\n",
        r.label, r.config.seed, r.evaluations, stop_reason_name(r.stop_reason), r.best.nonlinearity,
        r.best.value(), r.best.num_max_values, r.rotation_symmetric ? "yes" : "no", r.truth_table_hex,
        r.best_genotype);
}

void print_summary_table(const std::vector<SummaryRow>& rows)
{
    fmt::print("{:<14} {:>5} {:>10} {:>10} {:>8}\n", "label", "runs", "max", "avg", "std");
    for (const auto& row : rows) {
        fmt::print("{:<14} {:>5} {:>10.2f} {:>10.2f} {:>8.2f}\n", row.label, row.runs, row.max, row.avg, row.std);
    }
}

int cmd_search(const SearchFlags& flags, const std::optional<std::string>& out_path, bool json)
{
    const Campaign c = build_campaign(flags);
    const RunRecord record = run(c.base);
    if (json) {
        std::cout << record_to_json_line(record, flags.record_time) << '\n';
    } else {
        print_record(record);
    }
    if (out_path) {
        auto out = open_output(*out_path);
        out << record_to_json_line(record, flags.record_time) << '\n';
    }
    return 0;
}

struct CampaignFlags {
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> seed_base;
    std::optional<std::size_t> workers;
    std::string out_dir = "results";
    bool quiet = false;
};

int cmd_campaign(const SearchFlags& flags, const CampaignFlags& cf)
{
    Campaign c = build_campaign(flags);
    if (cf.runs) c.num_runs = *cf.runs;
    if (cf.seed_base) c.seed_base = *cf.seed_base;
    if (cf.workers) c.workers = *cf.workers;
    c.validate();

    const fs::path dir(cf.out_dir);
    // Open everything up front so I/O problems surface before the runs.
    auto jsonl = open_output(dir / "runs.jsonl");
    auto summary_csv = open_output(dir / "summary.csv");
    auto boxplot_csv = open_output(dir / "boxplot.csv");

    const auto result = run_campaign(c, [&](const RunRecord& r) {
        if (!cf.quiet) {
            std::fprintf(stderr, "run %zu (seed %llu): nl %d fitness %.4f after %llu evaluations\n", r.run_index,
                static_cast<unsigned long long>(r.config.seed), r.best.nonlinearity, r.best.value(),
                static_cast<unsigned long long>(r.evaluations));
        }
    });
    write_jsonl(jsonl, result.records, flags.record_time);
    const std::vector<SummaryRow> rows{result.summary};
    write_summary_csv(summary_csv, rows);
    export_boxplot_csv(boxplot_csv, result.records);
    if (!jsonl || !summary_csv || !boxplot_csv) {
        throw IoError("failed writing campaign output to " + dir.string());
    }
    print_summary_table(rows);
    return 0;
}

int cmd_verify(int n, const std::string& hex, bool json)
{
    const auto report = verify(hex, n);
    std::cout << (json ? report_to_json(report) + "\n" : format_report(report));
    return 0;
}

int cmd_orbits(int n)
{
    const auto orbits = compute_orbits(n);
    std::cout << orbits.num_orbits() << '\n';
    for (auto rep : orbits.representatives()) {
        std::cout << rep << '\n';
    }
    return 0;
}

int cmd_bounds(int n)
{
    const auto b = bounds(n);
    fmt::print("quadratic: {}\nbest_known: {}\nupper: {}\n", b.quadratic, b.best_known, b.upper);
    return 0;
}

int cmd_boxplot(const std::vector<std::string>& inputs, const std::string& out_path, const std::optional<std::string>& summary_path)
{
    std::vector<RunRecord> records;
    for (const auto& path : inputs) {
        std::ifstream in(path);
        if (!in) {
            throw IoError("cannot read " + path);
        }
        auto part = read_jsonl(in);
        records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    auto out = open_output(out_path);
    export_boxplot_csv(out, records);

    std::map<std::string, std::vector<RunRecord>> by_label;
    for (auto& r : records) {
        by_label[r.label].push_back(r);
    }
    std::vector<SummaryRow> rows;
    for (const auto& [label, group] : by_label) {
        rows.push_back(summarize(group));
    }
    if (summary_path) {
        auto summary = open_output(*summary_path);
        write_summary_csv(summary, rows);
    }
    print_summary_table(rows);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Evolutionary search for highly nonlinear Boolean functions"};
    app.require_subcommand(1);

    SearchFlags search_flags;
    std::optional<std::string> search_out;
    bool search_json = false;
    auto* search = app.add_subcommand("search", "Run a single search");
    add_search_flags(*search, search_flags);
    search->add_option("--out", search_out, "Also write the JSON record to this file");
    search->add_flag("--json", search_json, "Print the JSON record instead of the text summary");

    SearchFlags campaign_flags;
    CampaignFlags cf;
    auto* campaign = app.add_subcommand("campaign", "Run many seeded searches and summarise them");
    add_search_flags(*campaign, campaign_flags);
    campaign->add_option("--runs", cf.runs, "Number of runs (default 30)");
    campaign->add_option("--seed-base", cf.seed_base, "Run i uses seed seed-base + i (default 0)");
    campaign->add_option("--workers", cf.workers, "Concurrent runs (default 1)");
    campaign->add_option("--out-dir", cf.out_dir, "Directory for runs.jsonl, summary.csv, boxplot.csv");
    campaign->add_flag("--quiet", cf.quiet, "No per-run progress on stderr");

    int verify_n = 0;
    std::string verify_hex;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Report nonlinearity and related properties of a truth table");
    verify_cmd->add_option("--n", verify_n, "Number of input variables")->required();
    verify_cmd->add_option("--hex,hex", verify_hex, "Truth table in hex, first digit's high bit = f(0)")->required();
    verify_cmd->add_flag("--json", verify_json, "Print JSON");

    int orbits_n = 0;
    auto* orbits_cmd = app.add_subcommand("orbits", "Print g_n and the orbit representatives");
    orbits_cmd->add_option("--n", orbits_n, "Number of input variables")->required();

    int bounds_n = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Print the nonlinearity bounds for odd n");
    bounds_cmd->add_option("--n", bounds_n, "Number of input variables (7, 9, 11 or 13)")->required();

    std::vector<std::string> box_inputs;
    std::string box_out = "boxplot.csv";
    std::optional<std::string> box_summary;
    auto* boxplot_cmd = app.add_subcommand("boxplot", "Merge JSON-lines run logs into boxplot and summary CSVs");
    boxplot_cmd->add_option("inputs", box_inputs, "JSON-lines files")->required();
    boxplot_cmd->add_option("--out", box_out, "Boxplot CSV path");
    boxplot_cmd->add_option("--summary", box_summary, "Summary CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*search) {
            return cmd_search(search_flags, search_out, search_json);
        }
        if (*campaign) {
            return cmd_campaign(campaign_flags, cf);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_n, verify_hex, verify_json);
        }
        if (*orbits_cmd) {
            return cmd_orbits(orbits_n);
        }
        if (*bounds_cmd) {
            return cmd_bounds(bounds_n);
        }
        if (*boxplot_cmd) {
            return cmd_boxplot(box_inputs, box_out, box_summary);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
