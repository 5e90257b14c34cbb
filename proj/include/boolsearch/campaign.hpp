#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "boolsearch/run.hpp"

namespace boolsearch {

/// A batch of independent runs of one configuration. Run i uses seed
/// seed_base + i.
struct Campaign {
    RunConfig base;
    std::size_t num_runs = 30;
    std::uint64_t seed_base = 0;
    std::size_t workers = 1;

    void validate() const;
};

struct SummaryRow {
    std::string label;
    std::size_t runs = 0;
    double max = 0.0;
    double avg = 0.0;
    double std = 0.0; // sample standard deviation; 0 for a single run
};

SummaryRow summarize(const std::string& label, std::span<const double> values);
SummaryRow summarize(std::span<const RunRecord> records);

struct CampaignResult {
    std::vector<RunRecord> records; // ordered by run index
    SummaryRow summary;
};

// Called once per finished run, from the worker thread that ran it, under a
// lock.
using RunCallback = std::function<void(const RunRecord&)>;

// Runs `base` once per seed on up to `workers` threads. records[i] uses
// seeds[i] whatever the scheduling.
std::vector<RunRecord> run_with_seeds(
    const RunConfig& base, std::span<const std::uint64_t> seeds, std::size_t workers, const RunCallback& on_done = {});

CampaignResult run_campaign(const Campaign& c, const RunCallback& on_done = {});

// --- result files ---------------------------------------------------------------

// One JSON object per line. elapsed_seconds is written only when
// include_timing is set, so default output is reproducible byte for byte.
std::string record_to_json_line(const RunRecord& r, bool include_timing = false);
RunRecord record_from_json_line(const std::string& line);

void write_jsonl(std::ostream& out, std::span<const RunRecord> records, bool include_timing = false);
std::vector<RunRecord> read_jsonl(std::istream& in);

// label,runs,max,avg,std
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

// One column per label in sorted label order, one row per run; shorter
// columns are padded with empty cells. Throws on empty input.
void export_boxplot_csv(std::ostream& out, std::span<const RunRecord> records);

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

} // namespace boolsearch
