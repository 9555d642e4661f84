// Deterministic data exports: CSV emitters for the two plotted
// quantities (passing-node counts per length, gap histograms of a best
// sequence) and a JSON run-report format used by the split/merge
// workflow.
//
// A split search produces one "stem" report (the run truncated at the
// split depth) plus one report per chunk (the subtrees below that
// chunk's slice of passing prefixes). merge_reports recombines them into
// the report an unsplit run would have produced: summed counters,
// deepest best object, first-found tie-breaking.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dap/engine.hpp"

namespace dap {

// Header "depth,count", one row per object length, LF line endings.
void write_depth_counts_csv(std::ostream& out,
                            const std::vector<long long>& passing_per_depth);

// Header "gap,frequency", one row per distinct gap size, ascending.
void write_gap_histogram_csv(std::ostream& out, const std::vector<int>& gaps);

struct RunReport {
    std::string base;  // digest of space + seed + filters: the merge key
    SpaceKind kind = SpaceKind::sequences;
    int class_count = 0;  // colors or sets; 0 for sequences
    std::optional<int> max_depth;
    std::optional<SplitSpec> split;  // absent for full and stem runs
    bool complete = true;
    RunCounters counters;
    int best_depth = -1;
    std::vector<int> best_elements;
    double seconds = 0.0;
    std::vector<std::string> filter_names;  // display names, informational
};

RunReport report_from_run(const RunConfig& config, const RunResult& result);

void write_run_report(std::ostream& out, const RunReport& report);
RunReport read_run_report(std::istream& in);

// Requires exactly one stem (no split field, max_depth equal to the
// chunks' split depth) and chunks 1..n each exactly once, all with the
// same base digest. Throws std::invalid_argument otherwise.
RunReport merge_reports(std::vector<RunReport> reports);

}  // namespace dap
