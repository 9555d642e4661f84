// Deterministic depth-first backtracking over three search spaces
// (integer sequences generated gap by gap, interval colorings, interval
// covers), pruned by filters, with bounded depth, an iteration budget,
// checkpoint/resume, and prefix-split work partitioning.
//
// Counting model (the "recursion tree size"): the seed counts as one
// generated node at its own depth and is filter-checked in full; every
// generated child counts one iteration at the moment of generation and
// is checked incrementally; only passing children are extended; nodes at
// max_depth are generated, counted, and checked but never extended.
// Children are generated in a fixed order — the alphabet order for
// sequences, color id order for colorings, increasing indicator masks
// for covers — so identical configurations produce identical counters,
// best objects, and reports.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dap/filters.hpp"

namespace dap {

// One of the three object families plus its branching data and seed.
struct SearchSpace {
    SpaceKind kind = SpaceKind::sequences;
    std::vector<int> alphabet;  // sequences: gap symbols in extension order
    int color_count = 0;        // colorings
    int set_count = 0;          // covers
    GapWord seed_gaps;
    Coloring seed_coloring;
    CoverWord seed_cover;
};

SearchSpace sequence_space(std::vector<int> alphabet, GapWord seed = {});
SearchSpace coloring_space(int color_count, Coloring seed = {});
SearchSpace cover_space(int set_count, CoverWord seed = {});

// Restrict a run to the chunk_index-th of chunk_count contiguous slices
// of the passing depth-`depth` prefixes (1-based index). Slice i covers
// prefixes [(i-1)*L/n, i*L/n) of the L prefixes in traversal order.
struct SplitSpec {
    int depth = 0;
    int chunk_index = 1;
    int chunk_count = 1;

    bool operator==(const SplitSpec&) const = default;
};

struct RunConfig {
    SearchSpace space;
    std::vector<FilterSpec> filters;
    std::optional<int> max_depth;
    std::optional<long long> max_iterations;  // budget; not part of the digest
    std::optional<SplitSpec> split;
    // Chunk runs of a split start from prefixes that the stem run has
    // already counted, so they skip counting (and re-counting) their
    // roots. Cleared automatically when split is set.
    bool count_seed = true;
    bool target_max_length = true;
    bool target_counts_per_length = true;
};

struct RunCounters {
    long long iterations = 0;
    std::vector<long long> generated_per_depth;
    std::vector<long long> passing_per_depth;

    bool operator==(const RunCounters&) const = default;
};

struct RunResult {
    RunCounters counters;
    bool complete = true;  // false: stopped by the iteration budget
    int best_depth = -1;   // -1: no passing node seen
    std::vector<int> best_elements;
    double seconds = 0.0;
};

// Hex digest of everything that determines the traversal (space, seed,
// filters, max_depth, split, count_seed) — deliberately excluding the
// iteration budget, so a resumed run may raise it.
std::string config_digest(const RunConfig& config);
// Digest ignoring the split field: chunk reports of the same logical run
// share it, and merging matches on it.
std::string base_digest(const RunConfig& config);

// Traversal snapshot at a node boundary. Replaying `path` (branch
// indices) below root number `slice_position` of the run's root list
// reproduces the node; `next_branch` is the first branch not yet
// generated there. An exhausted run saves complete = true.
struct Checkpoint {
    std::string digest;
    int slice_position = 0;
    std::vector<int> path;
    int next_branch = 0;
    bool complete = false;
    RunCounters counters;
    int best_depth = -1;
    std::vector<int> best_elements;
    double seconds = 0.0;

    bool operator==(const Checkpoint&) const = default;
};

// Line-oriented text format; round-trips byte for byte.
void write_checkpoint(std::ostream& out, const Checkpoint& checkpoint);
Checkpoint read_checkpoint(std::istream& in);

// Runs to completion or until the budget is exhausted. Throws
// std::invalid_argument for inconsistent configurations and for a seed
// that fails its full filter checks.
RunResult run_search(const RunConfig& config);

// As above, resuming from and/or producing a checkpoint. A non-null
// resume_from must carry this configuration's digest. A non-null save_to
// receives the final snapshot (complete or not).
RunResult run_search(const RunConfig& config, const Checkpoint* resume_from,
                     Checkpoint* save_to);

// All passing depth-`depth` nodes in traversal order, as element lists
// (gap symbols / colors / masks). The split field of the configuration
// is ignored here.
std::vector<std::vector<int>> enumerate_prefixes(const RunConfig& config, int depth);

}  // namespace dap
