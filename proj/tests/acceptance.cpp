// Acceptance checks for the search engine and its published reference
// values. Each numbered criterion prints exactly one PASS/FAIL line;
// the process exits nonzero if any criterion fails. All numeric checks
// are exact integer comparisons -- no tolerances apply anywhere.
//
// Expected total runtime is about a minute, dominated by the worked
// 4-coloring example (criterion 8) and the depth-7 tree count
// (criterion 4).

#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dap/core.hpp"
#include "dap/engine.hpp"
#include "dap/oracle.hpp"
#include "dap/reportio.hpp"
#include "dap/script.hpp"

using namespace dap;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<std::string()>& body) {
    std::string detail;
    bool ok = false;
    try {
        detail = body();
        ok = true;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << number << ": " << title;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

[[noreturn]] void reject(const std::string& what) { throw std::runtime_error(what); }

void expect(bool ok, const std::string& what) {
    if (!ok) reject(what);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    expect(in.good(), "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<int> iota_alphabet(int n) {
    std::vector<int> alphabet(static_cast<std::size_t>(n));
    std::iota(alphabet.begin(), alphabet.end(), 1);
    return alphabet;
}

FilterSpec filter_spec(const std::string& name,
                       std::map<std::string, std::vector<int>> parameters = {}) {
    FilterSpec spec;
    spec.name = name;
    spec.parameters = std::move(parameters);
    return spec;
}

RunConfig gap17_run(int max_depth) {
    RunConfig config;
    config.space = sequence_space(iota_alphabet(17));
    config.filters = {filter_spec("no-double-aps", {{"k", {3}}})};
    config.max_depth = max_depth;
    return config;
}

void expect_w_star(const WStarQuery& query, int expected) {
    const WStarResult result = w_star(query);
    expect(result.exact && result.value == expected,
           format_w_star_query(query) + " = " +
               (result.exact ? std::to_string(result.value)
                             : "> " + std::to_string(query.bound)) +
               ", expected " + std::to_string(expected));
}

// Walks every passing node of the bounded tree and confirms that the
// incremental verdict for each generated child equals a full check.
void agreement_walk(SearchState& state, const Filter& filter, int max_depth,
                    long long& edges) {
    if (state.depth() >= max_depth) return;
    for (int branch = 0; branch < state.branch_count(); ++branch) {
        const int element = state.element_at_branch(branch);
        const bool incremental = filter.check_append(state, element);
        state.push(element);
        const bool full = !filter.check_full(state).has_value();
        expect(incremental == full, "incremental/full disagreement for " +
                                        filter.display_name() + " at depth " +
                                        std::to_string(state.depth()));
        ++edges;
        if (full) agreement_walk(state, filter, max_depth, edges);
        state.pop();
    }
}

std::string data_path(const std::string& name) {
    return std::string(DAP_DATA_DIR) + "/" + name;
}

}  // namespace

int main() {
    criterion(1, "published witness colorings contain no monochromatic double 3-AP", [] {
        const std::string small = read_file(data_path("coloring-2c-16.txt"));
        const WitnessReport small_report = verify_witness_coloring(small, 3);
        expect(small_report.pass, "16-position 2-coloring failed");
        expect(small_report.coloring.length() == 16, "16-position file has wrong length");

        const std::string big = read_file(data_path("coloring-3c-413.txt"));
        const WitnessReport big_report = verify_witness_coloring(big, 3);
        expect(big_report.pass, "413-position 3-coloring failed");
        expect(big_report.coloring.length() == 413, "413-position file has wrong length");
        expect(big_report.coloring.color_count == 3, "413-position file not 3 colors");
        return std::string("lengths 16 and 413");
    });

    criterion(2, "every 2-coloring of [1,17] has a monochromatic double 3-AP", [] {
        const WStarResult result = w_star(plain_query(2, 3));
        expect(result.exact && result.value == 17,
               "w*(2,3) computed as " + std::to_string(result.value));
        expect(coloring_to_digits(result.longest_free) == "0010110100101101",
               "unexpected longest free coloring");
        return std::string("w*(2,3) = 17");
    });

    criterion(3, "additive-square-free words over {1,2,3} reach exactly length 7", [] {
        // Plain enumeration of all 3^8 words of length 8 (and every
        // shorter length by prefix), tracking the longest free one.
        int longest = 0;
        std::vector<std::vector<int>> layer{{}};
        for (int length = 1; length <= 8; ++length) {
            std::vector<std::vector<int>> next;
            for (const auto& word : layer)
                for (int symbol = 1; symbol <= 3; ++symbol) {
                    std::vector<int> child = word;
                    child.push_back(symbol);
                    if (!find_additive_power(gap_word(child, {1, 2, 3}), 2))
                        next.push_back(child);
                }
            if (!next.empty()) longest = length;
            layer = std::move(next);
        }
        expect(longest == 7, "enumeration found max length " + std::to_string(longest));

        const AdditiveFreeResult oracle = max_additive_power_free_length({1, 2, 3}, 2, 8);
        expect(oracle.length == 7 && !oracle.capped,
               "backtracking oracle found " + std::to_string(oracle.length));
        return std::string("max length 7, both methods");
    });

    criterion(4, "bounded-depth recursion tree sizes, gaps {1..17}, depths 0-7", [] {
        const long long expected[] = {1,     18,      307,      4931,
                                      78915, 1216147, 18695275, 278661995};
        for (int depth = 0; depth <= 7; ++depth) {
            const RunResult result = run_search(gap17_run(depth));
            expect(result.complete, "depth " + std::to_string(depth) + " incomplete");
            expect(result.counters.iterations == expected[depth],
                   "depth " + std::to_string(depth) + " counted " +
                       std::to_string(result.counters.iterations) + ", expected " +
                       std::to_string(expected[depth]));
        }
        return std::string("8 exact totals up to 278661995");
    });

    criterion(5, "least always-hit intervals with a uniform per-color gap cap", [] {
        expect_w_star(uniform_gap_query(3, 3, 2), 11);
        expect_w_star(uniform_gap_query(3, 3, 3), 22);
        expect_w_star(uniform_gap_query(3, 3, 4, 45), 39);
        return std::string("d=2,3,4 -> 11, 22, 39");
    });

    criterion(6, "least always-hit intervals, two colors with per-color gap caps", [] {
        expect_w_star(gapped_query(3, {2, 2}), 7);
        expect_w_star(gapped_query(3, {3, 2}), 11);
        expect_w_star(gapped_query(3, {3, 3}), 17);
        expect_w_star(gapped_query(4, {2, 2}), 11);
        expect_w_star(gapped_query(4, {3, 2}), 22);
        expect_w_star(gapped_query(5, {2, 2}), 15);
        expect_w_star(gapped_query(5, {3, 2}, 45), 37);
        return std::string("7 exact values");
    });

    criterion(7, "three-color gap caps, including color-permutation invariance", [] {
        expect_w_star(gapped_query(3, {3, 3, 3}), 22);
        expect_w_star(gapped_query(3, {3, 4, 3}), 31);
        expect_w_star(gapped_query(3, {3, 4, 4}), 31);
        expect_w_star(gapped_query(3, {3, 5, 5}, 50), 43);

        for (std::vector<int> gaps : {std::vector<int>{3, 3, 4}, std::vector<int>{4, 3, 3}})
            expect_w_star(gapped_query(3, gaps), 31);
        for (std::vector<int> gaps : {std::vector<int>{5, 3, 5}, std::vector<int>{5, 5, 3}})
            expect_w_star(gapped_query(3, gaps, 50), 43);
        return std::string("22, 31, 31, 43; permutations agree");
    });

    criterion(8, "the worked 4-coloring example script finds max length 56", [] {
        const std::string text = read_file(std::string(DAP_SCRIPTS_DIR) +
                                           "/mono-rainbow-colorings.script");
        const ScriptResult result = execute_script(parse_script(text));
        expect(result.runs.size() == 1, "expected exactly one search");
        expect(result.all_complete(), "search did not complete");
        const RunResult& run = result.runs[0].result;
        expect(run.best_depth == 56,
               "max length " + std::to_string(run.best_depth) + ", expected 56");
        expect(result.report.find("Max. coloring (len    56): ") != std::string::npos,
               "report lacks the max-coloring line");
        // The published iteration count (4546107) is recorded for
        // comparison but deliberately not asserted: it depends on
        // traversal details such as symmetry pruning.
        return "len 56; recorded iterations " + std::to_string(run.counters.iterations) +
               " (published: 4546107)";
    });

    criterion(9, "property suites: equivalence, agreement, pullback, split, resume", [] {
        // (a) Additive square in the gap word <=> double 3-AP in the
        // sequence; exhaustive to length 8, then 1000 random words.
        std::vector<std::vector<int>> layer{{}};
        for (int length = 0; length <= 8; ++length) {
            if (length > 0) {
                std::vector<std::vector<int>> next;
                for (const auto& word : layer)
                    for (int symbol = 1; symbol <= 3; ++symbol) {
                        std::vector<int> child = word;
                        child.push_back(symbol);
                        next.push_back(child);
                    }
                layer = std::move(next);
            }
            for (const auto& word : layer) {
                const GapWord w = gap_word(word, {1, 2, 3});
                expect(find_additive_power(w, 2).has_value() ==
                           find_double_ap(gaps_to_sequence(w, 1), 3).has_value(),
                       "equivalence broke on an exhaustive word");
            }
        }
        std::mt19937 rng(20260825);
        std::uniform_int_distribution<int> pick_symbol(1, 9);
        std::uniform_int_distribution<int> pick_length(1, 40);
        std::uniform_int_distribution<int> pick_power(2, 4);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int> word(static_cast<std::size_t>(pick_length(rng)));
            for (int& symbol : word) symbol = pick_symbol(rng);
            const int power = pick_power(rng);
            const GapWord w = gap_word(word);
            expect(find_additive_power(w, power).has_value() ==
                       find_double_ap(gaps_to_sequence(w, 1), power + 1).has_value(),
                   "equivalence broke on a random word");
        }

        // (b) Incremental/full filter agreement on exhaustive instances.
        long long edges = 0;
        for (const auto& spec :
             {filter_spec("no-double-aps", {{"k", {3}}}), filter_spec("no-additive-squares"),
              filter_spec("no-additive-cubes")}) {
            const auto filter = make_filter(spec);
            SearchState state = SearchState::for_sequences({1, 2, 3}, GapWord{});
            agreement_walk(state, *filter, 7, edges);
        }
        for (const auto& spec :
             {filter_spec("no-mono-double-aps", {{"k", {3}}}),
              filter_spec("no-n-aps", {{"k", {3}}}), filter_spec("no-rainbow-aps", {{"k", {2}}}),
              filter_spec("max-class-gaps", {{"max-gaps", {3, 4}}})}) {
            const auto filter = make_filter(spec);
            SearchState state = SearchState::for_colorings(2, Coloring{{}, 2});
            agreement_walk(state, *filter, 10, edges);
        }

        // (c) Pullback soundness on 1000 random sequences.
        std::uniform_int_distribution<int> pick_gap(1, 5);
        std::uniform_int_distribution<int> pick_m(1, 3);
        int pulled = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int> terms = {1};
            for (int i = 0; i < 30; ++i) terms.push_back(terms.back() + pick_gap(rng));
            const IncreasingSequence x = increasing_sequence(terms);
            const int m = pick_m(rng);
            const IncreasingSequence z = block_transform(x, m);
            const auto in_z = find_double_ap(z, 3);
            if (!in_z) continue;
            const ApWitness in_x = pullback_double_ap(*in_z, m);
            const auto term_at = [&](int p) {
                return x.terms[static_cast<std::size_t>(p) - 1];
            };
            const int p = in_x.positions[0], q = in_x.positions[1], r = in_x.positions[2];
            expect(q - p == r - q && term_at(p) + term_at(r) == 2 * term_at(q) &&
                       r <= static_cast<int>(x.terms.size()),
                   "a pulled-back witness is not a double AP");
            ++pulled;
        }
        expect(pulled > 100, "pullback property was not exercised");

        // (d) Split/merge equals the unsplit depth-4 run.
        const RunConfig whole = gap17_run(4);
        const RunResult unsplit = run_search(whole);
        RunConfig stem = whole;
        stem.max_depth = 1;
        std::vector<RunReport> reports{report_from_run(stem, run_search(stem))};
        for (int index = 1; index <= 17; ++index) {
            RunConfig chunk = whole;
            chunk.split = SplitSpec{1, index, 17};
            reports.push_back(report_from_run(chunk, run_search(chunk)));
        }
        const RunReport merged = merge_reports(reports);
        expect(merged.counters == unsplit.counters && merged.complete &&
                   merged.best_elements == unsplit.best_elements,
               "merged split run differs from the unsplit run");

        // (e) Checkpoint/resume counter equality on the depth-3 run.
        const RunConfig config = gap17_run(3);
        const RunResult straight = run_search(config);
        RunConfig limited = config;
        limited.max_iterations = 1000;
        Checkpoint snapshot;
        bool have = false;
        RunResult resumed;
        for (;;) {
            const Checkpoint before = snapshot;
            resumed = run_search(limited, have ? &before : nullptr, &snapshot);
            have = true;
            if (resumed.complete) break;
            limited.max_iterations = *limited.max_iterations + 1000;
        }
        expect(resumed.counters == straight.counters &&
                   resumed.best_elements == straight.best_elements,
               "resumed run differs from the straight run");

        return "agreement edges " + std::to_string(edges) + ", pullbacks " +
               std::to_string(pulled);
    });

    criterion(10, "frontier-scale searches stay out of scope but run as bounds", [] {
        // The multi-trillion-iteration hunts behind the largest published
        // artifacts (the 413-position witness search, the 30830-position
        // 2-coloring for k=4, uniform-cap d=6, and the 2207/5234-term
        // sequence records) are exercised here only as budgeted runs:
        // the engine executes them and reports bounds, asserting nothing
        // about their true maxima.
        const WStarResult k4 = w_star(plain_query(2, 4, 40));
        expect(!k4.exact && k4.longest_free_length == 40,
               "double 4-APs: expected free 2-colorings through length 40");

        const WStarResult d6 = w_star(uniform_gap_query(3, 3, 6, 60));
        expect(!d6.exact, "uniform cap 6: expected free colorings at the ceiling");

        RunConfig open_run;
        open_run.space = sequence_space(iota_alphabet(17));
        open_run.filters = {filter_spec("no-double-aps", {{"k", {3}}})};
        open_run.max_iterations = 3000000;
        Checkpoint snapshot;
        const RunResult bounded = run_search(open_run, nullptr, &snapshot);
        expect(!bounded.complete, "the unbounded-depth run should exhaust its budget");
        expect(bounded.best_depth >= 100,
               "expected a triple-digit free sequence within the budget");
        expect(!snapshot.complete && snapshot.counters.iterations == 3000000,
               "checkpoint should reflect the exhausted budget");
        return "free sequence of length " + std::to_string(bounded.best_depth) +
               " within 3e6 iterations; longer runs are bounds only";
    });

    if (failures == 0) {
        std::cout << "acceptance: all 10 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
