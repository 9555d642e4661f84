// The declarative scripting language that configures and launches
// searches. A script is a line-oriented list of commands:
//
//   # comment to end of line
//   echo <text>                      -> copied into the report verbatim
//   set <key> <value>                -> environment parameter
//   filter <name>                    -> add a filter (parameters resolve
//                                       from the environment at search time)
//   target <name>                    -> max-length | counts-per-length
//   dump <name>                      -> counts-per-length | gap-histogram CSV
//   seed <literal>                   -> e.g. [[] [] [] []] or [1 2 1]
//   search <space>                   -> sequences | colorings | covers
//
// Environment keys: n-colors, ap-length, gap-alphabet, gap-order,
// max-gaps, additive-power, max-depth, max-iterations, split-depth,
// chunk. Values are integers, ranges "a..b", or lists "[x y z]";
// "set chunk i n" takes the two integers bare.
//
// The interpreter is deterministic: executing the same script twice
// yields identical reports except for the wall-clock "Time taken" line.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dap/engine.hpp"

namespace dap {

struct Command {
    enum class Verb { echo, set, filter, target, search, seed, dump };

    Verb verb = Verb::echo;
    std::string name;  // set key, filter/target/dump name, search space
    std::string text;  // echo text, set value, seed literal
    int line = 0;      // diagnostics only, not part of command identity

    bool operator==(const Command& other) const {
        return verb == other.verb && name == other.name && text == other.text;
    }
};

// One command per nonempty non-comment line. Errors carry line numbers.
std::vector<Command> parse_script(std::string_view text);

// Canonical rendering; parse_script(render_script(c)) == c up to line
// numbers.
std::string render_script(const std::vector<Command>& commands);

struct ExecuteOptions {
    std::optional<long long> max_iterations_override;
    // Checkpoint plumbing; only legal for scripts with exactly one
    // search command.
    const Checkpoint* resume_from = nullptr;
    Checkpoint* save_to = nullptr;
    // Where `dump` writes its CSV files.
    std::string dump_directory = ".";
};

struct RunRecord {
    RunConfig config;
    RunResult result;
};

struct ScriptResult {
    std::string report;
    std::vector<RunRecord> runs;

    bool all_complete() const {
        for (const RunRecord& run : runs)
            if (!run.result.complete) return false;
        return true;
    }
};

ScriptResult execute_script(const std::vector<Command>& commands,
                            const ExecuteOptions& options = {});

// Object literals as used by `seed` and the report: a gap list for
// sequences, per-class position lists for colorings and covers.
std::string render_coloring_classes(const Coloring& coloring);
std::string render_cover_classes(const CoverWord& cover);
std::string render_gap_list(const std::vector<int>& gaps);

}  // namespace dap
