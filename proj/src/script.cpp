#include "dap/script.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dap/reportio.hpp"

namespace dap {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

const char* verb_word(Command::Verb verb) {
    switch (verb) {
        case Command::Verb::echo: return "echo";
        case Command::Verb::set: return "set";
        case Command::Verb::filter: return "filter";
        case Command::Verb::target: return "target";
        case Command::Verb::search: return "search";
        case Command::Verb::seed: return "seed";
        case Command::Verb::dump: return "dump";
    }
    return "?";
}

std::optional<Command::Verb> verb_from_word(std::string_view word) {
    if (word == "echo") return Command::Verb::echo;
    if (word == "set") return Command::Verb::set;
    if (word == "filter") return Command::Verb::filter;
    if (word == "target") return Command::Verb::target;
    if (word == "search") return Command::Verb::search;
    if (word == "seed") return Command::Verb::seed;
    if (word == "dump") return Command::Verb::dump;
    return std::nullopt;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() &&
           (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

// First whitespace-delimited token and the rest of the line (with one
// separator consumed, so echo text keeps its internal spacing).
std::pair<std::string_view, std::string_view> split_word(std::string_view text) {
    std::size_t end = 0;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    std::string_view word = text.substr(0, end);
    if (end < text.size()) ++end;  // the separator
    return {word, text.substr(end)};
}

struct EnvValue {
    std::vector<long long> values;
    bool list = false;
};

std::vector<long long> parse_longs(std::string_view text, int line) {
    std::vector<long long> values;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == ',') {
            ++i;
            continue;
        }
        std::size_t j = i;
        if (text[j] == '-' || text[j] == '+') ++j;
        const std::size_t digits = j;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == digits) fail(line, "expected an integer, found \"" + std::string(text.substr(i)) + "\"");
        values.push_back(std::stoll(std::string(text.substr(i, j - i))));
        i = j;
    }
    return values;
}

EnvValue parse_env_value(std::string_view raw, int line) {
    std::string_view text = trim(raw);
    EnvValue value;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') fail(line, "unterminated list value");
        value.values = parse_longs(text.substr(1, text.size() - 2), line);
        value.list = true;
        return value;
    }
    const std::size_t dots = text.find("..");
    if (dots != std::string_view::npos) {
        const auto lo = parse_longs(text.substr(0, dots), line);
        const auto hi = parse_longs(text.substr(dots + 2), line);
        if (lo.size() != 1 || hi.size() != 1) fail(line, "malformed range value");
        if (lo[0] > hi[0]) fail(line, "range lower end exceeds upper end");
        for (long long v = lo[0]; v <= hi[0]; ++v) value.values.push_back(v);
        value.list = true;
        return value;
    }
    value.values = parse_longs(text, line);
    if (value.values.empty()) fail(line, "set needs a value");
    value.list = value.values.size() != 1;
    return value;
}

const char* const kEnvKeys[] = {"n-colors",   "ap-length",      "gap-alphabet",
                                "gap-order",  "max-gaps",       "additive-power",
                                "max-depth",  "max-iterations", "split-depth",
                                "chunk"};

bool scalar_key(const std::string& key) {
    return key == "n-colors" || key == "ap-length" || key == "additive-power" ||
           key == "max-depth" || key == "max-iterations" || key == "split-depth";
}

struct Environment {
    std::map<std::string, EnvValue> params;
    std::vector<std::string> filter_names;  // script order
    std::vector<std::string> targets;       // empty -> default max-length
    std::vector<std::string> dumps;
    std::optional<std::string> seed_literal;
    int seed_line = 0;
};

std::optional<long long> scalar_of(const Environment& env, const std::string& key) {
    auto it = env.params.find(key);
    if (it == env.params.end()) return std::nullopt;
    return it->second.values.at(0);
}

int int_of(long long value, const std::string& key, int line) {
    if (value < -2147483647LL || value > 2147483647LL)
        fail(line, "value of " + key + " out of range");
    return static_cast<int>(value);
}

std::vector<int> int_list(const std::vector<long long>& values, const std::string& key,
                          int line) {
    std::vector<int> out;
    out.reserve(values.size());
    for (long long v : values) out.push_back(int_of(v, key, line));
    return out;
}

// Bracketed literals: "[1 2 1]" (flat) or "[[1 3] [2]]" (class lists).
std::vector<std::string> lex_literal(std::string_view text, int line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == ' ' || ch == '\t') {
            ++i;
            continue;
        }
        if (ch == '[' || ch == ']') {
            tokens.emplace_back(1, ch);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i) fail(line, std::string("unexpected character '") + ch + "' in seed literal");
        tokens.push_back(std::string(text.substr(i, j - i)));
        i = j;
    }
    return tokens;
}

std::vector<int> parse_flat_literal(std::string_view text, int line) {
    const auto tokens = lex_literal(text, line);
    if (tokens.size() < 2 || tokens.front() != "[" || tokens.back() != "]")
        fail(line, "seed literal must be bracketed");
    std::vector<int> values;
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
        if (tokens[i] == "[" || tokens[i] == "]") fail(line, "expected a flat seed literal");
        values.push_back(std::stoi(tokens[i]));
    }
    return values;
}

std::vector<std::vector<int>> parse_class_literal(std::string_view text, int line) {
    const auto tokens = lex_literal(text, line);
    std::vector<std::vector<int>> classes;
    std::size_t i = 0;
    if (tokens.empty() || tokens[i] != "[") fail(line, "seed literal must be bracketed");
    ++i;
    while (i < tokens.size() && tokens[i] == "[") {
        ++i;
        std::vector<int> positions;
        while (i < tokens.size() && tokens[i] != "]" && tokens[i] != "[")
            positions.push_back(std::stoi(tokens[i++]));
        if (i == tokens.size() || tokens[i] != "]") fail(line, "unterminated class list");
        ++i;
        classes.push_back(std::move(positions));
    }
    if (i + 1 != tokens.size() || tokens[i] != "]")
        fail(line, "malformed class-list seed literal");
    return classes;
}

Coloring coloring_from_classes(const std::vector<std::vector<int>>& classes, int line) {
    int length = 0;
    for (const auto& cls : classes)
        for (int p : cls) length = std::max(length, p);
    Coloring coloring;
    coloring.color_count = static_cast<int>(classes.size());
    coloring.assignment.assign(static_cast<std::size_t>(length), 0);
    for (std::size_t q = 0; q < classes.size(); ++q) {
        for (int p : classes[q]) {
            if (p < 1) fail(line, "seed positions must be positive");
            int& slot = coloring.assignment[static_cast<std::size_t>(p) - 1];
            if (slot != 0) fail(line, "seed position " + std::to_string(p) + " colored twice");
            slot = static_cast<int>(q) + 1;
        }
    }
    for (std::size_t p = 0; p < coloring.assignment.size(); ++p)
        if (coloring.assignment[p] == 0)
            fail(line, "seed position " + std::to_string(p + 1) + " left uncolored");
    return coloring;
}

CoverWord cover_from_classes(const std::vector<std::vector<int>>& classes, int line) {
    int length = 0;
    for (const auto& cls : classes)
        for (int p : cls) length = std::max(length, p);
    CoverWord cover;
    cover.set_count = static_cast<int>(classes.size());
    cover.assignment.assign(static_cast<std::size_t>(length), 0u);
    for (std::size_t q = 0; q < classes.size(); ++q) {
        for (int p : classes[q]) {
            if (p < 1) fail(line, "seed positions must be positive");
            cover.assignment[static_cast<std::size_t>(p) - 1] |= 1u << q;
        }
    }
    for (std::size_t p = 0; p < cover.assignment.size(); ++p)
        if (cover.assignment[p] == 0u)
            fail(line, "seed position " + std::to_string(p + 1) + " not covered");
    return cover;
}

// Filter parameters come from the environment when the search launches:
// ap-length for the AP filters, n-colors for rainbow APs, additive-power
// for generic powers, max-gaps (a scalar broadcasts over the colors) for
// the gap caps.
FilterSpec resolve_filter(const std::string& name, const Environment& env,
                          std::optional<int> color_count, int line) {
    FilterSpec spec;
    spec.name = name;
    auto need = [&](const char* key) -> long long {
        auto value = scalar_of(env, key);
        if (!value) fail(line, "filter " + name + " needs \"set " + key + " ...\"");
        return *value;
    };
    if (name == "no-double-aps" || name == "no-mono-double-aps" || name == "no-n-aps") {
        spec.parameters["k"] = {int_of(need("ap-length"), "ap-length", line)};
    } else if (name == "no-rainbow-aps") {
        spec.parameters["k"] = {int_of(need("n-colors"), "n-colors", line)};
    } else if (name == "no-additive-powers") {
        spec.parameters["p"] = {int_of(need("additive-power"), "additive-power", line)};
    } else if (name == "max-class-gaps") {
        auto it = env.params.find("max-gaps");
        if (it == env.params.end())
            fail(line, "filter max-class-gaps needs \"set max-gaps ...\"");
        std::vector<int> bounds = int_list(it->second.values, "max-gaps", line);
        if (bounds.size() == 1 && color_count && *color_count > 1)
            bounds.assign(static_cast<std::size_t>(*color_count), bounds[0]);
        spec.parameters["max-gaps"] = std::move(bounds);
    }
    // no-additive-squares / no-additive-cubes take no parameters
    return spec;
}

const char* singular_kind(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::sequences: return "sequence";
        case SpaceKind::colorings: return "coloring";
        case SpaceKind::covers: return "cover";
    }
    return "?";
}

std::string pad_len(int value) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%5d", value);
    return buffer;
}

class Interpreter {
  public:
    Interpreter(const std::vector<Command>& commands, const ExecuteOptions& options)
        : commands_(commands), options_(options) {}

    ScriptResult run() {
        int searches = 0;
        for (const Command& command : commands_)
            if (command.verb == Command::Verb::search) ++searches;
        if ((options_.resume_from || options_.save_to) && searches != 1)
            throw std::invalid_argument(
                "checkpointing requires a script with exactly one search command");

        for (const Command& command : commands_) execute(command);
        result_.report = report_.str();
        return std::move(result_);
    }

  private:
    void execute(const Command& command) {
        switch (command.verb) {
            case Command::Verb::echo:
                report_ << command.text << '\n';
                break;
            case Command::Verb::set:
                do_set(command);
                break;
            case Command::Verb::filter:
                do_filter(command);
                break;
            case Command::Verb::target:
                if (command.name != "max-length" && command.name != "counts-per-length")
                    fail(command.line, "unknown target \"" + command.name + "\"");
                if (std::find(env_.targets.begin(), env_.targets.end(), command.name) ==
                    env_.targets.end())
                    env_.targets.push_back(command.name);
                break;
            case Command::Verb::dump:
                if (command.name != "counts-per-length" && command.name != "gap-histogram")
                    fail(command.line, "unknown dump \"" + command.name + "\"");
                if (std::find(env_.dumps.begin(), env_.dumps.end(), command.name) ==
                    env_.dumps.end())
                    env_.dumps.push_back(command.name);
                break;
            case Command::Verb::seed:
                env_.seed_literal = command.text;
                env_.seed_line = command.line;
                break;
            case Command::Verb::search:
                do_search(command);
                break;
        }
    }

    void do_set(const Command& command) {
        bool known = false;
        for (const char* key : kEnvKeys)
            if (command.name == key) known = true;
        if (!known) fail(command.line, "unknown parameter \"" + command.name + "\"");
        EnvValue value = parse_env_value(command.text, command.line);
        if (scalar_key(command.name) && value.values.size() != 1)
            fail(command.line, command.name + " takes a single integer");
        if (command.name == "chunk" && value.values.size() != 2)
            fail(command.line, "chunk takes two integers: index and count");
        env_.params[command.name] = std::move(value);
    }

    void do_filter(const Command& command) {
        const auto known = registered_filter_names();
        if (std::find(known.begin(), known.end(), command.name) == known.end())
            fail(command.line, "unknown filter \"" + command.name + "\"");
        env_.filter_names.push_back(command.name);
        // Echo the resolved display name when the environment already
        // determines it, else the raw name.
        std::string shown = command.name;
        try {
            std::optional<int> colors;
            if (auto r = scalar_of(env_, "n-colors"))
                colors = int_of(*r, "n-colors", command.line);
            shown = make_filter(resolve_filter(command.name, env_, colors, command.line))
                        ->display_name();
        } catch (const std::invalid_argument&) {
        }
        report_ << "Added filter ``" << shown << "''.\n";
    }

    void do_search(const Command& command) {
        const int line = command.line;
        auto kind = space_kind_from_name(command.name);
        if (!kind)
            fail(line, "unknown search space \"" + command.name +
                           "\" (sequences, colorings, covers)");

        RunConfig config;
        std::optional<int> color_count;
        switch (*kind) {
            case SpaceKind::colorings:
            case SpaceKind::covers: {
                auto r = scalar_of(env_, "n-colors");
                if (!r) fail(line, "search " + command.name + " needs \"set n-colors ...\"");
                color_count = int_of(*r, "n-colors", line);
                config.space = *kind == SpaceKind::colorings
                                   ? coloring_space(*color_count, coloring_seed(*color_count))
                                   : cover_space(*color_count, cover_seed(*color_count));
                break;
            }
            case SpaceKind::sequences:
                config.space = sequence_space(sequence_alphabet(line), sequence_seed(line));
                break;
        }

        for (const std::string& name : env_.filter_names)
            config.filters.push_back(resolve_filter(name, env_, color_count, line));

        if (auto depth = scalar_of(env_, "max-depth"))
            config.max_depth = int_of(*depth, "max-depth", line);
        if (options_.max_iterations_override)
            config.max_iterations = *options_.max_iterations_override;
        else if (auto budget = scalar_of(env_, "max-iterations"))
            config.max_iterations = *budget;

        const auto split_depth = scalar_of(env_, "split-depth");
        const auto chunk = env_.params.find("chunk");
        if (split_depth && chunk == env_.params.end())
            fail(line, "split-depth needs \"set chunk <index> <count>\"");
        if (!split_depth && chunk != env_.params.end())
            fail(line, "chunk needs \"set split-depth <depth>\"");
        if (split_depth) {
            SplitSpec split;
            split.depth = int_of(*split_depth, "split-depth", line);
            split.chunk_index = int_of(chunk->second.values[0], "chunk", line);
            split.chunk_count = int_of(chunk->second.values[1], "chunk", line);
            config.split = split;
            config.count_seed = false;
        }

        std::vector<std::string> targets = env_.targets;
        if (targets.empty()) targets.push_back("max-length");
        config.target_max_length =
            std::find(targets.begin(), targets.end(), "max-length") != targets.end();
        config.target_counts_per_length =
            std::find(targets.begin(), targets.end(), "counts-per-length") != targets.end();

        std::vector<std::string> display_names;
        for (const FilterSpec& spec : config.filters)
            display_names.push_back(make_filter(spec)->display_name());

        report_ << "#### Starting " << singular_kind(*kind) << " search ####\n";
        report_ << "  Targets: \t";
        for (const std::string& t : targets) report_ << t << ' ';
        report_ << '\n';
        report_ << "  Filters: \t";
        for (const std::string& f : display_names) report_ << f << ' ';
        report_ << '\n';
        report_ << "  Dump data: \t";
        for (const std::string& d : env_.dumps) report_ << d << ' ';
        report_ << '\n';
        report_ << "  Seed:\t\t" << render_seed(config.space) << '\n';

        RunResult run;
        try {
            run = run_search(config, options_.resume_from, options_.save_to);
        } catch (const std::invalid_argument& e) {
            fail(line, e.what());
        }

        if (config.target_max_length)
            report_ << "Max. " << singular_kind(*kind) << " (len " << pad_len(run.best_depth)
                    << "): " << render_best(config.space, run) << '\n';
        if (config.target_counts_per_length) {
            report_ << "Passing counts per length:\n";
            for (std::size_t d = 0; d < run.counters.passing_per_depth.size(); ++d)
                report_ << "  " << d << ": " << run.counters.passing_per_depth[d] << '\n';
        }
        if (!run.complete) report_ << "Search stopped at the iteration limit.\n";
        report_ << "Time taken: " << static_cast<long long>(std::llround(run.seconds))
                << "s. Iterations: " << run.counters.iterations << '\n';
        report_ << "#### Done. ####\n";

        write_dumps(config, run, line);
        result_.runs.push_back(RunRecord{config, run});
        env_.seed_literal.reset();
    }

    std::vector<int> sequence_alphabet(int line) {
        const auto order = env_.params.find("gap-order");
        const auto alpha = env_.params.find("gap-alphabet");
        if (order == env_.params.end() && alpha == env_.params.end())
            fail(line, "search sequences needs \"set gap-alphabet ...\" or \"set gap-order ...\"");
        std::vector<int> result;
        if (order != env_.params.end()) {
            result = int_list(order->second.values, "gap-order", line);
            if (alpha != env_.params.end()) {
                std::vector<int> a = int_list(alpha->second.values, "gap-alphabet", line);
                std::vector<int> b = result;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) fail(line, "gap-order must permute gap-alphabet");
            }
        } else {
            result = int_list(alpha->second.values, "gap-alphabet", line);
        }
        return result;
    }

    GapWord sequence_seed(int line) {
        if (!env_.seed_literal) return GapWord{};
        return gap_word(parse_flat_literal(*env_.seed_literal, env_.seed_line));
    }

    Coloring coloring_seed(int color_count) {
        Coloring seed;
        seed.color_count = color_count;
        if (!env_.seed_literal) return seed;
        const auto classes = parse_class_literal(*env_.seed_literal, env_.seed_line);
        if (static_cast<int>(classes.size()) != color_count)
            fail(env_.seed_line, "seed has " + std::to_string(classes.size()) +
                                     " classes but n-colors is " +
                                     std::to_string(color_count));
        return coloring_from_classes(classes, env_.seed_line);
    }

    CoverWord cover_seed(int set_count) {
        CoverWord seed;
        seed.set_count = set_count;
        if (!env_.seed_literal) return seed;
        const auto classes = parse_class_literal(*env_.seed_literal, env_.seed_line);
        if (static_cast<int>(classes.size()) != set_count)
            fail(env_.seed_line, "seed has " + std::to_string(classes.size()) +
                                     " classes but n-colors is " + std::to_string(set_count));
        return cover_from_classes(classes, env_.seed_line);
    }

    std::string render_seed(const SearchSpace& space) const {
        switch (space.kind) {
            case SpaceKind::sequences: return render_gap_list(space.seed_gaps.symbols);
            case SpaceKind::colorings: {
                Coloring seed = space.seed_coloring;
                seed.color_count = space.color_count;
                return render_coloring_classes(seed);
            }
            case SpaceKind::covers: {
                CoverWord seed = space.seed_cover;
                seed.set_count = space.set_count;
                return render_cover_classes(seed);
            }
        }
        return "";
    }

    std::string render_best(const SearchSpace& space, const RunResult& run) const {
        switch (space.kind) {
            case SpaceKind::sequences: {
                std::ostringstream out;
                out << render_gap_list(run.best_elements) << " (terms";
                int term = 1;
                out << ' ' << term;
                for (int gap : run.best_elements) {
                    term += gap;
                    out << ' ' << term;
                }
                out << ')';
                return out.str();
            }
            case SpaceKind::colorings: {
                Coloring best;
                best.color_count = space.color_count;
                best.assignment = run.best_elements;
                return render_coloring_classes(best);
            }
            case SpaceKind::covers: {
                CoverWord best;
                best.set_count = space.set_count;
                best.assignment.assign(run.best_elements.begin(), run.best_elements.end());
                return render_cover_classes(best);
            }
        }
        return "";
    }

    void write_dumps(const RunConfig& config, const RunResult& run, int line) {
        for (const std::string& dump : env_.dumps) {
            std::string path = options_.dump_directory + "/" + dump;
            if (result_.runs.size() > 0) path += "-" + std::to_string(result_.runs.size() + 1);
            path += ".csv";
            std::ofstream out(path, std::ios::binary);
            if (!out) fail(line, "cannot write dump file " + path);
            if (dump == "counts-per-length") {
                write_depth_counts_csv(out, run.counters.passing_per_depth);
            } else {
                if (config.space.kind != SpaceKind::sequences)
                    fail(line, "dump gap-histogram needs a sequence search");
                write_gap_histogram_csv(out, run.best_elements);
            }
        }
    }

    const std::vector<Command>& commands_;
    const ExecuteOptions& options_;
    Environment env_;
    std::ostringstream report_;
    ScriptResult result_;
};

}  // namespace

std::vector<Command> parse_script(std::string_view text) {
    std::vector<Command> commands;
    int line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t newline = text.find('\n', start);
        std::string_view raw = newline == std::string_view::npos
                                   ? text.substr(start)
                                   : text.substr(start, newline - start);
        ++line_number;
        start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;

        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        raw = trim(raw);
        if (raw.empty()) continue;

        auto [word, rest] = split_word(raw);
        const auto verb = verb_from_word(word);
        if (!verb) fail(line_number, "unknown command \"" + std::string(word) + "\"");

        Command command;
        command.verb = *verb;
        command.line = line_number;
        switch (*verb) {
            case Command::Verb::echo:
                command.text = std::string(rest);
                break;
            case Command::Verb::set: {
                auto [key, value] = split_word(trim(rest));
                if (key.empty()) fail(line_number, "set needs a key and a value");
                if (trim(value).empty()) fail(line_number, "set needs a value");
                command.name = std::string(key);
                command.text = std::string(trim(value));
                break;
            }
            case Command::Verb::filter:
            case Command::Verb::target:
            case Command::Verb::dump:
            case Command::Verb::search: {
                auto [name, extra] = split_word(trim(rest));
                if (name.empty())
                    fail(line_number, std::string(word) + " needs exactly one argument");
                if (!trim(extra).empty())
                    fail(line_number, "unexpected text after " + std::string(word) + " " +
                                          std::string(name));
                command.name = std::string(name);
                break;
            }
            case Command::Verb::seed:
                if (trim(rest).empty()) fail(line_number, "seed needs an object literal");
                command.text = std::string(trim(rest));
                break;
        }
        commands.push_back(std::move(command));
    }
    return commands;
}

std::string render_script(const std::vector<Command>& commands) {
    std::ostringstream out;
    for (const Command& command : commands) {
        out << verb_word(command.verb);
        switch (command.verb) {
            case Command::Verb::echo:
                if (!command.text.empty()) out << ' ' << command.text;
                break;
            case Command::Verb::set:
                out << ' ' << command.name << ' ' << command.text;
                break;
            case Command::Verb::seed:
                out << ' ' << command.text;
                break;
            default:
                out << ' ' << command.name;
                break;
        }
        out << '\n';
    }
    return out.str();
}

ScriptResult execute_script(const std::vector<Command>& commands,
                            const ExecuteOptions& options) {
    return Interpreter(commands, options).run();
}

std::string render_gap_list(const std::vector<int>& gaps) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (i) out << ' ';
        out << gaps[i];
    }
    out << ']';
    return out.str();
}

std::string render_coloring_classes(const Coloring& coloring) {
    std::ostringstream out;
    out << '[';
    for (int color = 1; color <= coloring.color_count; ++color) {
        if (color > 1) out << ' ';
        out << '[';
        bool first = true;
        for (int i = 0; i < coloring.length(); ++i) {
            if (coloring.assignment[static_cast<std::size_t>(i)] != color) continue;
            if (!first) out << ' ';
            out << i + 1;
            first = false;
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

std::string render_cover_classes(const CoverWord& cover) {
    std::ostringstream out;
    out << '[';
    for (int set_id = 1; set_id <= cover.set_count; ++set_id) {
        if (set_id > 1) out << ' ';
        out << '[';
        bool first = true;
        for (int i = 0; i < cover.length(); ++i) {
            if (!(cover.assignment[static_cast<std::size_t>(i)] & (1u << (set_id - 1))))
                continue;
            if (!first) out << ' ';
            out << i + 1;
            first = false;
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace dap
