#include "dap/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dap {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_format(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("bad checkpoint: " + what);
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

template <typename T>
void join_into(std::ostringstream& out, const std::vector<T>& values, char sep) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
}

// Canonical description of what is searched: space, seed, and filters.
// Shared by chunk runs of a split and their stem, so it is the merge key.
std::string semantic_core(const RunConfig& config) {
    std::ostringstream out;
    const SearchSpace& space = config.space;
    out << "kind=" << space_kind_name(space.kind) << '\n';
    switch (space.kind) {
        case SpaceKind::sequences: {
            out << "alphabet=";
            join_into(out, space.alphabet, ',');
            out << "\nseed=";
            join_into(out, space.seed_gaps.symbols, ',');
            break;
        }
        case SpaceKind::colorings: {
            out << "colors=" << space.color_count << "\nseed=";
            join_into(out, space.seed_coloring.assignment, ',');
            break;
        }
        case SpaceKind::covers: {
            out << "sets=" << space.set_count << "\nseed=";
            std::vector<int> masks(space.seed_cover.assignment.begin(),
                                   space.seed_cover.assignment.end());
            join_into(out, masks, ',');
            break;
        }
    }
    out << '\n';
    for (const FilterSpec& spec : config.filters) {
        out << "filter=" << spec.name;
        for (const auto& [key, values] : spec.parameters) {
            out << ' ' << key << '=';
            join_into(out, values, ',');
        }
        out << '\n';
    }
    return out.str();
}

bool effective_count_seed(const RunConfig& config) {
    return config.split ? false : config.count_seed;
}

SearchState make_state(const SearchSpace& space, bool with_seed) {
    switch (space.kind) {
        case SpaceKind::sequences:
            return SearchState::for_sequences(space.alphabet,
                                              with_seed ? space.seed_gaps : GapWord{});
        case SpaceKind::colorings:
            return SearchState::for_colorings(space.color_count,
                                              with_seed ? space.seed_coloring : Coloring{});
        case SpaceKind::covers:
            return SearchState::for_covers(space.set_count,
                                           with_seed ? space.seed_cover : CoverWord{});
    }
    throw std::invalid_argument("unknown space kind");
}

std::vector<std::unique_ptr<Filter>> build_filters(const RunConfig& config,
                                                   const SearchState& state) {
    std::vector<std::unique_ptr<Filter>> filters;
    for (const FilterSpec& spec : config.filters) {
        auto filter = make_filter(spec);
        require(filter->applies_to(state.kind()),
                "filter " + spec.name + " does not apply to " +
                    space_kind_name(state.kind()) + " searches");
        filter->validate_for(state);
        filters.push_back(std::move(filter));
    }
    return filters;
}

void validate_config(const RunConfig& config, const SearchState& seed_state) {
    if (config.max_depth)
        require(*config.max_depth >= seed_state.depth(),
                "max depth is smaller than the seed length");
    if (config.max_iterations)
        require(*config.max_iterations >= 1, "iteration budget must be positive");
    if (config.split) {
        const SplitSpec& split = *config.split;
        require(split.chunk_count >= 1, "split needs at least one chunk");
        require(split.chunk_index >= 1 && split.chunk_index <= split.chunk_count,
                "split chunk index out of range");
        require(split.depth >= seed_state.depth(),
                "split depth is smaller than the seed length");
        if (config.max_depth)
            require(split.depth <= *config.max_depth, "split depth exceeds max depth");
    }
}

void bump(std::vector<long long>& table, int depth) {
    if (static_cast<int>(table.size()) <= depth)
        table.resize(static_cast<std::size_t>(depth) + 1, 0);
    ++table[static_cast<std::size_t>(depth)];
}

struct Frame {
    int next_branch = 0;
};

}  // namespace

SearchSpace sequence_space(std::vector<int> alphabet, GapWord seed) {
    SearchSpace space;
    space.kind = SpaceKind::sequences;
    space.alphabet = std::move(alphabet);
    space.seed_gaps = std::move(seed);
    return space;
}

SearchSpace coloring_space(int color_count, Coloring seed) {
    SearchSpace space;
    space.kind = SpaceKind::colorings;
    space.color_count = color_count;
    space.seed_coloring = std::move(seed);
    return space;
}

SearchSpace cover_space(int set_count, CoverWord seed) {
    SearchSpace space;
    space.kind = SpaceKind::covers;
    space.set_count = set_count;
    space.seed_cover = std::move(seed);
    return space;
}

std::string config_digest(const RunConfig& config) {
    std::ostringstream out;
    out << semantic_core(config);
    out << "max_depth=";
    if (config.max_depth)
        out << *config.max_depth;
    else
        out << "none";
    out << "\nsplit=";
    if (config.split)
        out << config.split->depth << '/' << config.split->chunk_index << '/'
            << config.split->chunk_count;
    else
        out << "none";
    out << "\ncount_seed=" << (effective_count_seed(config) ? 1 : 0) << '\n';
    return hex64(fnv1a64(out.str()));
}

std::string base_digest(const RunConfig& config) {
    return hex64(fnv1a64(semantic_core(config)));
}

void write_checkpoint(std::ostream& out, const Checkpoint& checkpoint) {
    out << "dapsearch checkpoint 1\n";
    out << "digest " << checkpoint.digest << '\n';
    out << "slice " << checkpoint.slice_position << '\n';
    out << "path";
    for (int b : checkpoint.path) out << ' ' << b;
    out << '\n';
    out << "next " << checkpoint.next_branch << '\n';
    out << "complete " << (checkpoint.complete ? 1 : 0) << '\n';
    out << "iterations " << checkpoint.counters.iterations << '\n';
    out << "generated";
    for (long long c : checkpoint.counters.generated_per_depth) out << ' ' << c;
    out << '\n';
    out << "passing";
    for (long long c : checkpoint.counters.passing_per_depth) out << ' ' << c;
    out << '\n';
    out << "best " << checkpoint.best_depth;
    for (int e : checkpoint.best_elements) out << ' ' << e;
    out << '\n';
    char seconds[64];
    std::snprintf(seconds, sizeof seconds, "%.6f", checkpoint.seconds);
    out << "seconds " << seconds << '\n';
    out << "end\n";
}

namespace {

std::istringstream expect_line(std::istream& in, const std::string& keyword) {
    std::string line;
    require_format(static_cast<bool>(std::getline(in, line)), "missing line " + keyword);
    std::istringstream stream(line);
    std::string head;
    stream >> head;
    require_format(head == keyword, "expected \"" + keyword + "\", found \"" + head + "\"");
    return stream;
}

}  // namespace

Checkpoint read_checkpoint(std::istream& in) {
    std::string line;
    require_format(static_cast<bool>(std::getline(in, line)) && line == "dapsearch checkpoint 1",
                   "unrecognized header");
    Checkpoint ckpt;
    expect_line(in, "digest") >> ckpt.digest;
    require_format(ckpt.digest.size() == 16, "malformed digest");
    expect_line(in, "slice") >> ckpt.slice_position;
    {
        auto stream = expect_line(in, "path");
        int value;
        while (stream >> value) ckpt.path.push_back(value);
    }
    expect_line(in, "next") >> ckpt.next_branch;
    int complete = 0;
    expect_line(in, "complete") >> complete;
    ckpt.complete = complete != 0;
    expect_line(in, "iterations") >> ckpt.counters.iterations;
    {
        auto stream = expect_line(in, "generated");
        long long value;
        while (stream >> value) ckpt.counters.generated_per_depth.push_back(value);
    }
    {
        auto stream = expect_line(in, "passing");
        long long value;
        while (stream >> value) ckpt.counters.passing_per_depth.push_back(value);
    }
    {
        auto stream = expect_line(in, "best");
        require_format(static_cast<bool>(stream >> ckpt.best_depth), "malformed best line");
        int value;
        while (stream >> value) ckpt.best_elements.push_back(value);
    }
    expect_line(in, "seconds") >> ckpt.seconds;
    require_format(static_cast<bool>(std::getline(in, line)) && line == "end",
                   "missing end line");
    return ckpt;
}

RunResult run_search(const RunConfig& config) {
    return run_search(config, nullptr, nullptr);
}

RunResult run_search(const RunConfig& config, const Checkpoint* resume_from,
                     Checkpoint* save_to) {
    const auto start_time = std::chrono::steady_clock::now();
    auto elapsed = [&start_time]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time)
            .count();
    };

    SearchState seed_state = make_state(config.space, true);
    std::vector<std::unique_ptr<Filter>> filters = build_filters(config, seed_state);
    validate_config(config, seed_state);
    const std::string digest = config_digest(config);
    const bool count_root = effective_count_seed(config);

    // The roots of this run: the seed itself, or this chunk's slice of
    // the passing split-depth prefixes.
    std::vector<std::vector<int>> roots;
    if (config.split) {
        RunConfig probe = config;
        probe.split.reset();
        std::vector<std::vector<int>> prefixes = enumerate_prefixes(probe, config.split->depth);
        const long long total = static_cast<long long>(prefixes.size());
        const long long n = config.split->chunk_count;
        const long long i = config.split->chunk_index;
        const long long lo = (i - 1) * total / n;
        const long long hi = i * total / n;
        roots.assign(prefixes.begin() + lo, prefixes.begin() + hi);
    } else {
        roots.push_back(seed_state.elements());
    }

    RunResult result;
    double base_seconds = 0.0;
    int start_root = 0;
    bool replay = false;
    Checkpoint replay_from;
    if (resume_from) {
        require(resume_from->digest == digest,
                "checkpoint digest does not match this configuration");
        if (resume_from->complete) {
            result.counters = resume_from->counters;
            result.complete = true;
            result.best_depth = resume_from->best_depth;
            result.best_elements = resume_from->best_elements;
            result.seconds = resume_from->seconds;
            if (save_to) *save_to = *resume_from;
            return result;
        }
        result.counters = resume_from->counters;
        result.best_depth = resume_from->best_depth;
        result.best_elements = resume_from->best_elements;
        base_seconds = resume_from->seconds;
        start_root = resume_from->slice_position;
        require(start_root >= 0 && start_root < static_cast<int>(roots.size()),
                "checkpoint root position out of range");
        replay = true;
        replay_from = *resume_from;
    }

    RunCounters& counters = result.counters;
    std::vector<int> branch_path;
    std::vector<Frame> frames;

    auto update_best = [&](const SearchState& state) {
        if (state.depth() > result.best_depth) {
            result.best_depth = state.depth();
            result.best_elements = state.elements();
        }
    };

    auto fill_checkpoint = [&](bool complete, int root_index, int next_branch) {
        if (!save_to) return;
        save_to->digest = digest;
        save_to->slice_position = root_index;
        save_to->path = branch_path;
        save_to->next_branch = next_branch;
        save_to->complete = complete;
        save_to->counters = counters;
        save_to->best_depth = result.best_depth;
        save_to->best_elements = result.best_elements;
        save_to->seconds = base_seconds + elapsed();
    };

    for (int root_index = start_root; root_index < static_cast<int>(roots.size());
         ++root_index) {
        SearchState state = make_state(config.space, false);
        for (int element : roots[static_cast<std::size_t>(root_index)]) state.push(element);
        branch_path.clear();
        frames.clear();

        const bool extendable =
            !config.max_depth || state.depth() < *config.max_depth;

        if (replay) {
            replay = false;
            frames.push_back(Frame{});
            for (int branch : replay_from.path) {
                frames.back().next_branch = branch + 1;
                state.push(state.element_at_branch(branch));
                branch_path.push_back(branch);
                frames.push_back(Frame{});
            }
            frames.back().next_branch = replay_from.next_branch;
        } else {
            // Roots must pass in full: the caller's seed by contract, a
            // chunk's roots by construction.
            for (const auto& filter : filters) {
                if (auto violation = filter->check_full(state))
                    throw std::invalid_argument("seed fails filter " +
                                                filter->display_name() + ": " +
                                                violation->description);
            }
            if (count_root) {
                ++counters.iterations;
                bump(counters.generated_per_depth, state.depth());
                bump(counters.passing_per_depth, state.depth());
            }
            update_best(state);
            if (extendable) frames.push_back(Frame{});
        }

        while (!frames.empty()) {
            Frame& top = frames.back();
            if (top.next_branch >= state.branch_count()) {
                if (frames.size() > 1) {
                    state.pop();
                    branch_path.pop_back();
                }
                frames.pop_back();
                continue;
            }
            if (config.max_iterations && counters.iterations >= *config.max_iterations) {
                fill_checkpoint(false, root_index, top.next_branch);
                result.complete = false;
                result.seconds = base_seconds + elapsed();
                return result;
            }
            const int branch = top.next_branch++;
            const int element = state.element_at_branch(branch);
            const int child_depth = state.depth() + 1;
            ++counters.iterations;
            bump(counters.generated_per_depth, child_depth);

            bool pass = true;
            for (const auto& filter : filters) {
                if (!filter->check_append(state, element)) {
                    pass = false;
                    break;
                }
            }
            if (!pass) continue;

            state.push(element);
            bump(counters.passing_per_depth, child_depth);
            update_best(state);
            if (!config.max_depth || child_depth < *config.max_depth) {
                frames.push_back(Frame{});
                branch_path.push_back(branch);
            } else {
                state.pop();  // at max depth: counted and checked, not extended
            }
        }
    }

    result.complete = true;
    result.seconds = base_seconds + elapsed();
    branch_path.clear();
    fill_checkpoint(true, static_cast<int>(roots.size()), 0);
    return result;
}

std::vector<std::vector<int>> enumerate_prefixes(const RunConfig& config, int depth) {
    SearchState state = make_state(config.space, true);
    std::vector<std::unique_ptr<Filter>> filters = build_filters(config, state);
    require(depth >= state.depth(), "prefix depth is smaller than the seed length");
    for (const auto& filter : filters) {
        if (auto violation = filter->check_full(state))
            throw std::invalid_argument("seed fails filter " + filter->display_name() + ": " +
                                        violation->description);
    }

    std::vector<std::vector<int>> prefixes;
    auto descend = [&](auto&& self) -> void {
        if (state.depth() == depth) {
            prefixes.push_back(state.elements());
            return;
        }
        for (int branch = 0; branch < state.branch_count(); ++branch) {
            const int element = state.element_at_branch(branch);
            bool pass = true;
            for (const auto& filter : filters) {
                if (!filter->check_append(state, element)) {
                    pass = false;
                    break;
                }
            }
            if (!pass) continue;
            state.push(element);
            self(self);
            state.pop();
        }
    };
    descend(descend);
    return prefixes;
}

}  // namespace dap
