// Command-line front end.
//
//   dapsearch run <script> [--emit-depth-counts PATH] [--emit-gap-histogram PATH]
//                          [--checkpoint PATH] [--resume] [--max-iterations N]
//                          [--report-json PATH] [--dump-dir DIR]
//   dapsearch oracle <plain|gapped|uniform> <params...> [--bound N]
//   dapsearch verify <file> --k K
//   dapsearch split <script> --depth D --chunks N --out DIR
//   dapsearch merge <DIR> [--json PATH]
//
// Exit codes: 0 success, 1 usage or parse error, 2 run incomplete
// (iteration budget reached), 3 verification failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dap/engine.hpp"
#include "dap/oracle.hpp"
#include "dap/reportio.hpp"
#include "dap/script.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct RunArgs {
    std::string script_path;
    std::string depth_counts_path;
    std::string gap_histogram_path;
    std::string checkpoint_path;
    std::string report_json_path;
    std::string dump_dir = ".";
    bool resume = false;
    long long max_iterations = 0;
    bool has_max_iterations = false;
};

int do_run(const RunArgs& args) {
    const auto commands = dap::parse_script(read_file(args.script_path));

    dap::ExecuteOptions options;
    options.dump_directory = args.dump_dir;
    if (args.has_max_iterations) options.max_iterations_override = args.max_iterations;

    dap::Checkpoint resume_from;
    dap::Checkpoint save_to;
    if (args.resume) {
        std::ifstream in(args.checkpoint_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read checkpoint " + args.checkpoint_path);
        resume_from = dap::read_checkpoint(in);
        options.resume_from = &resume_from;
    }
    if (!args.checkpoint_path.empty()) options.save_to = &save_to;

    const dap::ScriptResult result = dap::execute_script(commands, options);
    std::cout << result.report;

    if (!args.checkpoint_path.empty()) {
        std::ofstream out(args.checkpoint_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write checkpoint " + args.checkpoint_path);
        dap::write_checkpoint(out, save_to);
    }

    if (!args.depth_counts_path.empty() || !args.gap_histogram_path.empty() ||
        !args.report_json_path.empty()) {
        if (result.runs.empty()) throw std::runtime_error("the script ran no search");
        const dap::RunRecord& last = result.runs.back();
        if (!args.depth_counts_path.empty()) {
            std::ofstream out(args.depth_counts_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + args.depth_counts_path);
            dap::write_depth_counts_csv(out, last.result.counters.generated_per_depth);
        }
        if (!args.gap_histogram_path.empty()) {
            if (last.config.space.kind != dap::SpaceKind::sequences)
                throw std::runtime_error("--emit-gap-histogram needs a sequence search");
            std::ofstream out(args.gap_histogram_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + args.gap_histogram_path);
            dap::write_gap_histogram_csv(out, last.result.best_elements);
        }
        if (!args.report_json_path.empty()) {
            std::ofstream out(args.report_json_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + args.report_json_path);
            dap::write_run_report(out, dap::report_from_run(last.config, last.result));
        }
    }

    return result.all_complete() ? 0 : 2;
}

int do_oracle(const std::string& kind, const std::vector<int>& params, int bound) {
    dap::WStarQuery query;
    if (kind == "plain") {
        if (params.size() != 2)
            throw std::invalid_argument("oracle plain takes <colors> <k>");
        query = dap::plain_query(params[0], params[1], bound);
    } else if (kind == "gapped") {
        if (params.size() < 2)
            throw std::invalid_argument("oracle gapped takes <k> <gap per color>...");
        query = dap::gapped_query(params[0],
                                  std::vector<int>(params.begin() + 1, params.end()), bound);
    } else if (kind == "uniform") {
        if (params.size() != 3)
            throw std::invalid_argument("oracle uniform takes <colors> <k> <gap>");
        query = dap::uniform_gap_query(params[0], params[1], params[2], bound);
    } else {
        throw std::invalid_argument("unknown oracle kind \"" + kind +
                                    "\" (plain, gapped, uniform)");
    }

    const dap::WStarResult result = dap::w_star(query);
    std::cout << dap::format_w_star_result(query, result) << '\n';
    std::cout << "longest free coloring (len " << result.longest_free_length
              << "): " << dap::coloring_to_digits(result.longest_free) << '\n';
    return 0;
}

int do_verify(const std::string& path, int k) {
    const dap::WitnessReport report = dap::verify_witness_coloring(read_file(path), k);
    std::cout << (report.pass ? "PASS" : "FAIL") << " k=" << k
              << " length=" << report.coloring.length()
              << " colors=" << report.coloring.color_count << '\n';
    for (const dap::ClassStat& stat : report.classes)
        std::cout << "  class " << stat.color << ": size " << stat.size << ", max gap "
                  << stat.max_gap << '\n';
    if (!report.pass) {
        std::cout << "  color " << report.violation->first
                  << " has a double AP at within-class positions";
        for (int p : report.violation->second.positions) std::cout << ' ' << p;
        std::cout << '\n';
    }
    return report.pass ? 0 : 3;
}

int do_split(const std::string& script_path, int depth, int chunks,
             const std::string& out_dir) {
    if (depth < 0) throw std::invalid_argument("--depth must be nonnegative");
    if (chunks < 1) throw std::invalid_argument("--chunks must be positive");

    const auto commands = dap::parse_script(read_file(script_path));
    std::size_t search_at = commands.size();
    int searches = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (commands[i].verb == dap::Command::Verb::search) {
            search_at = i;
            ++searches;
        }
        if (commands[i].verb == dap::Command::Verb::set &&
            (commands[i].name == "split-depth" || commands[i].name == "chunk"))
            throw std::invalid_argument("the script already configures a split");
    }
    if (searches != 1)
        throw std::invalid_argument("split needs a script with exactly one search command");

    fs::create_directories(out_dir);

    auto emit = [&](const std::string& name, const std::vector<dap::Command>& extra) {
        std::vector<dap::Command> edited(commands.begin(),
                                         commands.begin() + static_cast<long>(search_at));
        edited.insert(edited.end(), extra.begin(), extra.end());
        edited.insert(edited.end(), commands.begin() + static_cast<long>(search_at),
                      commands.end());
        const std::string path = out_dir + "/" + name;
        write_file(path, dap::render_script(edited));
        std::cout << "wrote " << path << '\n';
    };

    auto set_command = [](const std::string& key, const std::string& value) {
        dap::Command command;
        command.verb = dap::Command::Verb::set;
        command.name = key;
        command.text = value;
        return command;
    };

    emit("stem.script", {set_command("max-depth", std::to_string(depth))});
    for (int i = 1; i <= chunks; ++i)
        emit("chunk-" + std::to_string(i) + ".script",
             {set_command("split-depth", std::to_string(depth)),
              set_command("chunk", std::to_string(i) + " " + std::to_string(chunks))});

    std::cout << "run each script with --report-json <file>.json into " << out_dir
              << ", then \"dapsearch merge " << out_dir << "\"\n";
    return 0;
}

int do_merge(const std::string& dir, const std::string& json_out) {
    std::vector<std::string> paths;
    for (const fs::directory_entry& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw std::runtime_error("no .json reports in " + dir);

    std::vector<dap::RunReport> reports;
    for (const std::string& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + path);
        reports.push_back(dap::read_run_report(in));
    }

    const dap::RunReport merged = dap::merge_reports(std::move(reports));

    std::cout << "merged " << paths.size() << " reports (base " << merged.base << ")\n";
    std::cout << "iterations: " << merged.counters.iterations << '\n';
    std::string rendered;
    switch (merged.kind) {
        case dap::SpaceKind::sequences:
            rendered = dap::render_gap_list(merged.best_elements);
            break;
        case dap::SpaceKind::colorings: {
            dap::Coloring best;
            best.color_count = merged.class_count;
            best.assignment = merged.best_elements;
            rendered = dap::render_coloring_classes(best);
            break;
        }
        case dap::SpaceKind::covers: {
            dap::CoverWord best;
            best.set_count = merged.class_count;
            best.assignment.assign(merged.best_elements.begin(), merged.best_elements.end());
            rendered = dap::render_cover_classes(best);
            break;
        }
    }
    const char* kind_word = merged.kind == dap::SpaceKind::sequences  ? "sequence"
                            : merged.kind == dap::SpaceKind::colorings ? "coloring"
                                                                       : "cover";
    std::cout << "best " << kind_word << " (len " << merged.best_depth << "): " << rendered
              << '\n';
    std::cout << "complete: " << (merged.complete ? "yes" : "no") << '\n';

    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + json_out);
        dap::write_run_report(out, merged);
    }
    return merged.complete ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"backtracking searches for double-AP-free sequences and colorings"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "execute a search script");
    run->add_option("script", run_args.script_path, "script file")->required();
    run->add_option("--emit-depth-counts", run_args.depth_counts_path,
                    "write generated-nodes-per-length CSV of the last search");
    run->add_option("--emit-gap-histogram", run_args.gap_histogram_path,
                    "write gap histogram CSV of the last search's best sequence");
    run->add_option("--checkpoint", run_args.checkpoint_path,
                    "write the final traversal snapshot to this file");
    run->add_flag("--resume", run_args.resume, "resume from the --checkpoint file");
    CLI::Option* budget = run->add_option("--max-iterations", run_args.max_iterations,
                                          "iteration budget (overrides the script)");
    run->add_option("--report-json", run_args.report_json_path,
                    "write a JSON run report of the last search (for merge)");
    run->add_option("--dump-dir", run_args.dump_dir, "directory for script dump files");

    std::string oracle_kind;
    std::vector<int> oracle_params;
    int oracle_bound = 64;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive least-interval queries");
    oracle->add_option("kind", oracle_kind, "plain | gapped | uniform")->required();
    oracle->add_option("params", oracle_params, "query parameters")->required();
    oracle->add_option("--bound", oracle_bound, "search ceiling (default 64)");

    std::string verify_path;
    int verify_k = 3;
    CLI::App* verify = app.add_subcommand("verify", "check a witness coloring file");
    verify->add_option("file", verify_path, "digit-string coloring file")->required();
    verify->add_option("--k", verify_k, "progression length")->required();

    std::string split_script, split_out;
    int split_depth = 0, split_chunks = 0;
    CLI::App* split = app.add_subcommand("split", "partition a search into chunk scripts");
    split->add_option("script", split_script, "script file")->required();
    split->add_option("--depth", split_depth, "split depth")->required();
    split->add_option("--chunks", split_chunks, "number of chunks")->required();
    split->add_option("--out", split_out, "output directory")->required();

    std::string merge_dir, merge_json;
    CLI::App* merge = app.add_subcommand("merge", "combine chunk reports");
    merge->add_option("dir", merge_dir, "directory of .json reports")->required();
    merge->add_option("--json", merge_json, "also write the merged report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            run_args.has_max_iterations = budget->count() > 0;
            if (run_args.resume && run_args.checkpoint_path.empty())
                throw std::invalid_argument("--resume needs --checkpoint");
            return do_run(run_args);
        }
        if (oracle->parsed()) return do_oracle(oracle_kind, oracle_params, oracle_bound);
        if (verify->parsed()) return do_verify(verify_path, verify_k);
        if (split->parsed())
            return do_split(split_script, split_depth, split_chunks, split_out);
        if (merge->parsed()) return do_merge(merge_dir, merge_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
