#include "dap/reportio.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dap {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void write_depth_counts_csv(std::ostream& out,
                            const std::vector<long long>& passing_per_depth) {
    out << "depth,count\n";
    for (std::size_t depth = 0; depth < passing_per_depth.size(); ++depth)
        out << depth << ',' << passing_per_depth[depth] << '\n';
}

void write_gap_histogram_csv(std::ostream& out, const std::vector<int>& gaps) {
    std::map<int, long long> histogram;
    for (int gap : gaps) ++histogram[gap];
    out << "gap,frequency\n";
    for (const auto& [gap, frequency] : histogram) out << gap << ',' << frequency << '\n';
}

RunReport report_from_run(const RunConfig& config, const RunResult& result) {
    RunReport report;
    report.base = base_digest(config);
    report.kind = config.space.kind;
    report.class_count = config.space.kind == SpaceKind::colorings ? config.space.color_count
                         : config.space.kind == SpaceKind::covers  ? config.space.set_count
                                                                   : 0;
    report.max_depth = config.max_depth;
    report.split = config.split;
    report.complete = result.complete;
    report.counters = result.counters;
    report.best_depth = result.best_depth;
    report.best_elements = result.best_elements;
    report.seconds = result.seconds;
    for (const FilterSpec& spec : config.filters)
        report.filter_names.push_back(make_filter(spec)->display_name());
    return report;
}

void write_run_report(std::ostream& out, const RunReport& report) {
    json doc;
    doc["format"] = "dapsearch-report-1";
    doc["base_digest"] = report.base;
    doc["kind"] = space_kind_name(report.kind);
    doc["class_count"] = report.class_count;
    if (report.max_depth) doc["max_depth"] = *report.max_depth;
    if (report.split) {
        doc["split"] = {{"depth", report.split->depth},
                        {"index", report.split->chunk_index},
                        {"count", report.split->chunk_count}};
    }
    doc["complete"] = report.complete;
    doc["iterations"] = report.counters.iterations;
    doc["generated_per_depth"] = report.counters.generated_per_depth;
    doc["passing_per_depth"] = report.counters.passing_per_depth;
    doc["best_depth"] = report.best_depth;
    doc["best_elements"] = report.best_elements;
    doc["seconds"] = report.seconds;
    doc["filters"] = report.filter_names;
    out << doc.dump(2) << '\n';
}

RunReport read_run_report(std::istream& in) {
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad report: ") + e.what());
    }
    if (doc.value("format", "") != "dapsearch-report-1")
        throw std::runtime_error("bad report: unrecognized format field");
    RunReport report;
    report.base = doc.at("base_digest").get<std::string>();
    auto kind = space_kind_from_name(doc.at("kind").get<std::string>());
    if (!kind) throw std::runtime_error("bad report: unknown space kind");
    report.kind = *kind;
    report.class_count = doc.at("class_count").get<int>();
    if (doc.contains("max_depth")) report.max_depth = doc.at("max_depth").get<int>();
    if (doc.contains("split")) {
        SplitSpec split;
        split.depth = doc.at("split").at("depth").get<int>();
        split.chunk_index = doc.at("split").at("index").get<int>();
        split.chunk_count = doc.at("split").at("count").get<int>();
        report.split = split;
    }
    report.complete = doc.at("complete").get<bool>();
    report.counters.iterations = doc.at("iterations").get<long long>();
    report.counters.generated_per_depth =
        doc.at("generated_per_depth").get<std::vector<long long>>();
    report.counters.passing_per_depth =
        doc.at("passing_per_depth").get<std::vector<long long>>();
    report.best_depth = doc.at("best_depth").get<int>();
    report.best_elements = doc.at("best_elements").get<std::vector<int>>();
    report.seconds = doc.at("seconds").get<double>();
    report.filter_names = doc.at("filters").get<std::vector<std::string>>();
    return report;
}

RunReport merge_reports(std::vector<RunReport> reports) {
    require(!reports.empty(), "nothing to merge");

    std::vector<RunReport> chunks;
    std::vector<RunReport> stems;
    for (RunReport& report : reports) {
        if (report.split)
            chunks.push_back(std::move(report));
        else
            stems.push_back(std::move(report));
    }
    require(stems.size() == 1, "merge needs exactly one stem report (a run without a "
                               "split field), found " + std::to_string(stems.size()));
    const RunReport& stem = stems.front();
    require(!chunks.empty(), "merge needs at least one chunk report");

    const int depth = chunks.front().split->depth;
    const int count = chunks.front().split->chunk_count;
    require(count >= 1, "bad chunk count");
    std::vector<char> seen(static_cast<std::size_t>(count) + 1, 0);
    for (const RunReport& chunk : chunks) {
        require(chunk.base == stem.base, "chunk and stem digests disagree");
        require(chunk.split->depth == depth && chunk.split->chunk_count == count,
                "chunk split fields disagree");
        require(chunk.max_depth == chunks.front().max_depth,
                "chunk depth limits disagree");
        const int index = chunk.split->chunk_index;
        require(index >= 1 && index <= count, "chunk index out of range");
        require(!seen[static_cast<std::size_t>(index)],
                "duplicate chunk " + std::to_string(index));
        seen[static_cast<std::size_t>(index)] = 1;
    }
    require(static_cast<int>(chunks.size()) == count,
            "expected " + std::to_string(count) + " chunks, found " +
                std::to_string(chunks.size()));
    require(stem.max_depth && *stem.max_depth == depth,
            "stem depth limit must equal the split depth");

    std::sort(chunks.begin(), chunks.end(), [](const RunReport& a, const RunReport& b) {
        return a.split->chunk_index < b.split->chunk_index;
    });

    RunReport merged;
    merged.base = stem.base;
    merged.kind = stem.kind;
    merged.class_count = stem.class_count;
    merged.max_depth = chunks.front().max_depth;
    merged.split.reset();
    merged.filter_names = stem.filter_names;
    merged.complete = stem.complete;
    merged.counters = stem.counters;
    merged.best_depth = stem.best_depth;
    merged.best_elements = stem.best_elements;
    merged.seconds = stem.seconds;
    for (const RunReport& chunk : chunks) {
        merged.complete = merged.complete && chunk.complete;
        merged.counters.iterations += chunk.counters.iterations;
        auto add_into = [](std::vector<long long>& into, const std::vector<long long>& from) {
            if (into.size() < from.size()) into.resize(from.size(), 0);
            for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
        };
        add_into(merged.counters.generated_per_depth, chunk.counters.generated_per_depth);
        add_into(merged.counters.passing_per_depth, chunk.counters.passing_per_depth);
        merged.seconds += chunk.seconds;
        if (chunk.best_depth > merged.best_depth) {
            merged.best_depth = chunk.best_depth;
            merged.best_elements = chunk.best_elements;
        }
    }
    return merged;
}

}  // namespace dap
