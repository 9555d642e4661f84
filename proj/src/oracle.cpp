#include "dap/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dap {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void validate_query(const WStarQuery& query) {
    require(query.color_count >= 1, "w* needs at least one color");
    require(query.k >= 3, "w* is defined for progressions of length at least 3");
    require(query.bound >= 1, "w* search bound must be positive");
    if (query.kind == WStarKind::plain) {
        require(query.max_gaps.empty(), "plain w* takes no gap bounds");
    } else {
        require(static_cast<int>(query.max_gaps.size()) == query.color_count,
                "w* needs one gap bound per color");
        for (int g : query.max_gaps) require(g >= 0, "gap bounds must be nonnegative");
    }
}

// Exhaustive enumeration of admissible pattern-free colorings, longest
// first found. Deliberately self-contained: plain recursion with inline
// checks, sharing no code with the engine traversal or the filters.
class WStarSolver {
  public:
    explicit WStarSolver(const WStarQuery& query) : query_(query) {
        classes_.resize(static_cast<std::size_t>(query.color_count) + 1);
    }

    WStarResult solve() {
        extend();
        WStarResult result;
        result.nodes = nodes_;
        result.longest_free_length = static_cast<int>(best_.size());
        result.longest_free.assignment = best_;
        result.longest_free.color_count = query_.color_count;
        if (capped_) {
            result.exact = false;
            result.value = query_.bound;
        } else {
            result.exact = true;
            result.value = static_cast<int>(best_.size()) + 1;
        }
        return result;
    }

  private:
    bool gap_allows(int color, int position) const {
        if (query_.max_gaps.empty()) return true;
        const int bound = query_.max_gaps[static_cast<std::size_t>(color) - 1];
        if (bound == 0) return true;
        const auto& positions = classes_[static_cast<std::size_t>(color)];
        return positions.empty() || position - positions.back() <= bound;
    }

    // Would appending `position` to the class give k within-class indices
    // in progression whose positions are also in progression?
    bool creates_double_ap(int color, int position) const {
        const auto& cls = classes_[static_cast<std::size_t>(color)];
        const int k = query_.k;
        const int last = static_cast<int>(cls.size()) + 1;
        for (int d = 1; last - (k - 1) * d >= 1; ++d) {
            const int first = last - (k - 1) * d;
            const int step = cls[static_cast<std::size_t>(first + d) - 1] -
                             cls[static_cast<std::size_t>(first) - 1];
            bool hit = true;
            for (int j = 2; j < k; ++j) {
                const int hi = j == k - 1
                                   ? position
                                   : cls[static_cast<std::size_t>(first + j * d) - 1];
                if (hi - cls[static_cast<std::size_t>(first + (j - 1) * d) - 1] != step) {
                    hit = false;
                    break;
                }
            }
            if (hit) return true;
        }
        return false;
    }

    void extend() {
        if (static_cast<int>(colors_.size()) > static_cast<int>(best_.size())) best_ = colors_;
        if (static_cast<int>(colors_.size()) >= query_.bound) {
            capped_ = true;
            return;
        }
        const int position = static_cast<int>(colors_.size()) + 1;
        for (int color = 1; color <= query_.color_count && !capped_; ++color) {
            ++nodes_;
            if (!gap_allows(color, position)) continue;
            if (creates_double_ap(color, position)) continue;
            colors_.push_back(color);
            classes_[static_cast<std::size_t>(color)].push_back(position);
            extend();
            classes_[static_cast<std::size_t>(color)].pop_back();
            colors_.pop_back();
        }
    }

    const WStarQuery& query_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> best_;
    long long nodes_ = 0;
    bool capped_ = false;
};

}  // namespace

WStarQuery plain_query(int color_count, int k, int bound) {
    WStarQuery query;
    query.kind = WStarKind::plain;
    query.color_count = color_count;
    query.k = k;
    query.bound = bound;
    validate_query(query);
    return query;
}

WStarQuery gapped_query(int k, std::vector<int> max_gaps, int bound) {
    WStarQuery query;
    query.kind = WStarKind::gapped;
    query.color_count = static_cast<int>(max_gaps.size());
    query.k = k;
    query.max_gaps = std::move(max_gaps);
    query.bound = bound;
    validate_query(query);
    return query;
}

WStarQuery uniform_gap_query(int color_count, int k, int gap, int bound) {
    require(gap >= 0, "gap bounds must be nonnegative");
    WStarQuery query;
    query.kind = WStarKind::uniform_gap;
    query.color_count = color_count;
    query.k = k;
    query.uniform_gap = gap;
    query.max_gaps.assign(static_cast<std::size_t>(color_count), gap);
    query.bound = bound;
    validate_query(query);
    return query;
}

WStarResult w_star(const WStarQuery& query) {
    validate_query(query);
    return WStarSolver(query).solve();
}

std::string format_w_star_query(const WStarQuery& query) {
    std::ostringstream out;
    out << "w*(";
    switch (query.kind) {
        case WStarKind::plain:
            out << query.color_count << ',' << query.k;
            break;
        case WStarKind::uniform_gap:
            out << query.color_count << ',' << query.k << ';' << query.uniform_gap;
            break;
        case WStarKind::gapped:
            out << query.k << ';';
            for (std::size_t i = 0; i < query.max_gaps.size(); ++i) {
                if (i) out << ',';
                out << query.max_gaps[i];
            }
            break;
    }
    out << ')';
    return out.str();
}

std::string format_w_star_result(const WStarQuery& query, const WStarResult& result) {
    std::ostringstream out;
    out << format_w_star_query(query);
    if (result.exact)
        out << " = " << result.value;
    else
        out << " > " << result.value;
    return out.str();
}

WitnessReport verify_witness_coloring(std::string_view digits, int k) {
    WitnessReport report;
    report.coloring = parse_coloring_text(digits);
    report.violation = find_mono_double_ap(report.coloring, k);
    report.pass = !report.violation.has_value();
    for (int color = 1; color <= report.coloring.color_count; ++color) {
        ClassStat stat;
        stat.color = color;
        stat.size = static_cast<int>(color_class(report.coloring, color).size());
        const GapWord gaps = class_gaps(report.coloring, color);
        stat.max_gap = gaps.symbols.empty()
                           ? 0
                           : *std::max_element(gaps.symbols.begin(), gaps.symbols.end());
        report.classes.push_back(stat);
    }
    return report;
}

IncreasingSequence block_transform(const IncreasingSequence& x, int m) {
    require(m >= 1, "block length must be positive");
    require(static_cast<int>(x.terms.size()) >= 2 * m + 1,
            "sequence too short for the block transform");
    const int count = (static_cast<int>(x.terms.size()) - 1) / m;
    std::vector<int> z;
    z.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i)
        z.push_back(x.terms[static_cast<std::size_t>(i * m)] - x.terms[0]);
    return increasing_sequence(std::move(z));
}

ApWitness pullback_double_ap(const ApWitness& witness, int m) {
    require(m >= 1, "block length must be positive");
    require(witness.positions.size() >= 3, "invalid witness: fewer than three positions");
    const int d = witness.positions[1] - witness.positions[0];
    require(d >= 1, "invalid witness: positions not increasing");
    for (std::size_t i = 1; i < witness.positions.size(); ++i)
        require(witness.positions[i] - witness.positions[i - 1] == d,
                "invalid witness: positions not in progression");
    ApWitness pulled;
    pulled.kind = WitnessKind::double_ap;
    for (int p : witness.positions) pulled.positions.push_back(p * m + 1);
    return pulled;
}

AdditiveFreeResult max_additive_power_free_length(std::vector<int> alphabet, int power,
                                                  int bound) {
    require(power >= 2, "additive powers need at least two blocks");
    require(bound >= 0, "bound must be nonnegative");
    require(!alphabet.empty(), "alphabet must be nonempty");
    std::sort(alphabet.begin(), alphabet.end());
    require(alphabet.front() >= 1, "alphabet entries must be positive");
    require(std::adjacent_find(alphabet.begin(), alphabet.end()) == alphabet.end(),
            "alphabet entries must be distinct");

    AdditiveFreeResult result;
    std::vector<int> word;
    std::vector<long long> prefix{0};
    std::vector<int> best;
    bool capped = false;

    // Appending a symbol can only complete a power ending at the new
    // last index, so check those block lengths against the prefix sums.
    auto append_free = [&](int symbol) {
        const int end = static_cast<int>(word.size()) + 1;
        const long long top = prefix.back() + symbol;
        auto sum_to = [&](int i) { return i == end ? top : prefix[static_cast<std::size_t>(i)]; };
        for (int b = 1; power * b <= end; ++b) {
            const int first = end - power * b + 1;
            const long long sum = sum_to(first + b - 1) - sum_to(first - 1);
            bool hit = true;
            for (int j = 2; j <= power; ++j) {
                if (sum_to(first + j * b - 1) - sum_to(first + (j - 1) * b - 1) != sum) {
                    hit = false;
                    break;
                }
            }
            if (hit) return false;
        }
        return true;
    };

    auto extend = [&](auto&& self) -> void {
        if (word.size() > best.size()) best = word;
        if (static_cast<int>(word.size()) >= bound) {
            capped = true;
            return;
        }
        for (int symbol : alphabet) {
            if (capped) return;
            ++result.nodes;
            if (!append_free(symbol)) continue;
            word.push_back(symbol);
            prefix.push_back(prefix.back() + symbol);
            self(self);
            prefix.pop_back();
            word.pop_back();
        }
    };
    extend(extend);

    result.length = static_cast<int>(best.size());
    result.capped = capped;
    result.witness = gap_word(std::move(best), std::move(alphabet));
    return result;
}

}  // namespace dap
