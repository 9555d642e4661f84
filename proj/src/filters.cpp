#include "dap/filters.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace dap {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::string join_positions(const std::vector<int>& positions) {
    std::ostringstream out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) out << ',';
        out << positions[i];
    }
    return out.str();
}

}  // namespace

const char* space_kind_name(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::sequences: return "sequences";
        case SpaceKind::colorings: return "colorings";
        case SpaceKind::covers: return "covers";
    }
    return "?";
}

std::optional<SpaceKind> space_kind_from_name(std::string_view name) {
    if (name == "sequences") return SpaceKind::sequences;
    if (name == "colorings") return SpaceKind::colorings;
    if (name == "covers") return SpaceKind::covers;
    return std::nullopt;
}

// ---- SearchState -------------------------------------------------------

SearchState SearchState::for_sequences(std::vector<int> alphabet, const GapWord& seed) {
    require(!alphabet.empty(), "sequence space needs a nonempty gap alphabet");
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        require(alphabet[i] >= 1, "gap alphabet entries must be positive");
        for (std::size_t j = i + 1; j < alphabet.size(); ++j)
            require(alphabet[i] != alphabet[j], "gap alphabet entries must be distinct");
    }
    SearchState st;
    st.kind_ = SpaceKind::sequences;
    st.alphabet_ = std::move(alphabet);
    st.branch_count_ = static_cast<int>(st.alphabet_.size());
    st.terms_.push_back(1);
    for (int g : seed.symbols) {
        require(std::find(st.alphabet_.begin(), st.alphabet_.end(), g) != st.alphabet_.end(),
                "seed gap outside the alphabet");
        st.push(g);
    }
    st.seed_depth_ = st.depth();
    return st;
}

SearchState SearchState::for_colorings(int color_count, const Coloring& seed) {
    require(color_count >= 1, "coloring space needs at least one color");
    require(seed.assignment.empty() || seed.color_count == color_count,
            "seed color count does not match the space");
    SearchState st;
    st.kind_ = SpaceKind::colorings;
    st.branch_count_ = color_count;
    st.class_count_ = color_count;
    st.classes_.resize(static_cast<std::size_t>(color_count) + 1);
    for (int c : seed.assignment) {
        require(c >= 1 && c <= color_count, "seed color out of range");
        st.push(c);
    }
    st.seed_depth_ = st.depth();
    return st;
}

SearchState SearchState::for_covers(int set_count, const CoverWord& seed) {
    require(set_count >= 1, "cover space needs at least one set");
    require(set_count <= 20, "cover space limited to 20 sets");
    require(seed.assignment.empty() || seed.set_count == set_count,
            "seed set count does not match the space");
    SearchState st;
    st.kind_ = SpaceKind::covers;
    st.branch_count_ = (1 << set_count) - 1;
    st.class_count_ = set_count;
    st.classes_.resize(static_cast<std::size_t>(set_count) + 1);
    for (unsigned m : seed.assignment) {
        require(m >= 1 && m < (1u << set_count), "seed subset out of range");
        st.push(static_cast<int>(m));
    }
    st.seed_depth_ = st.depth();
    return st;
}

int SearchState::depth() const {
    switch (kind_) {
        case SpaceKind::sequences: return static_cast<int>(gaps_.size());
        case SpaceKind::colorings: return static_cast<int>(colors_.size());
        case SpaceKind::covers: return static_cast<int>(masks_.size());
    }
    return 0;
}

int SearchState::element_at_branch(int branch) const {
    if (kind_ == SpaceKind::sequences) return alphabet_[static_cast<std::size_t>(branch)];
    return branch + 1;  // color ids / nonempty masks in increasing order
}

void SearchState::push(int element) {
    switch (kind_) {
        case SpaceKind::sequences:
            gaps_.push_back(element);
            terms_.push_back(terms_.back() + element);
            break;
        case SpaceKind::colorings:
            colors_.push_back(element);
            classes_[static_cast<std::size_t>(element)].push_back(
                static_cast<int>(colors_.size()));
            break;
        case SpaceKind::covers: {
            masks_.push_back(element);
            const int position = static_cast<int>(masks_.size());
            for (int q = 1; q <= class_count_; ++q)
                if (element & (1 << (q - 1)))
                    classes_[static_cast<std::size_t>(q)].push_back(position);
            break;
        }
    }
}

void SearchState::pop() {
    switch (kind_) {
        case SpaceKind::sequences:
            gaps_.pop_back();
            terms_.pop_back();
            break;
        case SpaceKind::colorings:
            classes_[static_cast<std::size_t>(colors_.back())].pop_back();
            colors_.pop_back();
            break;
        case SpaceKind::covers: {
            const int mask = masks_.back();
            for (int q = 1; q <= class_count_; ++q)
                if (mask & (1 << (q - 1))) classes_[static_cast<std::size_t>(q)].pop_back();
            masks_.pop_back();
            break;
        }
    }
}

const std::vector<int>& SearchState::class_positions(int class_id) const {
    return classes_[static_cast<std::size_t>(class_id)];
}

const std::vector<int>& SearchState::elements() const {
    switch (kind_) {
        case SpaceKind::sequences: return gaps_;
        case SpaceKind::colorings: return colors_;
        case SpaceKind::covers: return masks_;
    }
    return gaps_;
}

GapWord SearchState::gap_word_object() const {
    std::vector<int> sorted = alphabet_;
    std::sort(sorted.begin(), sorted.end());
    return gap_word(gaps_, std::move(sorted));
}

IncreasingSequence SearchState::sequence_object() const {
    return IncreasingSequence{terms_};
}

Coloring SearchState::coloring_object() const {
    Coloring c;
    c.assignment = colors_;
    c.color_count = class_count_;
    return c;
}

CoverWord SearchState::cover_object() const {
    CoverWord w;
    w.assignment.assign(masks_.begin(), masks_.end());
    w.set_count = class_count_;
    return w;
}

// ---- Filter base -------------------------------------------------------

Filter::Filter(FilterSpec spec, std::string display_name)
    : spec_(std::move(spec)), display_name_(std::move(display_name)) {}

void Filter::validate_for(const SearchState&) const {}

namespace {

int scalar_param(const FilterSpec& spec, const std::string& key, int minimum) {
    auto it = spec.parameters.find(key);
    require(it != spec.parameters.end(),
            "filter " + spec.name + " needs parameter " + key);
    require(it->second.size() == 1, "filter parameter " + key + " must be a single integer");
    require(it->second[0] >= minimum,
            "filter parameter " + key + " must be at least " + std::to_string(minimum));
    return it->second[0];
}

std::vector<int> list_param(const FilterSpec& spec, const std::string& key) {
    auto it = spec.parameters.find(key);
    require(it != spec.parameters.end(),
            "filter " + spec.name + " needs parameter " + key);
    require(!it->second.empty(), "filter parameter " + key + " must be nonempty");
    return it->second;
}

void reject_extra_params(const FilterSpec& spec,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : spec.parameters) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        require(known, "filter " + spec.name + " does not take parameter " + key);
    }
}

// No double k-AP in the integer sequence (sequence spaces).
class NoDoubleAps final : public Filter {
  public:
    explicit NoDoubleAps(FilterSpec spec)
        : Filter(std::move(spec), "no-double-aps"), k_(scalar_param(spec_, "k", 3)) {
        reject_extra_params(spec_, {"k"});
    }

    bool applies_to(SpaceKind kind) const override { return kind == SpaceKind::sequences; }

    std::optional<Violation> check_full(const SearchState& st) const override {
        auto witness = find_double_ap(st.sequence_object(), k_);
        if (!witness) return std::nullopt;
        return Violation{"double " + std::to_string(k_) + "-AP at positions " +
                             join_positions(witness->positions),
                         *witness, std::nullopt};
    }

    bool check_append(const SearchState& st, int element) const override {
        const auto& terms = st.terms();
        const int last = static_cast<int>(terms.size()) + 1;
        const int value = terms.back() + element;
        for (int d = 1; last - (k_ - 1) * d >= 1; ++d) {
            const int first = last - (k_ - 1) * d;
            const int step = terms[first + d - 1] - terms[first - 1];
            bool hit = true;
            for (int j = 2; j < k_; ++j) {
                const int hi = j == k_ - 1 ? value : terms[first + j * d - 1];
                if (hi - terms[first + (j - 1) * d - 1] != step) {
                    hit = false;
                    break;
                }
            }
            if (hit) return false;
        }
        return true;
    }

  private:
    int k_;
};

// No additive p-power in the gap word (sequence spaces). terms[i] is
// 1 + (sum of the first i gaps), so block sums are term differences.
class NoAdditivePowers final : public Filter {
  public:
    NoAdditivePowers(FilterSpec spec, std::string display, int power)
        : Filter(std::move(spec), std::move(display)), power_(power) {}

    bool applies_to(SpaceKind kind) const override { return kind == SpaceKind::sequences; }

    std::optional<Violation> check_full(const SearchState& st) const override {
        auto witness = find_additive_power(st.gap_word_object(), power_);
        if (!witness) return std::nullopt;
        return Violation{"additive " + std::to_string(power_) + "-power of block length " +
                             std::to_string(*witness->block_length) + " ending at gap " +
                             std::to_string(witness->positions.back() - 1),
                         *witness, std::nullopt};
    }

    bool check_append(const SearchState& st, int element) const override {
        const auto& terms = st.terms();
        const int end = static_cast<int>(st.gaps().size()) + 1;
        const int last_term = terms.back() + element;
        auto term_at = [&](int i) { return i == end ? last_term : terms[i]; };
        for (int b = 1; power_ * b <= end; ++b) {
            const int first = end - power_ * b + 1;
            const int sum = term_at(first + b - 1) - term_at(first - 1);
            bool hit = true;
            for (int j = 2; j <= power_; ++j) {
                if (term_at(first + j * b - 1) - term_at(first + (j - 1) * b - 1) != sum) {
                    hit = false;
                    break;
                }
            }
            if (hit) return false;
        }
        return true;
    }

  private:
    int power_;
};

// No color/set class may contain a double k-AP when read as the
// increasing sequence of its positions (colorings and covers).
class NoMonoDoubleAps final : public Filter {
  public:
    explicit NoMonoDoubleAps(FilterSpec spec)
        : Filter(std::move(spec), "no-mono-double-aps"), k_(scalar_param(spec_, "k", 3)) {
        reject_extra_params(spec_, {"k"});
    }

    bool applies_to(SpaceKind kind) const override {
        return kind == SpaceKind::colorings || kind == SpaceKind::covers;
    }

    std::optional<Violation> check_full(const SearchState& st) const override {
        for (int q = 1; q <= st.class_count(); ++q) {
            const auto& positions = st.class_positions(q);
            if (static_cast<int>(positions.size()) < k_) continue;
            auto witness = find_double_ap(IncreasingSequence{positions}, k_);
            if (!witness) continue;
            return Violation{"class " + std::to_string(q) + " has a double " +
                                 std::to_string(k_) + "-AP at class indices " +
                                 join_positions(witness->positions),
                             *witness, q};
        }
        return std::nullopt;
    }

    bool check_append(const SearchState& st, int element) const override {
        const int position = st.depth() + 1;
        if (st.kind() == SpaceKind::colorings)
            return class_extension_free(st.class_positions(element), position);
        for (int q = 1; q <= st.class_count(); ++q)
            if (element & (1 << (q - 1)))
                if (!class_extension_free(st.class_positions(q), position)) return false;
        return true;
    }

  private:
    // Does appending `position` to the class keep it double-k-AP free?
    // Only progressions of class indices ending at the new index can
    // appear, so scan those.
    bool class_extension_free(const std::vector<int>& positions, int position) const {
        const int last = static_cast<int>(positions.size()) + 1;
        for (int d = 1; last - (k_ - 1) * d >= 1; ++d) {
            const int first = last - (k_ - 1) * d;
            const int step = positions[first + d - 1] - positions[first - 1];
            bool hit = true;
            for (int j = 2; j < k_; ++j) {
                const int hi = j == k_ - 1 ? position : positions[first + j * d - 1];
                if (hi - positions[first + (j - 1) * d - 1] != step) {
                    hit = false;
                    break;
                }
            }
            if (hit) return false;
        }
        return true;
    }

    int k_;
};

// No monochromatic k-AP of positions (colorings).
class NoNAps final : public Filter {
  public:
    explicit NoNAps(FilterSpec spec)
        : Filter(std::move(spec), ""), k_(scalar_param(spec_, "k", 2)) {
        reject_extra_params(spec_, {"k"});
        display_name_ = "no-" + std::to_string(k_) + "-aps";
    }

    bool applies_to(SpaceKind kind) const override { return kind == SpaceKind::colorings; }

    std::optional<Violation> check_full(const SearchState& st) const override {
        auto witness = find_mono_ap(st.coloring_object(), k_);
        if (!witness) return std::nullopt;
        return Violation{"monochromatic " + std::to_string(k_) + "-AP at positions " +
                             join_positions(witness->positions),
                         *witness,
                         st.colors()[static_cast<std::size_t>(witness->positions[0]) - 1]};
    }

    bool check_append(const SearchState& st, int element) const override {
        const auto& colors = st.colors();
        const int position = static_cast<int>(colors.size()) + 1;
        for (int d = 1; position - (k_ - 1) * d >= 1; ++d) {
            bool hit = true;
            for (int j = 1; j < k_; ++j) {
                if (colors[static_cast<std::size_t>(position - j * d) - 1] != element) {
                    hit = false;
                    break;
                }
            }
            if (hit) return false;
        }
        return true;
    }

  private:
    int k_;
};

// No k equally spaced positions with pairwise distinct colors.
class NoRainbowAps final : public Filter {
  public:
    explicit NoRainbowAps(FilterSpec spec)
        : Filter(std::move(spec), "no-rainbow-aps"), k_(scalar_param(spec_, "k", 2)) {
        reject_extra_params(spec_, {"k"});
    }

    bool applies_to(SpaceKind kind) const override { return kind == SpaceKind::colorings; }

    void validate_for(const SearchState& st) const override {
        require(k_ <= st.class_count(),
                "no-rainbow-aps needs at least as many colors as its AP length");
    }

    std::optional<Violation> check_full(const SearchState& st) const override {
        if (k_ > st.class_count()) return std::nullopt;
        auto witness = find_rainbow_ap(st.coloring_object(), k_);
        if (!witness) return std::nullopt;
        return Violation{"rainbow " + std::to_string(k_) + "-AP at positions " +
                             join_positions(witness->positions),
                         *witness, std::nullopt};
    }

    bool check_append(const SearchState& st, int element) const override {
        const auto& colors = st.colors();
        const int position = static_cast<int>(colors.size()) + 1;
        if (st.class_count() > 64) return check_append_wide(st, element);
        for (int d = 1; position - (k_ - 1) * d >= 1; ++d) {
            std::uint64_t seen = 1ull << (element - 1);
            bool hit = true;
            for (int j = 1; j < k_; ++j) {
                const std::uint64_t bit =
                    1ull << (colors[static_cast<std::size_t>(position - j * d) - 1] - 1);
                if (seen & bit) {
                    hit = false;
                    break;
                }
                seen |= bit;
            }
            if (hit) return false;
        }
        return true;
    }

  private:
    bool check_append_wide(const SearchState& st, int element) const {
        const auto& colors = st.colors();
        const int position = static_cast<int>(colors.size()) + 1;
        std::vector<char> seen(static_cast<std::size_t>(st.class_count()) + 1, 0);
        for (int d = 1; position - (k_ - 1) * d >= 1; ++d) {
            std::fill(seen.begin(), seen.end(), 0);
            seen[static_cast<std::size_t>(element)] = 1;
            bool hit = true;
            for (int j = 1; j < k_; ++j) {
                char& mark = seen[static_cast<std::size_t>(
                    colors[static_cast<std::size_t>(position - j * d) - 1])];
                if (mark) {
                    hit = false;
                    break;
                }
                mark = 1;
            }
            if (hit) return false;
        }
        return true;
    }

    int k_;
};

// Per-color cap on the gap between consecutive class elements. Only
// within-class gaps count: the distance from the interval boundary to
// the first/last element is unconstrained, and a color may stay unused.
// Bound 0 means unbounded.
class MaxClassGaps final : public Filter {
  public:
    explicit MaxClassGaps(FilterSpec spec)
        : Filter(std::move(spec), "max-class-gaps"), bounds_(list_param(spec_, "max-gaps")) {
        reject_extra_params(spec_, {"max-gaps"});
        for (int b : bounds_) require(b >= 0, "max-gaps bounds must be nonnegative");
    }

    bool applies_to(SpaceKind kind) const override { return kind == SpaceKind::colorings; }

    void validate_for(const SearchState& st) const override {
        require(static_cast<int>(bounds_.size()) == st.class_count(),
                "max-class-gaps needs one bound per color");
    }

    std::optional<Violation> check_full(const SearchState& st) const override {
        for (int q = 1; q <= st.class_count() && q <= static_cast<int>(bounds_.size()); ++q) {
            const int bound = bounds_[static_cast<std::size_t>(q) - 1];
            if (bound == 0) continue;
            const auto& positions = st.class_positions(q);
            for (std::size_t i = 1; i < positions.size(); ++i) {
                const int gap = positions[i] - positions[i - 1];
                if (gap > bound)
                    return Violation{"color " + std::to_string(q) + " gap " +
                                         std::to_string(gap) + " between positions " +
                                         std::to_string(positions[i - 1]) + " and " +
                                         std::to_string(positions[i]) + " exceeds " +
                                         std::to_string(bound),
                                     std::nullopt, q};
            }
        }
        return std::nullopt;
    }

    bool check_append(const SearchState& st, int element) const override {
        const int bound = bounds_[static_cast<std::size_t>(element) - 1];
        if (bound == 0) return true;
        const auto& positions = st.class_positions(element);
        if (positions.empty()) return true;
        return st.depth() + 1 - positions.back() <= bound;
    }

  private:
    std::vector<int> bounds_;
};

}  // namespace

std::unique_ptr<Filter> make_filter(const FilterSpec& spec) {
    if (spec.name == "no-double-aps") return std::make_unique<NoDoubleAps>(spec);
    if (spec.name == "no-additive-squares") {
        reject_extra_params(spec, {});
        return std::make_unique<NoAdditivePowers>(spec, "no-additive-squares", 2);
    }
    if (spec.name == "no-additive-cubes") {
        reject_extra_params(spec, {});
        return std::make_unique<NoAdditivePowers>(spec, "no-additive-cubes", 3);
    }
    if (spec.name == "no-additive-powers") {
        const int p = scalar_param(spec, "p", 2);
        reject_extra_params(spec, {"p"});
        return std::make_unique<NoAdditivePowers>(spec, "no-additive-powers", p);
    }
    if (spec.name == "no-mono-double-aps") return std::make_unique<NoMonoDoubleAps>(spec);
    if (spec.name == "no-n-aps") return std::make_unique<NoNAps>(spec);
    if (spec.name == "no-rainbow-aps") return std::make_unique<NoRainbowAps>(spec);
    if (spec.name == "max-class-gaps") return std::make_unique<MaxClassGaps>(spec);
    std::string names;
    for (const auto& n : registered_filter_names()) names += " " + n;
    throw std::invalid_argument("unknown filter \"" + spec.name + "\"; known filters:" + names);
}

std::vector<std::string> registered_filter_names() {
    return {"no-double-aps",     "no-additive-squares", "no-additive-cubes",
            "no-additive-powers", "no-mono-double-aps",  "no-n-aps",
            "no-rainbow-aps",    "max-class-gaps"};
}

}  // namespace dap
