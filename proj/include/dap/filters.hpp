// Pruning predicates ("filters") for the backtracking engine.
//
// Each filter offers a full check on a complete object and an incremental
// check for appending one element to an object that already passes. The
// incremental checks are the engine's hot path: they inspect only the
// patterns that the new element could complete, so a passing chain of
// appends is equivalent to running the full check at every prefix.
//
// Filters themselves are immutable; all per-path bookkeeping (prefix
// sums, per-class position lists) lives in SearchState, which the engine
// pushes and pops as it walks the tree.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dap/core.hpp"

namespace dap {

enum class SpaceKind { sequences, colorings, covers };

const char* space_kind_name(SpaceKind kind);
std::optional<SpaceKind> space_kind_from_name(std::string_view name);

// Mutable path state for one depth-first traversal. Depth is the length
// of the current object: gap symbols for sequences, positions for
// colorings and covers. Sequence states also carry the integer sequence
// with start value 1 (term i+1 = 1 + sum of the first i gaps), which
// doubles as the prefix-sum table for additive checks.
class SearchState {
  public:
    static SearchState for_sequences(std::vector<int> alphabet, const GapWord& seed);
    static SearchState for_colorings(int color_count, const Coloring& seed);
    static SearchState for_covers(int set_count, const CoverWord& seed);

    SpaceKind kind() const { return kind_; }
    int depth() const;
    int seed_depth() const { return seed_depth_; }

    // Children of every node, in a fixed order: alphabet order for
    // sequences, color id order for colorings, increasing indicator
    // masks for covers.
    int branch_count() const { return branch_count_; }
    int element_at_branch(int branch) const;

    void push(int element);
    void pop();

    int class_count() const { return class_count_; }
    const std::vector<int>& class_positions(int class_id) const;

    const std::vector<int>& alphabet() const { return alphabet_; }
    const std::vector<int>& gaps() const { return gaps_; }
    const std::vector<int>& terms() const { return terms_; }
    const std::vector<int>& colors() const { return colors_; }
    const std::vector<int>& masks() const { return masks_; }

    // The element list that identifies the current object (equals gaps,
    // colors, or masks depending on the kind).
    const std::vector<int>& elements() const;

    GapWord gap_word_object() const;
    IncreasingSequence sequence_object() const;
    Coloring coloring_object() const;
    CoverWord cover_object() const;

  private:
    SearchState() = default;

    SpaceKind kind_ = SpaceKind::sequences;
    int branch_count_ = 0;
    int class_count_ = 0;
    int seed_depth_ = 0;
    std::vector<int> alphabet_;
    std::vector<int> gaps_;
    std::vector<int> terms_;  // sequences only; terms_[0] = 1
    std::vector<int> colors_;
    std::vector<int> masks_;
    std::vector<std::vector<int>> classes_;  // positions per color / set
};

// Construction-time description of a filter: a registered name plus its
// integer parameters. Scalar parameters are single-element lists.
struct FilterSpec {
    std::string name;
    std::map<std::string, std::vector<int>> parameters;

    bool operator==(const FilterSpec&) const = default;
};

// Outcome of a failed full check.
struct Violation {
    std::string description;
    std::optional<ApWitness> witness;
    std::optional<int> class_id;  // color / set, for per-class filters
};

class Filter {
  public:
    virtual ~Filter() = default;

    const FilterSpec& spec() const { return spec_; }
    // Name as reported to the user, e.g. "no-n-aps" with k=3 displays as
    // "no-3-aps".
    const std::string& display_name() const { return display_name_; }

    virtual bool applies_to(SpaceKind kind) const = 0;
    // Parameter/space consistency checks that need the concrete state
    // (e.g. a per-color bound list must match the color count). Called
    // once before a run; throws std::invalid_argument on mismatch.
    virtual void validate_for(const SearchState& state) const;

    // Full check of the current object; nullopt means pass.
    virtual std::optional<Violation> check_full(const SearchState& state) const = 0;
    // True iff appending `element` keeps the object free of this
    // filter's pattern. Precondition: the current object passes.
    virtual bool check_append(const SearchState& state, int element) const = 0;

  protected:
    Filter(FilterSpec spec, std::string display_name);

    FilterSpec spec_;
    std::string display_name_;
};

// Registered names: no-double-aps (k), no-additive-squares,
// no-additive-cubes, no-additive-powers (p), no-mono-double-aps (k),
// no-n-aps (k), no-rainbow-aps (k), max-class-gaps (max-gaps list, one
// bound per color, 0 = unbounded). Throws std::invalid_argument for
// unknown names or missing/invalid parameters.
std::unique_ptr<Filter> make_filter(const FilterSpec& spec);

std::vector<std::string> registered_filter_names();

}  // namespace dap
