#include <functional>
#include <stdexcept>
#include <vector>

#include "dap/filters.hpp"
#include "doctest.h"

using namespace dap;

namespace {

FilterSpec spec_of(const std::string& name,
                   std::map<std::string, std::vector<int>> parameters = {}) {
    FilterSpec spec;
    spec.name = name;
    spec.parameters = std::move(parameters);
    return spec;
}

// Walks the whole bounded tree below `state` and checks, at every edge,
// that the incremental verdict matches a full check of the child. Only
// passing children are descended into, mirroring the engine. Returns the
// number of edges inspected.
long long check_agreement(SearchState& state, const Filter& filter, int max_depth) {
    if (state.depth() >= max_depth) return 0;
    long long edges = 0;
    for (int branch = 0; branch < state.branch_count(); ++branch) {
        const int element = state.element_at_branch(branch);
        const bool incremental = filter.check_append(state, element);
        state.push(element);
        const bool full = !filter.check_full(state).has_value();
        CHECK(incremental == full);
        ++edges;
        if (full) edges += check_agreement(state, filter, max_depth);
        state.pop();
    }
    return edges;
}

}  // namespace

TEST_CASE("sequence search state tracks gaps, terms and branches") {
    SearchState state = SearchState::for_sequences({2, 1, 3}, GapWord{});
    CHECK(state.kind() == SpaceKind::sequences);
    CHECK(state.depth() == 0);
    CHECK(state.branch_count() == 3);
    CHECK(state.element_at_branch(0) == 2);  // extension order as given
    CHECK(state.terms() == std::vector<int>{1});

    state.push(2);
    state.push(1);
    CHECK(state.depth() == 2);
    CHECK(state.gaps() == std::vector<int>{2, 1});
    CHECK(state.terms() == std::vector<int>{1, 3, 4});
    CHECK(state.sequence_object().terms == std::vector<int>{1, 3, 4});
    CHECK(state.gap_word_object().alphabet == std::vector<int>{1, 2, 3});

    state.pop();
    CHECK(state.terms() == std::vector<int>{1, 3});

    const SearchState seeded =
        SearchState::for_sequences({1, 2}, gap_word({2, 2}, {1, 2}));
    CHECK(seeded.depth() == 2);
    CHECK(seeded.seed_depth() == 2);
    CHECK(seeded.terms() == std::vector<int>{1, 3, 5});
}

TEST_CASE("coloring search state maintains class position lists") {
    SearchState state = SearchState::for_colorings(3, Coloring{{}, 3});
    CHECK(state.branch_count() == 3);
    CHECK(state.class_count() == 3);
    CHECK(state.element_at_branch(1) == 2);

    state.push(2);
    state.push(2);
    state.push(1);
    CHECK(state.class_positions(2) == std::vector<int>{1, 2});
    CHECK(state.class_positions(1) == std::vector<int>{3});
    CHECK(state.class_positions(3).empty());
    state.pop();
    CHECK(state.class_positions(1).empty());
    CHECK(state.coloring_object().assignment == std::vector<int>{2, 2});
}

TEST_CASE("cover search state branches over nonempty subsets") {
    SearchState state = SearchState::for_covers(2, CoverWord{{}, 2});
    CHECK(state.branch_count() == 3);  // masks 1, 2, 3
    state.push(3);
    CHECK(state.class_positions(1) == std::vector<int>{1});
    CHECK(state.class_positions(2) == std::vector<int>{1});
    CHECK(state.cover_object().assignment == std::vector<unsigned>{3u});
}

TEST_CASE("registry: names, display names, parameters") {
    const auto names = registered_filter_names();
    CHECK(names.size() == 8);

    CHECK(make_filter(spec_of("no-double-aps", {{"k", {3}}}))->display_name() ==
          "no-double-aps");
    CHECK(make_filter(spec_of("no-n-aps", {{"k", {3}}}))->display_name() == "no-3-aps");
    CHECK(make_filter(spec_of("no-n-aps", {{"k", {5}}}))->display_name() == "no-5-aps");
    CHECK(make_filter(spec_of("no-additive-squares"))->display_name() ==
          "no-additive-squares");
    CHECK(make_filter(spec_of("no-additive-powers", {{"p", {4}}}))->spec().name ==
          "no-additive-powers");

    CHECK_THROWS_AS(make_filter(spec_of("no-such-filter")), std::invalid_argument);
    CHECK_THROWS_AS(make_filter(spec_of("no-n-aps", {{"k", {1}}})), std::invalid_argument);
    CHECK_THROWS_AS(make_filter(spec_of("no-double-aps", {{"k", {2}}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_filter(spec_of("no-additive-powers", {{"p", {1}}})),
                    std::invalid_argument);
    // Unknown extra parameters are rejected rather than ignored.
    CHECK_THROWS_AS(make_filter(spec_of("no-additive-squares", {{"k", {3}}})),
                    std::invalid_argument);
}

TEST_CASE("filters know their search spaces") {
    CHECK(make_filter(spec_of("no-double-aps", {{"k", {3}}}))
              ->applies_to(SpaceKind::sequences));
    CHECK_FALSE(make_filter(spec_of("no-double-aps", {{"k", {3}}}))
                    ->applies_to(SpaceKind::colorings));
    CHECK(make_filter(spec_of("no-mono-double-aps", {{"k", {3}}}))
              ->applies_to(SpaceKind::colorings));
    CHECK(make_filter(spec_of("no-mono-double-aps", {{"k", {3}}}))
              ->applies_to(SpaceKind::covers));
    CHECK_FALSE(make_filter(spec_of("no-rainbow-aps", {{"k", {2}}}))
                    ->applies_to(SpaceKind::sequences));
}

TEST_CASE("incremental and full checks agree on all short sequences") {
    const std::vector<FilterSpec> specs = {
        spec_of("no-double-aps", {{"k", {3}}}),
        spec_of("no-double-aps", {{"k", {4}}}),
        spec_of("no-additive-squares"),
        spec_of("no-additive-cubes"),
        spec_of("no-additive-powers", {{"p", {2}}}),
    };
    for (const FilterSpec& spec : specs) {
        const auto filter = make_filter(spec);
        SearchState state = SearchState::for_sequences({1, 2, 3}, GapWord{});
        const long long edges = check_agreement(state, *filter, 8);
        CHECK(edges >= 3);  // at least the root's children were exercised
    }
}

TEST_CASE("incremental and full checks agree on all short colorings") {
    const std::vector<FilterSpec> specs = {
        spec_of("no-mono-double-aps", {{"k", {3}}}),
        spec_of("no-n-aps", {{"k", {3}}}),
        spec_of("no-rainbow-aps", {{"k", {2}}}),
        spec_of("max-class-gaps", {{"max-gaps", {3, 4}}}),
    };
    for (const FilterSpec& spec : specs) {
        const auto filter = make_filter(spec);
        SearchState state = SearchState::for_colorings(2, Coloring{{}, 2});
        filter->validate_for(state);
        check_agreement(state, *filter, 12);
    }
}

TEST_CASE("incremental and full checks agree on short covers") {
    const auto filter = make_filter(spec_of("no-mono-double-aps", {{"k", {3}}}));
    SearchState state = SearchState::for_covers(2, CoverWord{{}, 2});
    check_agreement(state, *filter, 5);
}

TEST_CASE("full check reports a usable violation") {
    const auto filter = make_filter(spec_of("no-mono-double-aps", {{"k", {3}}}));
    Coloring seed;
    seed.color_count = 2;
    seed.assignment = {1, 1, 1};
    SearchState state = SearchState::for_colorings(2, seed);
    const auto violation = filter->check_full(state);
    REQUIRE(violation.has_value());
    CHECK(violation->class_id == 1);
    REQUIRE(violation->witness.has_value());
    CHECK(violation->witness->positions == std::vector<int>{1, 2, 3});
    CHECK(violation->description.find("class 1") != std::string::npos);
}

TEST_CASE("rainbow filter needs at least k colors") {
    const auto filter = make_filter(spec_of("no-rainbow-aps", {{"k", {3}}}));
    SearchState two = SearchState::for_colorings(2, Coloring{{}, 2});
    CHECK_THROWS_AS(filter->validate_for(two), std::invalid_argument);
    SearchState three = SearchState::for_colorings(3, Coloring{{}, 3});
    CHECK_NOTHROW(filter->validate_for(three));
}

TEST_CASE("gap-cap filter enforces per-class bounds") {
    const auto filter = make_filter(spec_of("max-class-gaps", {{"max-gaps", {2, 0}}}));
    SearchState state = SearchState::for_colorings(2, Coloring{{}, 2});
    filter->validate_for(state);

    // Bound 2 on color 1: 1 _ _ 1 (gap 3) violates; 0 means unbounded.
    state.push(1);
    state.push(2);
    state.push(2);
    CHECK_FALSE(filter->check_append(state, 1));
    CHECK(filter->check_append(state, 2));  // color 2 is unbounded
    state.push(1);
    const auto violation = filter->check_full(state);
    REQUIRE(violation.has_value());
    CHECK(violation->class_id == 1);

    // A bound list of the wrong arity is rejected before the run.
    const auto mismatched = make_filter(spec_of("max-class-gaps", {{"max-gaps", {2}}}));
    SearchState two = SearchState::for_colorings(2, Coloring{{}, 2});
    CHECK_THROWS_AS(mismatched->validate_for(two), std::invalid_argument);
}

TEST_CASE("boundary gaps do not count against the cap") {
    const auto filter = make_filter(spec_of("max-class-gaps", {{"max-gaps", {2, 2}}}));
    SearchState state = SearchState::for_colorings(2, Coloring{{}, 2});

    // 2 2 2 1: color 1 first appears at position 4. The leading run is
    // not a within-class gap, so the bound-2 cap is satisfied; only a
    // *second* occurrence of color 1 would open a gap.
    state.push(2);
    state.push(2);
    state.push(2);
    CHECK(filter->check_append(state, 1));
    state.push(1);
    CHECK_FALSE(filter->check_full(state).has_value());

    // 1 2 2 2: symmetrically, the trailing run after the last 1 does
    // not count, and a color that never appears at all is fine too.
    SearchState trailing = SearchState::for_colorings(2, Coloring{{1, 2, 2, 2}, 2});
    CHECK_FALSE(filter->check_full(trailing).has_value());
    CHECK(trailing.class_positions(1) == std::vector<int>{1});
    CHECK_FALSE(filter->check_append(trailing, 1));  // gap 5 - 1 > 2
}

TEST_CASE("space kind names round-trip") {
    CHECK(space_kind_name(SpaceKind::sequences) == std::string("sequences"));
    CHECK(space_kind_from_name("colorings") == SpaceKind::colorings);
    CHECK(space_kind_from_name("covers") == SpaceKind::covers);
    CHECK_FALSE(space_kind_from_name("graphs").has_value());
}
