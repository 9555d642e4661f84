#include <algorithm>
#include <random>
#include <stdexcept>

#include "dap/core.hpp"
#include "dap/oracle.hpp"
#include "doctest.h"

using namespace dap;

TEST_CASE("least always-hit interval, plain colorings") {
    // One color: positions 1 2 3 with values 1 2 3 are already a double
    // 3-AP, so the threshold is 3.
    CHECK(w_star(plain_query(1, 3)).value == 3);

    const WStarResult two_colors = w_star(plain_query(2, 3));
    CHECK(two_colors.exact);
    CHECK(two_colors.value == 17);
    CHECK(two_colors.longest_free_length == 16);
    // The longest free coloring found first is the known witness.
    CHECK(coloring_to_digits(two_colors.longest_free) == "0010110100101101");
    CHECK(two_colors.nodes > 0);

    // Free colorings still exist at the ceiling: reported as a bound.
    const WStarResult open = w_star(plain_query(2, 4, 12));
    CHECK_FALSE(open.exact);
    CHECK(open.value == 12);
    CHECK(open.longest_free_length == 12);
}

TEST_CASE("least always-hit interval, per-color gap caps") {
    const struct {
        int k;
        std::vector<int> gaps;
        int expected;
    } cases[] = {
        {3, {2, 2}, 7},  {3, {3, 2}, 11}, {3, {3, 3}, 17},       {4, {2, 2}, 11},
        {4, {3, 2}, 22}, {5, {2, 2}, 15}, {5, {3, 2}, 37},       {3, {3, 3, 3}, 22},
        {3, {3, 4, 3}, 31}, {3, {3, 4, 4}, 31}, {3, {3, 5, 5}, 43},
    };
    for (const auto& c : cases) {
        CAPTURE(c.k);
        CAPTURE(c.expected);
        const WStarResult result = w_star(gapped_query(c.k, c.gaps, 50));
        CHECK(result.exact);
        CHECK(result.value == c.expected);
        CHECK(result.longest_free_length == c.expected - 1);
    }
}

TEST_CASE("gap caps are color-symmetric") {
    std::vector<int> gaps = {3, 4, 5};
    std::sort(gaps.begin(), gaps.end());
    const int reference = w_star(gapped_query(3, gaps, 50)).value;
    do {
        CHECK(w_star(gapped_query(3, gaps, 50)).value == reference);
    } while (std::next_permutation(gaps.begin(), gaps.end()));
}

TEST_CASE("uniform gap cap equals the equal-entry gapped query") {
    const WStarResult uniform = w_star(uniform_gap_query(3, 3, 2));
    CHECK(uniform.exact);
    CHECK(uniform.value == 11);
    CHECK(uniform.value == w_star(gapped_query(3, {2, 2, 2})).value);

    CHECK(w_star(uniform_gap_query(3, 3, 3)).value == 22);
    CHECK(w_star(uniform_gap_query(3, 3, 4, 45)).value == 39);
}

TEST_CASE("free colorings returned by the oracle survive independent checks") {
    const WStarResult result = w_star(gapped_query(3, {3, 3}, 50));
    const Coloring& free = result.longest_free;
    CHECK(free.length() == result.longest_free_length);
    CHECK_FALSE(find_mono_double_ap(free, 3).has_value());
    for (int color = 1; color <= 2; ++color)
        for (int gap : class_gaps(free, color).symbols) CHECK(gap <= 3);
}

TEST_CASE("query and result formatting") {
    CHECK(format_w_star_query(plain_query(2, 3)) == "w*(2,3)");
    CHECK(format_w_star_query(gapped_query(3, {2, 2})) == "w*(3;2,2)");
    CHECK(format_w_star_query(uniform_gap_query(3, 3, 2)) == "w*(3,3;2)");

    CHECK(format_w_star_result(plain_query(2, 3), w_star(plain_query(2, 3))) ==
          "w*(2,3) = 17");
    CHECK(format_w_star_result(plain_query(2, 4, 10), w_star(plain_query(2, 4, 10))) ==
          "w*(2,4) > 10");
}

TEST_CASE("oracle rejects malformed queries") {
    CHECK_THROWS_AS(w_star(plain_query(0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(w_star(plain_query(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(w_star(gapped_query(3, {})), std::invalid_argument);
    CHECK_THROWS_AS(w_star(gapped_query(3, {-1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(w_star(plain_query(2, 3, 0)), std::invalid_argument);
}

TEST_CASE("witness verification report") {
    const WitnessReport pass = verify_witness_coloring("0010110100101101", 3);
    CHECK(pass.pass);
    CHECK(pass.coloring.length() == 16);
    CHECK(pass.classes.size() == 2);
    CHECK(pass.classes[0].size == 8);
    CHECK(pass.classes[1].size == 8);
    CHECK(pass.classes[0].max_gap == 3);

    const WitnessReport fail = verify_witness_coloring("000", 3);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.violation.has_value());
    CHECK(fail.violation->first == 1);
    CHECK(fail.violation->second.positions == std::vector<int>{1, 2, 3});

    // Whitespace (line wrapping in witness files) is ignored.
    CHECK(verify_witness_coloring("0010\n1101\n0010 1101\n", 3).pass);
}

TEST_CASE("block transform compresses by the block length") {
    const IncreasingSequence x = increasing_sequence({1, 2, 4, 6, 7, 9, 10, 12});
    const IncreasingSequence z = block_transform(x, 2);
    // z_i = x_{2i+1} - x_1 for i = 1..3.
    CHECK(z.terms == std::vector<int>{3, 6, 9});

    CHECK(block_transform(x, 1).terms ==
          std::vector<int>{1, 3, 5, 6, 8, 9, 11});  // x_{i+1} - x_1

    CHECK_THROWS_AS(block_transform(x, 4), std::invalid_argument);  // needs 2m+1 terms
    CHECK_THROWS_AS(block_transform(x, 0), std::invalid_argument);
}

TEST_CASE("pulled-back witnesses are double APs of the original sequence") {
    ApWitness witness;
    witness.kind = WitnessKind::double_ap;
    witness.positions = {1, 2, 3};
    const ApWitness pulled = pullback_double_ap(witness, 2);
    CHECK(pulled.positions == std::vector<int>{3, 5, 7});

    std::mt19937 rng(20260825);
    std::uniform_int_distribution<int> pick_gap(1, 5);
    std::uniform_int_distribution<int> pick_m(1, 3);
    int found = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> terms = {1};
        for (int i = 0; i < 30; ++i) terms.push_back(terms.back() + pick_gap(rng));
        const IncreasingSequence x = increasing_sequence(terms);
        const int m = pick_m(rng);
        const IncreasingSequence z = block_transform(x, m);
        const auto in_z = find_double_ap(z, 3);
        if (!in_z) continue;
        ++found;
        const ApWitness in_x = pullback_double_ap(*in_z, m);
        REQUIRE(in_x.positions.size() == 3);
        const auto term_at = [&](int p) {
            return x.terms[static_cast<std::size_t>(p) - 1];
        };
        const int p = in_x.positions[0], q = in_x.positions[1], r = in_x.positions[2];
        CHECK(q - p == r - q);                                  // positions in AP
        CHECK(term_at(p) + term_at(r) == 2 * term_at(q));       // values in AP
        CHECK(r <= static_cast<int>(x.terms.size()));
    }
    CHECK(found > 100);  // the property was actually exercised
}

TEST_CASE("maximum additive-power-free lengths by exhaustion") {
    const AdditiveFreeResult squares = max_additive_power_free_length({1, 2, 3}, 2, 10);
    CHECK(squares.length == 7);
    CHECK_FALSE(squares.capped);
    CHECK(squares.witness.symbols.size() == 7);
    CHECK_FALSE(find_additive_power(squares.witness, 2).has_value());

    // Two letters only reach 3; one letter only 1.
    CHECK(max_additive_power_free_length({1, 2}, 2, 10).length == 3);
    CHECK(max_additive_power_free_length({1}, 2, 10).length == 1);

    // Cubes over two letters last a little longer but still die out.
    const AdditiveFreeResult cubes = max_additive_power_free_length({1, 2}, 3, 30);
    CHECK(cubes.length == 9);
    CHECK_FALSE(cubes.capped);
    CHECK_FALSE(find_additive_power(cubes.witness, 3).has_value());

    // Fourth powers over {1,2} are avoidable at least this far, so the
    // bounded search caps out and reports a bound, not a maximum.
    const AdditiveFreeResult fourth = max_additive_power_free_length({1, 2}, 4, 14);
    CHECK(fourth.capped);
    CHECK(fourth.length == 14);
    CHECK_FALSE(find_additive_power(fourth.witness, 4).has_value());

    CHECK_THROWS_AS(max_additive_power_free_length({}, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(max_additive_power_free_length({1, 2}, 1, 5), std::invalid_argument);
}
