// Independent brute-force computations used to cross-check the engine:
// the w* family of least-interval values, witness-coloring verification,
// the block transform that compresses bounded-gap sequences, and maximum
// additive-power-free word lengths.
//
// w*(r,k) is the least m such that every r-coloring of [1,m] contains a
// monochromatic double k-term arithmetic progression; the gapped variant
// w*(k; a_1..a_r) additionally caps each color's within-class gap at a_i,
// and w*(r,k;d) is the uniform-gap case a_i = d. Values are computed as
// 1 + the maximum admissible pattern-free length, by an exhaustive
// recursive enumeration written separately from the engine's traversal
// so the two implementations can check each other.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dap/core.hpp"

namespace dap {

enum class WStarKind { plain, gapped, uniform_gap };

struct WStarQuery {
    WStarKind kind = WStarKind::plain;
    int color_count = 1;
    int k = 3;
    std::vector<int> max_gaps;  // per color; 0 = unbounded; empty for plain
    int uniform_gap = 0;        // d, for the uniform-gap kind
    int bound = 64;             // search ceiling m_max
};

WStarQuery plain_query(int color_count, int k, int bound = 64);
WStarQuery gapped_query(int k, std::vector<int> max_gaps, int bound = 64);
WStarQuery uniform_gap_query(int color_count, int k, int gap, int bound = 64);

struct WStarResult {
    bool exact = false;  // false: a free coloring reaches the bound, so w* > bound
    int value = 0;       // w* when exact, otherwise the bound
    int longest_free_length = 0;
    Coloring longest_free;
    long long nodes = 0;  // attempted extensions (informational)
};

WStarResult w_star(const WStarQuery& query);

// "w*(2,3)", "w*(3;2,2)", "w*(3,3;2)" in the three notations.
std::string format_w_star_query(const WStarQuery& query);
// "w*(2,3) = 17" or "w*(2,4) > 64".
std::string format_w_star_result(const WStarQuery& query, const WStarResult& result);

struct ClassStat {
    int color = 0;
    int size = 0;
    int max_gap = 0;  // 0 when the class has fewer than two elements
};

struct WitnessReport {
    bool pass = false;
    Coloring coloring;
    std::optional<std::pair<int, ApWitness>> violation;  // color + witness
    std::vector<ClassStat> classes;
};

// Checks a digit-string coloring for monochromatic double k-APs and
// gathers per-class statistics. Whitespace in the text is ignored.
WitnessReport verify_witness_coloring(std::string_view digits, int k);

// Z with z_i = x_{i*m+1} - x_1 for i = 1..floor((|X|-1)/m). If X has gaps
// in {1..n}, Z has gaps in [m, n*m]. Requires |X| >= 2m+1 so Z has at
// least two terms.
IncreasingSequence block_transform(const IncreasingSequence& x, int m);

// Maps a double-AP witness of block_transform(X, m) back to X: position
// p becomes p*m + 1. The pulled-back index step is m times the original.
ApWitness pullback_double_ap(const ApWitness& witness, int m);

struct AdditiveFreeResult {
    int length = 0;  // largest free length found (== bound when capped)
    bool capped = false;
    GapWord witness;
    long long nodes = 0;
};

// Largest L <= bound admitting an additive-p-power-free word of length L
// over the alphabet, by exhaustive backtracking with its own checks.
AdditiveFreeResult max_additive_power_free_length(std::vector<int> alphabet, int power,
                                                  int bound);

}  // namespace dap
