// Domain types and pattern detectors for double-arithmetic-progression
// searches: gap words, increasing sequences, interval colorings, cover
// words, and the conversions between them.
//
// A gap word x_1 x_2 ... and an increasing sequence a_1 < a_2 < ... are
// two views of the same object (x_i = a_{i+1} - a_i); an additive square
// in the gap word corresponds exactly to a double 3-term AP in the
// sequence, and more generally an additive p-power to a double (p+1)-AP.
//
// All functions here are pure; incremental search state (prefix sums,
// last-occurrence tables) belongs to the caller.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dap {

// Finite word of positive integer gap sizes over a fixed alphabet.
struct GapWord {
    std::vector<int> symbols;
    std::vector<int> alphabet;  // sorted, distinct

    bool operator==(const GapWord&) const = default;
};

// Build a gap word, inferring the alphabet from the symbols present.
GapWord gap_word(std::vector<int> symbols);
// Build a gap word over an explicit alphabet; rejects symbols outside it.
GapWord gap_word(std::vector<int> symbols, std::vector<int> alphabet);

// Strictly increasing sequence of positive integers.
struct IncreasingSequence {
    std::vector<int> terms;

    bool operator==(const IncreasingSequence&) const = default;
};

// Validating constructor; rejects non-increasing or non-positive input.
IncreasingSequence increasing_sequence(std::vector<int> terms);

// Total assignment of positions 1..n to colors 1..r.
struct Coloring {
    std::vector<int> assignment;  // assignment[i] = color of position i+1
    int color_count = 0;

    int length() const { return static_cast<int>(assignment.size()); }
    bool operator==(const Coloring&) const = default;
};

// Assignment of positions 1..n to nonempty subsets of {1..t}, encoded as
// bitmasks (bit q-1 set <=> position belongs to set q).
struct CoverWord {
    std::vector<unsigned> assignment;
    int set_count = 0;

    int length() const { return static_cast<int>(assignment.size()); }
    bool operator==(const CoverWord&) const = default;
};

enum class WitnessKind {
    double_ap,        // index positions and values both in AP
    mono_ap,          // equally spaced positions, one color
    rainbow_ap,       // equally spaced positions, pairwise distinct colors
    additive_square,  // two adjacent equal-length equal-sum blocks
    additive_cube,    // three such blocks
    additive_power,   // p >= 4 such blocks
};

// Location of a forbidden pattern. For AP kinds, positions are the k
// progression indices. For additive powers, positions are the p+1 block
// boundaries (i, i+b, ..., i+pb): block j covers word indices
// [positions[j], positions[j+1]).
struct ApWitness {
    WitnessKind kind = WitnessKind::double_ap;
    std::vector<int> positions;
    std::optional<int> block_length;

    bool operator==(const ApWitness&) const = default;
};

// ---- conversions ------------------------------------------------------

// a_1 = start, a_{i+1} = a_i + x_i.
IncreasingSequence gaps_to_sequence(const GapWord& w, int start);

// Consecutive differences; inverse of gaps_to_sequence up to the start.
GapWord sequence_to_gaps(const IncreasingSequence& s);

// Binary word of the given length whose i-th character is '1' iff i is a
// term of s. Rejects length < max(s).
std::string sequence_to_characteristic_word(const IncreasingSequence& s, int length);

// ---- detectors --------------------------------------------------------
//
// All detectors return the witness with the least last position, breaking
// ties by least common difference (least block length for additive
// powers), so repeated runs are reproducible.

// Double k-AP: positions p_1 < ... < p_k in AP whose values are also in
// AP. Rejects k < 3.
std::optional<ApWitness> find_double_ap(const IncreasingSequence& s, int k);

// True iff s + [new_term] has no double k-AP ending at the new position.
// Equivalent to a full find_double_ap on the extension when s itself is
// double-k-AP free. Rejects non-increasing extensions.
bool append_passes_double_ap(const IncreasingSequence& s, int new_term, int k);

// Additive p-power: p adjacent blocks of equal length and equal sum.
// Implemented over prefix sums. Rejects p < 2.
std::optional<ApWitness> find_additive_power(const GapWord& w, int power);

// True iff w + [symbol] has no additive p-power ending at the new last
// symbol.
bool append_passes_additive_power(const GapWord& w, int symbol, int power);

// Monochromatic k-AP of positions. Rejects k < 2.
std::optional<ApWitness> find_mono_ap(const Coloring& c, int k);

// Rainbow k-AP: equally spaced positions with pairwise distinct colors.
// Rejects k < 2 or k > color_count.
std::optional<ApWitness> find_rainbow_ap(const Coloring& c, int k);

// Searches each color class, read as an increasing sequence, for a double
// k-AP; classes are scanned in color order. The witness positions are
// within-class indices. Rejects k < 3.
std::optional<std::pair<int, ApWitness>> find_mono_double_ap(const Coloring& c, int k);

// Positions of one color class, in increasing order (1-based).
std::vector<int> color_class(const Coloring& c, int color);

// Positions belonging to one set of a cover word.
std::vector<int> cover_class(const CoverWord& w, int set_id);

// Consecutive differences of a color class; empty if the class has fewer
// than two elements.
GapWord class_gaps(const Coloring& c, int color);

// ---- text -------------------------------------------------------------

// Digits 0-9 map to colors 1-10; whitespace is ignored. color_count 0
// infers the count from the largest digit present.
Coloring parse_coloring_text(std::string_view text, int color_count = 0);

// Renders a coloring back to its digit string (color 1 -> '0').
std::string coloring_to_digits(const Coloring& c);

// Whitespace- or comma-separated list of integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace dap
