#include "dap/core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dap {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

WitnessKind additive_kind(int power) {
    if (power == 2) return WitnessKind::additive_square;
    if (power == 3) return WitnessKind::additive_cube;
    return WitnessKind::additive_power;
}

}  // namespace

GapWord gap_word(std::vector<int> symbols) {
    std::vector<int> alphabet = symbols;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    return gap_word(std::move(symbols), std::move(alphabet));
}

GapWord gap_word(std::vector<int> symbols, std::vector<int> alphabet) {
    require(std::is_sorted(alphabet.begin(), alphabet.end()) &&
                std::adjacent_find(alphabet.begin(), alphabet.end()) == alphabet.end(),
            "gap word alphabet must be sorted and distinct");
    require(alphabet.empty() || alphabet.front() >= 1, "gap sizes must be positive");
    for (int x : symbols)
        require(std::binary_search(alphabet.begin(), alphabet.end(), x),
                "gap word symbol outside its alphabet");
    return GapWord{std::move(symbols), std::move(alphabet)};
}

IncreasingSequence increasing_sequence(std::vector<int> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        require(terms[i] >= 1, "sequence terms must be positive");
        require(i == 0 || terms[i - 1] < terms[i], "sequence must be strictly increasing");
    }
    return IncreasingSequence{std::move(terms)};
}

IncreasingSequence gaps_to_sequence(const GapWord& w, int start) {
    require(start >= 1, "start term must be positive");
    std::vector<int> terms;
    terms.reserve(w.symbols.size() + 1);
    terms.push_back(start);
    for (int x : w.symbols) terms.push_back(terms.back() + x);
    return IncreasingSequence{std::move(terms)};
}

GapWord sequence_to_gaps(const IncreasingSequence& s) {
    require(!s.terms.empty(), "cannot take gaps of an empty sequence");
    std::vector<int> gaps;
    gaps.reserve(s.terms.size() - 1);
    for (std::size_t i = 1; i < s.terms.size(); ++i) {
        require(s.terms[i - 1] < s.terms[i], "sequence must be strictly increasing");
        gaps.push_back(s.terms[i] - s.terms[i - 1]);
    }
    return gap_word(std::move(gaps));
}

std::string sequence_to_characteristic_word(const IncreasingSequence& s, int length) {
    int largest = s.terms.empty() ? 0 : s.terms.back();
    require(length >= largest, "characteristic word shorter than the largest term");
    std::string word(static_cast<std::size_t>(length), '0');
    for (int t : s.terms) word[static_cast<std::size_t>(t) - 1] = '1';
    return word;
}

std::optional<ApWitness> find_double_ap(const IncreasingSequence& s, int k) {
    require(k >= 3, "double APs need at least three terms");
    const auto& x = s.terms;
    const int n = static_cast<int>(x.size());
    // Least last position first, then least index step d, so the first
    // hit is the canonical witness.
    for (int last = k; last <= n; ++last) {
        for (int d = 1; last - (k - 1) * d >= 1; ++d) {
            const int first = last - (k - 1) * d;
            const int step = x[first + d - 1] - x[first - 1];
            bool hit = true;
            for (int j = 2; j < k; ++j) {
                if (x[first + j * d - 1] - x[first + (j - 1) * d - 1] != step) {
                    hit = false;
                    break;
                }
            }
            if (hit) {
                ApWitness w;
                w.kind = WitnessKind::double_ap;
                for (int j = 0; j < k; ++j) w.positions.push_back(first + j * d);
                return w;
            }
        }
    }
    return std::nullopt;
}

bool append_passes_double_ap(const IncreasingSequence& s, int new_term, int k) {
    require(k >= 3, "double APs need at least three terms");
    require(new_term >= 1 && (s.terms.empty() || new_term > s.terms.back()),
            "appended term must extend the sequence");
    const auto& x = s.terms;
    const int last = static_cast<int>(x.size()) + 1;
    for (int d = 1; last - (k - 1) * d >= 1; ++d) {
        const int first = last - (k - 1) * d;
        const int step = x[first + d - 1] - x[first - 1];
        bool hit = true;
        for (int j = 2; j < k; ++j) {
            const int hi = j == k - 1 ? new_term : x[first + j * d - 1];
            if (hi - x[first + (j - 1) * d - 1] != step) {
                hit = false;
                break;
            }
        }
        if (hit) return false;
    }
    return true;
}

std::optional<ApWitness> find_additive_power(const GapWord& w, int power) {
    require(power >= 2, "additive powers need at least two blocks");
    const int n = static_cast<int>(w.symbols.size());
    std::vector<long long> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + w.symbols[i];
    // Least end first, then least block length: mirrors the double-AP
    // tie-break under the blocks <-> progression correspondence.
    for (int end = power; end <= n; ++end) {
        for (int b = 1; power * b <= end; ++b) {
            const int first = end - power * b + 1;
            const long long sum = prefix[first + b - 1] - prefix[first - 1];
            bool hit = true;
            for (int j = 2; j <= power; ++j) {
                if (prefix[first + j * b - 1] - prefix[first + (j - 1) * b - 1] != sum) {
                    hit = false;
                    break;
                }
            }
            if (hit) {
                ApWitness witness;
                witness.kind = additive_kind(power);
                for (int j = 0; j <= power; ++j) witness.positions.push_back(first + j * b);
                witness.block_length = b;
                return witness;
            }
        }
    }
    return std::nullopt;
}

bool append_passes_additive_power(const GapWord& w, int symbol, int power) {
    require(power >= 2, "additive powers need at least two blocks");
    require(symbol >= 1, "gap sizes must be positive");
    const int end = static_cast<int>(w.symbols.size()) + 1;
    std::vector<long long> prefix(static_cast<std::size_t>(end) + 1, 0);
    for (int i = 0; i + 1 < end; ++i) prefix[i + 1] = prefix[i] + w.symbols[i];
    prefix[end] = prefix[end - 1] + symbol;
    for (int b = 1; power * b <= end; ++b) {
        const int first = end - power * b + 1;
        const long long sum = prefix[first + b - 1] - prefix[first - 1];
        bool hit = true;
        for (int j = 2; j <= power; ++j) {
            if (prefix[first + j * b - 1] - prefix[first + (j - 1) * b - 1] != sum) {
                hit = false;
                break;
            }
        }
        if (hit) return false;
    }
    return true;
}

std::optional<ApWitness> find_mono_ap(const Coloring& c, int k) {
    require(k >= 2, "position APs need at least two terms");
    const int n = c.length();
    for (int last = k; last <= n; ++last) {
        for (int d = 1; last - (k - 1) * d >= 1; ++d) {
            const int first = last - (k - 1) * d;
            const int color = c.assignment[first - 1];
            bool hit = true;
            for (int j = 1; j < k; ++j) {
                if (c.assignment[first + j * d - 1] != color) {
                    hit = false;
                    break;
                }
            }
            if (hit) {
                ApWitness w;
                w.kind = WitnessKind::mono_ap;
                for (int j = 0; j < k; ++j) w.positions.push_back(first + j * d);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<ApWitness> find_rainbow_ap(const Coloring& c, int k) {
    require(k >= 2, "position APs need at least two terms");
    require(k <= c.color_count, "a rainbow AP cannot exceed the color count");
    const int n = c.length();
    std::vector<char> seen(static_cast<std::size_t>(c.color_count) + 1, 0);
    for (int last = k; last <= n; ++last) {
        for (int d = 1; last - (k - 1) * d >= 1; ++d) {
            const int first = last - (k - 1) * d;
            bool hit = true;
            for (int j = 0; j < k; ++j) {
                char& mark = seen[static_cast<std::size_t>(c.assignment[first + j * d - 1])];
                if (mark) {
                    hit = false;
                } else {
                    mark = 1;
                }
                if (!hit) break;
            }
            for (int j = 0; j < k; ++j)
                seen[static_cast<std::size_t>(c.assignment[first + j * d - 1])] = 0;
            if (hit) {
                ApWitness w;
                w.kind = WitnessKind::rainbow_ap;
                for (int j = 0; j < k; ++j) w.positions.push_back(first + j * d);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, ApWitness>> find_mono_double_ap(const Coloring& c, int k) {
    require(k >= 3, "double APs need at least three terms");
    for (int color = 1; color <= c.color_count; ++color) {
        IncreasingSequence cls{color_class(c, color)};
        if (static_cast<int>(cls.terms.size()) < k) continue;
        if (auto w = find_double_ap(cls, k)) return std::make_pair(color, *w);
    }
    return std::nullopt;
}

std::vector<int> color_class(const Coloring& c, int color) {
    require(color >= 1 && color <= c.color_count, "color id out of range");
    std::vector<int> positions;
    for (int i = 0; i < c.length(); ++i)
        if (c.assignment[i] == color) positions.push_back(i + 1);
    return positions;
}

std::vector<int> cover_class(const CoverWord& w, int set_id) {
    require(set_id >= 1 && set_id <= w.set_count, "set id out of range");
    std::vector<int> positions;
    for (int i = 0; i < w.length(); ++i)
        if (w.assignment[i] & (1u << (set_id - 1))) positions.push_back(i + 1);
    return positions;
}

GapWord class_gaps(const Coloring& c, int color) {
    std::vector<int> positions = color_class(c, color);
    if (positions.size() < 2) return GapWord{};
    return sequence_to_gaps(IncreasingSequence{std::move(positions)});
}

Coloring parse_coloring_text(std::string_view text, int color_count) {
    require(color_count >= 0, "color count cannot be negative");
    std::vector<int> assignment;
    int largest = 0;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        require(ch >= '0' && ch <= '9', "coloring text must be digits 0-9");
        const int color = ch - '0' + 1;
        require(color_count == 0 || color <= color_count,
                "digit exceeds the declared color count");
        largest = std::max(largest, color);
        assignment.push_back(color);
    }
    Coloring c;
    c.assignment = std::move(assignment);
    c.color_count = color_count > 0 ? color_count : std::max(largest, 1);
    return c;
}

std::string coloring_to_digits(const Coloring& c) {
    require(c.color_count <= 10, "digit rendering supports at most 10 colors");
    std::string digits;
    digits.reserve(c.assignment.size());
    for (int color : c.assignment)
        digits.push_back(static_cast<char>('0' + color - 1));
    return digits;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++i;
            continue;
        }
        std::size_t j = i;
        if (text[j] == '-' || text[j] == '+') ++j;
        std::size_t digits = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        require(j > digits, "expected an integer");
        values.push_back(std::stoi(std::string(text.substr(i, j - i))));
        i = j;
    }
    return values;
}

}  // namespace dap
