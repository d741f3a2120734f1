#pragma once

#include <string>
#include <vector>

#include "vlrs/bits.hpp"

namespace vlrs {

/// One production rule: symbol + input bits -> output bits.
/// Output is never empty; input may be epsilon.
struct Rule {
    int symbol{0};  // 0-based alphabet index
    BitString input;
    BitString output;

    bool operator==(const Rule&) const = default;
};

/// Net bits generated by a rule: L(output) - L(input).
inline int delta(const Rule& r) {
    return static_cast<int>(r.output.size()) - static_cast<int>(r.input.size());
}

/// A variable-length re-writing system: ordered alphabet plus rules,
/// kept sorted by (symbol, definition order).
struct Vlrs {
    std::vector<std::string> labels;
    std::vector<Rule> rules;
    int termination_fill{0};  // preferred termination bit value

    int symbol_count() const { return static_cast<int>(labels.size()); }

    std::vector<const Rule*> rules_of(int symbol) const;
    std::size_t max_input_len() const;
    std::size_t max_output_len() const;

    bool operator==(const Vlrs&) const = default;
};

/// Stationary memoryless source pdf over the alphabet.
struct SourceModel {
    std::vector<double> p;

    int symbol_count() const { return static_cast<int>(p.size()); }
};

/// Throws if any probability is outside (0,1] or the sum is off by more than 1e-12.
void check_source(const SourceModel& source);

struct ValidationReport {
    bool cond1{false};  // every symbol has at least one rule
    bool cond2{false};  // outputs form a prefix code (no duplicates)
    bool cond3{false};  // per-symbol inputs are {eps} or a full prefix code
    bool cond4{false};  // no output is a proper prefix of another symbol's input
    bool decodable{false};
    std::vector<std::string> diagnostics;

    bool conditions_pass() const { return cond1 && cond2 && cond3 && cond4; }
    bool valid() const { return conditions_pass() && decodable; }
};

/// Checks Definition-style structural conditions, then operational
/// decodability (automaton closure termination + bounded roundtrips).
ValidationReport validate(const Vlrs& code);

/// Wraps a prefix-free codeword list as a fixed-to-variable VLRS.
Vlrs from_vlc(const std::vector<BitString>& codewords,
              std::vector<std::string> labels = {});

bool is_suffix_constrained(const Vlrs& code);
bool is_fixed_to_variable(const Vlrs& code);

/// Merges complete sibling rule families {a w x -> v x | x over a full FLC}
/// into a w -> v, to a fixpoint. Preserves the encoded bitstream.
Vlrs simplify(const Vlrs& code);

/// Default labels a1, a2, ...
std::vector<std::string> default_labels(int n);

}  // namespace vlrs
