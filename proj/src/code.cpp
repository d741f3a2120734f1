#include "vlrs/code.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "vlrs/codec.hpp"
#include "vlrs/errors.hpp"

namespace vlrs {

std::vector<const Rule*> Vlrs::rules_of(int symbol) const {
    std::vector<const Rule*> out;
    for (const auto& r : rules)
        if (r.symbol == symbol) out.push_back(&r);
    return out;
}

std::size_t Vlrs::max_input_len() const {
    std::size_t m = 0;
    for (const auto& r : rules) m = std::max(m, r.input.size());
    return m;
}

std::size_t Vlrs::max_output_len() const {
    std::size_t m = 0;
    for (const auto& r : rules) m = std::max(m, r.output.size());
    return m;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    return labels;
}

void check_source(const SourceModel& source) {
    if (source.p.empty()) throw Error("source model is empty");
    double sum = 0.0;
    for (double pi : source.p) {
        if (!(pi > 0.0) || pi > 1.0)
            throw Error("source probabilities must lie in (0,1]");
        sum += pi;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw Error("source probabilities must sum to 1");
}

namespace {

void check_conditions(const Vlrs& code, ValidationReport& rep) {
    const int n = code.symbol_count();

    rep.cond1 = true;
    std::vector<int> per_symbol(static_cast<std::size_t>(n), 0);
    for (const auto& r : code.rules) {
        if (r.symbol < 0 || r.symbol >= n) {
            rep.cond1 = false;
            rep.diagnostics.push_back("rule references symbol index out of range");
            return;
        }
        if (r.output.empty()) {
            rep.cond1 = false;
            rep.diagnostics.push_back("rule for " + code.labels[static_cast<std::size_t>(r.symbol)] +
                                      " has empty output");
        }
        ++per_symbol[static_cast<std::size_t>(r.symbol)];
    }
    for (int i = 0; i < n; ++i)
        if (per_symbol[static_cast<std::size_t>(i)] == 0) {
            rep.cond1 = false;
            rep.diagnostics.push_back("symbol " + code.labels[static_cast<std::size_t>(i)] +
                                      " has no rule");
        }

    std::vector<BitString> outputs;
    for (const auto& r : code.rules) outputs.push_back(r.output);
    rep.cond2 = is_prefix_free(outputs);
    if (!rep.cond2) rep.diagnostics.push_back("outputs are not a prefix code");

    rep.cond3 = true;
    for (int i = 0; i < n; ++i) {
        std::vector<BitString> inputs;
        for (const auto& r : code.rules)
            if (r.symbol == i) inputs.push_back(r.input);
        std::sort(inputs.begin(), inputs.end());
        if (std::adjacent_find(inputs.begin(), inputs.end()) != inputs.end()) {
            rep.cond3 = false;
            rep.diagnostics.push_back("symbol " + code.labels[static_cast<std::size_t>(i)] +
                                      " has duplicate inputs");
            continue;
        }
        const bool all_eps = std::all_of(inputs.begin(), inputs.end(),
                                         [](const BitString& l) { return l.empty(); });
        if (all_eps) continue;
        if (!is_prefix_free(inputs) || !kraft_sum(inputs).is_one()) {
            rep.cond3 = false;
            rep.diagnostics.push_back("inputs of " + code.labels[static_cast<std::size_t>(i)] +
                                      " are not {eps} and not a full prefix code");
        }
    }

    rep.cond4 = true;
    std::set<std::pair<int, BitString>> distinct_inputs;
    for (const auto& r : code.rules) distinct_inputs.emplace(r.symbol, r.input);
    for (const auto& r : code.rules)
        for (const auto& [sym, l] : distinct_inputs) {
            if (sym == r.symbol || l.size() <= r.output.size()) continue;
            if (is_prefix(r.output, l)) {
                rep.cond4 = false;
                rep.diagnostics.push_back("output \"" + r.output.str() +
                                          "\" is a proper prefix of input \"" + l.str() + "\"");
            }
        }
}

bool roundtrip_check(const Vlrs& code, ValidationReport& rep) {
    const int n = code.symbol_count();
    std::vector<std::vector<int>> sequences;
    double total = 0;
    for (int len = 1; len <= 4; ++len) total += std::pow(n, len);
    if (total <= 4096) {
        for (int len = 1; len <= 4; ++len) {
            std::vector<int> seq(static_cast<std::size_t>(len), 0);
            while (true) {
                sequences.push_back(seq);
                int k = len - 1;
                while (k >= 0 && ++seq[static_cast<std::size_t>(k)] == n)
                    seq[static_cast<std::size_t>(k--)] = 0;
                if (k < 0) break;
            }
        }
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> sym(0, n - 1);
        std::uniform_int_distribution<int> len_dist(1, 4);
        for (int k = 0; k < 500; ++k) {
            std::vector<int> seq(static_cast<std::size_t>(len_dist(rng)));
            for (auto& s : seq) s = sym(rng);
            sequences.push_back(std::move(seq));
        }
    }
    Codec codec(code);
    for (const auto& seq : sequences) {
        try {
            if (codec.decode(codec.encode(seq)) != seq) {
                rep.diagnostics.push_back("roundtrip mismatch on a length-" +
                                          std::to_string(seq.size()) + " sequence");
                return false;
            }
        } catch (const Error& e) {
            rep.diagnostics.push_back(std::string("roundtrip failed: ") + e.what());
            return false;
        }
    }
    return true;
}

}  // namespace

ValidationReport validate(const Vlrs& code) {
    ValidationReport rep;
    if (code.labels.empty()) {
        rep.diagnostics.push_back("alphabet is empty");
        return rep;
    }
    check_conditions(code, rep);
    if (!rep.conditions_pass()) return rep;

    rep.decodable = true;
    for (const auto& r : code.rules)
        if (is_prefix(r.output, r.input)) {
            rep.decodable = false;
            rep.diagnostics.push_back("rule " + code.labels[static_cast<std::size_t>(r.symbol)] +
                                      " " + r.input.str() + " -> " + r.output.str() +
                                      " rewrites its own input");
        }
    if (rep.decodable) {
        try {
            build_decoder_automaton(code);
        } catch (const InvalidCodeError& e) {
            rep.decodable = false;
            rep.diagnostics.push_back(e.what());
        }
    }
    if (rep.decodable) rep.decodable = roundtrip_check(code, rep);
    return rep;
}

Vlrs from_vlc(const std::vector<BitString>& codewords, std::vector<std::string> labels) {
    if (!is_prefix_free(codewords))
        throw InvalidCodeError("codewords are not prefix-free");
    Vlrs code;
    code.labels = labels.empty() ? default_labels(static_cast<int>(codewords.size()))
                                 : std::move(labels);
    if (code.labels.size() != codewords.size())
        throw Error("label count does not match codeword count");
    for (std::size_t i = 0; i < codewords.size(); ++i)
        code.rules.push_back({static_cast<int>(i), BitString{}, codewords[i]});
    return code;
}

bool is_suffix_constrained(const Vlrs& code) {
    return std::all_of(code.rules.begin(), code.rules.end(),
                       [](const Rule& r) { return is_suffix(r.input, r.output); });
}

bool is_fixed_to_variable(const Vlrs& code) {
    for (int i = 0; i < code.symbol_count(); ++i) {
        auto rs = code.rules_of(i);
        if (rs.size() != 1 || !rs[0]->input.empty()) return false;
    }
    return true;
}

namespace {

BitString drop_last(const BitString& s) { return s.slice(0, s.size() - 1); }

// One merge step: two sibling rules a w0 -> v0, a w1 -> v1 become a w -> v.
bool merge_once(Vlrs& code) {
    for (std::size_t i = 0; i < code.rules.size(); ++i)
        for (std::size_t j = 0; j < code.rules.size(); ++j) {
            const Rule& r0 = code.rules[i];
            const Rule& r1 = code.rules[j];
            if (i == j || r0.symbol != r1.symbol) continue;
            if (r0.input.empty() || r1.input.empty()) continue;
            if (r0.output.size() < 2 || r0.output.size() != r1.output.size()) continue;
            if (r0.input.size() != r1.input.size()) continue;
            if (r0.input.bit(r0.input.size() - 1) != 0 || r1.input.bit(r1.input.size() - 1) != 1)
                continue;
            if (r0.output.bit(r0.output.size() - 1) != 0 ||
                r1.output.bit(r1.output.size() - 1) != 1)
                continue;
            if (drop_last(r0.input) != drop_last(r1.input)) continue;
            if (drop_last(r0.output) != drop_last(r1.output)) continue;
            Vlrs merged = code;
            merged.rules[i] = Rule{r0.symbol, drop_last(r0.input), drop_last(r0.output)};
            merged.rules.erase(merged.rules.begin() + static_cast<std::ptrdiff_t>(j));
            if (!validate(merged).valid()) continue;
            code = std::move(merged);
            return true;
        }
    return false;
}

}  // namespace

Vlrs simplify(const Vlrs& code) {
    if (!validate(code).valid()) throw InvalidCodeError("simplify requires a valid code");
    Vlrs out = code;
    while (merge_once(out)) {
    }
    return out;
}

}  // namespace vlrs
