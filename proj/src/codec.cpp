#include "vlrs/codec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vlrs/errors.hpp"

namespace vlrs {

namespace {

// Trie over a prefix-free set of bit strings; terminal nodes carry the
// index of the owning rule.
struct Trie {
    struct Node {
        int child[2]{-1, -1};
        int rule{-1};
    };
    std::vector<Node> nodes{Node{}};

    void insert(const BitString& key, int rule_index) {
        int node = 0;
        for (auto b : key.bits()) {
            if (nodes[node].rule >= 0)
                throw InvalidCodeError("prefix conflict at \"" + key.str() + "\"");
            if (nodes[node].child[b] < 0) {
                nodes[node].child[b] = static_cast<int>(nodes.size());
                nodes.emplace_back();
            }
            node = nodes[node].child[b];
        }
        if (nodes[node].rule >= 0 || nodes[node].child[0] >= 0 || nodes[node].child[1] >= 0)
            throw InvalidCodeError("prefix conflict at \"" + key.str() + "\"");
        nodes[node].rule = rule_index;
    }
};

Trie output_trie(const Vlrs& code) {
    Trie t;
    for (std::size_t i = 0; i < code.rules.size(); ++i)
        t.insert(code.rules[i].output, static_cast<int>(i));
    return t;
}

std::vector<Trie> input_tries(const Vlrs& code) {
    std::vector<Trie> tries(static_cast<std::size_t>(code.symbol_count()));
    for (std::size_t i = 0; i < code.rules.size(); ++i)
        tries[static_cast<std::size_t>(code.rules[i].symbol)].insert(code.rules[i].input,
                                                                     static_cast<int>(i));
    return tries;
}

struct MatchResult {
    int rule{-1};         // matched rule, or -1
    std::size_t len{0};   // bits of `pending` covered by the match
    bool in_trie{false};  // pending is a (possibly empty) proper prefix of a key
};

MatchResult match_head(const Trie& trie, const std::vector<std::uint8_t>& pending) {
    int node = 0;
    for (std::size_t k = 0;; ++k) {
        if (trie.nodes[node].rule >= 0) return {trie.nodes[node].rule, k, false};
        if (k == pending.size()) return {-1, 0, true};
        node = trie.nodes[node].child[pending[k]];
        if (node < 0) return {-1, 0, false};
    }
}

// Rewrites codeword prefixes of `pending` back into rule inputs until no
// codeword matches, emitting the corresponding symbols. Aborts on a cycle
// or on unbounded growth.
std::vector<std::uint8_t> closure(const Vlrs& code, const Trie& outputs,
                                  std::vector<std::uint8_t> pending, std::vector<int>& emitted) {
    const std::size_t length_cap = 8 * (code.max_input_len() + code.max_output_len() + 2);
    std::set<std::vector<std::uint8_t>> seen{pending};
    while (true) {
        auto m = match_head(outputs, pending);
        if (m.rule < 0) {
            if (!m.in_trie)
                throw InvalidCodeError("undecodable bit segment \"" +
                                       BitString(pending).str() + "\"");
            return pending;
        }
        const Rule& r = code.rules[static_cast<std::size_t>(m.rule)];
        emitted.push_back(r.symbol);
        std::vector<std::uint8_t> next(r.input.bits());
        next.insert(next.end(), pending.begin() + static_cast<std::ptrdiff_t>(m.len),
                    pending.end());
        if (next.size() > length_cap)
            throw InvalidCodeError("rewrite closure grows without bound");
        if (!seen.insert(next).second)
            throw InvalidCodeError("rewrite cycle at segment \"" + BitString(next).str() + "\"");
        pending = std::move(next);
    }
}

}  // namespace

int DecoderAutomaton::state_index(const BitString& s) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s) return static_cast<int>(i);
    return -1;
}

DecoderAutomaton build_decoder_automaton(const Vlrs& code) {
    const Trie outputs = output_trie(code);
    DecoderAutomaton automaton;
    std::map<std::vector<std::uint8_t>, int> index;
    std::vector<std::vector<std::uint8_t>> queue{{}};
    index[{}] = 0;
    automaton.states.emplace_back();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        automaton.transitions.emplace_back();
        for (int bit = 0; bit < 2; ++bit) {
            std::vector<std::uint8_t> pending = queue[head];
            pending.push_back(static_cast<std::uint8_t>(bit));
            DecoderAutomaton::Transition tr;
            pending = closure(code, outputs, std::move(pending), tr.emitted);
            auto [it, fresh] = index.emplace(pending, static_cast<int>(queue.size()));
            if (fresh) {
                queue.push_back(pending);
                automaton.states.emplace_back(pending);
            }
            tr.next = it->second;
            automaton.transitions[head][static_cast<std::size_t>(bit)] = std::move(tr);
        }
    }
    return automaton;
}

EncoderAutomaton build_encoder_automaton(const Vlrs& code) {
    EncoderAutomaton automaton;
    automaton.code = &code;
    automaton.horizon = code.max_input_len();
    std::vector<BitString> inputs;
    for (const auto& r : code.rules) inputs.push_back(r.input);
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
    // A segment that is a proper prefix of another segment is subsumed by it.
    for (const auto& l : inputs) {
        bool subsumed = false;
        for (const auto& other : inputs)
            if (l != other && is_prefix(l, other)) subsumed = true;
        if (!subsumed) automaton.states.push_back(l);
    }
    return automaton;
}

const Rule* EncoderAutomaton::rule_lookup(int symbol, const BitString& pending) const {
    for (const auto& r : code->rules)
        if (r.symbol == symbol && is_prefix(r.input, pending)) return &r;
    return nullptr;
}

struct Codec::Impl {
    const Vlrs* code;
    std::vector<Trie> tries;
    DecoderAutomaton automaton;
    std::map<int, BitString> terminations;

    // Backward pass with an explicit termination pattern. The stream is
    // kept reversed so the head lives at the back.
    EncodedBlock encode_with(const std::vector<int>& symbols, const BitString& t) const {
        std::vector<std::uint8_t> rev(t.bits().rbegin(), t.bits().rend());
        for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) {
            if (*it < 0 || *it >= code->symbol_count())
                throw CodecError("symbol index out of range");
            const Trie& trie = tries[static_cast<std::size_t>(*it)];
            int node = 0, matched = -1;
            std::size_t k = 0;
            while (true) {
                if (trie.nodes[node].rule >= 0) {
                    matched = trie.nodes[node].rule;
                    break;
                }
                if (k == rev.size()) throw CodecError("encoding stuck: bit stream too short");
                node = trie.nodes[node].child[rev[rev.size() - 1 - k]];
                if (node < 0) throw CodecError("encoding stuck: no applicable rule");
                ++k;
            }
            const Rule& r = code->rules[static_cast<std::size_t>(matched)];
            rev.resize(rev.size() - r.input.size());
            rev.insert(rev.end(), r.output.bits().rbegin(), r.output.bits().rend());
        }
        std::reverse(rev.begin(), rev.end());
        return {BitString(std::move(rev)), symbols.size(), static_cast<unsigned>(t.size()),
                false};
    }

    std::vector<int> run_all(const BitString& payload) const {
        std::vector<int> out;
        int state = 0;
        for (auto bit : payload.bits()) {
            const auto& tr = automaton.transitions[static_cast<std::size_t>(state)][bit];
            out.insert(out.end(), tr.emitted.begin(), tr.emitted.end());
            state = tr.next;
        }
        return out;
    }

    bool termination_works(int last_symbol, const BitString& t) const {
        std::vector<std::vector<int>> probes{{}};
        for (int a = 0; a < code->symbol_count(); ++a) probes.push_back({a});
        if (code->symbol_count() <= 8)
            for (int a = 0; a < code->symbol_count(); ++a)
                for (int b = 0; b < code->symbol_count(); ++b) probes.push_back({a, b});
        for (auto probe : probes) {
            probe.push_back(last_symbol);
            try {
                auto block = encode_with(probe, t);
                if (run_all(block.payload) != probe) return false;
            } catch (const CodecError&) {
                return false;
            }
        }
        return true;
    }

    BitString find_termination(int last_symbol) const {
        for (const auto& r : code->rules)
            if (r.symbol == last_symbol && r.input.empty()) return BitString{};
        const unsigned horizon = static_cast<unsigned>(code->max_input_len());
        const std::uint64_t fill_mask = code->termination_fill ? ~std::uint64_t{0} : 0;
        for (unsigned len = 1; len <= std::min(horizon, 16u); ++len) {
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
                BitString t;
                for (unsigned k = 0; k < len; ++k)
                    t.push_back(static_cast<int>(((v ^ fill_mask) >> (len - 1 - k)) & 1));
                bool resolves = false;
                for (const auto& r : code->rules)
                    if (r.symbol == last_symbol && is_prefix(r.input, t)) resolves = true;
                if (!resolves) continue;
                if (termination_works(last_symbol, t)) return t;
            }
        }
        throw UnsupportedCodeError("no valid termination pattern for symbol " +
                                   code->labels[static_cast<std::size_t>(last_symbol)]);
    }
};

Codec::Codec(const Vlrs& code) : impl_(std::make_unique<Impl>()) {
    impl_->code = &code;
    impl_->tries = input_tries(code);
    impl_->automaton = build_decoder_automaton(code);
}

Codec::~Codec() = default;
Codec::Codec(Codec&&) noexcept = default;
Codec& Codec::operator=(Codec&&) noexcept = default;

const Vlrs& Codec::code() const { return *impl_->code; }
const DecoderAutomaton& Codec::automaton() const { return impl_->automaton; }

const BitString& Codec::termination(int last_symbol) {
    auto it = impl_->terminations.find(last_symbol);
    if (it == impl_->terminations.end())
        it = impl_->terminations.emplace(last_symbol, impl_->find_termination(last_symbol)).first;
    return it->second;
}

EncodedBlock Codec::encode(const std::vector<int>& symbols) {
    if (symbols.empty()) return {};
    return impl_->encode_with(symbols, termination(symbols.back()));
}

std::vector<int> Codec::decode(const EncodedBlock& block) const {
    std::vector<int> out;
    out.reserve(block.symbol_count);
    int state = 0;
    for (auto bit : block.payload.bits()) {
        if (out.size() >= block.symbol_count) break;
        const auto& tr = impl_->automaton.transitions[static_cast<std::size_t>(state)][bit];
        out.insert(out.end(), tr.emitted.begin(), tr.emitted.end());
        state = tr.next;
        if (out.size() > block.symbol_count)
            throw MalformedBlockError("decoder emitted more symbols than announced");
    }
    if (out.size() < block.symbol_count)
        throw TruncationError("payload exhausted after " + std::to_string(out.size()) + " of " +
                              std::to_string(block.symbol_count) + " symbols");
    return out;
}

std::vector<int> Codec::decode_all(const BitString& payload) const {
    return impl_->run_all(payload);
}

BitString select_termination(const Vlrs& code, int last_symbol) {
    Codec codec(code);
    return codec.termination(last_symbol);
}

EncodedBlock encode(const Vlrs& code, const std::vector<int>& symbols) {
    Codec codec(code);
    return codec.encode(symbols);
}

std::vector<int> decode(const Vlrs& code, const EncodedBlock& block) {
    return Codec(code).decode(block);
}

}  // namespace vlrs
