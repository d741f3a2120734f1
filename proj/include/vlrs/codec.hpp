#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "vlrs/code.hpp"

namespace vlrs {

/// Forward decoder as a finite-state machine. States are pending bit
/// segments that do not yet identify a symbol; state 0 is epsilon.
struct DecoderAutomaton {
    struct Transition {
        std::vector<int> emitted;  // symbol indices, possibly empty
        int next{0};
    };

    std::vector<BitString> states;
    std::vector<std::array<Transition, 2>> transitions;

    int state_index(const BitString& s) const;
};

/// Backward encoder view: distinguishing pending-bit prefixes plus the
/// rule resolved for (symbol, pending head).
struct EncoderAutomaton {
    std::size_t horizon{0};
    std::vector<BitString> states;
    const Vlrs* code{nullptr};

    /// Unique rule of `symbol` whose input is a prefix of `pending`,
    /// or nullptr when `pending` is too short to resolve.
    const Rule* rule_lookup(int symbol, const BitString& pending) const;
};

struct EncodedBlock {
    BitString payload;
    std::uint64_t symbol_count{0};
    unsigned termination_len{0};
    bool termination_stripped{false};
};

DecoderAutomaton build_decoder_automaton(const Vlrs& code);
EncoderAutomaton build_encoder_automaton(const Vlrs& code);

/// Reusable encode/decode state for one code: rule tries, the decoder
/// automaton, and cached termination patterns. The code must outlive the
/// session. Immutable apart from the termination cache; one session per
/// thread.
class Codec {
public:
    explicit Codec(const Vlrs& code);
    explicit Codec(Vlrs&&) = delete;  // the code must outlive the session
    ~Codec();
    Codec(Codec&&) noexcept;
    Codec& operator=(Codec&&) noexcept;

    const Vlrs& code() const;
    const DecoderAutomaton& automaton() const;

    /// Shortest bit pattern (then lex-smallest, preferring the code's
    /// termination fill bit) that resolves a rule for the final symbol
    /// without causing spurious decoder emissions.
    const BitString& termination(int last_symbol);

    EncodedBlock encode(const std::vector<int>& symbols);
    std::vector<int> decode(const EncodedBlock& block) const;

    /// Runs the automaton over every payload bit and returns everything
    /// it emits, ignoring symbol_count.
    std::vector<int> decode_all(const BitString& payload) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

BitString select_termination(const Vlrs& code, int last_symbol);
EncodedBlock encode(const Vlrs& code, const std::vector<int>& symbols);
std::vector<int> decode(const Vlrs& code, const EncodedBlock& block);

}  // namespace vlrs
