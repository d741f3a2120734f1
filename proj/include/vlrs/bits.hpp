#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vlrs {

/// Finite sequence of bits. Value-semantic; treat as immutable once built.
/// The empty sequence (epsilon) renders as "-".
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    static BitString parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    void push_back(int b) { bits_.push_back(static_cast<std::uint8_t>(b & 1)); }

    BitString slice(std::size_t from, std::size_t len) const;
    BitString operator+(const BitString& rhs) const;

    bool operator==(const BitString& rhs) const = default;

    // Lexicographic order with 0 < 1; a proper prefix sorts before its extension.
    std::strong_ordering operator<=>(const BitString& rhs) const {
        return std::lexicographical_compare_three_way(
            bits_.begin(), bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
    }

    std::string str() const;

private:
    std::vector<std::uint8_t> bits_;
};

bool is_prefix(const BitString& p, const BitString& w);
bool is_suffix(const BitString& s, const BitString& w);

enum class Ordering { LT, EQ, GT };
Ordering lex_compare(const BitString& u, const BitString& v);

/// Exact dyadic rational num / 2^exp, kept normalized (num odd or zero).
struct Dyadic {
    std::uint64_t num{0};
    unsigned exp{0};

    bool is_one() const { return num == 1 && exp == 0; }
    bool operator==(const Dyadic&) const = default;
};

using BitSet = std::vector<BitString>;

bool is_prefix_free(std::span<const BitString> s);
Dyadic kraft_sum(std::span<const BitString> s);

}  // namespace vlrs
