#include "vlrs/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlrs {

BitString BitString::parse(std::string_view text) {
    BitString out;
    if (text == "-") return out;
    out.bits_.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            out.bits_.push_back(0);
        else if (c == '1')
            out.bits_.push_back(1);
        else
            throw std::invalid_argument("bad bit character in \"" + std::string(text) + "\"");
    }
    return out;
}

BitString BitString::slice(std::size_t from, std::size_t len) const {
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(from),
                     bits_.begin() + static_cast<std::ptrdiff_t>(from + len));
    return out;
}

BitString BitString::operator+(const BitString& rhs) const {
    BitString out;
    out.bits_.reserve(bits_.size() + rhs.bits_.size());
    out.bits_ = bits_;
    out.bits_.insert(out.bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
    return out;
}

std::string BitString::str() const {
    if (bits_.empty()) return "-";
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

bool is_prefix(const BitString& p, const BitString& w) {
    if (p.size() > w.size()) return false;
    return std::equal(p.bits().begin(), p.bits().end(), w.bits().begin());
}

bool is_suffix(const BitString& s, const BitString& w) {
    if (s.size() > w.size()) return false;
    return std::equal(s.bits().rbegin(), s.bits().rend(), w.bits().rbegin());
}

Ordering lex_compare(const BitString& u, const BitString& v) {
    auto c = u <=> v;
    if (c < 0) return Ordering::LT;
    if (c > 0) return Ordering::GT;
    return Ordering::EQ;
}

bool is_prefix_free(std::span<const BitString> s) {
    // In lex order a prefix immediately dominates everything it prefixes,
    // so checking adjacent pairs of the sorted set is enough.
    std::vector<BitString> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (is_prefix(sorted[i], sorted[i + 1])) return false;
    return true;
}

Dyadic kraft_sum(std::span<const BitString> s) {
    unsigned max_len = 0;
    for (const auto& w : s) max_len = std::max(max_len, static_cast<unsigned>(w.size()));
    if (max_len > 62) throw std::invalid_argument("kraft_sum: member longer than 62 bits");
    // Common denominator 2^max_len; each member contributes 2^(max_len - L).
    unsigned __int128 num = 0;
    for (const auto& w : s) num += static_cast<unsigned __int128>(1) << (max_len - w.size());
    unsigned exp = max_len;
    while (exp > 0 && num % 2 == 0) {
        num /= 2;
        --exp;
    }
    if (num > UINT64_MAX) throw std::overflow_error("kraft_sum: numerator overflow");
    return Dyadic{static_cast<std::uint64_t>(num), exp};
}

}  // namespace vlrs
