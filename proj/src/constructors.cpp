#include "vlrs/constructors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "vlrs/errors.hpp"

namespace vlrs {

std::vector<int> CodewordAssignment::lengths() const {
    std::vector<int> out;
    out.reserve(codewords.size());
    for (const auto& w : codewords) out.push_back(static_cast<int>(w.size()));
    return out;
}

int CodewordAssignment::k_plus() const {
    int k = 0;
    for (const auto& w : codewords) k = std::max(k, static_cast<int>(w.size()));
    return k;
}

double CodewordAssignment::mdl(const SourceModel& source) const {
    if (source.p.size() != codewords.size())
        throw Error("source size does not match assignment");
    double m = 0.0;
    for (std::size_t i = 0; i < codewords.size(); ++i)
        m += source.p[i] * static_cast<double>(codewords[i].size());
    return m;
}

namespace {

BitString bits_of(std::uint64_t value, int width) {
    BitString out;
    for (int k = width - 1; k >= 0; --k) out.push_back(static_cast<int>((value >> k) & 1));
    return out;
}

// Canonical codewords for the given lengths: symbols ordered by
// (length, index), consecutive numbering within each length.
std::vector<BitString> canonical_codewords(const std::vector<int>& lengths) {
    const int n = static_cast<int>(lengths.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(lengths[static_cast<std::size_t>(a)], a) <
               std::pair(lengths[static_cast<std::size_t>(b)], b);
    });
    std::vector<BitString> codewords(static_cast<std::size_t>(n));
    std::uint64_t value = 0;
    int prev_len = lengths[static_cast<std::size_t>(order[0])];
    codewords[static_cast<std::size_t>(order[0])] = bits_of(0, prev_len);
    for (int k = 1; k < n; ++k) {
        const int len = lengths[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        value = (value + 1) << (len - prev_len);
        codewords[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] =
            bits_of(value, len);
        prev_len = len;
    }
    return codewords;
}

}  // namespace

CodewordAssignment huffman(const SourceModel& source) {
    check_source(source);
    const int n = source.symbol_count();
    if (n < 2) throw Error("huffman requires at least two symbols");

    struct Cluster {
        double prob;
        int id;
        std::vector<int> members;
    };
    std::vector<Cluster> active;
    for (int i = 0; i < n; ++i)
        active.push_back({source.p[static_cast<std::size_t>(i)], i, {i}});
    std::vector<int> lengths(static_cast<std::size_t>(n), 0);
    int next_id = n;
    auto smaller = [](const Cluster& a, const Cluster& b) {
        return std::pair(a.prob, a.id) < std::pair(b.prob, b.id);
    };
    while (active.size() > 1) {
        auto first = std::min_element(active.begin(), active.end(), smaller);
        Cluster a = std::move(*first);
        active.erase(first);
        auto second = std::min_element(active.begin(), active.end(), smaller);
        Cluster b = std::move(*second);
        active.erase(second);
        for (int m : a.members) ++lengths[static_cast<std::size_t>(m)];
        for (int m : b.members) ++lengths[static_cast<std::size_t>(m)];
        a.members.insert(a.members.end(), b.members.begin(), b.members.end());
        active.push_back({a.prob + b.prob, next_id++, std::move(a.members)});
    }
    return {canonical_codewords(lengths)};
}

CodewordAssignment hu_tucker(const SourceModel& source) {
    check_source(source);
    const auto n = source.p.size();
    if (n == 1) return {{BitString::parse("0")}};

    // Exact DP over alphabetic trees: cost(i,j) is the minimal weighted
    // depth of a tree over leaves i..j.
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + source.p[i];
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<std::size_t>> split(n, std::vector<std::size_t>(n, 0));
    for (std::size_t span = 1; span < n; ++span)
        for (std::size_t i = 0; i + span < n; ++i) {
            const std::size_t j = i + span;
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_k = i;
            for (std::size_t k = i; k < j; ++k) {
                const double c = cost[i][k] + cost[k + 1][j];
                if (c < best) {
                    best = c;
                    best_k = k;
                }
            }
            cost[i][j] = best + (prefix[j + 1] - prefix[i]);
            split[i][j] = best_k;
        }

    std::vector<BitString> codewords(n);
    struct Frame {
        std::size_t i, j;
        BitString path;
    };
    std::vector<Frame> stack{{0, n - 1, BitString{}}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.i == f.j) {
            codewords[f.i] = std::move(f.path);
            continue;
        }
        const std::size_t k = split[f.i][f.j];
        BitString left = f.path, right = f.path;
        left.push_back(0);
        right.push_back(1);
        stack.push_back({f.i, k, std::move(left)});
        stack.push_back({k + 1, f.j, std::move(right)});
    }
    return {std::move(codewords)};
}

Vlrs lexicographic_vlrs(const CodewordAssignment& assignment, std::vector<std::string> labels) {
    if (!is_prefix_free(assignment.codewords) || !kraft_sum(assignment.codewords).is_one())
        throw InvalidCodeError("assignment is not a full prefix code");
    const int k_plus = assignment.k_plus();
    if (k_plus > 24) throw Error("codeword length above 24 bits; table too large");
    const int n = static_cast<int>(assignment.codewords.size());
    Vlrs code;
    code.labels = labels.empty() ? default_labels(n) : std::move(labels);
    std::uint64_t next = 0;  // next unassigned member of the length-k+ FLC
    for (int i = 0; i < n; ++i) {
        const int m = k_plus - static_cast<int>(assignment.codewords[static_cast<std::size_t>(i)].size());
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << m); ++j)
            code.rules.push_back({i, bits_of(j, m), bits_of(next++, k_plus)});
    }
    return code;
}

Vlrs mirror_vlrs(const CodewordAssignment& assignment, std::vector<std::string> labels) {
    if (!is_prefix_free(assignment.codewords))
        throw InvalidCodeError("assignment is not prefix-free");
    const int n = static_cast<int>(assignment.codewords.size());
    Vlrs code;
    code.labels = labels.empty() ? default_labels(n) : std::move(labels);
    for (int i = 0; i < n; ++i) {
        const BitString& b = assignment.codewords[static_cast<std::size_t>(i)];
        if (b.empty()) throw InvalidCodeError("empty codeword");
        BitString bt;  // bitwise complement
        for (auto bit : b.bits()) bt.push_back(1 - bit);
        BitString last0, last1;
        last0.push_back(b.bit(b.size() - 1));
        last1.push_back(bt.bit(bt.size() - 1));
        BitString out0 = BitString::parse("0") + b;
        BitString out1 = BitString::parse("1") + bt;
        code.rules.push_back({i, std::move(last0), std::move(out0)});
        code.rules.push_back({i, std::move(last1), std::move(out1)});
    }
    return code;
}

}  // namespace vlrs
