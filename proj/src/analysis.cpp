#include "vlrs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "vlrs/codec.hpp"
#include "vlrs/errors.hpp"

namespace vlrs {

double entropy(const SourceModel& source) {
    check_source(source);
    double h = 0.0;
    for (double pi : source.p) h -= pi * std::log2(pi);
    return h;
}

namespace {

std::vector<Rule> ordered_rules(const Vlrs& code) {
    std::vector<Rule> rules = code.rules;
    std::stable_sort(rules.begin(), rules.end(),
                     [](const Rule& a, const Rule& b) { return a.symbol < b.symbol; });
    return rules;
}

struct Reachability {
    bool irreducible{false};
    bool aperiodic{false};
};

Reachability chain_structure(const Eigen::MatrixXd& t) {
    const auto n = static_cast<std::size_t>(t.rows());
    // Edge r' -> r whenever rule r can precede rule r'.
    auto bfs = [&](bool reversed) {
        std::vector<int> level(n, -1);
        std::vector<std::size_t> queue{0};
        level[0] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v = 0; v < n; ++v) {
                const double w = reversed ? t(static_cast<Eigen::Index>(u),
                                             static_cast<Eigen::Index>(v))
                                          : t(static_cast<Eigen::Index>(v),
                                              static_cast<Eigen::Index>(u));
                if (w > 0.0 && level[v] < 0) {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        return level;
    };
    const auto fwd = bfs(false);
    const auto bwd = bfs(true);
    Reachability out;
    out.irreducible = std::none_of(fwd.begin(), fwd.end(), [](int l) { return l < 0; }) &&
                      std::none_of(bwd.begin(), bwd.end(), [](int l) { return l < 0; });
    if (!out.irreducible) return out;
    long long g = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (t(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) > 0.0)
                g = std::gcd(g, static_cast<long long>(fwd[u]) + 1 - fwd[v]);
    out.aperiodic = std::abs(g) == 1;
    return out;
}

}  // namespace

RuleChainModel rule_transition_matrix(const Vlrs& code, const SourceModel& source) {
    check_source(source);
    RuleChainModel model;
    model.rules = ordered_rules(code);
    const auto n = static_cast<Eigen::Index>(model.rules.size());
    model.transition = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index rp = 0; rp < n; ++rp) {
            const Rule& from = model.rules[static_cast<std::size_t>(rp)];
            const Rule& to = model.rules[static_cast<std::size_t>(r)];
            if (is_prefix(to.input, from.output))
                model.transition(r, rp) = source.p[static_cast<std::size_t>(to.symbol)];
        }
    for (const auto& r : model.rules) model.deltas.push_back(delta(r));
    return model;
}

Eigen::VectorXd stationary_rule_distribution(const RuleChainModel& model) {
    const Eigen::MatrixXd& t = model.transition;
    const Eigen::Index n = t.rows();
    Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    const auto structure = chain_structure(t);
    const bool cesaro = !(structure.irreducible && structure.aperiodic);
    const double tolerance = cesaro ? 1e-10 : 1e-12;
    constexpr long cap = 1'000'000;
    Eigen::VectorXd average = pi;
    for (long it = 1; it <= cap; ++it) {
        Eigen::VectorXd next = t * pi;
        next /= next.sum();
        if (cesaro) {
            average = (average * static_cast<double>(it) + next) / static_cast<double>(it + 1);
            if ((t * average - average).lpNorm<Eigen::Infinity>() < tolerance) return average;
        } else if ((next - pi).lpNorm<Eigen::Infinity>() < tolerance) {
            return next;
        }
        pi = std::move(next);
    }
    const Eigen::VectorXd& candidate = cesaro ? average : pi;
    const double residual = (t * candidate - candidate).lpNorm<Eigen::Infinity>();
    throw Error("stationary distribution did not converge; residual " +
                std::to_string(residual));
}

double asymptotic_mdl(const Vlrs& code, const SourceModel& source) {
    RuleChainModel model = rule_transition_matrix(code, source);
    model.stationary = stationary_rule_distribution(model);
    double mdl = 0.0;
    for (Eigen::Index r = 0; r < model.stationary.size(); ++r)
        mdl += model.stationary(r) * model.deltas[static_cast<std::size_t>(r)];
    return mdl;
}

namespace {

// Rule resolved when `symbol` terminates the sequence, plus the
// termination cost in bits.
std::pair<std::size_t, unsigned> last_rule_for(const Vlrs& code,
                                               const std::vector<Rule>& rules, int symbol) {
    const BitString t = select_termination(code, symbol);
    for (std::size_t r = 0; r < rules.size(); ++r)
        if (rules[r].symbol == symbol && is_prefix(rules[r].input, t))
            return {r, static_cast<unsigned>(t.size())};
    throw UnsupportedCodeError("termination does not resolve a rule");
}

}  // namespace

double exact_mdl(const Vlrs& code, const SourceModel& source, int n) {
    if (n < 1) throw Error("exact_mdl requires n >= 1");
    check_source(source);
    RuleChainModel model = rule_transition_matrix(code, source);
    const auto m = static_cast<Eigen::Index>(model.rules.size());
    Eigen::VectorXd last = Eigen::VectorXd::Zero(m);
    double termination = 0.0;
    for (int a = 0; a < code.symbol_count(); ++a) {
        auto [rule, tlen] = last_rule_for(code, model.rules, a);
        last(static_cast<Eigen::Index>(rule)) += source.p[static_cast<std::size_t>(a)];
        termination += source.p[static_cast<std::size_t>(a)] * tlen;
    }
    Eigen::VectorXd deltas(m);
    for (Eigen::Index r = 0; r < m; ++r) deltas(r) = model.deltas[static_cast<std::size_t>(r)];
    double total = termination;
    Eigen::VectorXd p = last;
    for (int tau = 0; tau < n; ++tau) {
        total += p.dot(deltas);
        if (tau + 1 < n) p = model.transition * p;
    }
    return total;
}

BitProbabilityTrace marginal_bit_trace(const Vlrs& code, const SourceModel& source, int steps) {
    check_source(source);
    if (steps < 1) throw Error("marginal_bit_trace requires steps >= 1");
    // Mirror shape: two single-bit-input rules per symbol, opposite leading
    // output bits, every rule emitting at least one net bit.
    std::vector<const Rule*> zero_branch(static_cast<std::size_t>(code.symbol_count()), nullptr);
    for (int i = 0; i < code.symbol_count(); ++i) {
        auto rs = code.rules_of(i);
        if (rs.size() != 2 || rs[0]->input.size() != 1 || rs[1]->input.size() != 1 ||
            delta(*rs[0]) < 1 || delta(*rs[1]) < 1 ||
            rs[0]->output.bit(0) == rs[1]->output.bit(0))
            throw UnsupportedCodeError("marginal_bit_trace requires a mirror code");
        zero_branch[static_cast<std::size_t>(i)] =
            rs[0]->output.bit(0) == 0 ? rs[0] : rs[1];
    }
    BitProbabilityTrace trace;
    for (int i = 0; i < code.symbol_count(); ++i)
        if (zero_branch[static_cast<std::size_t>(i)]->input.bit(0) == 0)
            trace.alpha += source.p[static_cast<std::size_t>(i)];

    const auto rules = ordered_rules(code);
    double f = 0.0;
    for (int a = 0; a < code.symbol_count(); ++a) {
        auto [rule, tlen] = last_rule_for(code, rules, a);
        (void)tlen;
        if (rules[rule].output.bit(0) == 0) f += source.p[static_cast<std::size_t>(a)];
    }
    trace.f_values.push_back(f);
    for (int k = 1; k < steps; ++k) {
        f = trace.alpha * f + (1.0 - trace.alpha) * (1.0 - f);
        trace.f_values.push_back(f);
    }
    trace.limit = 0.5;
    return trace;
}

BitStats empirical_bit_stats(const Vlrs& code, const SourceModel& true_source, int length,
                             int trials, std::uint64_t seed) {
    check_source(true_source);
    if (true_source.symbol_count() != code.symbol_count())
        throw Error("source size does not match code alphabet");
    BitStats stats;
    Codec codec(code);
    std::vector<std::uint64_t> zeros;
    std::uint64_t total_zeros = 0, total_bits = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1));
        std::discrete_distribution<int> dist(true_source.p.begin(), true_source.p.end());
        std::vector<int> symbols(static_cast<std::size_t>(length));
        for (auto& s : symbols) s = dist(rng);
        const EncodedBlock block = codec.encode(symbols);
        const auto& bits = block.payload.bits();
        if (bits.size() > zeros.size()) {
            zeros.resize(bits.size(), 0);
            stats.position_counts.resize(bits.size(), 0);
        }
        for (std::size_t i = 0; i < bits.size(); ++i) {
            zeros[i] += bits[i] == 0;
            ++stats.position_counts[i];
            total_zeros += bits[i] == 0;
        }
        total_bits += bits.size();
    }
    stats.zero_fraction = total_bits ? static_cast<double>(total_zeros) /
                                           static_cast<double>(total_bits)
                                     : 0.0;
    stats.per_position.resize(zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i)
        stats.per_position[i] =
            static_cast<double>(zeros[i]) / static_cast<double>(stats.position_counts[i]);
    return stats;
}

}  // namespace vlrs
