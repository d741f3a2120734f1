#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "vlrs/code.hpp"

namespace vlrs {

/// Rule-indexed Markov chain of the reversed encoding process.
/// transition is column-stochastic: T(r, r') = P(rule r precedes r').
struct RuleChainModel {
    std::vector<Rule> rules;  // (symbol, j) order
    Eigen::MatrixXd transition;
    Eigen::VectorXd stationary;
    std::vector<int> deltas;
};

/// Analytic marginal probability of the first bit emitted per rule, read
/// in reversed symbol clock. Converges to 0.5 for mirror codes.
struct BitProbabilityTrace {
    double alpha{0.0};
    std::vector<double> f_values;
    double limit{0.5};
};

struct BitStats {
    double zero_fraction{0.0};
    std::vector<double> per_position;             // zero frequency per payload bit
    std::vector<std::uint64_t> position_counts;   // samples behind each position
};

double entropy(const SourceModel& source);

RuleChainModel rule_transition_matrix(const Vlrs& code, const SourceModel& source);

/// Power iteration to residual < 1e-12 (capped at 1e6 iterations);
/// Cesaro-averaged iterates when the chain is reducible or periodic.
Eigen::VectorXd stationary_rule_distribution(const RuleChainModel& model);

double asymptotic_mdl(const Vlrs& code, const SourceModel& source);

/// Expected total bits (termination included) for length-n sequences.
double exact_mdl(const Vlrs& code, const SourceModel& source, int n);

BitProbabilityTrace marginal_bit_trace(const Vlrs& code, const SourceModel& source, int steps);

BitStats empirical_bit_stats(const Vlrs& code, const SourceModel& true_source, int length,
                             int trials, std::uint64_t seed);

}  // namespace vlrs
