#pragma once

#include <vector>

#include "vlrs/code.hpp"

namespace vlrs {

/// One prefix-free codeword per symbol, in alphabet order.
struct CodewordAssignment {
    std::vector<BitString> codewords;

    std::vector<int> lengths() const;
    int k_plus() const;
    double mdl(const SourceModel& source) const;
};

/// Optimal prefix code lengths with canonical (length, symbol index)
/// codeword assignment. Ties in the merge step go to the smallest
/// symbol/cluster index.
CodewordAssignment huffman(const SourceModel& source);

/// Minimal-mdl alphabetic prefix code, by exact dynamic programming over
/// alphabetic trees.
CodewordAssignment hu_tucker(const SourceModel& source);

/// Order-preserving VLRS over the full FLC of length k+; same mdl as the
/// assignment it is built from.
Vlrs lexicographic_vlrs(const CodewordAssignment& assignment,
                        std::vector<std::string> labels = {});

/// Pairs the VLC with its bitwise complement; marginal bit probability
/// converges to 0.5. Always suffix-constrained.
Vlrs mirror_vlrs(const CodewordAssignment& assignment,
                 std::vector<std::string> labels = {});

}  // namespace vlrs
