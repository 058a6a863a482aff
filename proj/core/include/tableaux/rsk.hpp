#ifndef TABLEAUX_RSK_HPP
#define TABLEAUX_RSK_HPP

#include "tableaux/partition.hpp"
#include "tableaux/word.hpp"

namespace tableaux {

/// Pair of same-shape Young tableaux: P semi-standard over {1..m},
/// Q standard over {1..N}.
struct TableauPair {
    std::vector<std::vector<int>> p_rows;
    std::vector<std::vector<int>> q_rows;
    Partition shape;
};

/// Row insertion of the whole word; O(N * rows * log) with explicit rows.
TableauPair rsk(const Word& word);

/// Shape only, tracking per-row letter counts; O(N * m^2) worst case and the
/// workhorse for large Monte Carlo runs.
Partition rsk_shape(const Word& word);

/// Length of the longest weakly increasing subsequence (= first row of the
/// shape); Fenwick-tree maximum, O(N log m). Used where only lambda_1 matters.
int lis_length(const Word& word);

} // namespace tableaux

#endif
