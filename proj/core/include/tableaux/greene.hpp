#ifndef TABLEAUX_GREENE_HPP
#define TABLEAUX_GREENE_HPP

#include "tableaux/word.hpp"

namespace tableaux {

/// G^l(M,N): maximal number of indicator-matrix entries covered by l pairwise
/// disjoint up/right paths in the {1..N} x {1..M} grid. Non-crossing
/// multi-front DP; guarded to m <= 6, N <= 200.
long long greene_sums(const Word& word, int l);

/// Exponential second oracle: enumerates every weakly increasing subsequence
/// as a position bitmask and maximizes over l pairwise disjoint ones.
/// Requires m * N <= 64.
long long greene_sums_bruteforce(const Word& word, int l);

} // namespace tableaux

#endif
