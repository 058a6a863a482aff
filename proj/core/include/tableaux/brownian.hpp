#ifndef TABLEAUX_BROWNIAN_HPP
#define TABLEAUX_BROWNIAN_HPP

#include <vector>

#include "tableaux/alphabet.hpp"
#include "tableaux/rng.hpp"

namespace tableaux {

/// M x n grid of Brownian increments over [0,1] with per-column covariance
/// Sigma/n, Sigma_ij = p_i delta_ij - p_i p_j. Rows are stored in
/// sorted-probability order so blocks are contiguous.
struct IncrementGrid {
    int m = 0;
    int n = 0;
    std::vector<double> inc;  // row-major, m rows of n columns
    AlphabetDistribution dist;

    double at(int row, int col) const {
        return inc[static_cast<size_t>(row) * n + col];
    }
};

/// Each column is (diag(sqrt(p)) - p sqrt(p)^T) g / sqrt(n) with g iid
/// standard normal; this factorization gives the covariance exactly.
IncrementGrid sample_increment_grid(const AlphabetDistribution& dist, int n,
                                    Rng& rng);

/// Discrete last-passage functional: full sums of the rows above block k
/// (the block owning sorted letter l) plus the supremum over l - m_k
/// non-crossing path coverages of the block's rows, via a multi-front DP
/// over columns.
double lhat(const IncrementGrid& grid, int l);

/// Oracle: explicit enumeration of all integer subdivision arrays. Throws
/// BruteForceTooLarge when the count exceeds 1e6.
double lhat_bruteforce(const IncrementGrid& grid, int l);

/// Consecutive differences of lhat(grid, l), l = 1..M, on one shared grid.
std::vector<double> lhat_shape_sample(const AlphabetDistribution& dist, int n,
                                      Rng& rng);

} // namespace tableaux

#endif
