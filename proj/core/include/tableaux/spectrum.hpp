#ifndef TABLEAUX_SPECTRUM_HPP
#define TABLEAUX_SPECTRUM_HPP

#include <iosfwd>
#include <vector>

#include "tableaux/alphabet.hpp"
#include "tableaux/hermitian.hpp"
#include "tableaux/rng.hpp"

namespace tableaux {

/// Eigenvalue vector of a block direct sum, blocks concatenated in the
/// sorted-probability order and non-increasing within each block.
struct Spectrum {
    std::vector<double> values;
    BlockSpec blocks;

    int dim() const { return static_cast<int>(values.size()); }
    bool ordered_within_blocks() const;
};

/// Block sizes taken from the alphabet multiplicities.
BlockSpec block_spec(const AlphabetDistribution& dist);

/// Eigenvalues of a block-diagonal Hermitian matrix, non-increasing within
/// each block. Throws BlockMismatch if sizes disagree.
Spectrum block_spectrum(const HermitianMatrix& x, const BlockSpec& blocks);

/// One draw of the pair (xi, xi0): block-GUE spectrum and its shifted
/// version xi0_i = xi_i - sqrt(p_i) * c. The shift constant is computed
/// both from the diagonal (c = sum sqrt(p_l) X_ll) and from the
/// eigenvalues (c = sum sqrt(p_l) xi_l); both are returned so callers can
/// assert agreement.
struct OrderedSpectra {
    Spectrum xi;
    Spectrum xi0;          // uses the diagonal-sum shift
    double shift_diag = 0; // sum_l sqrt(p_l) X_ll
    double shift_eig = 0;  // sum_l sqrt(p_l) xi_l
};

OrderedSpectra ordered_block_spectrum(const AlphabetDistribution& dist,
                                      Rng& rng);

/// Rank-one degenerate Gaussian Z_i = sqrt(p_i) g with one shared g, in
/// sorted-probability order. Covariance matrix is (sqrt(p_i p_j)).
std::vector<double> sample_degenerate_gaussian(const AlphabetDistribution& dist,
                                               Rng& rng);

/// Joint eigenvalue density of the traceless ensemble at x (coordinates in
/// sorted order): c_M * prod_k Delta_k(x)^2 * exp(-|x|^2/2) on the region
/// where each block is non-increasing and sum sqrt(p_j) x_j = 0 (tol 1e-9);
/// zero off the region.
double eigen_shape_density(const std::vector<double>& x,
                           const AlphabetDistribution& dist);

/// M=2 check: integrate eigen_shape_density along the constraint line
/// x(t) = t (sqrt(p2'), -sqrt(p1')) by Simpson's rule; should return 1.
double hyperplane_density_integral(const AlphabetDistribution& dist,
                                   double t_max = 12.0, int steps = 20000);

/// Monte Carlo top-eigenvalue / semicircle report at one dimension.
struct ScalingStats {
    double mean_top_scaled = 0.0;  // mean of xi_max / sqrt(M)
    double semicircle_ks = 0.0;    // pooled eigenvalues / sqrt(M) vs CDF
    int dim = 0;
    int trials = 0;
};

ScalingStats scaling_stats(int m, int trials, Rng& rng);

/// Monte Carlo E[max_{k<=m} chi^2_k] / m (chi^2_k with k degrees of freedom).
double max_chi_sq_ratio(int m, int trials, Rng& rng);

/// CSV rows `block,index,value` (block and index 1-based).
void write_spectrum_csv(std::ostream& os, const Spectrum& s);

} // namespace tableaux

#endif
