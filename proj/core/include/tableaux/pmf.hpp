#ifndef TABLEAUX_PMF_HPP
#define TABLEAUX_PMF_HPP

#include <map>
#include <vector>

#include "tableaux/alphabet.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/rational.hpp"

namespace tableaux {

/// Discrete measure on partitions with at most m parts.
struct Pmf {
    std::vector<Partition> support;
    std::vector<double> mass;
    int m = 0;
    double tail_bound = 0.0;  // mass provably outside the truncated support

    double total() const;
    /// Mass of a given shape, 0 if absent.
    double at(const Partition& shape) const;
};

/// Push-forward of the word measure through RSK: mass(lambda) =
/// s_lambda(p) * f^lambda over all partitions of n with at most M parts.
Pmf shape_pmf(const AlphabetDistribution& dist, int n);

/// Exact-rational variant of shape_pmf.
std::map<Partition, Rational> shape_pmf_exact(const ExactAlphabet& dist, int n);

/// Generalized Charlier ensemble atom:
///   prod_{i<j}(h_i - h_j) * prod_j 1/h_j! * s_lambda(p) * e^{-a} a^{|lambda|}.
double charlier_pmf(const Partition& shape, double alpha,
                    const AlphabetDistribution& dist);

/// Poisson(alpha)-mixture of the fixed-length shape measures, truncated at
/// word length n_max. Throws TailNotNegligible unless the Poisson tail beyond
/// n_max is <= 1e-10.
Pmf poissonize_pmf(const AlphabetDistribution& dist, double alpha, int n_max);

/// Default truncation length: ceil(alpha + 12 sqrt(alpha) + 20).
int default_poisson_truncation(double alpha);

/// P(Poisson(alpha) > n_max).
double poisson_tail_beyond(double alpha, int n_max);

/// P_{M,N}(lambda_1 <= t_1, ..., lambda_M <= t_M), exact.
Rational shape_cumulative_exact(const ExactAlphabet& dist, int n,
                                const std::vector<int>& thresholds);

struct DepoissonReport {
    bool non_increasing = true;
    std::vector<int> violations;         // word lengths where the cdf increased
    std::vector<double> cumulative;      // P_{M,N}(E), N = n_lo..n_hi
    double fitted_constant = 0.0;        // empirical constant in the sandwich bound
};

/// Verifies that P_{M,N}(lambda_1 <= t_1,...) is non-increasing in N, and
/// reports the fitted constant of the Poissonized sandwich
///   P^{a_N}(E) - C/N^2 <= P_{M,N}(E) <= P^{b_N}(E) + C/N^2,
/// a_N = N + 3 sqrt(N ln N), b_N = N - 3 sqrt(N ln N). Monotonicity is the
/// asserted part; the constant is reported, not asserted.
DepoissonReport depoisson_monotonicity_check(const AlphabetDistribution& dist,
                                             int n_lo, int n_hi,
                                             const std::vector<int>& thresholds);

/// Exact-rational monotonicity-only check over N = n_lo..n_hi.
bool depoisson_monotone_exact(const ExactAlphabet& dist, int n_lo, int n_hi,
                              const std::vector<int>& thresholds);

} // namespace tableaux

#endif
