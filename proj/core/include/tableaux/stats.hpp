#ifndef TABLEAUX_STATS_HPP
#define TABLEAUX_STATS_HPP

#include <functional>
#include <vector>

namespace tableaux {

/// Two-sample Kolmogorov-Smirnov sup-distance between empirical CDFs.
/// Throws EmptySample when either side has fewer than 2 points.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// One-sample KS distance of an empirical CDF against a reference CDF.
double ks_one_sample(std::vector<double> a,
                     const std::function<double(double)>& cdf);

/// CDF of the semicircle law on [-2, 2].
double semicircle_cdf(double t);

/// Standard normal CDF.
double normal_cdf(double t);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;  // non-excess
    std::size_t count = 0;
};

Moments sample_moments(const std::vector<double>& a);

} // namespace tableaux

#endif
