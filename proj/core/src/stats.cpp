#include "tableaux/stats.hpp"

#include <algorithm>
#include <cmath>

#include "tableaux/errors.hpp"

namespace tableaux {

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 2 || b.size() < 2)
        throw EmptySample("KS statistic needs at least 2 samples per side");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

double ks_one_sample(std::vector<double> a,
                     const std::function<double(double)>& cdf) {
    if (a.size() < 2)
        throw EmptySample("KS statistic needs at least 2 samples");
    std::sort(a.begin(), a.end());
    const double n = static_cast<double>(a.size());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double f = cdf(a[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

double semicircle_cdf(double t) {
    if (t <= -2.0) return 0.0;
    if (t >= 2.0) return 1.0;
    return 0.5 + t * std::sqrt(4.0 - t * t) / (4.0 * M_PI) +
           std::asin(0.5 * t) / M_PI;
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

Moments sample_moments(const std::vector<double>& a) {
    Moments m;
    m.count = a.size();
    if (a.empty()) return m;
    double s = 0.0;
    for (double x : a) s += x;
    m.mean = s / static_cast<double>(a.size());
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : a) {
        double d = x - m.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    double n = static_cast<double>(a.size());
    m2 /= n;
    m3 /= n;
    m4 /= n;
    m.variance = m2;
    if (m2 > 0.0) {
        m.skewness = m3 / std::pow(m2, 1.5);
        m.kurtosis = m4 / (m2 * m2);
    }
    return m;
}

} // namespace tableaux
