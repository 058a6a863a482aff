#include "tableaux/pmf.hpp"

#include <algorithm>
#include <cmath>

#include "tableaux/errors.hpp"
#include "tableaux/schur.hpp"

namespace tableaux {

double Pmf::total() const {
    double s = 0.0;
    for (double x : mass) s += x;
    return s;
}

double Pmf::at(const Partition& shape) const {
    for (size_t i = 0; i < support.size(); ++i)
        if (support[i] == shape) return mass[i];
    return 0.0;
}

Pmf shape_pmf(const AlphabetDistribution& dist, int n) {
    const int m = dist.letters();
    if (m > 6 || n > 150)
        throw InstanceTooLarge("shape_pmf guarded to M <= 6, n <= 150");
    Pmf pmf;
    pmf.m = m;
    for (Partition& lam : partitions_of(n, m)) {
        const double f = syt_count(lam, m, n).convert_to<double>();
        const double s = schur_repeated_det(lam, dist);
        pmf.support.push_back(std::move(lam));
        pmf.mass.push_back(s * f);
    }
    return pmf;
}

std::map<Partition, Rational> shape_pmf_exact(const ExactAlphabet& dist, int n) {
    const int m = dist.letters();
    if (m > 6 || n > 60)
        throw InstanceTooLarge("shape_pmf_exact guarded to M <= 6, n <= 60");
    std::map<Partition, Rational> pmf;
    for (const Partition& lam : partitions_of(n, m)) {
        Rational f(syt_count(lam, m, n));
        pmf.emplace(lam, schur_repeated_det(lam, dist) * f);
    }
    return pmf;
}

double charlier_pmf(const Partition& shape, double alpha,
                    const AlphabetDistribution& dist) {
    const int m = dist.letters();
    if (shape.rows() > m) return 0.0;
    std::vector<long> h(m);
    for (int i = 0; i < m; ++i) h[i] = shape.part(i) + m - (i + 1);
    // hook-style prefactor and Poisson weight in log space
    double lg = -alpha + shape.size() * std::log(alpha);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            lg += std::log(static_cast<double>(h[i] - h[j]));
        lg -= std::lgamma(static_cast<double>(h[i]) + 1.0);
    }
    return std::exp(lg) * schur_repeated_det(shape, dist);
}

int default_poisson_truncation(double alpha) {
    return static_cast<int>(std::ceil(alpha + 12.0 * std::sqrt(alpha) + 20.0));
}

double poisson_tail_beyond(double alpha, int n_max) {
    // sum the pmf up to n_max with the stable recurrence
    double w = std::exp(-alpha), cdf = w;
    for (int n = 1; n <= n_max; ++n) {
        w *= alpha / n;
        cdf += w;
    }
    return std::max(0.0, 1.0 - cdf);
}

Pmf poissonize_pmf(const AlphabetDistribution& dist, double alpha, int n_max) {
    if (alpha <= 0.0)
        throw InstanceTooLarge("poissonize_pmf needs alpha > 0");
    const double tail = poisson_tail_beyond(alpha, n_max);
    if (tail > 1e-10)
        throw TailNotNegligible("Poisson tail beyond n_max exceeds 1e-10");

    Pmf pmf;
    pmf.m = dist.letters();
    pmf.tail_bound = tail;
    double w = std::exp(-alpha);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) w *= alpha / n;
        Pmf fixed = shape_pmf(dist, n);
        for (size_t i = 0; i < fixed.support.size(); ++i) {
            pmf.support.push_back(std::move(fixed.support[i]));
            pmf.mass.push_back(w * fixed.mass[i]);
        }
    }
    return pmf;
}

namespace {

bool below_thresholds(const Partition& lam, const std::vector<int>& thr) {
    for (size_t i = 0; i < thr.size(); ++i)
        if (lam.part(static_cast<int>(i)) > thr[i]) return false;
    // parts beyond the threshold vector must vanish
    for (int i = static_cast<int>(thr.size()); i < lam.rows(); ++i)
        if (lam.part(i) > 0) return false;
    return true;
}

double cumulative(const Pmf& pmf, const std::vector<int>& thr) {
    double s = 0.0;
    for (size_t i = 0; i < pmf.support.size(); ++i)
        if (below_thresholds(pmf.support[i], thr)) s += pmf.mass[i];
    return s;
}

} // namespace

Rational shape_cumulative_exact(const ExactAlphabet& dist, int n,
                                const std::vector<int>& thresholds) {
    Rational s = 0;
    for (auto& [lam, mass] : shape_pmf_exact(dist, n))
        if (below_thresholds(lam, thresholds)) s += mass;
    return s;
}

DepoissonReport depoisson_monotonicity_check(const AlphabetDistribution& dist,
                                             int n_lo, int n_hi,
                                             const std::vector<int>& thresholds) {
    DepoissonReport rep;
    for (int n = n_lo; n <= n_hi; ++n)
        rep.cumulative.push_back(cumulative(shape_pmf(dist, n), thresholds));
    for (size_t i = 1; i < rep.cumulative.size(); ++i) {
        if (rep.cumulative[i] > rep.cumulative[i - 1] + 1e-12) {
            rep.non_increasing = false;
            rep.violations.push_back(n_lo + static_cast<int>(i));
        }
    }
    // empirical sandwich constant (reported only)
    for (int n = std::max(n_lo, 2); n <= n_hi; ++n) {
        const double root = 3.0 * std::sqrt(n * std::log(static_cast<double>(n)));
        const double a_n = n + root;
        const double b_n = std::max(n - root, 1e-3);
        const double p_n = rep.cumulative[n - n_lo];
        const double upper =
            cumulative(poissonize_pmf(dist, a_n, default_poisson_truncation(a_n)),
                       thresholds);
        const double lower =
            cumulative(poissonize_pmf(dist, b_n, default_poisson_truncation(b_n)),
                       thresholds);
        const double need =
            std::max({0.0, upper - p_n, p_n - lower}) * n * n;
        rep.fitted_constant = std::max(rep.fitted_constant, need);
    }
    return rep;
}

bool depoisson_monotone_exact(const ExactAlphabet& dist, int n_lo, int n_hi,
                              const std::vector<int>& thresholds) {
    Rational prev;
    bool first = true;
    for (int n = n_lo; n <= n_hi; ++n) {
        Rational cur = shape_cumulative_exact(dist, n, thresholds);
        if (!first && cur > prev) return false;
        prev = cur;
        first = false;
    }
    return true;
}

} // namespace tableaux
