#include "tableaux/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "tableaux/errors.hpp"
#include "tableaux/stats.hpp"
#include "tableaux/tridiagonal.hpp"

namespace tableaux {

bool Spectrum::ordered_within_blocks() const {
    int off = 0;
    for (int d : blocks.dims) {
        for (int i = 1; i < d; ++i)
            if (values[off + i - 1] < values[off + i]) return false;
        off += d;
    }
    return true;
}

BlockSpec block_spec(const AlphabetDistribution& dist) {
    BlockSpec b;
    b.dims = dist.mults;
    return b;
}

Spectrum block_spectrum(const HermitianMatrix& x, const BlockSpec& blocks) {
    if (blocks.total() != x.n)
        throw BlockMismatch("block sizes do not sum to the matrix dimension");
    Spectrum s;
    s.blocks = blocks;
    s.values.reserve(x.n);
    int off = 0;
    for (int d : blocks.dims) {
        HermitianMatrix sub(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                sub.at(i, j) = x.at(off + i, off + j);
        std::vector<double> ev = eigvals(sub);  // ascending
        for (int i = d - 1; i >= 0; --i) s.values.push_back(ev[i]);
        off += d;
    }
    return s;
}

OrderedSpectra ordered_block_spectrum(const AlphabetDistribution& dist,
                                      Rng& rng) {
    const int m = dist.letters();
    BlockSpec blocks = block_spec(dist);
    HermitianMatrix x = sample_block_gue(blocks, rng);

    OrderedSpectra out;
    out.xi = block_spectrum(x, blocks);

    for (int i = 0; i < m; ++i) {
        double sp = std::sqrt(dist.sorted_prob(i));
        out.shift_diag += sp * x.at(i, i).real();
        out.shift_eig += sp * out.xi.values[i];
    }
    out.xi0 = out.xi;
    for (int i = 0; i < m; ++i)
        out.xi0.values[i] -= std::sqrt(dist.sorted_prob(i)) * out.shift_diag;
    return out;
}

std::vector<double> sample_degenerate_gaussian(const AlphabetDistribution& dist,
                                               Rng& rng) {
    double g = rng.gaussian();
    std::vector<double> z(dist.letters());
    for (int i = 0; i < dist.letters(); ++i)
        z[i] = std::sqrt(dist.sorted_prob(i)) * g;
    return z;
}

double eigen_shape_density(const std::vector<double>& x,
                           const AlphabetDistribution& dist) {
    const int m = dist.letters();
    if (static_cast<int>(x.size()) != m)
        throw BlockMismatch("density input has wrong dimension");

    double plane = 0.0;
    for (int i = 0; i < m; ++i)
        plane += std::sqrt(dist.sorted_prob(i)) * x[i];
    if (std::abs(plane) > 1e-9) return 0.0;

    double vdm2 = 1.0;
    int off = 0;
    for (int d : dist.mults) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                double diff = x[off + i] - x[off + j];
                if (diff < 0.0) return 0.0;  // off the ordered region
                vdm2 *= diff * diff;
            }
        off += d;
    }

    double log_c = -0.5 * (m - 1) * std::log(2.0 * M_PI);
    for (int d : dist.mults)
        for (int r = 2; r < d; ++r) log_c -= std::lgamma(r + 1.0);

    double q = 0.0;
    for (double xi : x) q += xi * xi;
    return std::exp(log_c - 0.5 * q) * vdm2;
}

double hyperplane_density_integral(const AlphabetDistribution& dist,
                                   double t_max, int steps) {
    if (dist.letters() != 2)
        throw BlockMismatch("hyperplane quadrature implemented for M=2 only");
    if (steps % 2 == 1) ++steps;
    // Unit direction orthogonal to (sqrt(p1'), sqrt(p2')).
    double u0 = std::sqrt(dist.sorted_prob(1));
    double u1 = -std::sqrt(dist.sorted_prob(0));
    auto f = [&](double t) {
        return eigen_shape_density({t * u0, t * u1}, dist);
    };
    double h = 2.0 * t_max / steps;
    double acc = f(-t_max) + f(t_max);
    for (int i = 1; i < steps; ++i)
        acc += f(-t_max + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

ScalingStats scaling_stats(int m, int trials, Rng& rng) {
    ScalingStats r;
    r.dim = m;
    r.trials = trials;
    double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> pooled;
    pooled.reserve(static_cast<size_t>(m) * trials);
    double top_acc = 0.0;
    for (int t = 0; t < trials; ++t) {
        TridiagonalModel model = sample_tridiagonal_gue(m, rng);
        std::vector<double> ev = ql_eigenvalues(model);
        top_acc += ev.back() * inv_sqrt_m;
        for (double e : ev) pooled.push_back(e * inv_sqrt_m);
    }
    r.mean_top_scaled = top_acc / trials;
    r.semicircle_ks = ks_one_sample(std::move(pooled), semicircle_cdf);
    return r;
}

double max_chi_sq_ratio(int m, int trials, Rng& rng) {
    double acc = 0.0;
    for (int t = 0; t < trials; ++t) {
        double best = 0.0;
        for (int k = 1; k <= m; ++k) {
            double c = sample_chi(k, rng);
            best = std::max(best, c * c);
        }
        acc += best / m;
    }
    return acc / trials;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
    os << "block,index,value\n";
    int off = 0, block = 1;
    for (int d : s.blocks.dims) {
        for (int i = 0; i < d; ++i)
            os << block << ',' << (i + 1) << ',' << s.values[off + i] << '\n';
        off += d;
        ++block;
    }
}

} // namespace tableaux
