#include "tableaux/hermitian.hpp"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include "tableaux/errors.hpp"

namespace tableaux {

int BlockSpec::total() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += at(i, i).real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a) s += std::norm(z);
    return std::sqrt(s);
}

double HermitianMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
    return d;
}

HermitianMatrix sample_gue(int n, Rng& rng) {
    HermitianMatrix x(n);
    const double half = std::sqrt(0.5);
    for (int i = 0; i < n; ++i) {
        x.at(i, i) = Complex(rng.gaussian(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            Complex z(half * rng.gaussian(), half * rng.gaussian());
            x.at(i, j) = z;
            x.at(j, i) = std::conj(z);
        }
    }
    return x;
}

HermitianMatrix sample_block_gue(const BlockSpec& blocks, Rng& rng) {
    HermitianMatrix x(blocks.total());
    int off = 0;
    for (int d : blocks.dims) {
        HermitianMatrix b = sample_gue(d, rng);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) x.at(off + i, off + j) = b.at(i, j);
        off += d;
    }
    return x;
}

HermitianMatrix traceless_transform(const HermitianMatrix& x,
                                    const AlphabetDistribution& dist) {
    const int m = dist.letters();
    if (x.n != m)
        throw BlockMismatch("matrix dimension must equal the alphabet size");

    // probabilities in tau-order; row i belongs to block k with p_i = p^(k)
    std::vector<double> sq(m);
    for (int i = 0; i < m; ++i) sq[i] = std::sqrt(dist.sorted_prob(i));
    double weighted = 0.0;
    for (int i = 0; i < m; ++i) weighted += sq[i] * x.at(i, i).real();

    HermitianMatrix out = x;
    for (int i = 0; i < m; ++i)
        out.at(i, i) = Complex(x.at(i, i).real() - sq[i] * weighted, 0.0);
    return out;
}

void write_matrix(std::ostream& os, const HermitianMatrix& x) {
    os << x.n << "\n";
    os.precision(17);
    for (int i = 0; i < x.n; ++i) {
        for (int j = 0; j < x.n; ++j) {
            if (j) os << ' ';
            os << x.at(i, j).real() << ' ' << x.at(i, j).imag();
        }
        os << "\n";
    }
}

HermitianMatrix read_matrix(std::istream& is) {
    int n = 0;
    is >> n;
    HermitianMatrix x(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double re = 0.0, im = 0.0;
            is >> re >> im;
            x.at(i, j) = Complex(re, im);
        }
    }
    return x;
}

} // namespace tableaux
