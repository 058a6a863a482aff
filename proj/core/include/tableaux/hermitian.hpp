#ifndef TABLEAUX_HERMITIAN_HPP
#define TABLEAUX_HERMITIAN_HPP

#include <complex>
#include <iosfwd>
#include <vector>

#include "tableaux/alphabet.hpp"
#include "tableaux/rng.hpp"

namespace tableaux {

using Complex = std::complex<double>;

/// Direct-sum block sizes d_1..d_K, summing to the matrix dimension.
struct BlockSpec {
    std::vector<int> dims;
    int total() const;
};

/// Dense complex Hermitian matrix, row-major.
struct HermitianMatrix {
    int n = 0;
    std::vector<Complex> a;

    HermitianMatrix() = default;
    explicit HermitianMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}

    Complex& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Complex& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    double trace() const;
    double frobenius_norm() const;
    /// max |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
};

/// GUE sample: real N(0,1) diagonal, off-diagonal re/im N(0,1/2).
HermitianMatrix sample_gue(int n, Rng& rng);

/// Block-diagonal direct sum of independent GUE blocks.
HermitianMatrix sample_block_gue(const BlockSpec& blocks, Rng& rng);

/// Diagonal shift X_ii -> X_ii - sqrt(p_i) sum_l sqrt(p_l) X_ll; off-diagonal
/// untouched. The input block sizes must equal the alphabet multiplicities.
HermitianMatrix traceless_transform(const HermitianMatrix& x,
                                    const AlphabetDistribution& dist);

/// Text round-trip: first line n, then n^2 "re im" pairs row-major.
void write_matrix(std::ostream& os, const HermitianMatrix& x);
HermitianMatrix read_matrix(std::istream& is);

} // namespace tableaux

#endif
