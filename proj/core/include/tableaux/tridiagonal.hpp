#ifndef TABLEAUX_TRIDIAGONAL_HPP
#define TABLEAUX_TRIDIAGONAL_HPP

#include <optional>
#include <vector>

#include "tableaux/hermitian.hpp"
#include "tableaux/rng.hpp"

namespace tableaux {

/// Real symmetric tridiagonal matrix with nonnegative off-diagonal.
struct TridiagonalModel {
    std::vector<double> diag;  // size n
    std::vector<double> off;   // size n-1; off[k] couples rows k and k+1

    int dim() const { return static_cast<int>(diag.size()); }
};

/// Dense complex matrix used only for the accumulated unitary.
struct ComplexMatrix {
    int n = 0;
    std::vector<Complex> a;
    explicit ComplexMatrix(int dim)
        : n(dim), a(static_cast<size_t>(dim) * dim) {}
    Complex& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Complex& at(int i, int j) const {
        return a[static_cast<size_t>(i) * n + j];
    }
};

/// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
/// form with nonnegative off-diagonal (phases rotated away). If `unitary` is
/// non-null it receives Q with Q^* X Q = T. Throws NotHermitian when the
/// input defect exceeds 1e-12 relative.
TridiagonalModel householder_tridiagonalize(const HermitianMatrix& x,
                                            ComplexMatrix* unitary = nullptr);

/// Implicit Wilkinson-shift QL sweep; eigenvalues ascending. Cap of 50
/// sweeps per eigenvalue, NoConvergence beyond that.
std::vector<double> ql_eigenvalues(const TridiagonalModel& t);

/// Dense path: Householder reduction followed by QL; ascending.
std::vector<double> eigvals(const HermitianMatrix& x);

/// Direct tridiagonal sampler whose spectrum is GUE(m) in law: iid N(0,1)
/// diagonal and off-diagonals chi_{2k}/sqrt(2), k = m-1, m-2, ..., 1 (the
/// norms of the complex Gaussian columns eliminated by Householder steps).
TridiagonalModel sample_tridiagonal_gue(int m, Rng& rng);

/// Chi_k sample: sum of squared normals for k <= 32, gamma sampling above.
double sample_chi(int k, Rng& rng);

/// Union-of-intervals bound from the circle theorem; returns per-row
/// [lo, hi] with radius = sum of the adjacent off-diagonal entries.
std::vector<std::pair<double, double>> gersgorin_intervals(
    const TridiagonalModel& t);

} // namespace tableaux

#endif
