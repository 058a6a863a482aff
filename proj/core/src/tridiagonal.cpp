#include "tableaux/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "tableaux/errors.hpp"

namespace tableaux {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

} // namespace

TridiagonalModel householder_tridiagonalize(const HermitianMatrix& x,
                                            ComplexMatrix* unitary) {
    const int n = x.n;
    const double scale_ref = std::max(1.0, x.frobenius_norm());
    if (x.hermiticity_defect() > 1e-12 * scale_ref)
        throw NotHermitian("matrix is not Hermitian within 1e-12");

    std::vector<Complex> a(x.a);
    auto at = [&](int i, int j) -> Complex& {
        return a[static_cast<size_t>(i) * n + j];
    };

    if (unitary) {
        *unitary = ComplexMatrix(n);
        for (int i = 0; i < n; ++i) unitary->at(i, i) = Complex(1.0, 0.0);
    }

    std::vector<Complex> w(n), u(n), q(n);

    for (int k = 0; k + 2 < n; ++k) {
        // Column below the diagonal.
        double col_norm2 = 0.0;
        for (int i = k + 1; i < n; ++i) col_norm2 += std::norm(at(i, k));
        double col_norm = std::sqrt(col_norm2);
        if (col_norm == 0.0) continue;

        Complex alpha = at(k + 1, k);
        Complex phase = (std::abs(alpha) > 0.0)
                            ? alpha / std::abs(alpha)
                            : Complex(1.0, 0.0);

        // v = x_col + phase * ||x_col|| e_1, normalized into w.
        double vnorm2 = 2.0 * (col_norm2 + std::abs(alpha) * col_norm);
        double inv = 1.0 / std::sqrt(vnorm2);
        for (int i = k + 1; i < n; ++i) w[i] = at(i, k) * inv;
        w[k + 1] += phase * col_norm * inv;

        // Trailing block update B <- B - 2 w q^* - 2 q w^*, q = Bw - (w^*Bw) w.
        for (int i = k + 1; i < n; ++i) {
            Complex s(0.0, 0.0);
            for (int j = k + 1; j < n; ++j) s += at(i, j) * w[j];
            u[i] = s;
        }
        Complex kappa(0.0, 0.0);
        for (int i = k + 1; i < n; ++i) kappa += std::conj(w[i]) * u[i];
        for (int i = k + 1; i < n; ++i) q[i] = u[i] - kappa * w[i];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) -= 2.0 * (w[i] * std::conj(q[j]) +
                                   q[i] * std::conj(w[j]));

        Complex e = -phase * col_norm;
        at(k + 1, k) = e;
        at(k, k + 1) = std::conj(e);
        for (int i = k + 2; i < n; ++i) {
            at(i, k) = Complex(0.0, 0.0);
            at(k, i) = Complex(0.0, 0.0);
        }

        if (unitary) {
            // Q <- Q (I - 2 w w^*), columns k+1..n-1 only.
            for (int r = 0; r < n; ++r) {
                Complex s(0.0, 0.0);
                for (int j = k + 1; j < n; ++j)
                    s += unitary->at(r, j) * w[j];
                for (int j = k + 1; j < n; ++j)
                    unitary->at(r, j) -= 2.0 * s * std::conj(w[j]);
            }
        }
    }

    // Rotate residual sub-diagonal phases onto the diagonal of Q.
    TridiagonalModel t;
    t.diag.resize(n);
    t.off.assign(n > 1 ? n - 1 : 0, 0.0);
    Complex d_prev(1.0, 0.0);
    std::vector<Complex> d(n);
    if (n > 0) d[0] = d_prev;
    for (int k = 0; k < n; ++k) t.diag[k] = at(k, k).real();
    for (int k = 0; k + 1 < n; ++k) {
        Complex e = at(k + 1, k);
        double mag = std::abs(e);
        t.off[k] = mag;
        d[k + 1] = (mag > 0.0) ? e * d[k] / mag : d[k];
    }
    if (unitary) {
        for (int r = 0; r < n; ++r)
            for (int j = 0; j < n; ++j) unitary->at(r, j) *= d[j];
    }
    return t;
}

std::vector<double> ql_eigenvalues(const TridiagonalModel& t) {
    const int n = t.dim();
    std::vector<double> d = t.diag;
    std::vector<double> e(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = t.off[i];

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m + 1 < n; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (++iter > 50)
                    throw NoConvergence(
                        "QL sweep exceeded 50 iterations for one eigenvalue");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> eigvals(const HermitianMatrix& x) {
    return ql_eigenvalues(householder_tridiagonalize(x));
}

double sample_chi(int k, Rng& rng) {
    if (k <= 0) throw std::invalid_argument("chi degrees must be positive");
    if (k <= 32) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) {
            double g = rng.gaussian();
            s += g * g;
        }
        return std::sqrt(s);
    }
    return std::sqrt(rng.gamma(0.5 * k, 2.0));
}

TridiagonalModel sample_tridiagonal_gue(int m, Rng& rng) {
    if (m <= 0) throw std::invalid_argument("dimension must be positive");
    TridiagonalModel t;
    t.diag.resize(m);
    t.off.assign(m > 1 ? m - 1 : 0, 0.0);
    for (int i = 0; i < m; ++i) t.diag[i] = rng.gaussian();
    // off-diagonal j is the norm of a complex Gaussian (m-1-j)-vector with
    // unit-variance entries: chi with 2(m-1-j) degrees of freedom over sqrt(2)
    for (int j = 0; j + 1 < m; ++j)
        t.off[j] = sample_chi(2 * (m - 1 - j), rng) / std::sqrt(2.0);
    return t;
}

std::vector<std::pair<double, double>> gersgorin_intervals(
    const TridiagonalModel& t) {
    const int n = t.dim();
    std::vector<std::pair<double, double>> out(n);
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.off[i - 1]);
        if (i + 1 < n) r += std::abs(t.off[i]);
        out[i] = {t.diag[i] - r, t.diag[i] + r};
    }
    return out;
}

} // namespace tableaux
