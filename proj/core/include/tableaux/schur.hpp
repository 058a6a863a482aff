#ifndef TABLEAUX_SCHUR_HPP
#define TABLEAUX_SCHUR_HPP

#include <algorithm>
#include <numeric>
#include <type_traits>
#include <vector>

#include "tableaux/alphabet.hpp"
#include "tableaux/errors.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/rational.hpp"

namespace tableaux {

/// Number of standard Young tableaux of shape lambda with at most m rows and
/// entries {1..n}, n = |lambda|:
///   f = n! * prod_{i<j} (h_i - h_j) / prod_j h_j!,  h_i = lambda_i + m - i.
/// Exact big-integer arithmetic.
BigInt syt_count(const Partition& shape, int m, int n);

/// Combinatorial Schur oracle: sum over all semi-standard tableaux of shape
/// lambda with entries in {1..m} of the product of letter probabilities.
/// Enumeration-guarded to |lambda| <= 12, m <= 4.
template <class T>
T schur_ssyt(const Partition& shape, const std::vector<T>& probs) {
    const int m = static_cast<int>(probs.size());
    if (shape.size() > 12 || m > 4)
        throw InstanceTooLarge("schur_ssyt enumeration guarded to size <= 12, m <= 4");
    if (shape.rows() > m) return T{0};

    std::vector<std::pair<int, int>> cells;  // (row, col), row-major
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c) cells.emplace_back(r, c);

    std::vector<std::vector<int>> grid(shape.rows(),
                                       std::vector<int>(shape.part(0), 0));
    T total{0};
    auto rec = [&](auto&& self, size_t idx, T weight) -> void {
        if (idx == cells.size()) {
            total += weight;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);            // rows weakly increase
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);        // columns strictly increase
        for (int v = lo; v <= m; ++v) {
            grid[r][c] = v;
            self(self, idx + 1, weight * probs[v - 1]);
        }
        grid[r][c] = 0;
    };
    rec(rec, 0, T{1});
    return total;
}

/// Repeated-variable determinant form of the Schur function, evaluated at the
/// tau-sorted probabilities of the alphabet:
///
///   s_lambda(p) = sum_{sigma in S_M} (-1)^sigma
///                   prod_i p^(k(i)) ^ (h_sigma(i) - r_i) * h_sigma(i) ^ r_i
///                 / [ prod_k 0!1!...(d_k-1)!
///                     * prod_{k<l} (p^(k) - p^(l))^(d_k d_l) ],
///
/// where r_i = m_k + d_k - i for the block k containing the i-th sorted
/// letter and h_i = lambda_i + M - i. Permutations enumerated for M <= 8; in
/// floating-point mode distinct probabilities must be separated by > 1e-9.
template <class T>
T schur_repeated_det(const Partition& shape, const BasicAlphabet<T>& dist) {
    const int m = dist.letters();
    if (m > 8)
        throw InstanceTooLarge("schur_repeated_det enumerates S_M; needs M <= 8");
    if (shape.rows() > m) return T{0};
    if constexpr (std::is_same_v<T, double>) {
        for (int k = 0; k + 1 < dist.block_count(); ++k)
            if (dist.distinct[k] - dist.distinct[k + 1] <= 1e-9)
                throw DegenerateSeparation(
                    "distinct probabilities closer than 1e-9; merge the blocks");
    }

    std::vector<long> h(m);
    for (int i = 0; i < m; ++i) h[i] = shape.part(i) + m - (i + 1);
    std::vector<long> hr(m);  // r_i = m_k + d_k - i (1-based i)
    for (int i = 0; i < m; ++i) {
        const int k = dist.block_of_sorted(i);
        hr[i] = dist.offsets[k] + dist.mults[k] - (i + 1);
    }

    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    T num{0};
    do {
        int inv = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (sigma[a] > sigma[b]) ++inv;
        T term = (inv % 2 == 0) ? T(1) : T(-1);
        bool zero = false;
        for (int i = 0; i < m && !zero; ++i) {
            const long r = hr[i];
            const long hs = h[sigma[i]];
            if (hs == 0 && r > 0) {
                zero = true;  // h^r vanishes
                break;
            }
            const T& pk = dist.distinct[dist.block_of_sorted(i)];
            term *= ipow(pk, hs - r) * ipow(T(hs), r);
        }
        if (!zero) num += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    T den{1};
    // prod_{r=0}^{d-1} r! = prod_{r=2}^{d-1} r^(d-r)
    for (int d : dist.mults)
        for (int r = 2; r < d; ++r) den *= ipow(T(r), d - r);
    for (int k = 0; k < dist.block_count(); ++k)
        for (int l = k + 1; l < dist.block_count(); ++l)
            den *= ipow(T(dist.distinct[k] - dist.distinct[l]),
                        static_cast<long>(dist.mults[k]) * dist.mults[l]);
    return num / den;
}

} // namespace tableaux

#endif
