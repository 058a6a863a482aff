#ifndef TABLEAUX_ALPHABET_HPP
#define TABLEAUX_ALPHABET_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "tableaux/errors.hpp"
#include "tableaux/rational.hpp"

namespace tableaux {

/// Letter probabilities together with their block structure: the ordering
/// permutation tau, the K distinct values p^(1) > ... > p^(K), the
/// multiplicities d_k and the offsets m_k = d_1 + ... + d_{k-1}.
///
/// Instantiated with double for sampling work and with Rational for the
/// exact-arithmetic mode.
template <class T>
struct BasicAlphabet {
    std::vector<T> probs;      // original order, normalized
    std::vector<int> tau;      // tau[j] = original index of the j-th largest
    std::vector<T> distinct;   // p^(1) > ... > p^(K)
    std::vector<int> mults;    // d_1 .. d_K
    std::vector<int> offsets;  // m_1 = 0, m_k = sum_{j<k} d_j

    int letters() const { return static_cast<int>(probs.size()); }
    int block_count() const { return static_cast<int>(distinct.size()); }

    /// Probability of the j-th letter in tau-order, 0-based.
    const T& sorted_prob(int j) const { return probs[tau[j]]; }

    /// Block index k (0-based) of the j-th sorted letter.
    int block_of_sorted(int j) const {
        int k = block_count() - 1;
        while (k > 0 && offsets[k] > j) --k;
        return k;
    }
};

using AlphabetDistribution = BasicAlphabet<double>;
using ExactAlphabet = BasicAlphabet<Rational>;

namespace detail {

template <class T>
BasicAlphabet<T> build_sorted_blocks(std::vector<T> probs) {
    BasicAlphabet<T> a;
    a.tau.resize(probs.size());
    std::iota(a.tau.begin(), a.tau.end(), 0);
    // ties broken by original index ascending (stable)
    std::stable_sort(a.tau.begin(), a.tau.end(),
                     [&](int i, int j) { return probs[i] > probs[j]; });
    a.probs = std::move(probs);
    for (int j = 0; j < static_cast<int>(a.tau.size()); ++j) {
        const T& p = a.probs[a.tau[j]];
        if (!a.distinct.empty() && a.distinct.back() == p) {
            ++a.mults.back();
        } else {
            a.offsets.push_back(j);
            a.distinct.push_back(p);
            a.mults.push_back(1);
        }
    }
    return a;
}

} // namespace detail

/// Floating-point construction: entries must be positive and sum to 1 within
/// 1e-9; the vector is then renormalized so the stored sum is exactly 1 up to
/// rounding of the division.
AlphabetDistribution build_block_structure(std::vector<double> probs);

/// Exact construction: entries must be positive rationals summing to 1.
ExactAlphabet build_block_structure(std::vector<Rational> probs);

/// Exact alphabet -> double alphabet with identical block structure.
AlphabetDistribution to_double(const ExactAlphabet& a);

} // namespace tableaux

#endif
