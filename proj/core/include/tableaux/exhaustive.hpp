#ifndef TABLEAUX_EXHAUSTIVE_HPP
#define TABLEAUX_EXHAUSTIVE_HPP

#include <cmath>
#include <map>

#include "tableaux/alphabet.hpp"
#include "tableaux/errors.hpp"
#include "tableaux/partition.hpp"
#include "tableaux/rsk.hpp"

namespace tableaux {

namespace detail {

/// Kahan-compensated accumulator; the Rational specialization is exact.
template <class T>
struct Accumulator {
    T sum{0};
    void add(const T& x) { sum += x; }
    T value() const { return sum; }
};

template <>
struct Accumulator<double> {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace detail

/// Brute-force push-forward measure: iterates all m^n words, applies RSK and
/// accumulates word probabilities per shape. Guard: m^n <= 10^7 (10^5 in
/// exact-rational mode).
template <class T>
std::map<Partition, T> exhaustive_shape_pmf(const BasicAlphabet<T>& dist, int n) {
    const int m = dist.letters();
    const double words = std::pow(static_cast<double>(m), n);
    const double guard = std::is_same_v<T, double> ? 1e7 : 1e5;
    if (words > guard)
        throw InstanceTooLarge("exhaustive_shape_pmf: m^n exceeds the guard");

    std::map<Partition, detail::Accumulator<T>> acc;
    Word w;
    w.m = m;
    w.letters.assign(n, 1);
    while (true) {
        T p{1};
        for (int c : w.letters) p *= dist.probs[c - 1];
        acc[rsk_shape(w)].add(p);
        // odometer over {1..m}^n
        int i = n - 1;
        while (i >= 0 && w.letters[i] == m) w.letters[i--] = 1;
        if (i < 0) break;
        ++w.letters[i];
    }
    std::map<Partition, T> out;
    for (auto& [shape, a] : acc) out.emplace(shape, a.value());
    return out;
}

} // namespace tableaux

#endif
