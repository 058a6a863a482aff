#ifndef TABLEAUX_RNG_HPP
#define TABLEAUX_RNG_HPP

#include <cstdint>
#include <random>

namespace tableaux {

/// SplitMix64 finalizer; used to whiten seeds and derive substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic substream seed from (master seed, stream id, item index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
    return splitmix64(splitmix64(master ^ splitmix64(stream)) ^ index);
}

/// Seeded random stream. One instance per thread / per sample; never shared.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    double uniform() { return unif_(eng_); }
    double gaussian() { return normal_(eng_); }

    double gamma(double shape, double scale) {
        std::gamma_distribution<double> g(shape, scale);
        return g(eng_);
    }

    long poisson(double mean) {
        std::poisson_distribution<long> p(mean);
        return p(eng_);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(eng_);
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace tableaux

#endif
