#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tableaux/brownian.hpp"
#include "tableaux/stats.hpp"

using namespace tableaux;

TEST_CASE("single-letter alphabet: increments vanish identically") {
    auto one = build_block_structure(std::vector<double>{1.0});
    Rng rng(3);
    IncrementGrid g = sample_increment_grid(one, 64, rng);
    for (int c = 0; c < g.n; ++c) CHECK(g.at(0, c) == 0.0);
    CHECK(lhat(g, 1) == 0.0);
}

TEST_CASE("increment columns have covariance Sigma / n") {
    auto dist = build_block_structure(std::vector<double>{0.5, 0.3, 0.2});
    Rng rng(13);
    const int n = 4;
    const int trials = 25000;  // 1e5 columns across the grids
    std::vector<std::vector<double>> cov(3, std::vector<double>(3, 0.0));
    long long cols = 0;
    for (int t = 0; t < trials; ++t) {
        IncrementGrid g = sample_increment_grid(dist, n, rng);
        for (int c = 0; c < n; ++c, ++cols)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) cov[i][j] += g.at(i, c) * g.at(j, c);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double pi = dist.sorted_prob(i), pj = dist.sorted_prob(j);
            double want = ((i == j ? pi : 0.0) - pi * pj) / n;
            // entries are O(1/n); 3 sigma at 1e5 columns
            CHECK(std::abs(cov[i][j] / cols - want) < 3.0 * 1.0 / n / std::sqrt(cols));
        }
}

TEST_CASE("DP equals brute force exactly on small grids") {
    for (auto probs : {std::vector<double>{0.5, 0.5},
                       std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3},
                       std::vector<double>{0.4, 0.4, 0.2},
                       std::vector<double>{0.5, 0.3, 0.2}}) {
        auto dist = build_block_structure(probs);
        Rng rng(100 + static_cast<uint64_t>(probs.size()));
        for (int trial = 0; trial < 8; ++trial) {
            int n = 8 + trial % 5;
            IncrementGrid g = sample_increment_grid(dist, n, rng);
            for (int l = 1; l <= dist.letters(); ++l)
                CHECK(std::abs(lhat(g, l) - lhat_bruteforce(g, l)) <= 1e-12);
        }
    }
}

TEST_CASE("lhat bounds: flat-family lower bound, full cover at l = M") {
    auto dist = build_block_structure(
        std::vector<double>{0.25, 0.25, 0.25, 0.25});
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        IncrementGrid g = sample_increment_grid(dist, 50, rng);
        // flat paths covering rows 1..l entirely are one admissible family
        double rows = 0.0;
        for (int l = 1; l <= 4; ++l) {
            for (int c = 0; c < g.n; ++c) rows += g.at(l - 1, c);
            CHECK(lhat(g, l) >= rows - 1e-12);
        }
        // increments sum to zero across rows, so covering everything gives 0
        CHECK(std::abs(lhat(g, 4)) <= 1e-12);
    }
}

TEST_CASE("shape sample telescopes back to lhat(grid, M)") {
    auto dist = build_block_structure(std::vector<double>{0.5, 0.3, 0.2});
    Rng rng(23);
    IncrementGrid g = sample_increment_grid(dist, 60, rng);
    double sum = 0.0;
    for (int l = 1; l <= 3; ++l)
        sum += lhat(g, l) - (l == 1 ? 0.0 : lhat(g, l - 1));
    CHECK(sum == doctest::Approx(lhat(g, 3)).epsilon(1e-12));

    std::vector<double> diffs = lhat_shape_sample(dist, 60, rng);
    REQUIRE(diffs.size() == 3);
    CHECK(std::isfinite(diffs[0] + diffs[1] + diffs[2]));
}

TEST_CASE("singleton top block: lhat(grid, 1) is the plain first-row sum") {
    auto dist = build_block_structure(std::vector<double>{0.7, 0.3});
    Rng rng(29);
    IncrementGrid g = sample_increment_grid(dist, 40, rng);
    double row = 0.0;
    for (int c = 0; c < g.n; ++c) row += g.at(0, c);
    CHECK(lhat(g, 1) == doctest::Approx(row).epsilon(1e-12));
}

TEST_CASE("brute force guard") {
    auto dist = build_block_structure(
        std::vector<double>{0.25, 0.25, 0.25, 0.25});
    Rng rng(31);
    IncrementGrid g = sample_increment_grid(dist, 100, rng);
    CHECK_THROWS_AS(lhat_bruteforce(g, 2), BruteForceTooLarge);
}

TEST_CASE("grid refinement: top functional stabilizes in n") {
    auto dist = build_block_structure(std::vector<double>{0.5, 0.5});
    Rng rng(37);
    const int samples = 10000;
    std::vector<double> coarse, fine;
    for (int s = 0; s < samples; ++s) {
        IncrementGrid g5 = sample_increment_grid(dist, 500, rng);
        coarse.push_back(lhat(g5, 1));
        IncrementGrid g10 = sample_increment_grid(dist, 1000, rng);
        fine.push_back(lhat(g10, 1));
    }
    CHECK(ks_two_sample(coarse, fine) <= 0.03);
}
