#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "tableaux/exhaustive.hpp"
#include "tableaux/pmf.hpp"
#include "tableaux/schur.hpp"

using namespace tableaux;

namespace {

// count standard fillings of a shape by placing 1..n one at a time
long long count_standard_fillings(const Partition& shape) {
    std::vector<int> filled(shape.rows(), 0);  // boxes filled per row
    auto rec = [&](auto&& self, int placed) -> long long {
        if (placed == shape.size()) return 1;
        long long total = 0;
        for (int r = 0; r < shape.rows(); ++r) {
            if (filled[r] >= shape.part(r)) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            total += self(self, placed + 1);
            --filled[r];
        }
        return total;
    };
    return rec(rec, 0);
}

} // namespace

TEST_CASE("syt_count: examples and enumeration oracle") {
    CHECK(syt_count(Partition{{2, 1}}, 2, 3) == 2);
    CHECK(syt_count(Partition{{7}}, 1, 7) == 1);
    CHECK(syt_count(Partition{{1, 1, 1}}, 3, 3) == 1);
    CHECK_THROWS_AS(syt_count(Partition{{1, 1, 1}}, 2, 3), ShapeTooLong);

    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n, n))
            CHECK(syt_count(lam, lam.rows(), n) ==
                  count_standard_fillings(lam));
}

TEST_CASE("schur_ssyt: examples and symmetry") {
    std::vector<double> p{0.7, 0.3};
    CHECK(schur_ssyt(Partition{{1}}, p) == doctest::Approx(1.0));
    CHECK(schur_ssyt(Partition{{2, 1}}, p) ==
          doctest::Approx(0.7 * 0.3).epsilon(1e-12));
    CHECK(schur_ssyt(Partition{{1, 1, 1}}, p) == 0.0);
    CHECK(schur_ssyt(Partition{{2}}, p) == doctest::Approx(0.79));

    // invariance under permuting the variables
    std::vector<double> q{0.2, 0.5, 0.3};
    std::sort(q.begin(), q.end());
    double ref = -1;
    do {
        double v = schur_ssyt(Partition{{3, 2, 1}}, q);
        if (ref < 0) ref = v;
        CHECK(v == doctest::Approx(ref).epsilon(1e-12));
    } while (std::next_permutation(q.begin(), q.end()));
}

TEST_CASE("schur_repeated_det: examples") {
    auto biased = build_block_structure(std::vector<double>{0.7, 0.3});
    CHECK(schur_repeated_det(Partition{{1}}, biased) == doctest::Approx(1.0));
    CHECK(schur_repeated_det(Partition{{2}}, biased) == doctest::Approx(0.79));

    auto half = build_block_structure(std::vector<double>{0.5, 0.5});
    CHECK(schur_repeated_det(Partition{{2, 1}}, half) == doctest::Approx(0.25));
}

TEST_CASE("schur determinant equals tableau enumeration, sizes <= 8") {
    std::vector<std::vector<double>> alphabets = {
        {0.5, 0.5}, {0.7, 0.3}, {0.5, 0.3, 0.2}, {0.4, 0.4, 0.2},
        {1.0 / 3, 1.0 / 3, 1.0 / 3}};
    for (const auto& probs : alphabets) {
        auto dist = build_block_structure(probs);
        for (int n = 1; n <= 8; ++n)
            for (const Partition& lam : partitions_of(n, dist.letters())) {
                double a = schur_ssyt(lam, dist.probs);
                double b = schur_repeated_det(lam, dist);
                CHECK(std::abs(a - b) <= 1e-9 * std::max(1e-12, std::abs(a)));
            }
    }
}

TEST_CASE("schur determinant: exact rational equals double mode") {
    std::vector<Rational> rp{Rational(2, 5), Rational(2, 5), Rational(1, 5)};
    ExactAlphabet ea = build_block_structure(rp);
    AlphabetDistribution da = to_double(ea);
    Partition lam{{4, 2, 1}};
    Rational exact = schur_repeated_det(lam, ea);
    double approx = schur_repeated_det(lam, da);
    CHECK(static_cast<double>(exact) == doctest::Approx(approx).epsilon(1e-12));
    CHECK(static_cast<double>(exact) ==
          doctest::Approx(schur_ssyt(lam, da.probs)).epsilon(1e-12));
}

TEST_CASE("schur determinant rejects near-degenerate separation") {
    AlphabetDistribution d =
        build_block_structure(std::vector<double>{0.5 + 4e-10, 0.5 - 4e-10});
    CHECK_THROWS_AS(schur_repeated_det(Partition{{2, 1}}, d),
                    DegenerateSeparation);
}

TEST_CASE("shape_pmf: examples and exhaustive oracle") {
    auto half = build_block_structure(std::vector<double>{0.5, 0.5});
    Pmf p2 = shape_pmf(half, 2);
    CHECK(p2.at(Partition{{2}}) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(p2.at(Partition{{1, 1}}) == doctest::Approx(0.25).epsilon(1e-12));

    auto one = build_block_structure(std::vector<double>{1.0});
    Pmf p1 = shape_pmf(one, 5);
    CHECK(p1.at(Partition{{5}}) == doctest::Approx(1.0));

    for (auto probs : {std::vector<double>{0.7, 0.3},
                       std::vector<double>{0.5, 0.3, 0.2},
                       std::vector<double>{0.4, 0.4, 0.2}}) {
        auto dist = build_block_structure(probs);
        int n = probs.size() == 2 ? 10 : 8;
        Pmf pmf = shape_pmf(dist, n);
        CHECK(std::abs(pmf.total() - 1.0) <= 1e-10);
        auto brute = exhaustive_shape_pmf(dist, n);
        for (size_t i = 0; i < pmf.support.size(); ++i) {
            auto it = brute.find(pmf.support[i]);
            double b = it == brute.end() ? 0.0 : it->second;
            CHECK(std::abs(pmf.mass[i] - b) <= 1e-10);
        }
    }
}

TEST_CASE("shape_pmf_exact matches rational enumeration") {
    std::vector<Rational> rp{Rational(1, 2), Rational(1, 2)};
    ExactAlphabet ea = build_block_structure(rp);
    auto exact = shape_pmf_exact(ea, 6);
    auto brute = exhaustive_shape_pmf(ea, 6);
    REQUIRE(exact.size() == brute.size());
    Rational total = 0;
    for (auto& [lam, mass] : exact) {
        CHECK(brute.at(lam) == mass);
        total += mass;
    }
    CHECK(total == Rational(1));
}

TEST_CASE("charlier: collapses to Poisson at m = 1") {
    auto one = build_block_structure(std::vector<double>{1.0});
    double alpha = 3.0;
    double w = std::exp(-alpha);
    for (int n = 0; n <= 8; ++n) {
        CHECK(charlier_pmf(Partition{{n}}, alpha, one) ==
              doctest::Approx(w).epsilon(1e-12));
        w *= alpha / (n + 1);
    }
}

TEST_CASE("charlier: empty shape and truncated total") {
    auto half = build_block_structure(std::vector<double>{0.5, 0.5});
    CHECK(charlier_pmf(Partition{}, 2.0, half) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    double alpha = 5.0;
    int n_max = default_poisson_truncation(alpha);
    double total = 0.0;
    for (int n = 0; n <= n_max; ++n)
        for (const Partition& lam : partitions_of(n, 2))
            total += charlier_pmf(lam, alpha, half);
    CHECK(std::abs(total - 1.0) <= 1e-8);
}

TEST_CASE("poissonize: Poisson marginal and forced atoms") {
    auto one = build_block_structure(std::vector<double>{1.0});
    Pmf p = poissonize_pmf(one, 2.0, default_poisson_truncation(2.0));
    CHECK(p.at(Partition{{1}}) ==
          doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-12));
    CHECK(p.at(Partition{{3}}) ==
          doctest::Approx(std::exp(-2.0) * 8.0 / 6.0).epsilon(1e-12));

    auto half = build_block_structure(std::vector<double>{0.5, 0.5});
    Pmf p2 = poissonize_pmf(half, 2.0, default_poisson_truncation(2.0));
    CHECK(p2.at(Partition{{1}}) ==
          doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(poissonize_pmf(half, 50.0, 55), TailNotNegligible);
}

TEST_CASE("poissonization equals the Charlier ensemble atomwise") {
    for (auto probs :
         {std::vector<double>{0.7, 0.3}, std::vector<double>{0.5, 0.3, 0.2}}) {
        auto dist = build_block_structure(probs);
        for (double alpha : {1.0, 5.0}) {
            Pmf p = poissonize_pmf(dist, alpha,
                                   default_poisson_truncation(alpha));
            for (size_t i = 0; i < p.support.size(); ++i)
                CHECK(std::abs(charlier_pmf(p.support[i], alpha, dist) -
                               p.mass[i]) <= 1e-8);
        }
    }
}

TEST_CASE("depoissonization monotonicity") {
    auto half = build_block_structure(std::vector<double>{0.5, 0.5});
    auto rep = depoisson_monotonicity_check(half, 1, 8, {2, 1});
    CHECK(rep.non_increasing);
    CHECK(rep.violations.empty());

    // trivial thresholds
    auto rep1 = depoisson_monotonicity_check(half, 1, 6, {6, 6});
    for (double c : rep1.cumulative) CHECK(c == doctest::Approx(1.0));
    auto rep0 = depoisson_monotonicity_check(half, 1, 6, {0, 0});
    for (double c : rep0.cumulative) CHECK(c == doctest::Approx(0.0));

    std::vector<Rational> rp{Rational(7, 10), Rational(3, 10)};
    ExactAlphabet ea = build_block_structure(rp);
    CHECK(depoisson_monotone_exact(ea, 1, 8, {3, 2}));
}
