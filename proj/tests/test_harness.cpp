#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tableaux/harness.hpp"
#include "tableaux/rng.hpp"
#include "tableaux/stats.hpp"

using namespace tableaux;
namespace fs = std::filesystem;

TEST_CASE("ks_two_sample: closed-form examples") {
    std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    CHECK(ks_two_sample(a, a) == 0.0);

    std::vector<double> lo{0.0, 0.0, 0.0, 0.0};
    std::vector<double> hi{1.0, 1.0, 1.0, 1.0};
    CHECK(ks_two_sample(lo, hi) == doctest::Approx(1.0));

    CHECK_THROWS_AS(ks_two_sample({1.0}, a), EmptySample);

    Rng rng(9);
    std::vector<double> x, y;
    for (int i = 0; i < 10000; ++i) {
        x.push_back(rng.gaussian());
        y.push_back(rng.gaussian());
    }
    CHECK(ks_two_sample(x, y) <= 0.03);
    CHECK(ks_one_sample(x, normal_cdf) <= 0.02);
}

TEST_CASE("semicircle_cdf endpoints and symmetry") {
    CHECK(semicircle_cdf(-2.0) == doctest::Approx(0.0));
    CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5));
    CHECK(semicircle_cdf(2.0) == doctest::Approx(1.0));
    CHECK(semicircle_cdf(-3.0) == 0.0);
    CHECK(semicircle_cdf(3.0) == 1.0);
    CHECK(semicircle_cdf(0.7) + semicircle_cdf(-0.7) == doctest::Approx(1.0));
    // point mass at 0 vs the semicircle: sup gap is F(0) = 1/2
    std::vector<double> zeros(100, 0.0);
    CHECK(ks_one_sample(zeros, semicircle_cdf) == doctest::Approx(0.5));
}

TEST_CASE("config JSON round trip and validation") {
    ExperimentConfig cfg;
    cfg.probs = {0.5, 0.3, 0.2};
    cfg.n_word = 123;
    cfg.samples = 456;
    cfg.grid_n = 78;
    cfg.alpha = 2.5;
    cfg.seed = 987654321;
    cfg.experiment = "limit-shape";
    cfg.exact_rational = true;

    ExperimentConfig back = ExperimentConfig::from_json(cfg.to_json());
    CHECK(back.probs == cfg.probs);
    CHECK(back.n_word == cfg.n_word);
    CHECK(back.samples == cfg.samples);
    CHECK(back.grid_n == cfg.grid_n);
    CHECK(back.alpha == cfg.alpha);
    CHECK(back.seed == cfg.seed);
    CHECK(back.experiment == cfg.experiment);
    CHECK(back.exact_rational == cfg.exact_rational);

    CHECK_THROWS(ExperimentConfig::from_json("{\"samples\": 0}"));
}

TEST_CASE("run_experiment rejects unknown experiment names") {
    ExperimentConfig cfg;
    cfg.probs = {0.5, 0.5};
    cfg.experiment = "no-such-thing";
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("reports are bit-reproducible for a fixed config") {
    ExperimentConfig cfg;
    cfg.probs = {0.5, 0.5};
    cfg.experiment = "limit-shape";
    cfg.n_word = 200;
    cfg.samples = 300;
    cfg.seed = 42;

    ComparisonReport r1 = run_experiment(cfg);
    ComparisonReport r2 = run_experiment(cfg);
    CHECK(r1.to_json() == r2.to_json());

    fs::path d1 = fs::temp_directory_path() / "tableaux_rep_a";
    fs::path d2 = fs::temp_directory_path() / "tableaux_rep_b";
    fs::create_directories(d1);
    fs::create_directories(d2);
    r1.write_csvs(d1.string());
    r2.write_csvs(d2.string());
    for (auto& entry : fs::directory_iterator(d1)) {
        std::ifstream f1(entry.path());
        std::ifstream f2(d2 / entry.path().filename());
        REQUIRE(f2.good());
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        CHECK(s1.str() == s2.str());
        CHECK(!s1.str().empty());
    }
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("report JSON carries a failure list, exit semantics") {
    ComparisonReport rep;
    rep.experiment = "demo";
    rep.seed = 7;
    rep.add_upper("good_check", 0.1, 0.5);
    rep.add_upper("bad_check", 0.9, 0.5);
    CHECK(!rep.all_pass());
    std::string js = rep.to_json();
    CHECK(js.find("\"failures\"") != std::string::npos);
    CHECK(js.find("bad_check") != std::string::npos);
}

TEST_CASE("small-scale smoke of each experiment driver") {
    ExperimentConfig cfg;
    cfg.probs = {0.5, 0.5};
    cfg.seed = 6;

    cfg.experiment = "exact-checks";
    cfg.n_word = 8;
    ComparisonReport exact = run_exact_checks(cfg);
    CHECK(exact.all_pass());

    cfg.experiment = "poissonize";
    cfg.alpha = 3.0;
    ComparisonReport poi = run_poissonize(cfg);
    CHECK(poi.all_pass());
}
