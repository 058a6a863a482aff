#include "tableaux/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tableaux/brownian.hpp"
#include "tableaux/errors.hpp"
#include "tableaux/exhaustive.hpp"
#include "tableaux/pmf.hpp"
#include "tableaux/rng.hpp"
#include "tableaux/rsk.hpp"
#include "tableaux/schur.hpp"
#include "tableaux/spectrum.hpp"
#include "tableaux/word.hpp"

namespace tableaux {

using nlohmann::json;

std::string ExperimentConfig::to_json() const {
    json j;
    j["probs"] = probs;
    j["n_word"] = n_word;
    j["samples"] = samples;
    j["grid_n"] = grid_n;
    j["alpha"] = alpha;
    j["seed"] = seed;
    j["experiment"] = experiment;
    j["exact_rational"] = exact_rational;
    return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    json j = json::parse(text);
    ExperimentConfig c;
    c.probs = j.at("probs").get<std::vector<double>>();
    if (j.contains("n_word")) c.n_word = j["n_word"].get<int>();
    if (j.contains("samples")) c.samples = j["samples"].get<int>();
    if (j.contains("grid_n")) c.grid_n = j["grid_n"].get<int>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("experiment")) c.experiment = j["experiment"].get<std::string>();
    if (j.contains("exact_rational"))
        c.exact_rational = j["exact_rational"].get<bool>();
    if (c.samples < 1) throw std::invalid_argument("samples must be >= 1");
    return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

bool ComparisonReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void ComparisonReport::add(const std::string& name, double value,
                           double threshold, bool pass,
                           const std::string& detail) {
    checks.push_back({name, value, threshold, pass, detail});
}

void ComparisonReport::add_upper(const std::string& name, double value,
                                 double threshold, const std::string& detail) {
    add(name, value, threshold, value <= threshold, detail);
}

std::string ComparisonReport::to_json() const {
    json j;
    j["experiment"] = experiment;
    j["seed"] = seed;
    j["all_pass"] = all_pass();
    j["checks"] = json::array();
    json failures = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["name"] = c.name;
        jc["value"] = c.value;
        jc["threshold"] = c.threshold;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(jc);
        if (!c.pass) failures.push_back(c.name);
    }
    j["failures"] = failures;
    return j.dump(2);
}

void ComparisonReport::write_csvs(const std::string& out_dir) const {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    for (const auto& [label, rows] : sample_sets) {
        std::ofstream os(fs::path(out_dir) / (label + ".csv"));
        os.precision(17);
        std::size_t width = rows.empty() ? 0 : rows.front().size();
        os << "sample_id";
        for (std::size_t c = 0; c < width; ++c) os << ",coord_" << (c + 1);
        os << '\n';
        for (std::size_t r = 0; r < rows.size(); ++r) {
            os << (r + 1);
            for (double v : rows[r]) os << ',' << v;
            os << '\n';
        }
    }
}

namespace {

// stream ids for sub-seed derivation
enum : std::uint64_t {
    kWordStream = 1,
    kMatrixStream = 2,
    kGaussStream = 3,
    kGridStream = 4,
    kLengthStream = 5,
};

std::vector<std::vector<double>> scaled_word_shapes(
    const AlphabetDistribution& dist, int n, int samples, std::uint64_t seed,
    bool sqrt_n_scaling) {
    const int m = dist.letters();
    std::vector<std::vector<double>> out(samples, std::vector<double>(m));
    for (int s = 0; s < samples; ++s) {
        Rng rng(derive_seed(seed, kWordStream, s));
        Word w = sample_word(dist, n, rng);
        Partition lam = rsk_shape(w);
        for (int i = 0; i < m; ++i) {
            double center = n * dist.sorted_prob(i);
            double scale = sqrt_n_scaling ? std::sqrt(static_cast<double>(n))
                                          : std::sqrt(center);
            out[s][i] = (lam.part(i) - center) / scale;
        }
    }
    return out;
}

std::vector<double> column(const std::vector<std::vector<double>>& rows,
                           int c) {
    std::vector<double> v(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) v[r] = rows[r][c];
    return v;
}

} // namespace

ComparisonReport run_limit_shape(const ExperimentConfig& cfg) {
    ComparisonReport rep;
    rep.experiment = "limit-shape";
    rep.seed = cfg.seed;
    AlphabetDistribution dist = build_block_structure(cfg.probs);
    const int m = dist.letters();

    auto word_rows =
        scaled_word_shapes(dist, cfg.n_word, cfg.samples, cfg.seed, false);

    // the scaled coordinates resum to (sum lambda_i - N) / ... = 0
    double worst_sum = 0.0;
    for (const auto& row : word_rows) {
        double s = 0.0;
        for (int i = 0; i < m; ++i)
            s += row[i] * std::sqrt(cfg.n_word * dist.sorted_prob(i));
        worst_sum = std::max(worst_sum, std::abs(s));
    }
    rep.add_upper("scaled_coordinate_sum", worst_sum, 1e-6,
                  "sum lambda_i = N identity per word");

    std::vector<std::vector<double>> xi0_rows(cfg.samples);
    for (int s = 0; s < cfg.samples; ++s) {
        Rng rng(derive_seed(cfg.seed, kMatrixStream, s));
        xi0_rows[s] = ordered_block_spectrum(dist, rng).xi0.values;
    }

    for (int i = 0; i < m; ++i) {
        double ks = ks_two_sample(column(word_rows, i), column(xi0_rows, i));
        rep.add_upper("ks_coord_" + std::to_string(i + 1), ks, 0.05,
                      "scaled word shape vs traceless spectrum");
    }

    rep.sample_sets["word_shape_scaled"] = std::move(word_rows);
    rep.sample_sets["traceless_spectrum"] = std::move(xi0_rows);
    return rep;
}

ComparisonReport run_spectrum_compare(const ExperimentConfig& cfg) {
    ComparisonReport rep;
    rep.experiment = "spectrum-compare";
    rep.seed = cfg.seed;
    AlphabetDistribution dist = build_block_structure(cfg.probs);
    const int m = dist.letters();

    std::vector<std::vector<double>> xi_rows(cfg.samples);
    std::vector<std::vector<double>> sum_rows(cfg.samples);
    double worst_shift_gap = 0.0, worst_weighted_sum = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
        Rng rng_a(derive_seed(cfg.seed, kMatrixStream, s));
        OrderedSpectra os = ordered_block_spectrum(dist, rng_a);
        xi_rows[s] = os.xi.values;
        worst_shift_gap =
            std::max(worst_shift_gap, std::abs(os.shift_diag - os.shift_eig));

        // independent draw of xi0 + Z
        Rng rng_b(derive_seed(cfg.seed, kGaussStream, s));
        OrderedSpectra ind = ordered_block_spectrum(dist, rng_b);
        std::vector<double> z = sample_degenerate_gaussian(dist, rng_b);
        double wsum = 0.0;
        sum_rows[s].resize(m);
        for (int i = 0; i < m; ++i) {
            sum_rows[s][i] = ind.xi0.values[i] + z[i];
            wsum += std::sqrt(dist.sorted_prob(i)) * ind.xi0.values[i];
        }
        worst_weighted_sum = std::max(worst_weighted_sum, std::abs(wsum));
    }
    rep.add_upper("shift_formula_gap", worst_shift_gap, 1e-9,
                  "diagonal-sum vs eigenvalue-sum shift");
    rep.add_upper("weighted_spectrum_sum", worst_weighted_sum, 1e-9,
                  "sum sqrt(p_l) xi0_l = 0");

    for (int i = 0; i < m; ++i) {
        double ks = ks_two_sample(column(xi_rows, i), column(sum_rows, i));
        rep.add_upper("ks_coord_" + std::to_string(i + 1), ks, 0.015,
                      "xi vs xi0 + Z");
    }

    // empirical covariance gap of xi vs xi0+Z, reported with a loose band
    double cov_gap = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double ca = 0, cb = 0, mai = 0, maj = 0, mbi = 0, mbj = 0;
            for (int s = 0; s < cfg.samples; ++s) {
                mai += xi_rows[s][i];
                maj += xi_rows[s][j];
                mbi += sum_rows[s][i];
                mbj += sum_rows[s][j];
            }
            mai /= cfg.samples; maj /= cfg.samples;
            mbi /= cfg.samples; mbj /= cfg.samples;
            for (int s = 0; s < cfg.samples; ++s) {
                ca += (xi_rows[s][i] - mai) * (xi_rows[s][j] - maj);
                cb += (sum_rows[s][i] - mbi) * (sum_rows[s][j] - mbj);
            }
            cov_gap = std::max(cov_gap, std::abs(ca - cb) / cfg.samples);
        }
    rep.add_upper("covariance_gap", cov_gap, 0.1, "entrywise MC covariance");

    rep.sample_sets["block_spectrum"] = std::move(xi_rows);
    rep.sample_sets["shifted_plus_gaussian"] = std::move(sum_rows);
    return rep;
}

ComparisonReport run_poissonize(const ExperimentConfig& cfg) {
    ComparisonReport rep;
    rep.experiment = "poissonize";
    rep.seed = cfg.seed;
    AlphabetDistribution dist = build_block_structure(cfg.probs);
    const int m = dist.letters();

    // exact atomwise identity at a desk-scale alpha
    double a_exact = std::min(cfg.alpha, 20.0);
    int n_max = default_poisson_truncation(a_exact);
    Pmf pois = poissonize_pmf(dist, a_exact, n_max);
    double max_gap = 0.0, charlier_total = 0.0;
    for (std::size_t i = 0; i < pois.support.size(); ++i) {
        double c = charlier_pmf(pois.support[i], a_exact, dist);
        max_gap = std::max(max_gap, std::abs(c - pois.mass[i]));
        charlier_total += c;
    }
    rep.add_upper("charlier_atom_gap", max_gap, 1e-8,
                  "poissonized pmf vs Charlier atom, alpha=" +
                      std::to_string(a_exact));
    rep.add_upper("charlier_total_gap", std::abs(charlier_total - 1.0), 1e-8,
                  "Charlier masses sum to 1 under truncation");

    // Monte Carlo limit comparison only makes sense for large alpha
    if (cfg.alpha >= 100.0) {
        std::vector<std::vector<double>> shape_rows(cfg.samples,
                                                    std::vector<double>(m));
        for (int s = 0; s < cfg.samples; ++s) {
            Rng rng(derive_seed(cfg.seed, kWordStream, s));
            int n = static_cast<int>(rng.poisson(cfg.alpha));
            Word w = sample_word(dist, n, rng);
            Partition lam = rsk_shape(w);
            for (int i = 0; i < m; ++i) {
                double center = cfg.alpha * dist.sorted_prob(i);
                shape_rows[s][i] = (lam.part(i) - center) / std::sqrt(center);
            }
        }
        // target is the direct-sum spectrum xi, not the traceless one
        std::vector<std::vector<double>> xi_rows(cfg.samples);
        for (int s = 0; s < cfg.samples; ++s) {
            Rng rng(derive_seed(cfg.seed, kMatrixStream, s));
            xi_rows[s] = ordered_block_spectrum(dist, rng).xi.values;
        }
        for (int i = 0; i < m; ++i) {
            double ks =
                ks_two_sample(column(shape_rows, i), column(xi_rows, i));
            rep.add_upper("ks_coord_" + std::to_string(i + 1), ks, 0.06,
                          "Poissonized scaled shape vs block spectrum");
        }
        rep.sample_sets["poissonized_shape_scaled"] = std::move(shape_rows);
        rep.sample_sets["block_spectrum"] = std::move(xi_rows);
    }
    return rep;
}

ComparisonReport run_scaling(const ExperimentConfig& cfg) {
    ComparisonReport rep;
    rep.experiment = "scaling";
    rep.seed = cfg.seed;

    // top-eigenvalue and semicircle statistics at M = 200
    {
        Rng rng(derive_seed(cfg.seed, kMatrixStream, 0));
        ScalingStats st = scaling_stats(200, 50, rng);
        rep.add("mean_top_scaled", st.mean_top_scaled, 2.05,
                st.mean_top_scaled >= 1.85 && st.mean_top_scaled <= 2.05,
                "mean xi_max/sqrt(M), M=200, band [1.85, 2.05]");
        rep.add_upper("semicircle_ks", st.semicircle_ks, 0.06,
                      "pooled spectrum vs semicircle CDF, M=200");
    }
    {
        Rng rng(derive_seed(cfg.seed, kMatrixStream, 1));
        double ratio = max_chi_sq_ratio(100, 2000, rng);
        double bound = 1.0 + 2.0 * std::sqrt(2.0 * std::log(100.0) / 100.0);
        rep.add_upper("max_chi_sq_ratio", ratio, bound,
                      "E max chi^2_k / M, M=100");
    }

    // stabilization of the scaled longest-increasing-subsequence statistic
    // between uniform alphabets of size 50 and 200. The scaled law at finite
    // N depends on the crossover ratio N/d1^2, so the word length grows with
    // the alphabet to keep that ratio fixed; otherwise the d1 = 200 sample is
    // still far from its N -> infinity limit.
    {
        const int base_n = cfg.n_word;  // word length at d1 = 50
        auto scaled_li = [&](int d, long n, std::uint64_t stream) {
            double np = static_cast<double>(n) / d;
            double center = np + 2.0 * std::sqrt(d * np);
            double scale = std::pow(d, -1.0 / 6.0) * std::sqrt(np);
            std::vector<double> out(cfg.samples);
            for (int s = 0; s < cfg.samples; ++s) {
                Rng rng(derive_seed(cfg.seed, stream, s));
                Word w;
                w.m = d;
                w.letters.resize(n);
                for (long i = 0; i < n; ++i)
                    w.letters[i] = static_cast<int>(rng.below(d)) + 1;
                out[s] = (lis_length(w) - center) / scale;
            }
            return out;
        };
        std::vector<double> a = scaled_li(50, base_n, kWordStream);
        std::vector<double> b =
            scaled_li(200, 16L * base_n, kLengthStream);
        rep.sample_sets["scaled_li_d50"] = {};
        rep.sample_sets["scaled_li_d200"] = {};
        for (double v : a) rep.sample_sets["scaled_li_d50"].push_back({v});
        for (double v : b) rep.sample_sets["scaled_li_d200"].push_back({v});
        rep.add_upper("li_stabilization_ks", ks_two_sample(a, b), 0.1,
                      "scaled LI_N, d1=50 (N=" + std::to_string(base_n) +
                          ") vs d1=200 (N=" + std::to_string(16L * base_n) +
                          "), matched N/d1^2");
    }

    // Gaussian concentration of lambda_1 after sqrt(N) rescaling
    {
        AlphabetDistribution dist = build_block_structure(cfg.probs);
        const int n = 10000, words = 10000;
        std::vector<double> li(words);
        for (int s = 0; s < words; ++s) {
            Rng rng(derive_seed(cfg.seed, kGridStream, s));
            li[s] = lis_length(sample_word(dist, n, rng));
        }
        double mean = 0.0;
        for (double v : li) mean += v;
        mean /= words;
        double sqrt_n = std::sqrt(static_cast<double>(n));
        for (int t = 1; t <= 3; ++t) {
            int hits = 0;
            for (double v : li)
                if (std::abs(v - mean) >= t * sqrt_n) ++hits;
            double tail = static_cast<double>(hits) / words;
            double bound = 2.0 * std::exp(-0.5 * t * t);
            rep.add_upper("concentration_t" + std::to_string(t), tail, bound,
                          "P(|lambda_1 - mean| >= t sqrt(N))");
        }
    }
    return rep;
}

ComparisonReport run_exact_checks(const ExperimentConfig& cfg) {
    ComparisonReport rep;
    rep.experiment = "exact-checks";
    rep.seed = cfg.seed;
    AlphabetDistribution dist = build_block_structure(cfg.probs);
    const int m = dist.letters();

    // atomwise push-forward identity at an exhaustively enumerable length
    int n = cfg.n_word;
    while (std::pow(static_cast<double>(m), n) > 1e6) --n;
    Pmf pmf = shape_pmf(dist, n);
    auto brute = exhaustive_shape_pmf(dist, n);
    double atom_gap = 0.0;
    for (std::size_t i = 0; i < pmf.support.size(); ++i) {
        auto it = brute.find(pmf.support[i]);
        double b = (it == brute.end()) ? 0.0 : it->second;
        atom_gap = std::max(atom_gap, std::abs(pmf.mass[i] - b));
    }
    rep.add_upper("pushforward_atom_gap", atom_gap, 1e-10,
                  "shape pmf vs word enumeration, n=" + std::to_string(n));
    rep.add_upper("pmf_total_gap", std::abs(pmf.total() - 1.0), 1e-10,
                  "pmf sums to 1");

    // determinant Schur formula vs tableau enumeration, all sizes <= 8
    double schur_gap = 0.0;
    for (int size = 1; size <= 8; ++size) {
        for (const Partition& lam : partitions_of(size, m)) {
            double ssyt = schur_ssyt(lam, dist.probs);
            double det = schur_repeated_det(lam, dist);
            double rel = std::abs(det - ssyt) /
                         std::max(1e-300, std::abs(ssyt));
            if (ssyt == 0.0) rel = std::abs(det);
            schur_gap = std::max(schur_gap, rel);
        }
    }
    rep.add_upper("schur_identity_gap", schur_gap, 1e-9,
                  "repeated-variable determinant vs tableau sum");

    // cumulative shape probability is non-increasing in word length
    bool monotone;
    if (cfg.exact_rational) {
        std::vector<Rational> rp;
        for (double p : cfg.probs)
            rp.emplace_back(static_cast<long>(std::llround(p * 1000000)),
                            1000000L);
        ExactAlphabet ea = build_block_structure(rp);
        monotone = depoisson_monotone_exact(ea, 1, 8, {2, 1});
    } else {
        auto dep = depoisson_monotonicity_check(dist, 1, 8, {2, 1});
        monotone = dep.non_increasing;
        rep.add("depoisson_fitted_constant", dep.fitted_constant, 0.0, true,
                "reported only, not asserted");
    }
    rep.add("depoisson_monotone", monotone ? 1.0 : 0.0, 1.0, monotone,
            "P(lambda <= t) non-increasing in N, N=1..8");
    return rep;
}

ComparisonReport run_brownian_compare(const ExperimentConfig& cfg) {
    ComparisonReport rep;
    rep.experiment = "brownian-compare";
    rep.seed = cfg.seed;
    AlphabetDistribution dist = build_block_structure(cfg.probs);
    const int m = dist.letters();

    // DP against explicit subdivision enumeration on small grids
    double dp_gap = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(derive_seed(cfg.seed, kGridStream, trial));
        IncrementGrid g = sample_increment_grid(dist, 8 + trial % 5, rng);
        for (int l = 1; l <= m; ++l) {
            try {
                dp_gap = std::max(dp_gap,
                                  std::abs(lhat(g, l) - lhat_bruteforce(g, l)));
            } catch (const BruteForceTooLarge&) {
            }
        }
    }
    rep.add_upper("dp_vs_bruteforce", dp_gap, 1e-12,
                  "last-passage DP vs subdivision enumeration");

    // functional samples vs the traceless spectrum
    std::vector<std::vector<double>> lhat_rows(cfg.samples);
    for (int s = 0; s < cfg.samples; ++s) {
        Rng rng(derive_seed(cfg.seed, kGridStream, 1000 + s));
        lhat_rows[s] = lhat_shape_sample(dist, cfg.grid_n, rng);
    }
    // the functional differences match sqrt(p_i) * xi0_i in law (the
    // sqrt(N)-normalized form of the limit-shape identity)
    std::vector<std::vector<double>> xi0_rows(cfg.samples);
    for (int s = 0; s < cfg.samples; ++s) {
        Rng rng(derive_seed(cfg.seed, kMatrixStream, s));
        xi0_rows[s] = ordered_block_spectrum(dist, rng).xi0.values;
        for (int i = 0; i < m; ++i)
            xi0_rows[s][i] *= std::sqrt(dist.sorted_prob(i));
    }
    double top_ks = ks_two_sample(column(lhat_rows, 0), column(xi0_rows, 0));
    rep.add_upper("ks_top_vs_spectrum", top_ks, 0.05,
                  "lhat first coordinate vs scaled top traceless eigenvalue");

    // word-side fluctuations under sqrt(N) scaling against the functionals
    auto word_rows =
        scaled_word_shapes(dist, cfg.n_word, cfg.samples, cfg.seed, true);
    // functional coordinates carry the same sqrt(N) normalization already
    for (int i = 0; i < m; ++i) {
        double ks = ks_two_sample(column(word_rows, i), column(lhat_rows, i));
        rep.add_upper("ks_word_coord_" + std::to_string(i + 1), ks, 0.05,
                      "sqrt(N)-scaled shape vs functional differences");
    }

    rep.sample_sets["lhat_samples"] = std::move(lhat_rows);
    rep.sample_sets["traceless_spectrum_scaled"] = std::move(xi0_rows);
    rep.sample_sets["word_shape_sqrtn"] = std::move(word_rows);
    return rep;
}

ComparisonReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.experiment == "limit-shape") return run_limit_shape(cfg);
    if (cfg.experiment == "spectrum-compare") return run_spectrum_compare(cfg);
    if (cfg.experiment == "poissonize") return run_poissonize(cfg);
    if (cfg.experiment == "scaling") return run_scaling(cfg);
    if (cfg.experiment == "exact-checks") return run_exact_checks(cfg);
    if (cfg.experiment == "brownian-compare") return run_brownian_compare(cfg);
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);
}

} // namespace tableaux
