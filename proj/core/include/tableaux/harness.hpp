#ifndef TABLEAUX_HARNESS_HPP
#define TABLEAUX_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tableaux/alphabet.hpp"
#include "tableaux/stats.hpp"

namespace tableaux {

struct ExperimentConfig {
    std::vector<double> probs;
    int n_word = 5000;        // word length N
    int samples = 10000;      // Monte Carlo sample count
    int grid_n = 2000;        // Brownian grid resolution
    double alpha = 5.0;       // Poissonized runs
    std::uint64_t seed = 1;
    std::string experiment;   // limit-shape | spectrum-compare | poissonize |
                              // scaling | exact-checks | brownian-compare
    bool exact_rational = false;

    std::string to_json() const;
    static ExperimentConfig from_json(const std::string& text);
    static ExperimentConfig from_file(const std::string& path);
};

/// One named check with its observed value and pinned threshold.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

struct ComparisonReport {
    std::string experiment;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    // labeled sample sets for CSV emission: rows of (sample_id, coords...)
    std::map<std::string, std::vector<std::vector<double>>> sample_sets;

    bool all_pass() const;
    void add(const std::string& name, double value, double threshold,
             bool pass, const std::string& detail = "");
    /// pass iff value <= threshold
    void add_upper(const std::string& name, double value, double threshold,
                   const std::string& detail = "");
    std::string to_json() const;
    /// one `<label>.csv` per sample set, schema sample_id,coord_1..coord_M
    void write_csvs(const std::string& out_dir) const;
};

ComparisonReport run_limit_shape(const ExperimentConfig& cfg);
ComparisonReport run_spectrum_compare(const ExperimentConfig& cfg);
ComparisonReport run_poissonize(const ExperimentConfig& cfg);
ComparisonReport run_scaling(const ExperimentConfig& cfg);
ComparisonReport run_exact_checks(const ExperimentConfig& cfg);
ComparisonReport run_brownian_compare(const ExperimentConfig& cfg);

/// Dispatch on cfg.experiment.
ComparisonReport run_experiment(const ExperimentConfig& cfg);

} // namespace tableaux

#endif
