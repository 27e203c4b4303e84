#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypercast {

enum class Scenario {
    lattice_mincut,
    disk_convergence,
    relcost_sweep,
    rlnc_validate,
    chernoff_check,
};

std::string_view scenario_name(Scenario scenario);

// Parsed "key = value" experiment description. Every field except scenario
// has a default; see the CLI --help text for the key list.
struct ExperimentConfig {
    Scenario scenario = Scenario::lattice_mincut;
    std::vector<double> L = {10.0};
    double rho = 1.0;
    double W = 2.0;
    double theta = 0.5;
    double K = 0.0;                    // 0: default prefactor (pi)
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    int generation_size = 16;          // G
    int max_rounds = 64;
    int dest_sample = 0;               // 0: scan every destination
    double r = 0.0;                    // 0: auto, min(L^(-theta/8), rho/4, (W-rho)/2)
    double delta = 0.0;                // 0: auto, L^(-theta/8)
    bool trace_ranks = false;
    std::string output_path = "out";
    std::vector<std::string> warnings;
};

// Parse failure; the message names the offending line when one exists.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

ExperimentConfig parse_config(const std::string& text);

// Density prefactor used when K is left at 0: makes the default density
// mu = L^theta / rho^2, which keeps small samples connected.
double default_density_prefactor();

// Node count for a random-disk row: round(K * L^theta * L^2 / (pi rho^2)).
int disk_node_count(double L, double theta, double K, double rho);

// Effective embedding cell width / tail slack for a row (resolves the autos).
double effective_r(const ExperimentConfig& config, double L);
double effective_delta(const ExperimentConfig& config, double L);

struct RunOptions {
    std::string out_override;                             // --out
    int jobs = 1;                                         // --jobs
    int dest_sample_override = -1;                        // --sample-dest, -1: none
    std::optional<std::vector<std::uint64_t>> seed_override;  // HYPERCAST_SEED
};

struct RunResult {
    std::string out_dir;
    std::vector<std::string> files;     // everything written, manifest included
    std::vector<std::string> warnings;
};

// Executes the scenario and writes <out>/<scenario>.csv plus
// <out>/manifest.json. Identical config + options (ignoring jobs and the
// output location) produce byte-identical files.
RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace hypercast
