#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypercast/experiment.hpp"
#include "hypercast/mincut.hpp"
#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"
#include "hypercast/rng.hpp"
#include "hypercast/version.hpp"

namespace {

constexpr const char* kConfigHelp = R"(Config file: one "key = value" per line, '#' starts a comment.
Keys and defaults:
  scenario      lattice-mincut | disk-convergence | relcost-sweep |
                rlnc-validate | chernoff-check            (required)
  L             comma list of square sizes                (default 10)
  rho           radio range                               (default 1)
  W             border width, must exceed rho             (default 2)
  theta         density exponent                          (default 0.5)
  K             density prefactor, 0 = default pi         (default 0)
  seeds         comma list of RNG seeds                   (default 1..10)
  G             generation size                           (default 16)
  maxRounds     forwarding round budget                   (default 64)
  destSampling  'all' or destination sample count         (default all)
  r             embedding cell width, 0 = auto            (default 0)
  delta         occupancy tail slack, 0 = auto            (default 0)
  traceRanks    write per-round rank traces               (default false)
  outputPath    output directory                          (default out)

Disk scenarios place round(K * L^theta * L^2 / (pi rho^2)) nodes, so the
default K = pi gives density L^theta / rho^2. Auto r resolves to
min(L^(-theta/8), rho/4, (W-rho)/2); auto delta to L^(-theta/8).

HYPERCAST_SEED (comma list) overrides the config's seeds.)";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        seeds.push_back(std::stoull(item, &used));
        if (used != item.size()) throw std::runtime_error("bad seed '" + item + "'");
    }
    if (seeds.empty()) throw std::runtime_error("HYPERCAST_SEED lists no seeds");
    return seeds;
}

nlohmann::ordered_json witness_json(const hypercast::MinCut& cut, bool estimate) {
    nlohmann::ordered_json doc;
    doc["value"] = cut.value;
    doc["S"] = cut.witness.S;
    doc["T"] = cut.witness.T;
    doc["estimate"] = estimate;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercast: broadcast min-cut analysis for wireless hypergraph networks"};
    app.set_version_flag("--version", std::string(hypercast::kVersion));
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run an experiment described by a config file");
    run->footer(kConfigHelp);
    std::string config_path;
    std::string out_dir;
    int jobs = 1;
    int sample_dest = -1;
    run->add_option("config", config_path, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "output directory (overrides outputPath)");
    run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    run->add_option("--sample-dest", sample_dest,
                    "scan only this many sampled destinations per min-cut")
        ->check(CLI::PositiveNumber);

    // gen-lattice
    auto* gen_lattice = app.add_subcommand("gen-lattice", "Emit a lattice network as JSON");
    int lat_l = 10;
    double lat_rho = 1.0, lat_w = 2.0;
    int lat_source = -1;
    std::string lat_out;
    gen_lattice->add_option("--L", lat_l, "side length (nodes per axis)")->required();
    gen_lattice->add_option("--rho", lat_rho, "radio range")->required();
    gen_lattice->add_option("--W", lat_w, "border width")->required();
    gen_lattice->add_option("--source", lat_source, "source node id (default: center)");
    gen_lattice->add_option("--out", lat_out, "output file (default: stdout)");

    // gen-disk
    auto* gen_disk = app.add_subcommand("gen-disk", "Emit a random disk network as JSON");
    int disk_n = 100;
    double disk_l = 10.0, disk_rho = 1.0, disk_w = 2.0;
    std::uint64_t disk_seed = 1;
    int disk_source = -1;
    std::string disk_out;
    gen_disk->add_option("--N", disk_n, "node count")->required();
    gen_disk->add_option("--L", disk_l, "square side")->required();
    gen_disk->add_option("--rho", disk_rho, "radio range")->required();
    gen_disk->add_option("--W", disk_w, "border width")->required();
    gen_disk->add_option("--seed", disk_seed, "placement seed");
    gen_disk->add_option("--source", disk_source, "source node id (default: nearest center)");
    gen_disk->add_option("--out", disk_out, "output file (default: stdout)");

    // mincut
    auto* mincut = app.add_subcommand("mincut", "Broadcast min-cut of a stored network");
    std::string network_path;
    int mc_dest = -1;
    int mc_sample = -1;
    std::uint64_t mc_seed = 1;
    bool mc_json = false;
    mincut->add_option("network", network_path, "network JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    mincut->add_option("--t", mc_dest, "single destination id (default: scan all)");
    mincut->add_option("--sample-dest", mc_sample, "scan only this many sampled destinations")
        ->check(CLI::PositiveNumber);
    mincut->add_option("--seed", mc_seed, "seed for destination sampling");
    mincut->add_flag("--json", mc_json, "print the witness as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const auto config = hypercast::parse_config(read_file(config_path));
            hypercast::RunOptions options;
            options.out_override = out_dir;
            options.jobs = jobs;
            options.dest_sample_override = sample_dest > 0 ? sample_dest : -1;
            if (const char* env_seed = std::getenv("HYPERCAST_SEED"))
                options.seed_override = parse_seed_list(env_seed);
            const auto result = hypercast::run_experiment(config, options);
            for (const auto& warning : result.warnings)
                std::cerr << "warning: " << warning << "\n";
            for (const auto& file : result.files) std::cout << file << "\n";
            return 0;
        }
        if (gen_lattice->parsed()) {
            hypercast::Network net = hypercast::generate_lattice(lat_l, lat_rho, lat_w);
            if (lat_source >= 0) {
                if (lat_source >= net.size()) throw std::runtime_error("--source out of range");
                net.source_id = lat_source;
            }
            const auto rates = hypercast::assign_rates(net);
            emit(hypercast::network_to_json(net, &rates), lat_out);
            return 0;
        }
        if (gen_disk->parsed()) {
            hypercast::Network net =
                hypercast::generate_random_disk(disk_n, disk_l, disk_rho, disk_w, disk_seed);
            if (disk_source >= 0) {
                if (disk_source >= net.size()) throw std::runtime_error("--source out of range");
                net.source_id = disk_source;
            }
            const auto rates = hypercast::assign_rates(net);
            emit(hypercast::network_to_json(net, &rates), disk_out);
            return 0;
        }
        if (mincut->parsed()) {
            const auto loaded = hypercast::network_from_json(read_file(network_path));
            const hypercast::Network& net = loaded.net;
            hypercast::RateAssignment rates;
            if (loaded.has_rates) {
                rates.rate = loaded.rates;
                rates.boosted_rate = loaded.boosted_rate;
                rates.source_id = net.source_id;
            } else {
                rates = hypercast::assign_rates(net);
            }

            bool estimate = false;
            int dest = -1;
            std::int64_t value = 0;
            if (mc_dest >= 0) {
                dest = mc_dest;
                value = hypercast::min_cut_st(net, rates, net.source_id, dest).value;
            } else if (mc_sample > 0) {
                const auto cut = hypercast::min_cut_broadcast_sampled(net, rates, net.source_id,
                                                                      mc_sample, mc_seed);
                value = cut.value;
                dest = cut.argmin_dest;
                estimate = cut.estimate;
            } else {
                const auto cut = hypercast::min_cut_broadcast(net, rates, net.source_id);
                value = cut.value;
                dest = cut.argmin_dest;
            }

            if (mc_json) {
                const auto cut = hypercast::min_cut_st(net, rates, net.source_id, dest);
                std::cout << witness_json(cut, estimate).dump(2) << "\n";
            } else {
                std::cout << "min-cut " << value << " (source " << net.source_id
                          << ", weakest destination " << dest << ")"
                          << (estimate ? " [sampled estimate]" : "") << "\n";
            }
            return 0;
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
