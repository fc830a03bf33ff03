#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqmet/decoupling.hpp"
#include "eqmet/estimation.hpp"
#include "eqmet/interferometer.hpp"
#include "eqmet/states.hpp"

namespace eqmet::io {

// JSON schemas
//   spectrum     {"sectors": [{"n": 1, "g": 1.0}, ...], "zero_sector": 0}
//   pure state   {"spectrum": ..., "sectors": [{"p","phi","alpha","beta"}...],
//                 "zero_amp": [re, im]}
//   mixed ES     {"spectrum": ..., "p": [...], "beta": [...], "gamma": [[[re,im],...],...]}
//   density      {"spectrum": ..., "rho": [[[re,im],...],...]}   (row-major)
// CSV files are RFC-4180 (CRLF records, header row always present) and byte
// stable for a fixed (command, config, seed, version).

std::string spectrum_to_json(const GeneratorSpectrum& spec);
GeneratorSpectrum spectrum_from_json(const std::string& text);

std::string pure_state_to_json(const PureState& state);

/// One of the three state forms, all carrying their spectrum.
struct StateFile {
    GeneratorSpectrum spectrum;
    std::optional<PureState> pure;
    std::optional<MixedES> mixed;
    std::optional<DensityMatrix> density;

    /// Any form as a full density matrix.
    DensityMatrix as_density() const;
};

StateFile load_state(const std::string& path);

ExperimentConfig load_experiment_config(const std::string& path);

struct NIRun {
    NIConfig config;
};
NIRun load_ni_config(const std::string& path);

struct DdSetup {
    GeneratorSpectrum spectrum;
    std::vector<double> beta;
    PureState system_state;
    BathModel model;
};
DdSetup load_dd_setup(const std::string& path);

struct DdRow {
    double tau;
    double parity_deviation;
    double trace_distance_to_effective;
};

std::string counts_to_csv(const OutcomeCounts& counts);
std::string estimate_to_csv(const EstimationReport& report);
std::string dd_rows_to_csv(const std::vector<DdRow>& rows);

/// Shortest-exact decimal form of a double ("%.17g").
std::string format_double(double v);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

struct RunManifest {
    std::string command;
    std::string config_digest;  ///< fnv1a-64 hex of the config bytes
    std::uint64_t seed = 0;
    std::string version;
    std::string timestamp;  ///< ISO-8601 UTC
};

RunManifest make_manifest(const std::string& command, const std::string& config_bytes,
                          std::uint64_t seed);
std::string manifest_to_json(const RunManifest& m);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace eqmet::io
