#include "eqmet/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "eqmet/version.hpp"

namespace eqmet::io {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ConfigError("complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a non-empty array of rows");
    const auto rows = static_cast<int>(j.size());
    const auto cols = static_cast<int>(j[0].size());
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw ConfigError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json spectrum_to_json_obj(const GeneratorSpectrum& spec) {
    json sectors = json::array();
    for (const auto& s : spec.sectors()) sectors.push_back({{"n", s.label}, {"g", s.g}});
    return {{"sectors", sectors}, {"zero_sector", spec.zero_multiplicity()}};
}

GeneratorSpectrum spectrum_from_json_obj(const json& j) {
    if (!j.contains("sectors")) throw ConfigError("spectrum needs a 'sectors' array");
    std::vector<Sector> sectors;
    for (const auto& s : j.at("sectors"))
        sectors.push_back({s.at("n").get<int>(), s.at("g").get<double>()});
    return GeneratorSpectrum(std::move(sectors), j.value("zero_sector", 0));
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("invalid JSON");
    return j;
}

}  // namespace

std::string spectrum_to_json(const GeneratorSpectrum& spec) { return spectrum_to_json_obj(spec).dump(); }

GeneratorSpectrum spectrum_from_json(const std::string& text) {
    return spectrum_from_json_obj(parse(text));
}

std::string pure_state_to_json(const PureState& state) {
    json sectors = json::array();
    for (const auto& s : state.sectors())
        sectors.push_back({{"p", s.p}, {"phi", s.phi}, {"alpha", s.alpha}, {"beta", s.beta}});
    json j = {{"spectrum", spectrum_to_json_obj(state.spectrum())},
              {"sectors", sectors},
              {"zero_amp", complex_to_json(state.zero_amp())}};
    return j.dump();
}

DensityMatrix StateFile::as_density() const {
    if (density) return *density;
    if (mixed) return to_density(*mixed);
    if (pure) return to_density(*pure);
    throw ConfigError("state file holds no state");
}

StateFile load_state(const std::string& path) {
    const json j = parse(read_file(path));
    if (!j.contains("spectrum")) throw ConfigError("state file needs a 'spectrum'");
    GeneratorSpectrum spec = spectrum_from_json_obj(j.at("spectrum"));
    StateFile out{spec, std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("rho")) {
        out.density.emplace(matrix_from_json(j.at("rho")));
        if (out.density->dim() != spec.dim()) throw ConfigError("rho does not match the spectrum dimension");
        return out;
    }
    if (j.contains("gamma")) {
        out.mixed.emplace(mixed_es(spec, j.at("p").get<std::vector<double>>(),
                                   j.at("beta").get<std::vector<double>>(),
                                   matrix_from_json(j.at("gamma"))));
        return out;
    }
    if (j.contains("sectors")) {
        std::vector<SectorState> sectors;
        for (const auto& s : j.at("sectors"))
            sectors.push_back({s.at("p").get<double>(), s.value("phi", 0.0), s.at("alpha").get<double>(),
                               s.value("beta", 0.0)});
        Complex zero_amp = j.contains("zero_amp") ? complex_from_json(j.at("zero_amp")) : Complex(0.0);
        out.pure.emplace(pure_from_sectors(spec, std::move(sectors), zero_amp));
        return out;
    }
    throw ConfigError("state file must hold 'sectors', 'gamma', or 'rho'");
}

ExperimentConfig load_experiment_config(const std::string& path) {
    const json j = parse(read_file(path));
    ExperimentConfig cfg{spectrum_from_json_obj(j.at("spectrum")),
                         j.at("p").get<std::vector<double>>(),
                         j.at("beta").get<std::vector<double>>(),
                         j.value("phi", std::vector<double>{}),
                         j.at("theta_true").get<double>(),
                         j.at("theta_prior").get<double>(),
                         j.at("nu").get<std::uint64_t>(),
                         j.at("trials").get<std::uint64_t>(),
                         j.value("seed", std::uint64_t{0}),
                         j.value("empirical_weights", false)};
    cfg.validate();
    return cfg;
}

NIRun load_ni_config(const std::string& path) {
    const json j = parse(read_file(path));
    NIConfig cfg;
    cfg.n_particles = j.at("N").get<int>();
    cfg.chi = j.at("chi").get<double>();
    cfg.bx_max = j.at("bx_max").get<double>();
    cfg.ramp_time = j.at("ramp_time").get<double>();
    cfg.steps = j.at("steps").get<int>();
    cfg.bz = j.at("bz").get<double>();
    cfg.dt_encode = j.at("dt_encode").get<double>();
    cfg.validate();
    return {cfg};
}

DdSetup load_dd_setup(const std::string& path) {
    const json j = parse(read_file(path));
    GeneratorSpectrum spec = spectrum_from_json_obj(j.at("spectrum"));
    std::vector<double> beta = j.value("beta", std::vector<double>(spec.num_sectors(), 0.0));

    std::vector<SectorState> sectors;
    for (const auto& s : j.at("system_state").at("sectors"))
        sectors.push_back({s.at("p").get<double>(), s.value("phi", 0.0), s.at("alpha").get<double>(),
                           s.value("beta", 0.0)});
    Complex zero_amp = j.at("system_state").contains("zero_amp")
                           ? complex_from_json(j.at("system_state").at("zero_amp"))
                           : Complex(0.0);
    PureState system_state = pure_from_sectors(spec, std::move(sectors), zero_amp);

    BathModel model;
    for (const auto& t : j.at("terms"))
        model.terms.push_back({matrix_from_json(t.at("h_sys")), matrix_from_json(t.at("b_bath"))});
    const auto bath = j.at("bath_state");
    model.bath_state.resize(static_cast<long>(bath.size()));
    for (std::size_t i = 0; i < bath.size(); ++i)
        model.bath_state(static_cast<long>(i)) = complex_from_json(bath[i]);
    model.validate();
    if (model.system_dim() != spec.dim())
        throw ConfigError("bath model terms do not match the spectrum dimension");
    return {std::move(spec), std::move(beta), std::move(system_state), std::move(model)};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string counts_to_csv(const OutcomeCounts& counts) {
    std::string out = "sector,parity,count\r\n";
    for (const auto& [key, count] : counts.counts)
        out += std::to_string(key.sector) + "," + std::to_string(key.parity) + "," +
               std::to_string(count) + "\r\n";
    out += "0,0," + std::to_string(counts.zero_count) + "\r\n";
    return out;
}

std::string estimate_to_csv(const EstimationReport& report) {
    std::string out = "trial,theta_hat\r\n";
    for (std::size_t t = 0; t < report.theta_hats.size(); ++t)
        out += std::to_string(t) + "," + format_double(report.theta_hats[t]) + "\r\n";
    return out;
}

std::string dd_rows_to_csv(const std::vector<DdRow>& rows) {
    std::string out = "tau,parity_deviation,trace_distance_to_effective\r\n";
    for (const auto& r : rows)
        out += format_double(r.tau) + "," + format_double(r.parity_deviation) + "," +
               format_double(r.trace_distance_to_effective) + "\r\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char ch : bytes) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    return h;
}

RunManifest make_manifest(const std::string& command, const std::string& config_bytes,
                          std::uint64_t seed) {
    char digest[20];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(config_bytes)));
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return {command, digest, seed, kVersion, stamp};
}

std::string manifest_to_json(const RunManifest& m) {
    const json j = {{"command", m.command},
                    {"config_digest", m.config_digest},
                    {"seed", m.seed},
                    {"version", m.version},
                    {"timestamp", m.timestamp}};
    return j.dump();
}

}  // namespace eqmet::io
