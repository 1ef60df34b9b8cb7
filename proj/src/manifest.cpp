#include "ljmd/manifest.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace ljmd {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string format_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double(xs[i]);
  }
  return out;
}

double parse_num(const std::string& key, const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw ConfigError("manifest: bad number for " + key + ": " + s);
  return v;
}

long long parse_int(const std::string& key, const std::string& s) {
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw ConfigError("manifest: bad integer for " + key + ": " + s);
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& s) {
  char* end = nullptr;
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw ConfigError("manifest: bad integer for " + key + ": " + s);
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_num(key, item));
  return out;
}

}  // namespace

void ExperimentManifest::validate() const {
  sim.validate();
  sampler.validate();
  if (ensemble < 1) throw ConfigError("manifest: ensemble must be >= 1");
  if (!(horizon > 0)) throw ConfigError("manifest: horizon must be > 0");
  if (!(output_interval > 0))
    throw ConfigError("manifest: output_interval must be > 0");
  if (!(ref_dt > 0)) throw ConfigError("manifest: ref_dt must be > 0");
  for (double dt : dt_list)
    if (!(dt > 0)) throw ConfigError("manifest: dt values must be > 0");
}

std::string ExperimentManifest::serialize() const {
  std::ostringstream out;
  out << "experiment=" << experiment << '\n'
      << "n_particles=" << sim.n_particles << '\n'
      << "box_edge=" << format_double(sim.box_edge) << '\n'
      << "r_cutoff=" << format_double(sim.r_cutoff) << '\n'
      << "temperature=" << format_double(sim.temperature) << '\n'
      << "boltzmann_k=" << format_double(sim.boltzmann_k) << '\n'
      << "dt=" << format_double(sim.dt) << '\n'
      << "shifted_potential=" << (sim.shifted_potential ? 1 : 0) << '\n'
      << "gamma=" << format_double(sampler.gamma) << '\n'
      << "langevin_step=" << format_double(sampler.step) << '\n'
      << "burn_in=" << format_double(sampler.burn_in) << '\n'
      << "gap=" << format_double(sampler.gap) << '\n'
      << "ensemble=" << ensemble << '\n'
      << "dt_list=" << format_list(dt_list) << '\n'
      << "horizon=" << format_double(horizon) << '\n'
      << "output_interval=" << format_double(output_interval) << '\n'
      << "ref_dt=" << format_double(ref_dt) << '\n'
      << "checkpoint_times=" << format_list(checkpoint_times) << '\n'
      << "n_bins=" << n_bins << '\n'
      << "hist_lo=" << format_double(hist_lo) << '\n'
      << "hist_hi=" << format_double(hist_hi) << '\n'
      << "divergence_threshold=" << format_double(divergence_threshold)
      << '\n'
      << "seed=" << seed << '\n'
      << "artifact_version=" << artifact_version << '\n'
      << "verlet_variant=" << verlet_variant << '\n';
  return out.str();
}

ExperimentManifest ExperimentManifest::parse(const std::string& text) {
  ExperimentManifest m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("manifest: malformed line: " + line);
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    if (key == "experiment") m.experiment = val;
    else if (key == "n_particles") m.sim.n_particles = static_cast<int>(parse_int(key, val));
    else if (key == "box_edge") m.sim.box_edge = parse_num(key, val);
    else if (key == "r_cutoff") m.sim.r_cutoff = parse_num(key, val);
    else if (key == "temperature") m.sim.temperature = parse_num(key, val);
    else if (key == "boltzmann_k") m.sim.boltzmann_k = parse_num(key, val);
    else if (key == "dt") m.sim.dt = parse_num(key, val);
    else if (key == "shifted_potential") m.sim.shifted_potential = parse_int(key, val) != 0;
    else if (key == "gamma") m.sampler.gamma = parse_num(key, val);
    else if (key == "langevin_step") m.sampler.step = parse_num(key, val);
    else if (key == "burn_in") m.sampler.burn_in = parse_num(key, val);
    else if (key == "gap") m.sampler.gap = parse_num(key, val);
    else if (key == "ensemble") m.ensemble = static_cast<int>(parse_int(key, val));
    else if (key == "dt_list") m.dt_list = parse_list(key, val);
    else if (key == "horizon") m.horizon = parse_num(key, val);
    else if (key == "output_interval") m.output_interval = parse_num(key, val);
    else if (key == "ref_dt") m.ref_dt = parse_num(key, val);
    else if (key == "checkpoint_times") m.checkpoint_times = parse_list(key, val);
    else if (key == "n_bins") m.n_bins = static_cast<int>(parse_int(key, val));
    else if (key == "hist_lo") m.hist_lo = parse_num(key, val);
    else if (key == "hist_hi") m.hist_hi = parse_num(key, val);
    else if (key == "divergence_threshold") m.divergence_threshold = parse_num(key, val);
    else if (key == "seed") m.seed = parse_u64(key, val);
    else if (key == "artifact_version") m.artifact_version = val;
    else if (key == "verlet_variant") m.verlet_variant = val;
    else throw ConfigError("manifest: unknown key: " + key);
  }
  m.sim.seed = m.seed;
  return m;
}

}  // namespace ljmd
