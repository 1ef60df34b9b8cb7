#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ljmd/config.hpp"
#include "ljmd/sampler.hpp"

namespace ljmd {

inline constexpr const char* kArtifactVersion = "1.0.0";

// The adopted Verlet reading: drift to the midpoint, kick with the midpoint
// force, drift again. Recorded in every output so it is auditable which
// variant produced a file.
inline constexpr const char* kVerletVariant = "midpoint-drift-kick-drift";

// Complete description of one experiment run. Serialized verbatim into the
// header of every output file; re-running a manifest reproduces the outputs
// byte for byte.
struct ExperimentManifest {
  std::string experiment;
  SimConfig sim;
  SamplerConfig sampler;
  int ensemble = 200;
  std::vector<double> dt_list;
  double horizon = 100.0;
  double output_interval = 0.1;        // observation stride, time units
  double ref_dt = 0.000625;            // fine-step stand-in for the exact flow
  std::vector<double> checkpoint_times = {1.0, 10.0, 100.0};
  int n_bins = 40;
  double hist_lo = -10.0;
  double hist_hi = 10.0;
  double divergence_threshold = 0.5;
  std::uint64_t seed = 0;
  std::string artifact_version = kArtifactVersion;
  std::string verlet_variant = kVerletVariant;

  void validate() const;

  // key=value lines, one per field; lists are comma-separated.
  std::string serialize() const;
  static ExperimentManifest parse(const std::string& text);

  bool operator==(const ExperimentManifest&) const = default;
};

// Format a double with 17 significant digits (value-preserving).
std::string format_double(double v);

}  // namespace ljmd
