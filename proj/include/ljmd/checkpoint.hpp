#pragma once

#include <string>

#include "ljmd/rng.hpp"
#include "ljmd/state.hpp"

namespace ljmd {

// Text-serialized SystemState plus RNG stream position, value-preserving
// (17 significant digits), so long ensembles can stop and resume.
void save_checkpoint(const std::string& path, const SystemState& state,
                     const RngStream& rng);

struct Checkpoint {
  SystemState state;
  RngStream rng;
};

Checkpoint load_checkpoint(const std::string& path);

}  // namespace ljmd
