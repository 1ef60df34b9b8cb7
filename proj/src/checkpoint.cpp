#include "ljmd/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include "ljmd/errors.hpp"
#include "ljmd/manifest.hpp"

namespace ljmd {

void save_checkpoint(const std::string& path, const SystemState& state,
                     const RngStream& rng) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open checkpoint for writing: " + path);
  out << "ljmd-checkpoint 1\n";
  out << "n " << state.size() << '\n';
  out << "time " << format_double(state.time) << '\n';
  out << "rng " << rng.root_seed() << ' ' << rng.stream() << ' '
      << rng.block() << ' ' << rng.buf_pos() << ' '
      << (rng.have_spare() ? 1 : 0) << ' ' << format_double(rng.spare())
      << '\n';
  for (int i = 0; i < state.size(); ++i) {
    out << "p " << format_double(state.positions[i].x) << ' '
        << format_double(state.positions[i].y) << ' '
        << format_double(state.velocities[i].x) << ' '
        << format_double(state.velocities[i].y) << ' '
        << format_double(state.displacement[i].x) << ' '
        << format_double(state.displacement[i].y) << '\n';
  }
  if (!out) throw IoError("checkpoint write failed: " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open checkpoint: " + path);
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != "ljmd-checkpoint" || version != 1)
    throw IoError("not a ljmd checkpoint: " + path);

  Checkpoint cp;
  std::string tag;
  int n = 0;
  in >> tag >> n;
  if (tag != "n" || n < 0) throw IoError("bad checkpoint header: " + path);
  cp.state = SystemState::zeros(n);
  in >> tag >> cp.state.time;
  if (tag != "time") throw IoError("bad checkpoint header: " + path);

  std::uint64_t seed = 0, stream = 0, block = 0;
  int buf_pos = 0, have_spare = 0;
  double spare = 0.0;
  in >> tag >> seed >> stream >> block >> buf_pos >> have_spare >> spare;
  if (tag != "rng") throw IoError("bad checkpoint rng line: " + path);
  cp.rng = RngStream(seed, stream);
  cp.rng.restore(block, buf_pos, have_spare != 0, spare);

  for (int i = 0; i < n; ++i) {
    in >> tag >> cp.state.positions[i].x >> cp.state.positions[i].y >>
        cp.state.velocities[i].x >> cp.state.velocities[i].y >>
        cp.state.displacement[i].x >> cp.state.displacement[i].y;
    if (tag != "p") throw IoError("bad checkpoint particle line: " + path);
  }
  if (!in) throw IoError("truncated checkpoint: " + path);
  return cp;
}

}  // namespace ljmd
