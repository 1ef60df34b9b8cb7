#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ljmd {

// Counter-based stream: Philox4x32-10 (Salmon et al., Random123). The 64-bit
// root seed is the key; the stream index occupies the high counter words, so
// streams with distinct indices are disjoint by construction and a given
// (seed, stream) pair replays the identical sequence on every run.
//
// Gaussians come from Box-Muller on the uniform stream (one fixed transform,
// so trajectories are bit-reproducible). The unused second variate is cached.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t root_seed, std::uint64_t stream)
      : seed_(root_seed), stream_(stream) {}

  std::uint64_t root_seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() {
    if (buf_pos_ >= 2) {
      fill_block();
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  // Uniform on (0, 1]; never returns 0, so log() is safe.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Serialization hooks (checkpoint files). `block` is the index of the
  // next unconsumed Philox block.
  std::uint64_t block() const { return block_; }
  int buf_pos() const { return buf_pos_; }
  bool have_spare() const { return have_spare_; }
  double spare() const { return spare_; }
  void restore(std::uint64_t block, int buf_pos, bool have_spare,
               double spare) {
    block_ = block;
    buf_pos_ = buf_pos;
    have_spare_ = have_spare;
    spare_ = spare;
    if (buf_pos_ < 2) fill_block_at(block_ - 1);  // current buffer
  }

 private:
  static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b,
                             std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    return static_cast<std::uint32_t>(p >> 32);
  }

  void philox(std::uint32_t c[4]) const {
    std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
    for (int round = 0; round < 10; ++round) {
      std::uint32_t lo0, lo1;
      std::uint32_t hi0 = mulhi(0xD2511F53u, c[0], lo0);
      std::uint32_t hi1 = mulhi(0xCD9E8D57u, c[2], lo1);
      std::uint32_t n0 = hi1 ^ c[1] ^ k0;
      std::uint32_t n1 = lo1;
      std::uint32_t n2 = hi0 ^ c[3] ^ k1;
      std::uint32_t n3 = lo0;
      c[0] = n0;
      c[1] = n1;
      c[2] = n2;
      c[3] = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
  }

  void fill_block_at(std::uint64_t block) {
    std::uint32_t c[4] = {static_cast<std::uint32_t>(block),
                          static_cast<std::uint32_t>(block >> 32),
                          static_cast<std::uint32_t>(stream_),
                          static_cast<std::uint32_t>(stream_ >> 32)};
    philox(c);
    buf_[0] = (static_cast<std::uint64_t>(c[1]) << 32) | c[0];
    buf_[1] = (static_cast<std::uint64_t>(c[3]) << 32) | c[2];
  }

  void fill_block() {
    fill_block_at(block_);
    ++block_;
  }

  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int buf_pos_ = 2;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ljmd
