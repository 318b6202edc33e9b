#pragma once

#include <cstdint>
#include <random>

namespace cosk {

// Cheap, well-mixed 64-bit hash.  Used to derive independent sub-seeds
// (seed, counter) -> stream, so per-trial results do not depend on the order
// in which trials run.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(seed ^ splitmix64(counter + 0x51ed2701aa7bULL));
}

// Deterministic random source; one instance per logical stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  double gaussian() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }  // [0, 1)
 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace cosk
