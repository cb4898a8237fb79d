#pragma once

#include <array>
#include <cstdint>

namespace subeq_rl {

// splitmix64 step; also used to mix seeds with stream tags so that derived
// streams are reproducible across platforms and standard libraries.
uint64_t splitmix64(uint64_t& state);
uint64_t seed_mix(uint64_t seed, uint64_t tag);

// xoshiro256** with hand-rolled distributions. std::normal_distribution is
// implementation-defined, which would tie checkpoint bytes to a particular
// standard library; this keeps every sampled number pinned to the algorithm.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0);

  uint64_t next();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  double normal();                        // standard normal, polar method
  int uniform_int(int lo, int hi);        // inclusive bounds
  // Uniform point in the horizontal disk of the given radius, z = 0.
  // Declared in geom.hpp consumers as Vec3; returned as components here to
  // keep this header free of geometry types.
  void in_disk(double radius, double& x, double& y);

  Rng split(uint64_t tag) const;          // independent derived stream

 private:
  std::array<uint64_t, 4> state_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace subeq_rl
