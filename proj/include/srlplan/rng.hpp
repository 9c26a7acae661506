#pragma once

#include <cstdint>

namespace srlplan {

// xoshiro256++ with splitmix64 state initialization. Hand-rolled rather than
// <random> so that identical seeds give identical streams on every platform
// and standard library. The uniform-double mapping is part of the contract:
// next_unit() = (next_u64() >> 11) * 2^-53, in [0, 1).
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed);

    // Independent stream for one control-loop index of a run.
    static Xoshiro256pp for_step(std::uint64_t seed, std::uint64_t step_index);

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double next_unit();

    // Uniform in [lo, hi).
    double next_in(double lo, double hi);

  private:
    std::uint64_t state_[4];
};

}  // namespace srlplan
