#ifndef MDET_RNG_HPP
#define MDET_RNG_HPP

#include "mdet/rational.hpp"

#include <cstdint>
#include <vector>

namespace mdet {

/// Small deterministic generator (splitmix64). We avoid std::mt19937 so
/// that streams are byte-identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [lo, hi] inclusive.
    long long next_in(long long lo, long long hi);
    /// Integer-valued rational uniform in [lo, hi].
    Rat next_rational(long long lo, long long hi);
    std::vector<Rat> next_vector(std::size_t len, long long lo, long long hi);

    /// Independent substream for (seed, index) pairs; used so that trials
    /// can run in any order with identical results.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

}  // namespace mdet

#endif
