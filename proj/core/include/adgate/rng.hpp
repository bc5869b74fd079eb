#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace adgate {

/// 64-bit FNV-1a. Used for config hashes, content hashes and seed-stream
/// labels. Not cryptographic; collisions only cost provenance clarity.
std::uint64_t fnv1a64(std::string_view bytes);

/// Derives an independent stream seed from the run's root seed and a textual
/// label ("builder.draw", "subsample.poison", ...). One root knob, many
/// decorrelated streams.
std::uint64_t derive_seed(std::uint64_t root_seed, std::string_view label);

/// SplitMix64-based generator. The standard engines are portable but the
/// standard distributions and std::shuffle are implementation-defined, so
/// sampling helpers are hand-rolled here to keep artifacts byte-identical
/// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform draw in [0,1) with 53 bits of entropy.
  double next_unit();

  /// Unbiased uniform integer in [0,n). n must be > 0.
  std::uint64_t uniform_below(std::uint64_t n);

  /// In-place Fisher-Yates shuffle driven by uniform_below.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_below(i));
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Stateless uniform draw in [0,1) keyed by (seed, id, purpose). Mock noise
/// uses this so every record's draw is independent of evaluation order.
double hashed_unit_draw(std::uint64_t seed, std::string_view id,
                        std::string_view purpose);

}  // namespace adgate
