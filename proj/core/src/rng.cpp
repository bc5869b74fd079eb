#include "adgate/rng.hpp"

namespace adgate {

namespace {

std::uint64_t splitmix64_step(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::uint64_t derive_seed(std::uint64_t root_seed, std::string_view label) {
  std::uint64_t state = root_seed ^ fnv1a64(label);
  return splitmix64_step(state);
}

std::uint64_t Rng::next_u64() { return splitmix64_step(state_); }

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  // Rejection sampling over the top of the range to stay unbiased.
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return draw % n;
}

double hashed_unit_draw(std::uint64_t seed, std::string_view id,
                        std::string_view purpose) {
  std::uint64_t state = seed;
  state ^= fnv1a64(id) * 0x9e3779b97f4a7c15ULL;
  state ^= fnv1a64(purpose);
  const std::uint64_t mixed = splitmix64_step(state);
  return static_cast<double>(mixed >> 11) * 0x1.0p-53;
}

}  // namespace adgate
