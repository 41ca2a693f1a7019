#ifndef CAYLEY_CONFIG_HPP
#define CAYLEY_CONFIG_HPP

#include <cstddef>
#include <cstdlib>

namespace cayley::config {

inline std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  return (end && *end == '\0' && parsed > 0) ? static_cast<std::size_t>(parsed) : fallback;
}

// Explicit level permutations and matrices live on n^k points.
inline std::size_t max_level_points() { return env_size("CAYLEY_MAX_LEVEL_POINTS", 1u << 20); }

// Cap on reachable product-machine states per element.
inline std::size_t max_product_states() { return env_size("CAYLEY_MAX_PRODUCT_STATES", 4000000); }

// Dense symmetric eigensolver dimension cap.
inline std::size_t dense_eigen_cap() { return env_size("CAYLEY_MAX_DENSE_DIM", 4096); }

// Exact random-walk step budget.
inline std::size_t max_walk_steps() { return env_size("CAYLEY_MAX_WALK_STEPS", 14); }

} // namespace cayley::config

#endif
