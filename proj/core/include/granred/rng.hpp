#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace granred {

/// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives a child seed from a master seed and a path of indices (fold,
/// repeat, grid position, ...). Any cell of an experiment can be re-run on
/// its own by rebuilding the same path.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(master);
  for (std::uint64_t p : path) h = mix64(h ^ mix64(p + 0x51ed270b7a2cc9ffull));
  return h;
}

/// Uniform integer in [0, bound) by rejection; avoids the
/// implementation-defined layout of std::uniform_int_distribution so seeded
/// runs reproduce bit-for-bit on any platform.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

/// Fisher-Yates shuffle driven by bounded_uniform.
template <typename T>
void shuffle_values(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded_uniform(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

/// Draws `count` elements uniformly without replacement, in draw order.
template <typename T>
std::vector<T> sample_without_replacement(std::span<const T> pool,
                                          std::size_t count,
                                          std::mt19937_64& rng) {
  std::vector<T> values(pool.begin(), pool.end());
  shuffle_values(values, rng);
  values.resize(count);
  return values;
}

}  // namespace granred
