#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace smtplace {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent child seed from a base seed and a stream tag path.
/// Used to pre-split RNG streams (per tree, per directory, per offspring) so
/// that work units can run in any order without changing results.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(base);
  for (std::uint64_t tag : path) {
    s ^= splitmix64(tag + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2));
    s = splitmix64(s);
  }
  return s;
}

inline Rng make_rng(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  return Rng(derive_seed(base, path));
}

}  // namespace smtplace
