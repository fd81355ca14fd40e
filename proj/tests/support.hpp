#pragma once

#include <cstdint>
#include <random>

namespace fraclayer::testing {

inline constexpr std::uint64_t default_seed = 20240601;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(default_seed + salt); }

inline double uniform(std::mt19937_64& g, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(g);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace fraclayer::testing
