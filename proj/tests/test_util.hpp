#pragma once

#include <cmath>
#include <numbers>

#include "parasphere/multivector.hpp"
#include "parasphere/octonion.hpp"
#include "parasphere/rng.hpp"

namespace testutil {

using parasphere::Multivector;
using parasphere::Octonion;
using parasphere::Vector3;
using parasphere::Vector7;

// Uniform random unit vector; deterministic in (seed, idx).
inline Vector3 random_unit(std::uint64_t seed, std::uint64_t idx) {
  using parasphere::rng::trial_word;
  using parasphere::rng::uniform01;
  const double z = 2.0 * uniform01(trial_word(seed, idx, 100)) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform01(trial_word(seed, idx, 101));
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

inline Multivector random_multivector(std::uint64_t seed, std::uint64_t idx) {
  Multivector m;
  for (int i = 0; i < 8; ++i)
    m.c[i] = 2.0 * parasphere::rng::uniform01(parasphere::rng::trial_word(seed, idx * 8 + i, 102)) - 1.0;
  return m;
}

inline Octonion random_octonion(std::uint64_t seed, std::uint64_t idx) {
  Octonion o;
  for (int i = 0; i < 8; ++i)
    o.c[i] = 2.0 * parasphere::rng::uniform01(parasphere::rng::trial_word(seed, idx * 8 + i, 103)) - 1.0;
  return o;
}

inline Vector7 random_vector7(std::uint64_t seed, std::uint64_t idx) {
  Vector7 v;
  for (int i = 0; i < 7; ++i)
    v.c[i] = 2.0 * parasphere::rng::uniform01(parasphere::rng::trial_word(seed, idx * 8 + i, 104)) - 1.0;
  return v;
}

inline double max_abs_diff(const Multivector& a, const Multivector& b) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(a.c[i] - b.c[i]));
  return worst;
}

inline double max_abs_diff(const Octonion& a, const Octonion& b) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(a.c[i] - b.c[i]));
  return worst;
}

}  // namespace testutil
