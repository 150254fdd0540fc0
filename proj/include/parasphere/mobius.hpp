#pragma once

#include <cstdint>
#include <utility>

#include "parasphere/multivector.hpp"
#include "parasphere/record.hpp"

namespace parasphere::mobius {

// The two angles of the strip: beta is the separation between the observation
// posts (0..2pi), eta the torsional twist (0..pi), tied by beta = pi(1 - cos eta).
struct MobiusGeometry {
  double beta;
  double eta;

  static MobiusGeometry from_eta(double eta);
};

// Source outcomes (A, B) = (lambda, -lambda); their product is -1 before
// transport.
std::pair<int, int> outcomes(Orientation lambda);

// Probability that a pattern transported through separation beta flips
// handedness relative to the stay-at-home one: beta / 2pi.
double flip_probability(double beta);

// Closed-form correlation -1 + beta/pi.
double correlation_from_beta(double beta);

double eta_to_beta(double eta);

// -cos(eta): the closed form composed through beta = pi(1 - cos eta).
double correlation_from_eta(double eta);

// Per trial: fair lambda, then a handedness flip of Bob's transported pattern
// with probability beta/2pi (flipping Alice's instead is statistically
// identical). Reports the coincidence-count estimate and all four cells.
// Counter-based draws: identical results for any worker count.
CorrelationRecord simulate(double eta, std::uint64_t trials, std::uint64_t seed,
                           unsigned workers = 1);

}  // namespace parasphere::mobius
