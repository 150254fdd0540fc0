#pragma once

#include <cstdint>
#include <optional>

#include "parasphere/multivector.hpp"
#include "parasphere/stats.hpp"

namespace parasphere::epr {

struct MeasurementRecord {
  Orientation lambda;
  int a_outcome;  // +1 or -1
  int b_outcome;
  Vector3 a_dir;
  Vector3 b_dir;
};

struct ChshQuadruple {
  Vector3 a;
  Vector3 a_prime;
  Vector3 b;
  Vector3 b_prime;
};

// Alice's raw score: the scalar of (-I.a)(+mu.a). Equals lambda.
int raw_score_a(const Vector3& a, Orientation lambda);

// Bob's raw score: the scalar of (+I.b)(+mu.b). Equals -lambda.
int raw_score_b(const Vector3& b, Orientation lambda);

MeasurementRecord measure_pair(const Vector3& a, const Vector3& b, Orientation lambda);

// The standardized score mu.n, obtained by dividing the raw-score multivector
// by its bivector dispersion (left-multiplication by the inverse bivector,
// using {+n_k b_k}{-n_k b_k} = +1). Coincides with bivector_of(n, lambda).
Multivector standard_score(const Vector3& n, Orientation lambda);

// Product of the two standard scores composed in the orientation's order:
// -a.b - mu.(a x b), whose bivector part is odd in lambda.
Multivector score_product(const Vector3& a, const Vector3& b, Orientation lambda);

// Orientation-averaged scalar part of the score product: exactly -a.b.
double correlation_exact(const Vector3& a, const Vector3& b);

struct ExperimentConfig {
  Vector3 a;
  Vector3 b;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  stats::LambdaDistribution lambda_law = stats::LambdaDistribution::fair();
  unsigned workers = 1;
};

struct CoincidenceCounts {
  std::uint64_t pp = 0;
  std::uint64_t pm = 0;
  std::uint64_t mp = 0;
  std::uint64_t mm = 0;

  std::uint64_t total() const { return pp + pm + mp + mm; }

  // (C++ + C-- - C+- - C-+) / total
  double expectation() const;
};

struct SimulationResult {
  // Scalar part of the trial-averaged standard-score product.
  double standard_score_estimate = 0.0;
  // Norm of the grade-2 part of that average; decays as 1/sqrt(n) for fair
  // lambda and converges to |lambda_bar| |a x b| otherwise.
  double bivector_residual = 0.0;
  CoincidenceCounts counts;
  // Coincidence-ratio estimate from the raw outcomes. The raw outcomes obey
  // A = lambda, B = -lambda, so the per-trial product is -1 identically and
  // this estimator returns -1 at every angle; see raw_product_constant.
  double coincidence_estimate = 0.0;
  std::uint64_t trials = 0;
  double standard_error = 0.0;  // 1 / sqrt(n)
  // Flags that the raw-outcome product never varied across trials, i.e. the
  // two estimators disagree except at a = b.
  bool raw_product_constant = false;
};

// Draws lambda per trial (counter-based on the seed, so results are identical
// for any worker count) and reports both estimators side by side.
SimulationResult simulate(const ExperimentConfig& config);

// |E(a,b) + E(a,b') + E(a',b) - E(a',b')| with E = correlation_exact.
double chsh_value(const ChshQuadruple& q);

// 2 sqrt(1 - <(a^a')(b'^b)>_0), the scalar taken in the bivector algebra;
// always >= chsh_value and <= 2 sqrt(2).
double chsh_bound(const ChshQuadruple& q);

struct ChshMaximizeOptions {
  int restarts = 20;
  double tolerance = 1e-10;  // stop a sweep when improvement falls below this
  std::uint64_t seed = 0;
  std::optional<ChshQuadruple> start;  // used for the first restart when set
};

struct ChshMaximum {
  ChshQuadruple quadruple;
  double value = 0.0;
};

// Random-restart coordinate ascent over the four spherical parameter pairs
// with a step-halving line search. Reaches 2 sqrt(2) to ~1e-6.
ChshMaximum chsh_maximize(const ChshMaximizeOptions& options);

}  // namespace parasphere::epr
