#pragma once

#include <span>
#include <vector>

#include "parasphere/multivector.hpp"

namespace parasphere::stats {

// An ordered sample of real values. Statistics use the 1/n normalizer (not
// 1/(n-1)), matching the population-style correlation definition in use here.
struct SampleSeries {
  std::vector<double> values;

  std::size_t count() const { return values.size(); }
  double mean() const;
  double stddev() const;
};

// (x - mean) / sigma; the result has mean 0 and standard deviation 1.
// A series with (near-)zero variance is degenerate and rejected.
SampleSeries standardize(const SampleSeries& series);

// Bivariate correlation of raw scores: covariance over the product of the two
// standard deviations. Equals the covariance of the standardized series.
double pearson(const SampleSeries& xs, const SampleSeries& ys);

// Two-point distribution of the orientation lambda with mean lambda_bar and a
// context count m entering the reweighting rho = kappa^m.
class LambdaDistribution {
 public:
  LambdaDistribution(double mean_lambda, int contexts);

  static LambdaDistribution fair(int contexts = 2) { return {0.0, contexts}; }

  double mean_lambda() const { return mean_; }
  int contexts() const { return m_; }

  double p_plus() const { return 0.5 * (1.0 + mean_); }
  double p_minus() const { return 0.5 * (1.0 - mean_); }

  // kappa(lambda) = (1 - lambda * lambda_bar) / sqrt(1 - lambda_bar^2); always
  // positive, and identically 1 iff the coin is fair.
  double kappa(Orientation lambda) const;

  // rho(lambda) = kappa(lambda)^m.
  double rho(Orientation lambda) const;

  // sum over lambda of P(lambda) rho(lambda); equals 1 when lambda_bar = 0,
  // and also exactly 1 for m = 2 at any bias.
  double normalization() const;

 private:
  double mean_;
  int m_;
};

inline double kappa(Orientation lambda, const LambdaDistribution& dist) {
  return dist.kappa(lambda);
}

// sqrt of the mean squared deviation (Euclidean norm on the 8 coefficients)
// of a bivector-valued sample. Equals 1 for fair draws of a unit bivector
// with its sign.
double bivector_sigma(std::span<const Multivector> samples);

}  // namespace parasphere::stats
