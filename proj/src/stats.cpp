#include "parasphere/stats.hpp"

#include <cmath>

namespace parasphere::stats {

namespace {

bool degenerate_sigma(double sigma, double mean) {
  return sigma <= 1e-12 * (1.0 + std::abs(mean));
}

}  // namespace

double SampleSeries::mean() const {
  if (values.empty()) throw validation_error("empty sample series");
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double SampleSeries::stddev() const {
  const double m = mean();
  double s = 0.0;
  for (double v : values) s += (v - m) * (v - m);
  return std::sqrt(s / static_cast<double>(values.size()));
}

SampleSeries standardize(const SampleSeries& series) {
  const double m = series.mean();
  const double sigma = series.stddev();
  if (degenerate_sigma(sigma, m))
    throw validation_error("standardize: degenerate series (zero variance)");
  SampleSeries out;
  out.values.reserve(series.count());
  for (double v : series.values) out.values.push_back((v - m) / sigma);
  return out;
}

double pearson(const SampleSeries& xs, const SampleSeries& ys) {
  if (xs.count() != ys.count()) throw validation_error("pearson: length mismatch");
  const double mx = xs.mean();
  const double my = ys.mean();
  const double sx = xs.stddev();
  const double sy = ys.stddev();
  if (degenerate_sigma(sx, mx) || degenerate_sigma(sy, my))
    throw validation_error("pearson: degenerate series (zero variance)");
  double cov = 0.0;
  for (std::size_t i = 0; i < xs.count(); ++i)
    cov += (xs.values[i] - mx) * (ys.values[i] - my);
  cov /= static_cast<double>(xs.count());
  return cov / (sx * sy);
}

LambdaDistribution::LambdaDistribution(double mean_lambda, int contexts)
    : mean_(mean_lambda), m_(contexts) {
  if (!(std::abs(mean_lambda) < 1.0))
    throw validation_error("lambda distribution is degenerate: |mean| must be < 1");
  if (contexts < 1) throw validation_error("context count m must be positive");
}

double LambdaDistribution::kappa(Orientation lambda) const {
  return (1.0 - lambda.value() * mean_) / std::sqrt(1.0 - mean_ * mean_);
}

double LambdaDistribution::rho(Orientation lambda) const {
  return std::pow(kappa(lambda), m_);
}

double LambdaDistribution::normalization() const {
  return p_plus() * rho(Orientation::plus()) + p_minus() * rho(Orientation::minus());
}

double bivector_sigma(std::span<const Multivector> samples) {
  if (samples.empty()) throw validation_error("bivector_sigma: empty sample set");
  Multivector mean;
  for (const auto& s : samples) mean = mean + s;
  mean = mean * (1.0 / static_cast<double>(samples.size()));
  double s = 0.0;
  for (const auto& sample : samples) s += (sample - mean).norm_sq();
  return std::sqrt(s / static_cast<double>(samples.size()));
}

}  // namespace parasphere::stats
