#include "parasphere/mobius.hpp"

#include <cmath>
#include <numbers>

#include "parasphere/sampling.hpp"

namespace parasphere::mobius {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= kTwoPi))
    throw validation_error("beta must lie in [0, 2pi]");
}

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= std::numbers::pi))
    throw validation_error("eta must lie in [0, pi]");
}

}  // namespace

MobiusGeometry MobiusGeometry::from_eta(double eta) {
  check_eta(eta);
  return {eta_to_beta(eta), eta};
}

std::pair<int, int> outcomes(Orientation lambda) {
  return {lambda.sign(), -lambda.sign()};
}

double flip_probability(double beta) {
  check_beta(beta);
  return beta / kTwoPi;
}

double correlation_from_beta(double beta) {
  check_beta(beta);
  return -1.0 + beta / std::numbers::pi;
}

double eta_to_beta(double eta) {
  check_eta(eta);
  return std::numbers::pi * (1.0 - std::cos(eta));
}

double correlation_from_eta(double eta) {
  check_eta(eta);
  return -std::cos(eta);
}

CorrelationRecord simulate(double eta, std::uint64_t trials, std::uint64_t seed,
                           unsigned workers) {
  if (trials == 0) throw validation_error("simulate: need at least one trial");
  const double flip_p = flip_probability(eta_to_beta(eta));

  // Per-trial state is (lambda, flipped), four cells total, so workers tally
  // integer counts and the result is independent of sharding.
  struct Cells {
    std::uint64_t pp = 0, pm = 0, mp = 0, mm = 0;

    Cells& operator+=(const Cells& o) {
      pp += o.pp;
      pm += o.pm;
      mp += o.mp;
      mm += o.mm;
      return *this;
    }
  };
  const std::uint64_t n = trials;

  const Cells total = sharded_tally<Cells>(
      n, workers, [seed, flip_p](std::uint64_t begin, std::uint64_t end) {
        Cells cells;
        for (std::uint64_t i = begin; i < end; ++i) {
          const bool plus = rng::uniform01(rng::trial_word(seed, i, 0)) < 0.5;
          const bool flipped = rng::uniform01(rng::trial_word(seed, i, 1)) < flip_p;
          const int a = plus ? +1 : -1;
          const int b = flipped ? a : -a;  // Bob's pattern after transport
          if (a > 0)
            ++(b > 0 ? cells.pp : cells.pm);
          else
            ++(b > 0 ? cells.mp : cells.mm);
        }
        return cells;
      });

  CorrelationRecord record;
  record.angle_deg = eta * 180.0 / std::numbers::pi;
  record.estimate = (static_cast<double>(total.pp + total.mm) -
                     static_cast<double>(total.pm + total.mp)) /
                    static_cast<double>(n);
  record.reference = correlation_from_eta(eta);
  record.standard_error = 1.0 / std::sqrt(static_cast<double>(n));
  record.trials = n;
  record.c_pp = total.pp;
  record.c_pm = total.pm;
  record.c_mp = total.mp;
  record.c_mm = total.mm;
  record.estimator = "coincidence";
  return record;
}

}  // namespace parasphere::mobius
