#include "parasphere/epr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parasphere/rng.hpp"
#include "parasphere/sampling.hpp"

namespace parasphere::epr {

namespace {

constexpr double kScalarResidualTol = 1e-10;

// Extracts a +-1 outcome from a multivector that should be a pure scalar.
int scalar_outcome(const Multivector& product, const char* what) {
  Multivector rest = product;
  rest.c[kScalarBlade] = 0.0;
  if (rest.norm() > kScalarResidualTol)
    throw consistency_error(std::string(what) + ": non-scalar residual in outcome product");
  const double s = product.scalar_part();
  if (std::abs(std::abs(s) - 1.0) > kUnitInputTol * 4.0)
    throw consistency_error(std::string(what) + ": outcome magnitude is not 1");
  return s > 0.0 ? +1 : -1;
}

}  // namespace

int raw_score_a(const Vector3& a, Orientation lambda) {
  if (!a.is_unit()) throw validation_error("raw_score_a: direction must be a unit vector");
  const Multivector instrument = -volume_times(a);        // -I.a, fixed
  const Multivector spin = bivector_of(a, lambda);        // +mu.a, random in lambda
  return scalar_outcome(gp(instrument, spin), "raw_score_a");
}

int raw_score_b(const Vector3& b, Orientation lambda) {
  if (!b.is_unit()) throw validation_error("raw_score_b: direction must be a unit vector");
  const Multivector instrument = volume_times(b);  // +I.b
  const Multivector spin = bivector_of(b, lambda);
  return scalar_outcome(gp(instrument, spin), "raw_score_b");
}

MeasurementRecord measure_pair(const Vector3& a, const Vector3& b, Orientation lambda) {
  return {lambda, raw_score_a(a, lambda), raw_score_b(b, lambda), a, b};
}

Multivector standard_score(const Vector3& n, Orientation lambda) {
  if (!n.is_unit()) throw validation_error("standard_score: direction must be a unit vector");
  // Raw score as a multivector, divided by its dispersion bivector {-n_j b_j}.
  // The inverse of a unit bivector B is -B, since B(-B) = -B^2 = +1.
  const Multivector dispersion = -volume_times(n);
  const Multivector raw = gp(dispersion, bivector_of(n, lambda));
  return gp(-dispersion, raw);
}

Multivector score_product(const Vector3& a, const Vector3& b, Orientation lambda) {
  return oriented_gp(standard_score(a, lambda), standard_score(b, lambda), lambda);
}

double correlation_exact(const Vector3& a, const Vector3& b) {
  const Multivector avg = (score_product(a, b, Orientation::plus()) +
                           score_product(a, b, Orientation::minus())) *
                          0.5;
  return avg.scalar_part();
}

double CoincidenceCounts::expectation() const {
  const std::uint64_t n = total();
  if (n == 0) throw validation_error("coincidence expectation needs at least one trial");
  const double signed_sum = static_cast<double>(pp + mm) - static_cast<double>(pm + mp);
  return signed_sum / static_cast<double>(n);
}

SimulationResult simulate(const ExperimentConfig& config) {
  if (config.trials == 0) throw validation_error("simulate: need at least one trial");
  if (!config.a.is_unit() || !config.b.is_unit())
    throw validation_error("simulate: directions must be unit vectors");

  const std::uint64_t n = config.trials;

  // Every per-trial quantity is a function of lambda alone, so the Monte Carlo
  // reduces to exact integer tallies of the two orientations; aggregates are
  // reconstructed from the counts, making results independent of sharding.
  const std::uint64_t n_plus =
      count_plus_orientations(n, config.seed, config.lambda_law.p_plus(), config.workers);
  const std::uint64_t n_minus = n - n_plus;

  const Multivector product_plus = score_product(config.a, config.b, Orientation::plus());
  const Multivector product_minus = score_product(config.a, config.b, Orientation::minus());
  const Multivector avg = (product_plus * static_cast<double>(n_plus) +
                           product_minus * static_cast<double>(n_minus)) *
                          (1.0 / static_cast<double>(n));

  SimulationResult result;
  result.standard_score_estimate = avg.scalar_part();
  result.bivector_residual = grade(avg, 2).norm();
  result.trials = n;
  result.standard_error = 1.0 / std::sqrt(static_cast<double>(n));

  // Raw outcomes: A = lambda, B = -lambda, so lambda = +1 lands in C+- and
  // lambda = -1 in C-+.
  const int a_plus = raw_score_a(config.a, Orientation::plus());
  const int b_plus = raw_score_b(config.b, Orientation::plus());
  const int a_minus = raw_score_a(config.a, Orientation::minus());
  const int b_minus = raw_score_b(config.b, Orientation::minus());
  auto cell = [&](int a, int b) -> std::uint64_t& {
    if (a > 0) return b > 0 ? result.counts.pp : result.counts.pm;
    return b > 0 ? result.counts.mp : result.counts.mm;
  };
  cell(a_plus, b_plus) += n_plus;
  cell(a_minus, b_minus) += n_minus;
  result.coincidence_estimate = result.counts.expectation();
  result.raw_product_constant = (a_plus * b_plus) == (a_minus * b_minus);
  return result;
}

double chsh_value(const ChshQuadruple& q) {
  return std::abs(correlation_exact(q.a, q.b) + correlation_exact(q.a, q.b_prime) +
                  correlation_exact(q.a_prime, q.b) -
                  correlation_exact(q.a_prime, q.b_prime));
}

double chsh_bound(const ChshQuadruple& q) {
  for (const Vector3* v : {&q.a, &q.a_prime, &q.b, &q.b_prime}) {
    if (!v->is_unit()) throw validation_error("chsh_bound: directions must be unit vectors");
  }
  const double cross_term =
      gp(outer(q.a, q.a_prime), outer(q.b_prime, q.b)).scalar_part();
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - cross_term));
}

namespace {

Vector3 from_spherical(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

ChshQuadruple quadruple_from_params(const std::array<double, 8>& p) {
  return {from_spherical(p[0], p[1]), from_spherical(p[2], p[3]),
          from_spherical(p[4], p[5]), from_spherical(p[6], p[7])};
}

double value_at(const std::array<double, 8>& p) {
  return chsh_value(quadruple_from_params(p));
}

std::array<double, 8> params_from_quadruple(const ChshQuadruple& q) {
  auto to_spherical = [](const Vector3& v, double& theta, double& phi) {
    theta = std::acos(std::clamp(v.z, -1.0, 1.0));
    phi = std::atan2(v.y, v.x);
  };
  std::array<double, 8> p{};
  to_spherical(q.a, p[0], p[1]);
  to_spherical(q.a_prime, p[2], p[3]);
  to_spherical(q.b, p[4], p[5]);
  to_spherical(q.b_prime, p[6], p[7]);
  return p;
}

}  // namespace

ChshMaximum chsh_maximize(const ChshMaximizeOptions& options) {
  if (options.restarts < 1) throw validation_error("chsh_maximize: need at least one restart");

  ChshMaximum best;
  best.value = -1.0;

  for (int restart = 0; restart < options.restarts; ++restart) {
    std::array<double, 8> p{};
    if (restart == 0 && options.start) {
      p = params_from_quadruple(*options.start);
    } else {
      for (int k = 0; k < 8; ++k) {
        const double u =
            rng::uniform01(rng::trial_word(options.seed, restart * 8 + k, 17));
        p[k] = (k % 2 == 0) ? u * std::numbers::pi : u * 2.0 * std::numbers::pi;
      }
    }

    double current = value_at(p);
    double step = 0.4;
    while (step > 1e-12) {
      double sweep_gain = 0.0;
      for (int k = 0; k < 8; ++k) {
        // Move along coordinate k while it keeps improving.
        for (;;) {
          std::array<double, 8> up = p, down = p;
          up[k] += step;
          down[k] -= step;
          const double vu = value_at(up);
          const double vd = value_at(down);
          if (vu > current && vu >= vd) {
            sweep_gain += vu - current;
            p = up;
            current = vu;
          } else if (vd > current) {
            sweep_gain += vd - current;
            p = down;
            current = vd;
          } else {
            break;
          }
        }
      }
      if (sweep_gain < options.tolerance) step *= 0.5;
    }

    if (current > best.value) {
      best.value = current;
      best.quadruple = quadruple_from_params(p);
    }
  }
  return best;
}

}  // namespace parasphere::epr
