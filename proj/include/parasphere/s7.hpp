#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "parasphere/multivector.hpp"
#include "parasphere/octonion.hpp"
#include "parasphere/stats.hpp"

namespace parasphere::s7 {

class EmbeddingTable;

// How a 3D measurement direction is mapped to a unit 7-vector.
//   axis      - components on the first three imaginary slots.
//   fiber(k)  - components on the slots of the k-th Fano triple (the k = 1
//               triple spans the quaternion subalgebra, so the correlations
//               of the 3-sphere model are recovered inside the 7-sphere).
//   custom    - lookup in a user-supplied table.
struct EmbeddingScheme {
  enum class Kind { Axis, Fiber, Custom };

  Kind kind = Kind::Axis;
  int fiber = 1;                         // 1..7, used when kind == Fiber
  const EmbeddingTable* table = nullptr; // required when kind == Custom

  static EmbeddingScheme axis() { return {}; }
  static EmbeddingScheme fiber_scheme(int k);
  static EmbeddingScheme custom(const EmbeddingTable& table);

  // Parses "axis" or "fiber1".."fiber7"; anything else is rejected.
  static EmbeddingScheme parse(const std::string& id);
  std::string name() const;
};

// Text table of direction embeddings, one row per line:
//   a_x a_y a_z : N_1 N_2 N_3 N_4 N_5 N_6 N_7
// Both sides must be unit vectors. '#' starts a comment.
class EmbeddingTable {
 public:
  static EmbeddingTable load(const std::filesystem::path& path);
  static EmbeddingTable parse(std::istream& in);

  // Row whose direction matches `a` within the unit-input tolerance.
  Vector7 lookup(const Vector3& a) const;

  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    Vector3 direction;
    Vector7 embedding;
  };
  std::vector<Row> rows_;
};

Vector7 embed_direction(const Vector3& a, const EmbeddingScheme& scheme);

// An equatorial point of the parallelized 7-sphere: the pure-imaginary unit
// octonion lambda * N, square -1.
struct EquatorialPoint7 {
  Vector7 direction;  // unit
  Orientation lambda;

  Octonion as_octonion() const {
    return Octonion::from_imag(direction) * lambda.value();
  }
};

// Raw score: scalar of (-q)(lambda q) with q the embedded unit imaginary;
// equals lambda.
int raw_score_7(const Vector3& a, Orientation lambda, const EmbeddingScheme& scheme);

// Standard score mu.N(a); unaffected by detector noise.
EquatorialPoint7 standard_score_7(const Vector3& a, Orientation lambda,
                                  const EmbeddingScheme& scheme);

// The reweighted score kappa(lambda) mu.N(a) used under a biased orientation
// distribution. Not unit unless the distribution is fair.
Octonion reweighted_score(const EquatorialPoint7& point,
                          const stats::LambdaDistribution& dist);

// Local detector randomness: probability of nu = +1 given the setting.
struct DetectorNoise {
  double p_plus = 1.0;
};

// Average raw score under detector noise: (2 p_plus - 1) * raw_score_7; lies
// in [-1, +1].
double noisy_raw_mean(const Vector3& a, Orientation lambda, const DetectorNoise& noise,
                      const EmbeddingScheme& scheme);

// Octonion product composed in the order fixed by the sphere orientation
// (lambda = -1 multiplies in reversed order, i.e. in the opposite algebra).
Octonion oriented_mul(const Octonion& x, const Octonion& y, Orientation lambda);

enum class AssociationOrder { LeftToRight, RightToLeft };

std::string to_string(AssociationOrder order);

// Chain product of equatorial points (all sharing one orientation) in the
// given association order, each composition following the orientation's
// multiplication order. Unit norm; real part even in lambda, imaginary part
// odd in lambda.
Octonion chain_product(std::span<const EquatorialPoint7> points,
                       AssociationOrder order = AssociationOrder::LeftToRight);

struct DecompositionResult {
  double f = 0.0;      // real part
  double g = 0.0;      // norm of the imaginary part; f^2 + g^2 = 1
  Vector7 axis;        // imaginary direction, defined when g > 0
  AssociationOrder order = AssociationOrder::LeftToRight;
};

DecompositionResult product_decompose(std::span<const EquatorialPoint7> points,
                                      AssociationOrder order = AssociationOrder::LeftToRight);

struct ExpectationConfig {
  std::vector<Vector3> directions;  // at least two
  EmbeddingScheme scheme;
  stats::LambdaDistribution lambda_law = stats::LambdaDistribution::fair();
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  AssociationOrder order = AssociationOrder::LeftToRight;
};

struct ExpectationResult {
  double expectation = 0.0;            // real part of the weighted average
  double first_term = 0.0;             // f times the rho-normalization estimate
  double second_term_magnitude = 0.0;  // norm of the imaginary part of the average
  double rho_normalization = 0.0;      // Monte Carlo estimate of the rho integral
  std::uint64_t trials = 0;
  double standard_error = 0.0;  // 1 / sqrt(n)
  AssociationOrder order = AssociationOrder::LeftToRight;
};

// Monte Carlo expectation of the rho-weighted chain of standard scores over
// the orientation distribution. Counter-based draws: results are identical
// for any worker count.
ExpectationResult expectation_lr(const ExpectationConfig& config);

// Degenerate single-orientation case (no averaging): the chain's real part
// plus its full imaginary magnitude, deterministically.
ExpectationResult expectation_single_orientation(
    std::span<const Vector3> directions, const EmbeddingScheme& scheme, Orientation lambda,
    AssociationOrder order = AssociationOrder::LeftToRight);

}  // namespace parasphere::s7
