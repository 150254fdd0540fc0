#include "parasphere/s7.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "parasphere/sampling.hpp"

namespace parasphere::s7 {

EmbeddingScheme EmbeddingScheme::fiber_scheme(int k) {
  if (k < 1 || k > 7) throw validation_error("fiber index must be in 1..7");
  EmbeddingScheme s;
  s.kind = Kind::Fiber;
  s.fiber = k;
  return s;
}

EmbeddingScheme EmbeddingScheme::custom(const EmbeddingTable& table) {
  EmbeddingScheme s;
  s.kind = Kind::Custom;
  s.table = &table;
  return s;
}

EmbeddingScheme EmbeddingScheme::parse(const std::string& id) {
  if (id == "axis") return axis();
  if (id.rfind("fiber", 0) == 0 && id.size() == 6 && id[5] >= '1' && id[5] <= '7')
    return fiber_scheme(id[5] - '0');
  throw validation_error("unknown embedding scheme id: " + id);
}

std::string EmbeddingScheme::name() const {
  switch (kind) {
    case Kind::Axis:
      return "axis";
    case Kind::Fiber:
      return "fiber" + std::to_string(fiber);
    case Kind::Custom:
      return "custom";
  }
  return "axis";
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open embedding table: " + path.string());
  return parse(in);
}

EmbeddingTable EmbeddingTable::parse(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos)
      throw validation_error("embedding table line " + std::to_string(line_no) +
                             ": expected 'a_x a_y a_z : N_1 ... N_7'");
    std::istringstream lhs(line.substr(0, colon));
    std::istringstream rhs(line.substr(colon + 1));
    Row row;
    if (!(lhs >> row.direction.x >> row.direction.y >> row.direction.z))
      throw validation_error("embedding table line " + std::to_string(line_no) +
                             ": malformed direction");
    for (double& v : row.embedding.c) {
      if (!(rhs >> v))
        throw validation_error("embedding table line " + std::to_string(line_no) +
                               ": expected 7 embedding components");
    }
    if (!row.direction.is_unit())
      throw validation_error("embedding table line " + std::to_string(line_no) +
                             ": direction is not unit");
    if (std::abs(row.embedding.norm() - 1.0) > kUnitInputTol)
      throw validation_error("embedding table line " + std::to_string(line_no) +
                             ": embedding is not unit");
    table.rows_.push_back(row);
  }
  return table;
}

Vector7 EmbeddingTable::lookup(const Vector3& a) const {
  for (const auto& row : rows_) {
    if ((row.direction - a).norm() <= kUnitInputTol) return row.embedding;
  }
  throw validation_error("embedding table has no row for the requested direction");
}

Vector7 embed_direction(const Vector3& a, const EmbeddingScheme& scheme) {
  if (!a.is_unit()) throw validation_error("embed_direction: direction must be a unit vector");
  Vector7 n;
  switch (scheme.kind) {
    case EmbeddingScheme::Kind::Axis:
      n.c[0] = a.x;
      n.c[1] = a.y;
      n.c[2] = a.z;
      return n;
    case EmbeddingScheme::Kind::Fiber: {
      const FanoTriple t = fano_triples()[scheme.fiber - 1];
      n.c[t.i - 1] = a.x;
      n.c[t.j - 1] = a.y;
      n.c[t.k - 1] = a.z;
      return n;
    }
    case EmbeddingScheme::Kind::Custom:
      if (scheme.table == nullptr)
        throw validation_error("custom embedding scheme has no table attached");
      return scheme.table->lookup(a);
  }
  throw validation_error("embed_direction: unknown scheme");
}

int raw_score_7(const Vector3& a, Orientation lambda, const EmbeddingScheme& scheme) {
  const Octonion q = Octonion::from_imag(embed_direction(a, scheme));
  const Octonion product = (-q) * (q * lambda.value());
  Octonion rest = product;
  rest.c[0] = 0.0;
  if (rest.norm() > 1e-10)
    throw consistency_error("raw_score_7: non-scalar residual in outcome product");
  return product.real() > 0.0 ? +1 : -1;
}

EquatorialPoint7 standard_score_7(const Vector3& a, Orientation lambda,
                                  const EmbeddingScheme& scheme) {
  return {embed_direction(a, scheme), lambda};
}

Octonion reweighted_score(const EquatorialPoint7& point,
                          const stats::LambdaDistribution& dist) {
  return point.as_octonion() * dist.kappa(point.lambda);
}

double noisy_raw_mean(const Vector3& a, Orientation lambda, const DetectorNoise& noise,
                      const EmbeddingScheme& scheme) {
  if (noise.p_plus < 0.0 || noise.p_plus > 1.0)
    throw validation_error("detector noise probability must lie in [0, 1]");
  const int score = raw_score_7(a, lambda, scheme);
  // sum over nu of p(nu) * (nu * score)
  return (noise.p_plus - (1.0 - noise.p_plus)) * score;
}

Octonion oriented_mul(const Octonion& x, const Octonion& y, Orientation lambda) {
  return lambda.sign() > 0 ? x * y : y * x;
}

std::string to_string(AssociationOrder order) {
  return order == AssociationOrder::LeftToRight ? "left-to-right" : "right-to-left";
}

Octonion chain_product(std::span<const EquatorialPoint7> points, AssociationOrder order) {
  if (points.size() < 2)
    throw validation_error("chain_product: need at least two equatorial points");
  const Orientation lambda = points.front().lambda;
  for (const auto& p : points) {
    if (!(p.lambda == lambda))
      throw validation_error("chain_product: points must share one orientation");
  }
  if (order == AssociationOrder::LeftToRight) {
    Octonion acc = points[0].as_octonion();
    for (std::size_t i = 1; i < points.size(); ++i)
      acc = oriented_mul(acc, points[i].as_octonion(), lambda);
    return acc;
  }
  Octonion acc = points.back().as_octonion();
  for (std::size_t i = points.size() - 1; i-- > 0;)
    acc = oriented_mul(points[i].as_octonion(), acc, lambda);
  return acc;
}

DecompositionResult product_decompose(std::span<const EquatorialPoint7> points,
                                      AssociationOrder order) {
  const Octonion s = chain_product(points, order);
  DecompositionResult result;
  result.f = s.real();
  result.order = order;
  const Vector7 im = s.imag();
  result.g = im.norm();
  if (result.g > 0.0) result.axis = im * (1.0 / result.g);
  return result;
}

namespace {

std::vector<EquatorialPoint7> score_points(std::span<const Vector3> directions,
                                           const EmbeddingScheme& scheme,
                                           Orientation lambda) {
  std::vector<EquatorialPoint7> points;
  points.reserve(directions.size());
  for (const auto& d : directions) points.push_back(standard_score_7(d, lambda, scheme));
  return points;
}

}  // namespace

ExpectationResult expectation_lr(const ExpectationConfig& config) {
  if (config.trials == 0) throw validation_error("expectation_lr: need at least one trial");
  if (config.directions.size() < 2)
    throw validation_error("expectation_lr: need at least two directions");

  const auto points_plus = score_points(config.directions, config.scheme, Orientation::plus());
  const auto points_minus =
      score_points(config.directions, config.scheme, Orientation::minus());
  const Octonion s_plus = chain_product(points_plus, config.order);
  const Octonion s_minus = chain_product(points_minus, config.order);
  const double rho_plus = config.lambda_law.rho(Orientation::plus());
  const double rho_minus = config.lambda_law.rho(Orientation::minus());

  const std::uint64_t n = config.trials;
  const std::uint64_t n_plus =
      count_plus_orientations(n, config.seed, config.lambda_law.p_plus(), config.workers);
  const std::uint64_t n_minus = n - n_plus;

  const Octonion avg = (s_plus * (rho_plus * static_cast<double>(n_plus)) +
                        s_minus * (rho_minus * static_cast<double>(n_minus))) *
                       (1.0 / static_cast<double>(n));
  const double rho_avg = (rho_plus * static_cast<double>(n_plus) +
                          rho_minus * static_cast<double>(n_minus)) /
                         static_cast<double>(n);

  ExpectationResult result;
  result.expectation = avg.real();
  result.first_term = s_plus.real() * rho_avg;  // real part is even in lambda
  result.second_term_magnitude = avg.imag().norm();
  result.rho_normalization = rho_avg;
  result.trials = n;
  result.standard_error = 1.0 / std::sqrt(static_cast<double>(n));
  result.order = config.order;
  return result;
}

ExpectationResult expectation_single_orientation(std::span<const Vector3> directions,
                                                 const EmbeddingScheme& scheme,
                                                 Orientation lambda,
                                                 AssociationOrder order) {
  if (directions.size() < 2)
    throw validation_error("expectation_single_orientation: need at least two directions");
  const auto points = score_points(directions, scheme, lambda);
  const Octonion s = chain_product(points, order);
  ExpectationResult result;
  result.expectation = s.real();
  result.first_term = s.real();
  result.second_term_magnitude = s.imag().norm();
  result.rho_normalization = 1.0;
  result.trials = 1;
  result.standard_error = 1.0;
  result.order = order;
  return result;
}

}  // namespace parasphere::s7
