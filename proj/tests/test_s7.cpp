#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "parasphere/epr.hpp"
#include "parasphere/s7.hpp"
#include "test_util.hpp"

using namespace parasphere;
using namespace parasphere::s7;
using testutil::max_abs_diff;
using testutil::random_unit;

namespace {

const Vector3 kXAxis{1, 0, 0};

Vector3 in_plane(double deg) {
  const double rad = deg * std::numbers::pi / 180.0;
  return {std::cos(rad), std::sin(rad), 0.0};
}

std::vector<EquatorialPoint7> points_for(const std::vector<Vector3>& dirs,
                                         const EmbeddingScheme& scheme, Orientation lambda) {
  std::vector<EquatorialPoint7> pts;
  for (const auto& d : dirs) pts.push_back(standard_score_7(d, lambda, scheme));
  return pts;
}

}  // namespace

TEST_CASE("direction embeddings") {
  const Vector7 axis = embed_direction(kXAxis, EmbeddingScheme::axis());
  CHECK(axis.c[0] == 1.0);
  for (int i = 1; i < 7; ++i) CHECK(axis.c[i] == 0.0);

  // fiber1 places the components on the slots of the first triple (1, 2, 4).
  const Vector3 a{0.6, 0.48, 0.64};
  const Vector7 fib = embed_direction(a.normalized(), EmbeddingScheme::fiber_scheme(1));
  const Vector3 an = a.normalized();
  CHECK(fib.c[0] == an.x);
  CHECK(fib.c[1] == an.y);
  CHECK(fib.c[3] == an.z);
  CHECK(fib.c[2] == 0.0);
  CHECK(fib.c[4] == 0.0);

  for (int t = 0; t < 100; ++t) {
    const Vector3 d = random_unit(41, t);
    CHECK(std::abs(embed_direction(d, EmbeddingScheme::axis()).norm() - 1.0) <= 1e-12);
    for (int k = 1; k <= 7; ++k)
      CHECK(std::abs(embed_direction(d, EmbeddingScheme::fiber_scheme(k)).norm() - 1.0) <=
            1e-12);
  }

  // Products of fiber1-embedded points stay inside the quaternion subalgebra
  // spanned by {1, e1, e2, e4}.
  for (int t = 0; t < 50; ++t) {
    const Octonion p =
        standard_score_7(random_unit(41, 200 + 2 * t), Orientation::plus(),
                         EmbeddingScheme::fiber_scheme(1))
            .as_octonion();
    const Octonion q =
        standard_score_7(random_unit(41, 201 + 2 * t), Orientation::plus(),
                         EmbeddingScheme::fiber_scheme(1))
            .as_octonion();
    Octonion outside = p * q;
    outside.c[0] = outside.c[1] = outside.c[2] = outside.c[4] = 0.0;
    CHECK(outside.norm() == 0.0);
  }

  CHECK(EmbeddingScheme::parse("axis").kind == EmbeddingScheme::Kind::Axis);
  CHECK(EmbeddingScheme::parse("fiber3").fiber == 3);
  CHECK_THROWS_AS(EmbeddingScheme::parse("fiber8"), validation_error);
  CHECK_THROWS_AS(EmbeddingScheme::parse("spiral"), validation_error);
  CHECK_THROWS_AS(embed_direction({1.0, 1.0, 0.0}, EmbeddingScheme::axis()), validation_error);
}

TEST_CASE("custom embedding tables") {
  std::istringstream good(
      "# direction : embedding\n"
      "1 0 0 : 0 1 0 0 0 0 0\n"
      "0 1 0 : 0 0 0 0 0 0 1\n");
  const EmbeddingTable table = EmbeddingTable::parse(good);
  CHECK(table.size() == 2);
  const Vector7 n = table.lookup({1.0, 0.0, 0.0});
  CHECK(n.c[1] == 1.0);
  CHECK_THROWS_AS(table.lookup({0.0, 0.0, 1.0}), validation_error);

  const EmbeddingScheme scheme = EmbeddingScheme::custom(table);
  CHECK(embed_direction({0.0, 1.0, 0.0}, scheme).c[6] == 1.0);

  std::istringstream non_unit("1 0 0 : 0 2 0 0 0 0 0\n");
  CHECK_THROWS_AS(EmbeddingTable::parse(non_unit), validation_error);
  std::istringstream malformed("1 0 0 0 1 0\n");
  CHECK_THROWS_AS(EmbeddingTable::parse(malformed), validation_error);
  std::istringstream short_row("1 0 0 : 1 0 0\n");
  CHECK_THROWS_AS(EmbeddingTable::parse(short_row), validation_error);
}

TEST_CASE("raw score on the 7-sphere equals the orientation sign") {
  for (int t = 0; t < 100; ++t) {
    const Vector3 a = random_unit(42, t);
    CHECK(raw_score_7(a, Orientation::plus(), EmbeddingScheme::axis()) == 1);
    CHECK(raw_score_7(a, Orientation::minus(), EmbeddingScheme::axis()) == -1);
    CHECK(raw_score_7(a, Orientation::plus(), EmbeddingScheme::fiber_scheme(4)) == 1);
  }
  CHECK_THROWS_AS(raw_score_7({3.0, 0.0, 0.0}, Orientation::plus(), EmbeddingScheme::axis()),
                  validation_error);
}

TEST_CASE("noisy raw mean") {
  const Vector3 a = random_unit(43, 0);
  const EmbeddingScheme scheme = EmbeddingScheme::axis();
  CHECK(noisy_raw_mean(a, Orientation::plus(), {1.0}, scheme) == 1.0);
  CHECK(noisy_raw_mean(a, Orientation::plus(), {0.5}, scheme) == 0.0);
  CHECK(noisy_raw_mean(a, Orientation::plus(), {0.9}, scheme) ==
        doctest::Approx(0.8).epsilon(1e-15));
  CHECK(noisy_raw_mean(a, Orientation::minus(), {0.9}, scheme) ==
        doctest::Approx(-0.8).epsilon(1e-15));
  CHECK_THROWS_AS(noisy_raw_mean(a, Orientation::plus(), {1.5}, scheme), validation_error);

  // Detector noise moves the raw-score mean but never the standard score:
  // the score path takes no noise parameter, and repeated evaluation is
  // bitwise stable.
  const EquatorialPoint7 p = standard_score_7(a, Orientation::plus(), scheme);
  const EquatorialPoint7 q = standard_score_7(a, Orientation::plus(), scheme);
  CHECK(max_abs_diff(p.as_octonion(), q.as_octonion()) == 0.0);
}

TEST_CASE("standard scores are unit pure imaginaries, odd in lambda") {
  for (int t = 0; t < 100; ++t) {
    const Vector3 a = random_unit(44, t);
    const EquatorialPoint7 p = standard_score_7(a, Orientation::plus(), EmbeddingScheme::axis());
    const Octonion q = p.as_octonion();
    CHECK(q.real() == 0.0);
    CHECK(max_abs_diff(q * q, Octonion::scalar(-1.0)) <= 1e-12);

    const EquatorialPoint7 m =
        standard_score_7(a, Orientation::minus(), EmbeddingScheme::axis());
    CHECK(max_abs_diff((q + m.as_octonion()) * 0.5, Octonion{}) == 0.0);
  }

  // Reweighting multiplies by kappa(lambda).
  const stats::LambdaDistribution biased(0.6, 2);
  const Vector3 a = random_unit(44, 500);
  const EquatorialPoint7 p = standard_score_7(a, Orientation::plus(), EmbeddingScheme::axis());
  CHECK(max_abs_diff(reweighted_score(p, biased), p.as_octonion() * 0.5) <= 1e-15);
}

TEST_CASE("chain products and decomposition") {
  const EmbeddingScheme axis = EmbeddingScheme::axis();

  // Two equal points: the square of a unit imaginary, f = -1, g = 0.
  const Vector3 a = random_unit(45, 0);
  const auto two_equal = points_for({a, a}, axis, Orientation::plus());
  const DecompositionResult d0 = product_decompose(two_equal);
  CHECK(d0.f == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(d0.g <= 1e-12);

  // f is even and the imaginary part odd in lambda, for odd and even lengths.
  for (std::size_t len : {2u, 3u, 4u, 5u, 6u}) {
    std::vector<Vector3> dirs;
    for (std::size_t i = 0; i < len; ++i) dirs.push_back(random_unit(46, 10 * len + i));
    const Octonion sp = chain_product(points_for(dirs, axis, Orientation::plus()));
    const Octonion sm = chain_product(points_for(dirs, axis, Orientation::minus()));
    CHECK(std::abs(sp.real() - sm.real()) <= 1e-12);
    CHECK((sp.imag().dot(sp.imag()) == 0.0 ||
           max_abs_diff(Octonion::from_imag(sp.imag()), -Octonion::from_imag(sm.imag())) <=
               1e-12));

    // Unit norm is preserved, so f^2 + g^2 = 1.
    for (const int sign : {+1, -1}) {
      const auto pts = points_for(dirs, axis, Orientation(sign));
      for (const auto order : {AssociationOrder::LeftToRight, AssociationOrder::RightToLeft}) {
        const DecompositionResult d = product_decompose(pts, order);
        CHECK(std::abs(d.f * d.f + d.g * d.g - 1.0) <= 1e-10);
        // Reconstructing the spinor from (f, g, axis) recovers the product.
        const Octonion rebuilt =
            Octonion::scalar(d.f) + Octonion::from_imag(d.axis) * d.g;
        CHECK(max_abs_diff(rebuilt, chain_product(pts, order)) <= 1e-10);
      }
    }
  }

  // Association order is material: for three generic axis-embedded points the
  // two orders differ by the (nonzero) associator.
  std::vector<Vector3> dirs;
  for (int i = 0; i < 3; ++i) dirs.push_back(random_unit(47, i));
  const auto pts = points_for(dirs, axis, Orientation::plus());
  const Octonion ltr = chain_product(pts, AssociationOrder::LeftToRight);
  const Octonion rtl = chain_product(pts, AssociationOrder::RightToLeft);
  CHECK(max_abs_diff(ltr, rtl) > 1e-6);

  CHECK_THROWS_AS(product_decompose(std::vector<EquatorialPoint7>{}), validation_error);
  CHECK_THROWS_AS(product_decompose(points_for({a}, axis, Orientation::plus())),
                  validation_error);
  std::vector<EquatorialPoint7> mixed = {
      standard_score_7(a, Orientation::plus(), axis),
      standard_score_7(a, Orientation::minus(), axis)};
  CHECK_THROWS_AS(product_decompose(mixed), validation_error);
}

TEST_CASE("fair-lambda average of a single equatorial point is zero") {
  for (int t = 0; t < 50; ++t) {
    const Vector3 a = random_unit(48, t);
    const Octonion plus = standard_score_7(a, Orientation::plus(), EmbeddingScheme::axis())
                              .as_octonion();
    const Octonion minus = standard_score_7(a, Orientation::minus(), EmbeddingScheme::axis())
                               .as_octonion();
    CHECK(max_abs_diff((plus + minus) * 0.5, Octonion{}) == 0.0);
  }
}

TEST_CASE("local-realistic expectation: fair coin recovers the 3-sphere result") {
  ExpectationConfig config;
  config.directions = {in_plane(0.0), in_plane(72.0)};
  config.scheme = EmbeddingScheme::fiber_scheme(1);
  config.trials = 100000;
  config.seed = 9;
  const ExpectationResult r = expectation_lr(config);
  const double tol = 5.0 / std::sqrt(static_cast<double>(config.trials));

  const double reference = epr::correlation_exact(config.directions[0], config.directions[1]);
  CHECK(std::abs(r.expectation - reference) <= tol);
  CHECK(r.second_term_magnitude <= tol);
  CHECK(r.rho_normalization == 1.0);
  CHECK(r.first_term == doctest::Approx(reference).epsilon(1e-12));

  // Worker count never changes the draw.
  ExpectationConfig c4 = config;
  c4.workers = 4;
  const ExpectationResult r4 = expectation_lr(c4);
  CHECK(r4.expectation == r.expectation);
  CHECK(r4.second_term_magnitude == r.second_term_magnitude);

  // Four points, fair coin: the residual still vanishes stochastically.
  ExpectationConfig four = config;
  four.directions = {in_plane(0.0), in_plane(30.0), in_plane(45.0), in_plane(160.0)};
  const ExpectationResult rf = expectation_lr(four);
  CHECK(rf.second_term_magnitude <= tol);
  CHECK(std::abs(rf.expectation - rf.first_term) <= 1e-12);

  ExpectationConfig bad = config;
  bad.directions = {in_plane(0.0)};
  CHECK_THROWS_AS(expectation_lr(bad), validation_error);
  bad = config;
  bad.trials = 0;
  CHECK_THROWS_AS(expectation_lr(bad), validation_error);
}

TEST_CASE("local-realistic expectation under bias, and the degenerate case") {
  ExpectationConfig config;
  config.directions = {in_plane(0.0), in_plane(72.0)};
  config.scheme = EmbeddingScheme::fiber_scheme(1);
  config.trials = 200000;
  config.seed = 13;
  config.lambda_law = stats::LambdaDistribution(0.4, 2);
  const ExpectationResult r = expectation_lr(config);
  // With m = 2 the reweighted distribution stays normalized.
  CHECK(std::abs(r.rho_normalization - 1.0) <= 5.0 / std::sqrt(static_cast<double>(config.trials)));
  CHECK(std::abs(r.expectation - r.first_term) <= 1e-12);

  // A single fixed orientation: no averaging, the residual term is the full
  // imaginary magnitude of the spinor.
  const std::vector<Vector3> dirs = {in_plane(0.0), in_plane(72.0)};
  const ExpectationResult single = expectation_single_orientation(
      dirs, EmbeddingScheme::fiber_scheme(1), Orientation::plus());
  const double angle = 72.0 * std::numbers::pi / 180.0;
  CHECK(single.expectation == doctest::Approx(-std::cos(angle)).epsilon(1e-12));
  CHECK(single.second_term_magnitude == doctest::Approx(std::sin(angle)).epsilon(1e-12));
  CHECK(single.second_term_magnitude > 0.5);
}
