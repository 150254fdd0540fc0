// Command-line front end: algebra self-checks, correlation simulations on the
// 3-sphere and the Mobius strip, CHSH maximization, and 7-sphere spinor
// decomposition. All randomness is counter-based on an explicit seed, so
// identical invocations produce byte-identical output for any worker count.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parasphere/epr.hpp"
#include "parasphere/mobius.hpp"
#include "parasphere/octonion.hpp"
#include "parasphere/record.hpp"
#include "parasphere/rng.hpp"
#include "parasphere/s7.hpp"
#include "parasphere/stats.hpp"

namespace {

using namespace parasphere;

constexpr const char* kVersion = "1.0.0";

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Angle grids are given in degrees as "start:stop:step" or a single value.
std::vector<double> parse_angle_grid(const std::string& spec) {
  std::vector<double> angles;
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) {
    angles.push_back(std::stod(spec));
    return angles;
  }
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw validation_error("angle grid must be 'start:stop:step' or a single value");
  const double start = std::stod(spec.substr(0, c1));
  const double stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(spec.substr(c2 + 1));
  if (step <= 0.0 || stop < start) throw validation_error("angle grid requires step > 0 and stop >= start");
  for (int k = 0;; ++k) {
    const double a = start + k * step;
    if (a > stop + 1e-9) break;
    angles.push_back(a);
  }
  return angles;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open output file: " + path);
  out << text;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// check-algebra

struct CheckLine {
  std::string name;
  double residual;
  double tolerance;
};

double eq7_table_residual() {
  // b_j b_k = -delta_jk - eps_jkl b_l over the fixed bivector basis b_j = I e_j.
  const Vector3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto eps = [](int j, int k, int l) -> double {
    if (j == k || k == l || j == l) return 0.0;
    return ((j + 1) % 3 == k) ? 1.0 : -1.0;
  };
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      Multivector expected = Multivector::scalar(j == k ? -1.0 : 0.0);
      for (int l = 0; l < 3; ++l) expected = expected - volume_times(axes[l]) * eps(j, k, l);
      const Multivector got = gp(volume_times(axes[j]), volume_times(axes[k]));
      worst = std::max(worst, (got - expected).norm());
    }
  }
  return worst;
}

Vector3 random_unit(std::uint64_t seed, std::uint64_t idx) {
  // Uniform on the sphere via z and azimuth.
  const double z = 2.0 * rng::uniform01(rng::trial_word(seed, idx, 2)) - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng::uniform01(rng::trial_word(seed, idx, 3));
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

double sphere_identity_residual(std::uint64_t seed, int pairs) {
  // (mu.a)(mu.b) = -a.b - mu.(a x b), both orientations.
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const Vector3 a = random_unit(seed, 2 * i);
    const Vector3 b = random_unit(seed, 2 * i + 1);
    for (const int sign : {+1, -1}) {
      const Orientation lambda(sign);
      const Multivector lhs = oriented_gp(bivector_of(a, lambda), bivector_of(b, lambda), lambda);
      Multivector rhs = Multivector::scalar(-inner(a, b)) - volume_times(a.cross(b)) * lambda.value();
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

double fano_residual() {
  // Structure checks: triple count, pair coverage, and e_i e_j = e_k via the
  // generated product. Any violation counts as residual 1.
  const auto& triples = fano_triples();
  if (triples.size() != 7) return 1.0;
  bool seen[8][8] = {};
  for (const auto& [i, j, k] : triples) {
    if (seen[i][j] || seen[j][k] || seen[k][i]) return 1.0;
    seen[i][j] = seen[j][i] = true;
    seen[j][k] = seen[k][j] = true;
    seen[k][i] = seen[i][k] = true;
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (!seen[i][j]) return 1.0;

  double worst = 0.0;
  for (const auto& [i, j, k] : triples) {
    const Octonion lhs = Octonion::unit(i) * Octonion::unit(j);
    worst = std::max(worst, (lhs - Octonion::unit(k)).norm());
  }
  return worst;
}

double hurwitz_residual(int n, std::uint64_t seed, int pairs) {
  double worst = 0.0;
  std::vector<double> x(n), y(n);
  for (int t = 0; t < pairs; ++t) {
    for (int i = 0; i < n; ++i) {
      x[i] = 2.0 * rng::uniform01(rng::trial_word(seed, t * 16 + i, 4)) - 1.0;
      y[i] = 2.0 * rng::uniform01(rng::trial_word(seed, t * 16 + i, 5)) - 1.0;
    }
    const auto [lhs, rhs] = hurwitz_check(n, x, y);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double associator_residual(std::uint64_t seed) {
  // Fixed fixture: [e1, e2, e3] = (e1 e2) e3 - e1 (e2 e3) = -2 e6.
  const Octonion fixture =
      associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(3));
  double worst = (fixture - Octonion::unit(6) * -2.0).norm();

  // Alternativity on random octonions and associativity on the quaternion
  // subalgebra {1, e1, e2, e4}.
  for (int t = 0; t < 100; ++t) {
    Octonion x, y;
    for (int i = 0; i < 8; ++i) {
      x.c[i] = 2.0 * rng::uniform01(rng::trial_word(seed, t * 8 + i, 6)) - 1.0;
      y.c[i] = 2.0 * rng::uniform01(rng::trial_word(seed, t * 8 + i, 7)) - 1.0;
    }
    worst = std::max(worst, associator(x, x, y).norm());
    worst = std::max(worst, associator(x, y, y).norm());
  }
  const int quat[4] = {0, 1, 2, 4};
  for (int a : quat)
    for (int b : quat)
      for (int c : quat)
        worst = std::max(worst, associator(Octonion::unit(a), Octonion::unit(b),
                                           Octonion::unit(c))
                                    .norm());
  return worst;
}

int run_check_algebra(std::uint64_t seed) {
  std::vector<CheckLine> lines;
  lines.push_back({"bivector-basis-table", eq7_table_residual(), 1e-12});
  lines.push_back({"sphere-product-identity", sphere_identity_residual(seed, 1000), 1e-12});
  lines.push_back({"fano-table", fano_residual(), 1e-12});
  for (int n : {1, 2, 4, 8})
    lines.push_back({"hurwitz-n" + std::to_string(n), hurwitz_residual(n, seed, 10000), 1e-12});
  lines.push_back({"associator-fixtures", associator_residual(seed), 1e-10});

  bool ok = true;
  for (const auto& line : lines) {
    const bool pass = line.residual <= line.tolerance;
    ok = ok && pass;
    std::printf("%-26s max residual %.3e  (tol %.0e)  %s\n", line.name.c_str(),
                line.residual, line.tolerance, pass ? "PASS" : "FAIL");
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// simulate-epr / simulate-mobius

int run_simulate_epr(const std::string& angles_spec, std::uint64_t n, std::uint64_t seed,
                     const std::string& estimator, double lambda_bar, int contexts,
                     unsigned workers, const std::string& format, const std::string& out) {
  const auto angles = parse_angle_grid(angles_spec);
  const bool want_standard = estimator.empty() || estimator == "standard-score";
  const bool want_coincidence = estimator.empty() || estimator == "coincidence";
  if (!want_standard && !want_coincidence)
    throw validation_error("estimator must be 'standard-score' or 'coincidence'");

  std::vector<CorrelationRecord> records;
  bool discrepancy = false;
  for (const double theta_deg : angles) {
    const double theta = deg_to_rad(theta_deg);
    epr::ExperimentConfig config;
    config.a = {1.0, 0.0, 0.0};
    config.b = {std::cos(theta), std::sin(theta), 0.0};
    config.trials = n;
    config.seed = seed;
    config.lambda_law = stats::LambdaDistribution(lambda_bar, contexts);
    config.workers = workers;
    const epr::SimulationResult result = epr::simulate(config);
    discrepancy = discrepancy || result.raw_product_constant;

    CorrelationRecord row;
    row.angle_deg = theta_deg;
    row.reference = -std::cos(theta);
    row.standard_error = result.standard_error;
    row.trials = result.trials;
    row.c_pp = result.counts.pp;
    row.c_pm = result.counts.pm;
    row.c_mp = result.counts.mp;
    row.c_mm = result.counts.mm;
    if (want_standard) {
      row.estimate = result.standard_score_estimate;
      row.estimator = "standard-score";
      records.push_back(row);
    }
    if (want_coincidence) {
      row.estimate = result.coincidence_estimate;
      row.estimator = "coincidence";
      records.push_back(row);
    }
  }

  RunMetadata meta{"simulate-epr", seed, workers, kVersion, discrepancy};
  write_output(format == "json" ? to_json(records, meta) : to_csv(records), out);
  return 0;
}

int run_simulate_mobius(const std::string& angles_spec, std::uint64_t n, std::uint64_t seed,
                        unsigned workers, const std::string& format, const std::string& out) {
  const auto angles = parse_angle_grid(angles_spec);
  std::vector<CorrelationRecord> records;
  for (const double eta_deg : angles)
    records.push_back(mobius::simulate(deg_to_rad(eta_deg), n, seed, workers));
  RunMetadata meta{"simulate-mobius", seed, workers, kVersion, false};
  write_output(format == "json" ? to_json(records, meta) : to_csv(records), out);
  return 0;
}

// ---------------------------------------------------------------------------
// chsh

int run_chsh(int restarts, std::uint64_t seed) {
  epr::ChshMaximizeOptions options;
  options.restarts = restarts;
  options.seed = seed;
  const epr::ChshMaximum best = epr::chsh_maximize(options);
  const double bound = epr::chsh_bound(best.quadruple);
  const double tsirelson = 2.0 * std::sqrt(2.0);

  auto print_vec = [](const char* name, const Vector3& v) {
    std::printf("%-8s %s %s %s\n", name, fmt(v.x).c_str(), fmt(v.y).c_str(),
                fmt(v.z).c_str());
  };
  print_vec("a:", best.quadruple.a);
  print_vec("a_prime:", best.quadruple.a_prime);
  print_vec("b:", best.quadruple.b);
  print_vec("b_prime:", best.quadruple.b_prime);
  std::printf("value:   %s\n", fmt(best.value).c_str());
  std::printf("bound:   %s\n", fmt(bound).c_str());
  std::printf("gap_to_tsirelson: %s\n", fmt(std::abs(best.value - tsirelson)).c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// s7-decompose

std::vector<Vector3> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open points file: " + path);
  std::vector<Vector3> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    Vector3 v;
    if (!(row >> v.x >> v.y >> v.z))
      throw validation_error("points file line " + std::to_string(line_no) +
                             ": expected 'a_x a_y a_z'");
    points.push_back(v);
  }
  if (points.size() < 2) throw validation_error("points file needs at least two directions");
  return points;
}

int run_s7_decompose(const std::string& points_path, const std::string& scheme_id,
                     const std::string& table_path, int lambda_sign,
                     const std::string& assoc) {
  const auto directions = read_points_file(points_path);

  s7::EmbeddingTable table;
  s7::EmbeddingScheme scheme;
  if (!table_path.empty()) {
    table = s7::EmbeddingTable::load(table_path);
    scheme = s7::EmbeddingScheme::custom(table);
  } else {
    scheme = s7::EmbeddingScheme::parse(scheme_id);
  }

  s7::AssociationOrder order;
  if (assoc == "left") {
    order = s7::AssociationOrder::LeftToRight;
  } else if (assoc == "right") {
    order = s7::AssociationOrder::RightToLeft;
  } else {
    throw validation_error("association order must be 'left' or 'right'");
  }

  const Orientation lambda(lambda_sign);
  std::vector<s7::EquatorialPoint7> points;
  points.reserve(directions.size());
  for (const auto& d : directions) points.push_back(s7::standard_score_7(d, lambda, scheme));
  const s7::DecompositionResult result = s7::product_decompose(points, order);

  std::printf("points: %zu\n", directions.size());
  std::printf("scheme: %s\n", scheme.name().c_str());
  std::printf("association: %s\n", s7::to_string(order).c_str());
  std::printf("f: %s\n", fmt(result.f).c_str());
  std::printf("g: %s\n", fmt(result.g).c_str());
  std::printf("axis:");
  for (double v : result.axis.c) std::printf(" %s", fmt(v).c_str());
  std::printf("\n");
  std::printf("norm_residual: %s\n",
              fmt(std::abs(result.f * result.f + result.g * result.g - 1.0)).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation simulator on parallelized spheres"};
  app.require_subcommand(1);

  // check-algebra
  auto* check = app.add_subcommand("check-algebra", "Run the exact-identity suite");
  std::uint64_t check_seed = 2024;
  check->add_option("--seed", check_seed, "Seed for the randomized identity checks")
      ->envname("PARASPHERE_SEED");

  // simulate-epr
  auto* epr_cmd = app.add_subcommand("simulate-epr", "Correlation table for the 3-sphere model");
  std::string epr_angles = "0:180:10";
  std::uint64_t epr_n = 100000;
  std::uint64_t epr_seed = 0;
  std::string epr_estimator;
  double epr_lambda_bar = 0.0;
  int epr_m = 2;
  unsigned epr_workers = 1;
  std::string epr_format = "csv";
  std::string epr_out;
  epr_cmd->add_option("--angles", epr_angles, "Angle grid in degrees, start:stop:step");
  epr_cmd->add_option("--n", epr_n, "Trials per angle");
  epr_cmd->add_option("--seed", epr_seed, "RNG seed")
      ->envname("PARASPHERE_SEED")
      ->required();
  epr_cmd->add_option("--estimator", epr_estimator,
                      "standard-score | coincidence (default: both)");
  epr_cmd->add_option("--lambda-bar", epr_lambda_bar, "Mean of the orientation coin");
  epr_cmd->add_option("--m", epr_m, "Context count for the rho reweighting");
  epr_cmd->add_option("--workers", epr_workers, "Worker threads");
  epr_cmd->add_option("--format", epr_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  epr_cmd->add_option("--out", epr_out, "Output path (default: stdout)");

  // simulate-mobius
  auto* mob_cmd = app.add_subcommand("simulate-mobius", "Correlation table for the Mobius model");
  std::string mob_angles = "0:180:10";
  std::uint64_t mob_n = 100000;
  std::uint64_t mob_seed = 0;
  unsigned mob_workers = 1;
  std::string mob_format = "csv";
  std::string mob_out;
  mob_cmd->add_option("--angles", mob_angles, "Twist-angle grid in degrees, start:stop:step");
  mob_cmd->add_option("--n", mob_n, "Trials per angle");
  mob_cmd->add_option("--seed", mob_seed, "RNG seed")
      ->envname("PARASPHERE_SEED")
      ->required();
  mob_cmd->add_option("--workers", mob_workers, "Worker threads");
  mob_cmd->add_option("--format", mob_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  mob_cmd->add_option("--out", mob_out, "Output path (default: stdout)");

  // chsh
  auto* chsh_cmd = app.add_subcommand("chsh", "Maximize the CHSH string numerically");
  int chsh_restarts = 20;
  std::uint64_t chsh_seed = 0;
  chsh_cmd->add_option("--restarts", chsh_restarts, "Random restarts");
  chsh_cmd->add_option("--seed", chsh_seed, "RNG seed")
      ->envname("PARASPHERE_SEED")
      ->required();

  // s7-decompose
  auto* s7_cmd = app.add_subcommand("s7-decompose",
                                    "Decompose a product of 7-sphere equatorial points");
  std::string s7_points;
  std::string s7_scheme = "axis";
  std::string s7_table;
  int s7_lambda = 1;
  std::string s7_assoc = "left";
  s7_cmd->add_option("--points", s7_points, "File of 'a_x a_y a_z' rows")->required();
  s7_cmd->add_option("--scheme", s7_scheme, "axis | fiber1..fiber7");
  s7_cmd->add_option("--embed-table", s7_table,
                     "Custom embedding table ('a_x a_y a_z : N_1 ... N_7' rows)");
  s7_cmd->add_option("--lambda", s7_lambda, "Orientation, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  s7_cmd->add_option("--assoc", s7_assoc, "Association order: left | right")
      ->check(CLI::IsMember({"left", "right"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return run_check_algebra(check_seed);
    if (epr_cmd->parsed())
      return run_simulate_epr(epr_angles, epr_n, epr_seed, epr_estimator, epr_lambda_bar,
                              epr_m, epr_workers, epr_format, epr_out);
    if (mob_cmd->parsed())
      return run_simulate_mobius(mob_angles, mob_n, mob_seed, mob_workers, mob_format,
                                 mob_out);
    if (chsh_cmd->parsed()) return run_chsh(chsh_restarts, chsh_seed);
    if (s7_cmd->parsed())
      return run_s7_decompose(s7_points, s7_scheme, s7_table, s7_lambda, s7_assoc);
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
