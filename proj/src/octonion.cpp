#include "parasphere/octonion.hpp"

namespace parasphere {

const FanoTable& fano_triples() {
  static const FanoTable table = {{{1, 2, 4},
                                   {2, 3, 5},
                                   {3, 4, 6},
                                   {4, 5, 7},
                                   {5, 6, 1},
                                   {6, 7, 2},
                                   {7, 1, 3}}};
  return table;
}

namespace {

struct TableEntry {
  int sign;
  int index;
};

// Basis product e_a e_b = sign * e_index, generated from the Fano triples so
// the triples stay the single source of truth.
std::array<std::array<TableEntry, 8>, 8> build_table() {
  std::array<std::array<TableEntry, 8>, 8> t{};
  for (int a = 0; a < 8; ++a) {
    t[0][a] = {1, a};
    t[a][0] = {1, a};
  }
  for (int a = 1; a < 8; ++a) t[a][a] = {-1, 0};
  for (const auto& [i, j, k] : fano_triples()) {
    t[i][j] = {1, k};
    t[j][i] = {-1, k};
    t[j][k] = {1, i};
    t[k][j] = {-1, i};
    t[k][i] = {1, j};
    t[i][k] = {-1, j};
  }
  return t;
}

const std::array<std::array<TableEntry, 8>, 8>& oct_table() {
  static const auto table = build_table();
  return table;
}

}  // namespace

Octonion Octonion::unit(int i) {
  if (i < 0 || i > 7) throw validation_error("octonion basis index must be in 0..7");
  Octonion o;
  o.c[i] = 1.0;
  return o;
}

Octonion Octonion::operator*(const Octonion& o) const {
  const auto& table = oct_table();
  Octonion out;
  for (int i = 0; i < 8; ++i) {
    if (c[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const auto [sign, index] = table[i][j];
      out.c[index] += sign * c[i] * o.c[j];
    }
  }
  return out;
}

Octonion Octonion::inverse() const {
  const double n2 = norm_sq();
  if (n2 == 0.0) throw validation_error("division by zero octonion");
  return conjugate() * (1.0 / n2);
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return (x * y) * z - x * (y * z);
}

namespace {

// Quaternions as the closed subalgebra spanned by {1, e1, e2, e4}.
constexpr std::array<int, 4> kQuaternionSlots = {0, 1, 2, 4};

Octonion embed_n(int n, std::span<const double> v) {
  Octonion o;
  switch (n) {
    case 1:
      o.c[0] = v[0];
      break;
    case 2:
      o.c[0] = v[0];
      o.c[1] = v[1];
      break;
    case 4:
      for (int i = 0; i < 4; ++i) o.c[kQuaternionSlots[i]] = v[i];
      break;
    case 8:
      for (int i = 0; i < 8; ++i) o.c[i] = v[i];
      break;
  }
  return o;
}

}  // namespace

HurwitzSides hurwitz_check(int n, std::span<const double> x, std::span<const double> y) {
  if (n != 1 && n != 2 && n != 4 && n != 8)
    throw validation_error("hurwitz_check: unsupported dimension (must be 1, 2, 4, or 8)");
  if (x.size() != static_cast<std::size_t>(n) || y.size() != static_cast<std::size_t>(n))
    throw validation_error("hurwitz_check: input length must equal n");

  double sx = 0.0, sy = 0.0;
  for (double v : x) sx += v * v;
  for (double v : y) sy += v * v;

  const Octonion z = embed_n(n, x) * embed_n(n, y);
  return {sx * sy, z.norm_sq()};
}

Vector7 cross7(const Vector7& u, const Vector7& v) {
  return (Octonion::from_imag(u) * Octonion::from_imag(v)).imag();
}

}  // namespace parasphere
