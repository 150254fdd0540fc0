#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>

#include "parasphere/errors.hpp"

namespace parasphere {

// Absolute tolerance for exact-algebra identities (all operands O(1)).
inline constexpr double kIdentityTol = 1e-12;
// Looser tolerance for validating caller-supplied unit vectors.
inline constexpr double kUnitInputTol = 1e-9;

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }

  Vector3 cross(const Vector3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }

  double norm() const { return std::sqrt(dot(*this)); }

  Vector3 normalized() const {
    const double n = norm();
    if (n == 0.0) throw validation_error("cannot normalize the zero vector");
    return {x / n, y / n, z / n};
  }

  bool is_unit(double tol = kUnitInputTol) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  Vector3 operator-() const { return {-x, -y, -z}; }
  Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

// The hidden variable: one of the two orientations of the sphere.
class Orientation {
 public:
  explicit Orientation(int sign) : sign_(sign) {
    if (sign != 1 && sign != -1) throw validation_error("orientation sign must be +1 or -1");
  }

  static Orientation plus() { return Orientation(+1); }
  static Orientation minus() { return Orientation(-1); }

  int sign() const { return sign_; }
  double value() const { return static_cast<double>(sign_); }
  Orientation flipped() const { return Orientation(-sign_); }

  bool operator==(const Orientation& o) const { return sign_ == o.sign_; }

 private:
  int sign_;
};

// Blade order of the graded basis: {1, ex, ey, ez, ex^ey, ey^ez, ez^ex, ex^ey^ez}.
enum Blade : int {
  kScalarBlade = 0,
  kEx = 1,
  kEy = 2,
  kEz = 3,
  kExy = 4,
  kEyz = 5,
  kEzx = 6,
  kExyz = 7,
};

namespace detail {

// Each blade as a bitmask (bit0=ex, bit1=ey, bit2=ez) plus its sign relative to
// the ascending-index orientation of that mask (ez^ex = -(ex^ez)).
inline constexpr std::array<unsigned, 8> kBladeMask = {0, 1, 2, 4, 3, 6, 5, 7};
inline constexpr std::array<int, 8> kBladeSign = {1, 1, 1, 1, 1, 1, -1, 1};
inline constexpr std::array<int, 8> kMaskToBlade = {0, 1, 2, 4, 3, 6, 5, 7};
inline constexpr std::array<int, 8> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

// Transpositions needed to merge two ascending blades into ascending order.
constexpr int reorder_swaps(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return swaps;
}

struct GpTerm {
  int blade;
  int sign;
};

// Geometric-product table over the blade order above, generated from the
// Euclidean metric (each e_i squares to +1) and anticommutation.
constexpr std::array<std::array<GpTerm, 8>, 8> make_gp_table() {
  std::array<std::array<GpTerm, 8>, 8> table{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const unsigned mi = kBladeMask[i];
      const unsigned mj = kBladeMask[j];
      const int blade = kMaskToBlade[mi ^ mj];
      int sign = kBladeSign[i] * kBladeSign[j] * kBladeSign[blade];
      if (reorder_swaps(mi, mj) % 2 != 0) sign = -sign;
      table[i][j] = {blade, sign};
    }
  }
  return table;
}

inline constexpr auto kGpTable = make_gp_table();

}  // namespace detail

struct Multivector {
  std::array<double, 8> c{};  // coefficients in the Blade order

  static Multivector scalar(double s) {
    Multivector m;
    m.c[kScalarBlade] = s;
    return m;
  }

  static Multivector basis(Blade b) {
    Multivector m;
    m.c[b] = 1.0;
    return m;
  }

  static Multivector from_vector(const Vector3& v) {
    Multivector m;
    m.c[kEx] = v.x;
    m.c[kEy] = v.y;
    m.c[kEz] = v.z;
    return m;
  }

  double scalar_part() const { return c[kScalarBlade]; }

  double norm_sq() const {
    double s = 0.0;
    for (double v : c) s += v * v;
    return s;
  }

  double norm() const { return std::sqrt(norm_sq()); }

  Multivector operator+(const Multivector& o) const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }

  Multivector operator-(const Multivector& o) const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }

  Multivector operator-() const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
  }

  Multivector operator*(double s) const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] * s;
    return r;
  }
};

// Geometric product; associative and bilinear.
Multivector gp(const Multivector& m1, const Multivector& m2);

// Geometric product composed in the order fixed by the sphere orientation:
// lambda = +1 multiplies left-to-right, lambda = -1 in the reversed order
// (the opposite algebra). This is the composition rule under which the
// lambda-handed bivector basis satisfies its defining algebra for both signs.
Multivector oriented_gp(const Multivector& m1, const Multivector& m2, Orientation lambda);

// Grade-lowering half of the geometric product: (ab + ba)/2 = cos(angle) for
// unit vectors.
double inner(const Vector3& a, const Vector3& b);

// Grade-raising half: (ab - ba)/2, the bivector I(a x b); antisymmetric.
Multivector outer(const Vector3& a, const Vector3& b);

// The unit bivector mu.n = lambda (n_x ey^ez + n_y ez^ex + n_z ex^ey); its
// square is -1. Rejects non-unit n.
Multivector bivector_of(const Vector3& n, Orientation mu_sign);

// cos(theta) + (I.c) sin(theta): a rotor about the unit axis c.
Multivector rotor_exp(const Vector3& c, double theta);

// Projection onto grade k (0..3); other grades zeroed.
Multivector grade(const Multivector& m, int k);

// The bivector I v for an arbitrary (not necessarily unit) vector v.
Multivector volume_times(const Vector3& v);

}  // namespace parasphere
