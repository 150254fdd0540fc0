#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>

#include "parasphere/errors.hpp"

namespace parasphere {

struct Vector7 {
  std::array<double, 7> c{};

  double dot(const Vector7& o) const {
    double s = 0.0;
    for (std::size_t i = 0; i < 7; ++i) s += c[i] * o.c[i];
    return s;
  }

  double norm() const { return std::sqrt(dot(*this)); }

  Vector7 normalized() const {
    const double n = norm();
    if (n == 0.0) throw validation_error("cannot normalize the zero 7-vector");
    Vector7 r;
    for (std::size_t i = 0; i < 7; ++i) r.c[i] = c[i] / n;
    return r;
  }

  Vector7 operator-() const {
    Vector7 r;
    for (std::size_t i = 0; i < 7; ++i) r.c[i] = -c[i];
    return r;
  }

  Vector7 operator*(double s) const {
    Vector7 r;
    for (std::size_t i = 0; i < 7; ++i) r.c[i] = c[i] * s;
    return r;
  }
};

// An index triple (i, j, k) with e_i e_j = e_k (and cyclically).
struct FanoTriple {
  int i;
  int j;
  int k;
};

using FanoTable = std::array<FanoTriple, 7>;

// The seven triples generating the octonion product. Every unordered pair of
// distinct imaginary indices appears in exactly one triple.
const FanoTable& fano_triples();

struct Octonion {
  std::array<double, 8> c{};  // {1, e1, ..., e7}

  static Octonion scalar(double s) {
    Octonion o;
    o.c[0] = s;
    return o;
  }

  static Octonion unit(int i);  // basis element e_i, i in 0..7 (0 is the real unit)

  static Octonion from_imag(const Vector7& v) {
    Octonion o;
    for (std::size_t i = 0; i < 7; ++i) o.c[i + 1] = v.c[i];
    return o;
  }

  double real() const { return c[0]; }

  Vector7 imag() const {
    Vector7 v;
    for (std::size_t i = 0; i < 7; ++i) v.c[i] = c[i + 1];
    return v;
  }

  Octonion conjugate() const {
    Octonion o;
    o.c[0] = c[0];
    for (std::size_t i = 1; i < 8; ++i) o.c[i] = -c[i];
    return o;
  }

  double norm_sq() const {
    double s = 0.0;
    for (double v : c) s += v * v;
    return s;
  }

  double norm() const { return std::sqrt(norm_sq()); }

  // conj(x) / |x|^2; x * inverse(x) = 1.
  Octonion inverse() const;

  Octonion operator+(const Octonion& o) const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }

  Octonion operator-(const Octonion& o) const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }

  Octonion operator-() const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
  }

  Octonion operator*(double s) const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] * s;
    return r;
  }

  // Octonion product: bilinear, norm-multiplicative, NOT associative.
  Octonion operator*(const Octonion& o) const;
};

inline Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }

// (xy)z - x(yz); zero on the quaternion subalgebra, generally nonzero.
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

struct HurwitzSides {
  double lhs;  // (sum x_i^2)(sum y_i^2)
  double rhs;  // sum z_i^2 with z = x * y in the dimension-n algebra
};

// Composition identity check for the four normed division algebras.
// n must be 1, 2, 4, or 8; x and y must each have n entries. Quaternions are
// realized as the closed subalgebra {1, e1, e2, e4}.
HurwitzSides hurwitz_check(int n, std::span<const double> x, std::span<const double> y);

// Imaginary part of the product of two pure-imaginary octonions; orthogonal to
// both inputs, with |u x v|^2 = |u|^2 |v|^2 - (u.v)^2.
Vector7 cross7(const Vector7& u, const Vector7& v);

}  // namespace parasphere
