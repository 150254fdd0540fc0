#include "parasphere/multivector.hpp"

namespace parasphere {

Multivector gp(const Multivector& m1, const Multivector& m2) {
  Multivector out;
  for (int i = 0; i < 8; ++i) {
    if (m1.c[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const auto term = detail::kGpTable[i][j];
      out.c[term.blade] += term.sign * m1.c[i] * m2.c[j];
    }
  }
  return out;
}

Multivector oriented_gp(const Multivector& m1, const Multivector& m2, Orientation lambda) {
  return lambda.sign() > 0 ? gp(m1, m2) : gp(m2, m1);
}

double inner(const Vector3& a, const Vector3& b) { return a.dot(b); }

Multivector outer(const Vector3& a, const Vector3& b) { return volume_times(a.cross(b)); }

Multivector volume_times(const Vector3& v) {
  Multivector m;
  m.c[kEyz] = v.x;
  m.c[kEzx] = v.y;
  m.c[kExy] = v.z;
  return m;
}

Multivector bivector_of(const Vector3& n, Orientation mu_sign) {
  if (!n.is_unit()) throw validation_error("bivector_of: direction must be a unit vector");
  return volume_times(n) * mu_sign.value();
}

Multivector rotor_exp(const Vector3& c, double theta) {
  if (!c.is_unit()) throw validation_error("rotor_exp: axis must be a unit vector");
  Multivector m = volume_times(c) * std::sin(theta);
  m.c[kScalarBlade] = std::cos(theta);
  return m;
}

Multivector grade(const Multivector& m, int k) {
  if (k < 0 || k > 3) throw validation_error("grade: k must be in 0..3");
  Multivector out;
  for (int i = 0; i < 8; ++i) {
    if (detail::kBladeGrade[i] == k) out.c[i] = m.c[i];
  }
  return out;
}

}  // namespace parasphere
