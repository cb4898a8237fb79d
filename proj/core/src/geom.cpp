#include "subeq_rl/geom.hpp"

#include <cmath>
#include <stdexcept>

namespace subeq_rl {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y,
          a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 r;
  r.m[0] = c0.x; r.m[1] = c0.y; r.m[2] = c0.z;
  r.m[3] = c1.x; r.m[4] = c1.y; r.m[5] = c1.z;
  r.m[6] = c2.x; r.m[7] = c2.y; r.m[8] = c2.z;
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  return {m[0] * v.x + m[3] * v.y + m[6] * v.z,
          m[1] * v.x + m[4] * v.y + m[7] * v.z,
          m[2] * v.x + m[5] * v.y + m[8] * v.z};
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int c = 0; c < 3; ++c) {
    for (int rw = 0; rw < 3; ++rw) {
      r.m[3 * c + rw] = m[rw] * o.m[3 * c] + m[3 + rw] * o.m[3 * c + 1] +
                        m[6 + rw] * o.m[3 * c + 2];
    }
  }
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int c = 0; c < 3; ++c)
    for (int rw = 0; rw < 3; ++rw) r.m[3 * c + rw] = m[3 * rw + c];
  return r;
}

double Mat3::det() const {
  return m[0] * (m[4] * m[8] - m[7] * m[5]) -
         m[3] * (m[1] * m[8] - m[7] * m[2]) +
         m[6] * (m[1] * m[5] - m[4] * m[2]);
}

Mat3 Mat3::inverse() const {
  const double d = det();
  Mat3 r;
  r.m[0] = (m[4] * m[8] - m[7] * m[5]) / d;
  r.m[1] = (m[7] * m[2] - m[1] * m[8]) / d;
  r.m[2] = (m[1] * m[5] - m[4] * m[2]) / d;
  r.m[3] = (m[6] * m[5] - m[3] * m[8]) / d;
  r.m[4] = (m[0] * m[8] - m[6] * m[2]) / d;
  r.m[5] = (m[3] * m[2] - m[0] * m[5]) / d;
  r.m[6] = (m[3] * m[7] - m[6] * m[4]) / d;
  r.m[7] = (m[6] * m[1] - m[0] * m[7]) / d;
  r.m[8] = (m[0] * m[4] - m[3] * m[1]) / d;
  return r;
}

GeomMat apply(const Mat3& O, const GeomMat& Z) {
  GeomMat out(Z.channels());
  for (size_t i = 0; i < Z.channels(); ++i) out[i] = O * Z[i];
  return out;
}

double Quat::yaw() const {
  return std::atan2(2.0 * (w * z + x * y), 1.0 - 2.0 * (y * y + z * z));
}

Quat Quat::operator*(const Quat& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z,
          w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x,
          w * o.z + x * o.y - y * o.x + z * o.w};
}

Mat3 rotation_about_z(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Mat3 r;
  r.m[0] = c;  r.m[1] = s;  r.m[2] = 0.0;
  r.m[3] = -s; r.m[4] = c;  r.m[5] = 0.0;
  r.m[6] = 0.0; r.m[7] = 0.0; r.m[8] = 1.0;
  return r;
}

Mat3 reflection_fixing_z(double azimuth) {
  // R(a) * diag(1,-1,1) * R(-a): reflection across the vertical plane
  // through the direction (cos a, sin a, 0).
  const double c = std::cos(2.0 * azimuth), s = std::sin(2.0 * azimuth);
  Mat3 r;
  r.m[0] = c;  r.m[1] = s;  r.m[2] = 0.0;
  r.m[3] = s;  r.m[4] = -c; r.m[5] = 0.0;
  r.m[6] = 0.0; r.m[7] = 0.0; r.m[8] = 1.0;
  return r;
}

Transform random_transform(Rng& rng, TransformMode mode) {
  Transform g;
  switch (mode) {
    case TransformMode::rotation_z:
      g.O = rotation_about_z(rng.uniform(0.0, 2.0 * M_PI));
      break;
    case TransformMode::reflection_z:
      g.O = reflection_fixing_z(rng.uniform(0.0, 2.0 * M_PI));
      break;
    case TransformMode::translation_xy:
      rng.in_disk(5.0, g.t.x, g.t.y);
      break;
    case TransformMode::composed:
      g.O = rotation_about_z(rng.uniform(0.0, 2.0 * M_PI));
      rng.in_disk(5.0, g.t.x, g.t.y);
      break;
    default:
      throw std::invalid_argument("random_transform: unknown mode");
  }
  return g;
}

}  // namespace subeq_rl
