#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "subeq_rl/rng.hpp"

namespace subeq_rl {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double horizontal_norm() const { return std::sqrt(x * x + y * y); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
Vec3 cross(const Vec3& a, const Vec3& b);

// Gravity direction; the math only needs the axis, the sign is physical
// "down" applied consistently.
inline constexpr Vec3 kGravity{0.0, 0.0, -1.0};

// 3x3 matrix, column-major storage: m[3*col + row]. A frame [e1 e2 e3]
// stores e1 in column 0.
struct Mat3 {
  double m[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return {}; }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  double& at(int row, int col) { return m[3 * col + row]; }
  double at(int row, int col) const { return m[3 * col + row]; }
  Vec3 col(int c) const { return {m[3 * c], m[3 * c + 1], m[3 * c + 2]}; }

  Vec3 operator*(const Vec3& v) const;
  Mat3 operator*(const Mat3& o) const;
  Mat3 transposed() const;
  double det() const;
  Mat3 inverse() const;  // via adjugate; caller guarantees invertibility
};

// Stack of m direction-steerable 3-vectors (a 3xm matrix by columns).
struct GeomMat {
  std::vector<Vec3> ch;

  GeomMat() = default;
  explicit GeomMat(size_t m) : ch(m) {}
  size_t channels() const { return ch.size(); }
  Vec3& operator[](size_t i) { return ch[i]; }
  const Vec3& operator[](size_t i) const { return ch[i]; }
};

GeomMat apply(const Mat3& O, const GeomMat& Z);  // channel-wise O * z_c

// Unit quaternion (w, x, y, z), yaw-dominant in this codebase.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Quat from_yaw(double yaw) {
    return {std::cos(0.5 * yaw), 0.0, 0.0, std::sin(0.5 * yaw)};
  }
  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  double yaw() const;  // heading angle about the z-axis
  Quat operator*(const Quat& o) const;
};

// Rotation by theta about the z-axis (fixes gravity exactly).
Mat3 rotation_about_z(double theta);

// Reflection across the vertical plane whose horizontal normal sits at
// `azimuth` + 90 degrees; fixes the z-axis, det = -1.
Mat3 reflection_fixing_z(double azimuth);

enum class TransformMode { rotation_z, reflection_z, translation_xy, composed };

struct Transform {
  Mat3 O;
  Vec3 t;
};

// Samples a group element with O fixing z and t horizontal. Deterministic
// per rng state.
Transform random_transform(Rng& rng, TransformMode mode);

}  // namespace subeq_rl
