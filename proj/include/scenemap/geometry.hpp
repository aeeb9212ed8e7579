#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace scenemap {

using Point = Eigen::Vector3d;
using PointList = std::vector<Point>;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }

// Raised when an input violates a documented precondition.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation produces non-finite values or a singular system.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Aabb {
  Point min{Point::Constant(std::numeric_limits<double>::infinity())};
  Point max{Point::Constant(-std::numeric_limits<double>::infinity())};

  void expand(const Point& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  void expand(const Aabb& other) {
    min = min.cwiseMin(other.min);
    max = max.cwiseMax(other.max);
  }
  bool empty() const { return (min.array() > max.array()).any(); }
  Point extent() const { return max - min; }
  Point center() const { return 0.5 * (min + max); }
  bool contains(const Point& p, double margin = 0.0) const {
    return (p.array() >= min.array() - margin).all() &&
           (p.array() <= max.array() + margin).all();
  }
  double diagonal() const { return empty() ? 0.0 : extent().norm(); }
};

inline Aabb bounding_box(const PointList& pts) {
  Aabb box;
  for (const auto& p : pts) box.expand(p);
  return box;
}

inline Point centroid(const PointList& pts) {
  if (pts.empty()) throw ValidationError("centroid of empty point list");
  Point c = Point::Zero();
  for (const auto& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

inline Eigen::Matrix3d rotation_z(double angle_rad) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  const double c = std::cos(angle_rad), s = std::sin(angle_rad);
  r(0, 0) = c;
  r(0, 1) = -s;
  r(1, 0) = s;
  r(1, 1) = c;
  return r;
}

// Planar orthogonal transforms used to seed affine map candidates: four
// uniform z-rotations combined with {identity, x-flip, y-flip, xy-flip}.
// The z axis is left untouched.
inline std::vector<Eigen::Matrix3d> planar_orthogonal_set(int n_rotations = 4) {
  std::vector<Eigen::Matrix3d> out;
  out.reserve(static_cast<size_t>(n_rotations) * 4);
  const double step = 2.0 * kPi / n_rotations;
  for (int i = 0; i < n_rotations; ++i) {
    const Eigen::Matrix3d rot = rotation_z(i * step);
    for (int fx = 0; fx < 2; ++fx) {
      for (int fy = 0; fy < 2; ++fy) {
        Eigen::Matrix3d refl = Eigen::Matrix3d::Identity();
        refl(0, 0) = fx ? -1.0 : 1.0;
        refl(1, 1) = fy ? -1.0 : 1.0;
        out.push_back(rot * refl);
      }
    }
  }
  return out;
}

// Sorted multiset of pairwise distances; invariant under rigid motion.
inline std::vector<double> pairwise_distance_multiset(const PointList& pts) {
  std::vector<double> d;
  d.reserve(pts.size() * (pts.size() - 1) / 2);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      d.push_back((pts[i] - pts[j]).norm());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace scenemap
