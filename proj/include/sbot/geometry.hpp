#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace sbot {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;

/// Rotation about the world z axis.
Mat3 rot_z(double angle);

/// Axis-aligned rectangle on the court floor (x along court length, y lateral).
struct Rectangle {
  Vec2 min{Vec2::Zero()};
  Vec2 max{Vec2::Zero()};

  bool well_formed() const {
    return min.x() <= max.x() && min.y() <= max.y();
  }
  Vec2 center() const { return 0.5 * (min + max); }
  bool contains(const Rectangle& other) const {
    return other.min.x() >= min.x() && other.min.y() >= min.y() &&
           other.max.x() <= max.x() && other.max.y() <= max.y();
  }
};

/// True iff the horizontal projection of p lies inside region (boundaries inclusive).
/// Throws std::invalid_argument on a malformed region.
bool point_in_region(const Vec3& p, const Rectangle& region);

/// Court model. Frame: origin at the robot-side baseline center, x toward the
/// opponent baseline, y lateral (left positive), z up. The net bisects the
/// court length at net_x.
struct CourtGeometry {
  double length = 13.4;
  double width = 6.1;
  double net_height = 1.55;
  double net_x = 6.7;
  Rectangle robot_half;
  Rectangle opponent_half;
  Rectangle success_region;

  /// Builds halves and the default success region (entire opponent half)
  /// from length/width.
  static CourtGeometry standard(double length = 13.4, double width = 6.1,
                                double net_height = 1.55);

  bool valid() const;
  Vec2 opponent_center() const { return opponent_half.center(); }
};

/// World -> robot-frame rigid transform used for the arm policy's ball input:
/// the robot frame has its origin at p_base with heading alpha, so
/// p_robot = Rz(-alpha) * (p_world - p_base).
Vec3 world_to_robot(const Vec3& p_world, const Vec3& p_base, double alpha);

/// Inverse of world_to_robot.
Vec3 robot_to_world(const Vec3& p_robot, const Vec3& p_base, double alpha);

/// Direction-only version (velocities, normals): rotation without translation.
Vec3 world_to_robot_dir(const Vec3& v_world, double alpha);
Vec3 robot_to_world_dir(const Vec3& v_robot, double alpha);

inline Vec3 lift(const Vec2& p, double z = 0.0) { return Vec3(p.x(), p.y(), z); }

}  // namespace sbot
