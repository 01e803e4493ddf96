#include "sbot/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace sbot {

Mat3 rot_z(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat3 r;
  r << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return r;
}

bool point_in_region(const Vec3& p, const Rectangle& region) {
  if (!region.well_formed()) {
    throw std::invalid_argument("point_in_region: malformed region (min > max)");
  }
  return p.x() >= region.min.x() && p.x() <= region.max.x() &&
         p.y() >= region.min.y() && p.y() <= region.max.y();
}

CourtGeometry standard_court(double length, double width, double net_height) {
  CourtGeometry c;
  c.length = length;
  c.width = width;
  c.net_height = net_height;
  c.net_x = 0.5 * length;
  const double hw = 0.5 * width;
  c.robot_half = Rectangle{Vec2(0.0, -hw), Vec2(c.net_x, hw)};
  c.opponent_half = Rectangle{Vec2(c.net_x, -hw), Vec2(length, hw)};
  c.success_region = c.opponent_half;
  return c;
}

CourtGeometry CourtGeometry::standard(double length, double width,
                                      double net_height) {
  return standard_court(length, width, net_height);
}

bool CourtGeometry::valid() const {
  if (!(length > 0.0 && width > 0.0 && net_height > 0.0)) return false;
  if (std::abs(net_x - 0.5 * length) > 1e-9) return false;
  if (!robot_half.well_formed() || !opponent_half.well_formed() ||
      !success_region.well_formed()) {
    return false;
  }
  return opponent_half.contains(success_region);
}

Vec3 world_to_robot(const Vec3& p_world, const Vec3& p_base, double alpha) {
  // translate by -p_base, then rotate by -alpha
  return rot_z(-alpha) * (p_world - p_base);
}

Vec3 robot_to_world(const Vec3& p_robot, const Vec3& p_base, double alpha) {
  return rot_z(alpha) * p_robot + p_base;
}

Vec3 world_to_robot_dir(const Vec3& v_world, double alpha) {
  return rot_z(-alpha) * v_world;
}

Vec3 robot_to_world_dir(const Vec3& v_robot, double alpha) {
  return rot_z(alpha) * v_robot;
}

}  // namespace sbot
