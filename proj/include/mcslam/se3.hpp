// Copyright 2026 the mcslam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "mcslam/core.hpp"

namespace mcslam {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// se(3) twist, ordered (omega, upsilon): rotation first, translation second.
using Twist6 = Eigen::Matrix<double, 6, 1>;

inline Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return m;
}

/// Rigid transform acting as p' = R p + t.
///
/// Pose convention throughout: a body pose M_t maps body coordinates to world
/// coordinates, a camera extrinsic M_c maps camera coordinates to body
/// coordinates. World-to-camera is therefore M_c.inverse() * M_t.inverse().
class SE3Pose {
 public:
  SE3Pose() : r_(Mat3::Identity()), t_(Vec3::Zero()) {}
  SE3Pose(const Mat3& rotation, const Vec3& translation) : r_(rotation), t_(translation) {}

  static SE3Pose identity() { return SE3Pose(); }
  static SE3Pose from_quat(const Eigen::Quaterniond& q, const Vec3& t) {
    return SE3Pose(q.normalized().toRotationMatrix(), t);
  }

  const Mat3& rotation() const { return r_; }
  const Vec3& translation() const { return t_; }
  Eigen::Quaterniond quat() const { return Eigen::Quaterniond(r_).normalized(); }

  Vec3 operator*(const Vec3& p) const { return r_ * p + t_; }

  SE3Pose operator*(const SE3Pose& other) const {
    return SE3Pose(r_ * other.r_, r_ * other.t_ + t_);
  }

  SE3Pose inverse() const {
    Mat3 rt = r_.transpose();
    return SE3Pose(rt, -(rt * t_));
  }

  Mat4 matrix() const {
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = r_;
    m.topRightCorner<3, 1>() = t_;
    return m;
  }

  bool is_approx(const SE3Pose& o, double tol = 1e-9) const {
    return (r_ - o.r_).cwiseAbs().maxCoeff() <= tol && (t_ - o.t_).cwiseAbs().maxCoeff() <= tol;
  }

 private:
  Mat3 r_;
  Vec3 t_;
};

/// Rodrigues exponential; below the 1e-8 angle cutover the trigonometric
/// coefficients switch to their Taylor expansions.
SE3Pose se3_exp(const Twist6& xi);

/// Inverse of se3_exp. Fails with AngleNearPi when the rotation angle is
/// within 1e-6 of pi, where the axis is not recoverable to full precision.
Expected<Twist6> se3_log(const SE3Pose& pose);

/// Relative transform taking pose i to pose j: M_j * M_i^{-1}.
inline SE3Pose relative_pose(const SE3Pose& m_i, const SE3Pose& m_j) {
  return m_j * m_i.inverse();
}

/// Rotation angle in [0, pi].
double rotation_angle(const Mat3& r);

/// SO(3) log as a Rodrigues vector (axis * angle). Same near-pi caveat as se3_log.
Expected<Vec3> so3_log(const Mat3& r);

Mat3 so3_exp(const Vec3& omega);

}  // namespace mcslam
