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

#include "mcslam/se3.hpp"

namespace mcslam {

/// sim(3) twist, ordered (omega, upsilon, lambda) with lambda = log scale.
using Twist7 = Eigen::Matrix<double, 7, 1>;

/// Similarity transform acting as p' = s R p + t, matrix form [sR t; 0 1].
class Sim3Transform {
 public:
  Sim3Transform() : s_(1.0), r_(Mat3::Identity()), t_(Vec3::Zero()) {}
  Sim3Transform(double scale, const Mat3& rotation, const Vec3& translation)
      : s_(scale), r_(rotation), t_(translation) {}

  static Sim3Transform identity() { return Sim3Transform(); }
  static Sim3Transform from_rigid(const SE3Pose& m, double scale = 1.0) {
    return Sim3Transform(scale, m.rotation(), m.translation());
  }

  double scale() const { return s_; }
  const Mat3& rotation() const { return r_; }
  const Vec3& translation() const { return t_; }

  Vec3 operator*(const Vec3& p) const { return s_ * (r_ * p) + t_; }

  Sim3Transform operator*(const Sim3Transform& o) const {
    return Sim3Transform(s_ * o.s_, r_ * o.r_, s_ * (r_ * o.t_) + t_);
  }

  Sim3Transform inverse() const {
    Mat3 rt = r_.transpose();
    return Sim3Transform(1.0 / s_, rt, -(rt * t_) / s_);
  }

  bool is_approx(const Sim3Transform& o, double tol = 1e-9) const {
    return std::abs(s_ - o.s_) <= tol && (r_ - o.r_).cwiseAbs().maxCoeff() <= tol &&
           (t_ - o.t_).cwiseAbs().maxCoeff() <= tol;
  }

 private:
  double s_;
  Mat3 r_;
  Vec3 t_;
};

Sim3Transform sim3_exp(const Twist7& xi);

/// Inverse of sim3_exp; AngleNearPi as for se3_log.
Expected<Twist7> sim3_log(const Sim3Transform& s);

/// Drops the scale onto the translation: [sR t] -> [R t/s]. Applied to a
/// world-to-body similarity this keeps the body origin and orientation.
inline SE3Pose sim3_to_rigid(const Sim3Transform& s) {
  return SE3Pose(s.rotation(), s.translation() / s.scale());
}

/// Adjoint of S as a 7x7 matrix in (omega, upsilon, lambda) ordering:
/// exp(hat(Ad_S xi)) = S exp(hat(xi)) S^{-1}.
Eigen::Matrix<double, 7, 7> sim3_adjoint(const Sim3Transform& s);

/// Lie bracket matrix ad_x of a sim(3) twist.
Eigen::Matrix<double, 7, 7> sim3_ad(const Twist7& x);

/// d/d eta log(exp(hat(eta)) exp(hat(x))) at eta = 0, i.e. the inverse left
/// Jacobian, evaluated by its Bernoulli series. Accurate for the small
/// residual magnitudes seen in pose-graph optimization.
Eigen::Matrix<double, 7, 7> sim3_dlog_left(const Twist7& x);

/// d/d eta log(exp(hat(x)) exp(hat(eta))) at eta = 0 (inverse right Jacobian).
Eigen::Matrix<double, 7, 7> sim3_dlog_right(const Twist7& x);

}  // namespace mcslam
