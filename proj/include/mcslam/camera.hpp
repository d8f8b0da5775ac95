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

#include <vector>

#include "mcslam/se3.hpp"

namespace mcslam {

struct ImagePoint {
  double u = 0.0;
  double v = 0.0;
  int octave = 0;
};

/// Generic central camera: a polynomial maps image radius to the bearing's
/// axial component (back-projection), a fitted inverse polynomial maps ray
/// angle to image radius (projection). Covers fisheye and catadioptric optics
/// with a single model; the camera looks along +z.
class GenericCamera {
 public:
  struct Params {
    std::vector<double> forward_poly;   // z(rho) coefficients, rho in pixels
    std::vector<double> inverse_poly;   // rho(theta) coefficients; empty = refit
    double u0 = 0.0, v0 = 0.0;          // principal point
    double c = 1.0, d = 0.0, e = 0.0;   // affine stretch [c d; e 1]
    int width = 0, height = 0;
    double mirror_radius = 0.0;         // maximal valid radius around (u0, v0)
  };

  /// Validates the calibration (monotone ray angle, inverse-fit residual) and
  /// throws std::invalid_argument on failure. A bad calibration must never
  /// make it past construction.
  explicit GenericCamera(const Params& p);

  /// Camera point to pixel. The image boundary is not checked here.
  Expected<ImagePoint> project(const Vec3& p_cam) const;

  /// Pixel to unit bearing vector.
  Expected<Vec3> unproject(const ImagePoint& m) const;

  bool in_mirror_boundary(const ImagePoint& m) const;

  /// Ray angle (radians off the optical axis) of a camera-frame point.
  double ray_angle(const Vec3& p_cam) const {
    return std::atan2(p_cam.head<2>().norm(), p_cam.z());
  }

  /// Largest ray angle the calibration covers (angle at mirror_radius).
  double max_fov_angle() const { return max_fov_angle_; }

  const Params& params() const { return p_; }
  int width() const { return p_.width; }
  int height() const { return p_.height; }
  double mirror_radius() const { return p_.mirror_radius; }
  Vec2 principal_point() const { return Vec2(p_.u0, p_.v0); }

  /// 2x3 derivative of project() with respect to the camera-frame point.
  Eigen::Matrix<double, 2, 3> projection_jacobian(const Vec3& p_cam) const;

  double eval_forward(double rho) const;
  double eval_inverse(double theta) const;
  double eval_inverse_deriv(double theta) const;

 private:
  void fit_inverse_poly();
  void validate() const;

  Params p_;
  Eigen::Matrix2d affine_;
  Eigen::Matrix2d affine_inv_;
  double max_fov_angle_ = 0.0;
};

}  // namespace mcslam
