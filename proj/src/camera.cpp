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

#include "mcslam/camera.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace mcslam {

namespace {

double eval_poly(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval_poly_deriv(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (size_t k = coeffs.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * coeffs[k];
  return acc;
}

}  // namespace

double GenericCamera::eval_forward(double rho) const { return eval_poly(p_.forward_poly, rho); }
double GenericCamera::eval_inverse(double theta) const { return eval_poly(p_.inverse_poly, theta); }
double GenericCamera::eval_inverse_deriv(double theta) const {
  return eval_poly_deriv(p_.inverse_poly, theta);
}

GenericCamera::GenericCamera(const Params& p) : p_(p) {
  if (p_.forward_poly.empty()) throw std::invalid_argument("camera: forward_poly missing");
  if (p_.mirror_radius <= 0.0) throw std::invalid_argument("camera: mirror_radius must be positive");
  if (p_.width <= 0 || p_.height <= 0) throw std::invalid_argument("camera: bad image size");
  affine_ << p_.c, p_.d, p_.e, 1.0;
  if (std::abs(affine_.determinant()) < 1e-12)
    throw std::invalid_argument("camera: singular affine matrix");
  affine_inv_ = affine_.inverse();
  max_fov_angle_ = std::atan2(p_.mirror_radius, eval_forward(p_.mirror_radius));
  validate();
  if (p_.inverse_poly.empty()) fit_inverse_poly();

  // Self-consistency of the (given or fitted) inverse polynomial.
  const int n = 64;
  for (int i = 0; i <= n; ++i) {
    const double rho = p_.mirror_radius * i / n;
    const double theta = std::atan2(rho, eval_forward(rho));
    const double back = eval_inverse(theta);
    if (std::abs(back - rho) > 0.05)
      throw std::invalid_argument("camera: inverse polynomial residual above 0.05 px");
  }
}

void GenericCamera::validate() const {
  // The ray angle must grow strictly with the image radius, otherwise the
  // model is not invertible on the mirror disk.
  const int n = 1000;
  double prev = std::atan2(0.0, eval_forward(0.0));
  for (int i = 1; i <= n; ++i) {
    const double rho = p_.mirror_radius * i / n;
    const double theta = std::atan2(rho, eval_forward(rho));
    if (theta <= prev)
      throw std::invalid_argument("camera: ray angle not monotone over the mirror disk");
    prev = theta;
  }
}

void GenericCamera::fit_inverse_poly() {
  const int samples = 256;
  Eigen::VectorXd thetas(samples + 1), rhos(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    const double rho = p_.mirror_radius * i / samples;
    thetas(i) = std::atan2(rho, eval_forward(rho));
    rhos(i) = rho;
  }
  for (int degree = 6; degree <= 12; ++degree) {
    Eigen::MatrixXd vand(samples + 1, degree + 1);
    for (int i = 0; i <= samples; ++i) {
      double x = 1.0;
      for (int j = 0; j <= degree; ++j) {
        vand(i, j) = x;
        x *= thetas(i);
      }
    }
    Eigen::VectorXd sol = vand.colPivHouseholderQr().solve(rhos);
    const double max_resid = (vand * sol - rhos).cwiseAbs().maxCoeff();
    if (max_resid < 0.01 || degree == 12) {
      p_.inverse_poly.assign(sol.data(), sol.data() + sol.size());
      if (max_resid >= 0.01)
        throw std::invalid_argument("camera: inverse polynomial fit residual above 0.01 px");
      return;
    }
  }
}

Expected<ImagePoint> GenericCamera::project(const Vec3& p_cam) const {
  const double norm = p_cam.norm();
  if (norm < 1e-12) return Err::DegeneratePoint;
  const double rxy = p_cam.head<2>().norm();
  const double theta = std::atan2(rxy, p_cam.z());
  Vec2 plane;
  if (rxy < 1e-12) {
    plane.setZero();  // on-axis, forward or backward
  } else {
    const double rho = eval_inverse(theta);
    plane = (rho / rxy) * p_cam.head<2>();
  }
  const Vec2 px = affine_ * plane + principal_point();
  ImagePoint m;
  m.u = px.x();
  m.v = px.y();
  return m;
}

Expected<Vec3> GenericCamera::unproject(const ImagePoint& m) const {
  const Vec2 plane = affine_inv_ * (Vec2(m.u, m.v) - principal_point());
  const double rho = plane.norm();
  if (rho > p_.mirror_radius) return Err::OutsideBoundary;
  Vec3 ray(plane.x(), plane.y(), eval_forward(rho));
  return Vec3(ray.normalized());
}

bool GenericCamera::in_mirror_boundary(const ImagePoint& m) const {
  if (m.u < 0.0 || m.v < 0.0 || m.u >= p_.width || m.v >= p_.height) return false;
  const Vec2 plane = affine_inv_ * (Vec2(m.u, m.v) - principal_point());
  return plane.norm() <= p_.mirror_radius;
}

Eigen::Matrix<double, 2, 3> GenericCamera::projection_jacobian(const Vec3& p_cam) const {
  const double x = p_cam.x(), y = p_cam.y(), z = p_cam.z();
  const double rxy2 = x * x + y * y;
  const double rxy = std::sqrt(rxy2);
  const double n2 = rxy2 + z * z;
  Eigen::Matrix<double, 2, 3> jac;
  if (rxy < 1e-9) {
    // On-axis limit: d(plane)/d(x,y) = g'(0)/z, no z sensitivity.
    const double g1 = eval_inverse_deriv(0.0);
    jac << g1 / z, 0.0, 0.0, 0.0, g1 / z, 0.0;
  } else {
    const double theta = std::atan2(rxy, z);
    const double rho = eval_inverse(theta);
    const double g1 = eval_inverse_deriv(theta);
    // theta gradients
    const double dth_dx = x * z / (rxy * n2);
    const double dth_dy = y * z / (rxy * n2);
    const double dth_dz = -rxy / n2;
    // plane = rho(theta) * (x, y) / rxy
    const double inv_r = 1.0 / rxy;
    const double inv_r3 = inv_r / rxy2;
    jac(0, 0) = rho * inv_r + x * g1 * dth_dx * inv_r - rho * x * x * inv_r3;
    jac(0, 1) = x * g1 * dth_dy * inv_r - rho * x * y * inv_r3;
    jac(0, 2) = x * inv_r * g1 * dth_dz;
    jac(1, 0) = y * g1 * dth_dx * inv_r - rho * x * y * inv_r3;
    jac(1, 1) = rho * inv_r + y * g1 * dth_dy * inv_r - rho * y * y * inv_r3;
    jac(1, 2) = y * inv_r * g1 * dth_dz;
  }
  return affine_ * jac;
}

}  // namespace mcslam
