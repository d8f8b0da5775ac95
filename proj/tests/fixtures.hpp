// Shared test fixtures: the canonical fisheye calibration, the three-camera
// test rig, and seeded random generators for property tests.
#pragma once

#include <random>

#include "mcslam/mcs.hpp"
#include "mcslam/sim3.hpp"

namespace mcslam::testing {

// Synthetic fisheye, ~180 degree field of view, 800x800 px.
inline GenericCamera::Params camera_c1_params() {
  GenericCamera::Params p;
  p.forward_poly = {250.0, 0.0, -1.3333333333e-3, 0.0, -2.0402770e-9};
  p.u0 = 400.0;
  p.v0 = 400.0;
  p.width = 800;
  p.height = 800;
  p.mirror_radius = 390.0;
  return p;
}

inline GenericCamera camera_c1() { return GenericCamera(camera_c1_params()); }

// Rig camera, ~135 degree field of view so that axes 120 degrees apart leave
// roughly 15 degrees of overlap between neighbouring cameras.
inline GenericCamera::Params rig_camera_params() {
  GenericCamera::Params p;
  p.forward_poly = {330.0, 0.0, -1.0e-3, 0.0, -7.0e-10};
  p.u0 = 400.0;
  p.v0 = 400.0;
  p.width = 800;
  p.height = 800;
  p.mirror_radius = 390.0;
  return p;
}

// Three cameras looking outward in the body xy-plane, optical axes 120
// degrees apart, centers 5 cm from the body origin.
inline MultiCameraSystem rig_r1() {
  std::vector<GenericCamera> cams;
  std::vector<SE3Pose> extr;
  for (int c = 0; c < 3; ++c) {
    const double phi = c * 2.0 * M_PI / 3.0;
    const Vec3 axis(std::cos(phi), std::sin(phi), 0.0);
    const Vec3 tangent(-std::sin(phi), std::cos(phi), 0.0);
    Mat3 r;
    r.col(0) = tangent;
    r.col(1) = Vec3(0, 0, 1);
    r.col(2) = axis;
    cams.emplace_back(rig_camera_params());
    extr.emplace_back(r, 0.05 * axis);
  }
  return MultiCameraSystem(std::move(cams), std::move(extr));
}

inline Vec3 random_unit_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v(n(rng), n(rng), n(rng));
  while (v.norm() < 1e-6) v = Vec3(n(rng), n(rng), n(rng));
  return v.normalized();
}

inline Mat3 random_rotation(std::mt19937_64& rng, double max_angle = M_PI - 0.1) {
  std::uniform_real_distribution<double> u(0.0, max_angle);
  return so3_exp(u(rng) * random_unit_vec(rng));
}

inline SE3Pose random_pose(std::mt19937_64& rng, double trans_scale = 2.0) {
  std::uniform_real_distribution<double> u(-trans_scale, trans_scale);
  return SE3Pose(random_rotation(rng), Vec3(u(rng), u(rng), u(rng)));
}

inline Sim3Transform random_sim3(std::mt19937_64& rng, double smin = 0.5, double smax = 2.0) {
  std::uniform_real_distribution<double> us(smin, smax);
  std::uniform_real_distribution<double> ut(-2.0, 2.0);
  return Sim3Transform(us(rng), random_rotation(rng), Vec3(ut(rng), ut(rng), ut(rng)));
}

}  // namespace mcslam::testing
