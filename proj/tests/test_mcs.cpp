#include <doctest.h>

#include "fixtures.hpp"

using namespace mcslam;
using mcslam::testing::random_pose;
using mcslam::testing::rig_r1;

TEST_CASE("identity rig reduces to the bare camera") {
  std::vector<GenericCamera> cams;
  cams.emplace_back(mcslam::testing::camera_c1_params());
  MultiCameraSystem mcs({cams}, {SE3Pose::identity()});
  auto res = mcs.multicol_project(0, SE3Pose::identity(), Vec3(0, 0, 1));
  REQUIRE(res.ok());
  CHECK(res->pixel.u == doctest::Approx(400.0).epsilon(1e-9));
  CHECK(res->pixel.v == doctest::Approx(400.0).epsilon(1e-9));
  CHECK((res->p_cam - Vec3(0, 0, 1)).norm() < 1e-15);
}

TEST_CASE("rig projection equals manual composition of the inverse transforms") {
  MultiCameraSystem mcs = rig_r1();
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 50; ++i) {
    SE3Pose m_t = random_pose(rng, 1.0);
    Vec3 p(u(rng), u(rng), u(rng));
    for (int c = 0; c < mcs.num_cameras(); ++c) {
      auto res = mcs.multicol_project(c, m_t, p);
      if (!res.ok()) continue;
      // Composition written out by hand.
      Vec3 p_cam_manual = mcs.extrinsic(c).inverse() * (m_t.inverse() * p);
      auto manual = mcs.camera(c).project(p_cam_manual);
      REQUIRE(manual.ok());
      CHECK(std::hypot(manual->u - res->pixel.u, manual->v - res->pixel.v) < 1e-12);
      CHECK((res->p_cam - p_cam_manual).norm() < 1e-12);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("projection is invariant to a common world shift") {
  MultiCameraSystem mcs = rig_r1();
  SE3Pose m_t(so3_exp(Vec3(0.1, -0.2, 0.3)), Vec3(1, 2, 3));
  Vec3 p(3.0, 1.0, 0.5);
  auto base = mcs.multicol_project(0, m_t, p);
  REQUIRE(base.ok());
  const Vec3 offset(10.0, -5.0, 2.0);
  SE3Pose shifted(m_t.rotation(), m_t.translation() + offset);
  auto moved = mcs.multicol_project(0, shifted, Vec3(p + offset));
  REQUIRE(moved.ok());
  CHECK(std::hypot(moved->pixel.u - base->pixel.u, moved->pixel.v - base->pixel.v) < 1e-9);
}

TEST_CASE("projection is invariant to a rigid world transform") {
  MultiCameraSystem mcs = rig_r1();
  std::mt19937_64 rng(47);
  for (int i = 0; i < 20; ++i) {
    SE3Pose m_t = random_pose(rng, 1.0);
    SE3Pose g = random_pose(rng, 5.0);
    Vec3 p = Vec3::Random() * 4.0;
    auto base = mcs.multicol_project(1, m_t, p);
    if (!base.ok()) continue;
    auto moved = mcs.multicol_project(1, g * m_t, g * p);
    REQUIRE(moved.ok());
    CHECK(std::hypot(moved->pixel.u - base->pixel.u, moved->pixel.v - base->pixel.v) < 1e-9);
  }
}

TEST_CASE("two-step composition equals combined transform") {
  MultiCameraSystem mcs = rig_r1();
  SE3Pose m_t(so3_exp(Vec3(0.0, 0.0, 0.4)), Vec3(0.5, -0.5, 0.2));
  Vec3 p(2.5, 0.3, 0.1);
  for (int c = 0; c < 3; ++c) {
    auto res = mcs.multicol_project(c, m_t, p);
    if (!res.ok()) continue;
    SE3Pose cam_to_world = m_t * mcs.extrinsic(c);
    Vec3 p_cam = cam_to_world.inverse() * p;
    auto direct = mcs.camera(c).project(p_cam);
    REQUIRE(direct.ok());
    CHECK(std::hypot(direct->u - res->pixel.u, direct->v - res->pixel.v) < 1e-9);
  }
}

TEST_CASE("project_to_all visibility") {
  MultiCameraSystem mcs = rig_r1();
  // On the optical axis of camera 0, far outside cameras 1 and 2.
  auto only0 = mcs.project_to_all(SE3Pose::identity(), Vec3(5.0, 0.0, 0.0));
  REQUIRE(only0.size() == 1);
  CHECK(only0[0].first == 0);

  // Point in the overlap wedge between cameras 0 and 1 (azimuth 60 degrees).
  const double az = M_PI / 3.0;
  auto overlap = mcs.project_to_all(SE3Pose::identity(), Vec3(5.0 * std::cos(az), 5.0 * std::sin(az), 0.0));
  CHECK(overlap.size() >= 2);

  // The rig looks outward in the xy-plane; a point straight above the body
  // is beyond every camera's field of view.
  auto none = mcs.project_to_all(SE3Pose::identity(), Vec3(0.0, 0.0, 5.0));
  CHECK(none.empty());
}

TEST_CASE("subset keeps the leading cameras") {
  MultiCameraSystem mcs = rig_r1();
  MultiCameraSystem mono = mcs.subset(1);
  CHECK(mono.num_cameras() == 1);
  auto a = mcs.multicol_project(0, SE3Pose::identity(), Vec3(4, 0.3, 0.2));
  auto b = mono.multicol_project(0, SE3Pose::identity(), Vec3(4, 0.3, 0.2));
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(a->pixel.u == b->pixel.u);
  CHECK(a->pixel.v == b->pixel.v);
}
