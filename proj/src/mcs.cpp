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

#include "mcslam/mcs.hpp"

#include <stdexcept>

namespace mcslam {

MultiCameraSystem::MultiCameraSystem(std::vector<GenericCamera> cameras,
                                     std::vector<SE3Pose> extrinsics)
    : cameras_(std::move(cameras)), extrinsics_(std::move(extrinsics)) {
  if (cameras_.empty()) throw std::invalid_argument("mcs: need at least one camera");
  if (cameras_.size() != extrinsics_.size())
    throw std::invalid_argument("mcs: camera/extrinsic count mismatch");
  extrinsics_inv_.reserve(extrinsics_.size());
  for (const auto& e : extrinsics_) extrinsics_inv_.push_back(e.inverse());
}

Expected<MultiCameraSystem::Projection> MultiCameraSystem::multicol_project(
    int c, const SE3Pose& m_t, const Vec3& p_world) const {
  const Vec3 p_cam = extrinsics_inv_[c] * (m_t.inverse() * p_world);
  const GenericCamera& cam = cameras_[c];
  if (p_cam.norm() < 1e-12) return Err::DegeneratePoint;
  if (cam.ray_angle(p_cam) > cam.max_fov_angle()) return Err::BehindCamera;
  auto px = cam.project(p_cam);
  if (!px) return px.error();
  return Projection{px.value(), p_cam};
}

std::vector<std::pair<int, MultiCameraSystem::Projection>> MultiCameraSystem::project_to_all(
    const SE3Pose& m_t, const Vec3& p_world) const {
  std::vector<std::pair<int, Projection>> out;
  const Vec3 p_body = m_t.inverse() * p_world;
  for (int c = 0; c < num_cameras(); ++c) {
    const Vec3 p_cam = extrinsics_inv_[c] * p_body;
    const GenericCamera& cam = cameras_[c];
    if (p_cam.norm() < 1e-12) continue;
    if (cam.ray_angle(p_cam) > cam.max_fov_angle()) continue;
    auto px = cam.project(p_cam);
    if (!px) continue;
    if (!cam.in_mirror_boundary(px.value())) continue;
    out.emplace_back(c, Projection{px.value(), p_cam});
  }
  return out;
}

MultiCameraSystem MultiCameraSystem::subset(int n) const {
  if (n < 1 || n > num_cameras()) throw std::invalid_argument("mcs: bad subset size");
  return MultiCameraSystem(std::vector<GenericCamera>(cameras_.begin(), cameras_.begin() + n),
                           std::vector<SE3Pose>(extrinsics_.begin(), extrinsics_.begin() + n));
}

}  // namespace mcslam
