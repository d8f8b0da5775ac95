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

#include <utility>
#include <vector>

#include "mcslam/camera.hpp"

namespace mcslam {

/// A rig of central cameras sharing one body frame. Extrinsics map camera
/// coordinates to body coordinates; a world point lands in camera c of the
/// rig at pose M_t as pi_c(M_c^{-1} M_t^{-1} p).
class MultiCameraSystem {
 public:
  MultiCameraSystem(std::vector<GenericCamera> cameras, std::vector<SE3Pose> extrinsics);

  int num_cameras() const { return static_cast<int>(cameras_.size()); }
  const GenericCamera& camera(int c) const { return cameras_.at(c); }
  const SE3Pose& extrinsic(int c) const { return extrinsics_.at(c); }

  /// Camera center in the body frame (the extrinsic translation).
  Vec3 camera_center_body(int c) const { return extrinsics_.at(c).translation(); }

  Vec3 world_to_camera(int c, const SE3Pose& m_t, const Vec3& p_world) const {
    return extrinsics_inv_[c] * (m_t.inverse() * p_world);
  }

  struct Projection {
    ImagePoint pixel;
    Vec3 p_cam;  // intermediate camera-frame point, reused by depth tests
  };

  /// Full projection chain for one camera; fails with BehindCamera when the
  /// ray angle is outside the calibration's field of view.
  Expected<Projection> multicol_project(int c, const SE3Pose& m_t, const Vec3& p_world) const;

  /// Projects into every camera, keeping cameras where the point is inside
  /// the field of view and the mirror boundary. May be empty.
  std::vector<std::pair<int, Projection>> project_to_all(const SE3Pose& m_t,
                                                         const Vec3& p_world) const;

  /// Restricted rig consisting of the first n cameras (single-camera runs).
  MultiCameraSystem subset(int n) const;

 private:
  std::vector<GenericCamera> cameras_;
  std::vector<SE3Pose> extrinsics_;
  std::vector<SE3Pose> extrinsics_inv_;
};

}  // namespace mcslam
