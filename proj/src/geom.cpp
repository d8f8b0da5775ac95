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

#include "mcslam/sim3.hpp"

#include <cmath>

namespace mcslam {

namespace {
constexpr double kSmallAngle = 1e-8;
constexpr double kNearPi = 1e-6;
}  // namespace

const char* err_name(Err e) {
  switch (e) {
    case Err::AngleNearPi: return "AngleNearPi";
    case Err::DegeneratePoint: return "DegeneratePoint";
    case Err::OutsideBoundary: return "OutsideBoundary";
    case Err::BehindCamera: return "BehindCamera";
    case Err::DegenerateConfiguration: return "DegenerateConfiguration";
    case Err::AmbiguousDecomposition: return "AmbiguousDecomposition";
    case Err::InsufficientParallax: return "InsufficientParallax";
    case Err::CollinearPoints: return "CollinearPoints";
    case Err::NoRealSolution: return "NoRealSolution";
    case Err::ZeroSpread: return "ZeroSpread";
    case Err::NotConverged: return "NotConverged";
    case Err::NoModelFound: return "NoModelFound";
    case Err::TooFewEdges: return "TooFewEdges";
    case Err::EmptyWindow: return "EmptyWindow";
    case Err::DisconnectedGraph: return "DisconnectedGraph";
    case Err::NoObservations: return "NoObservations";
    case Err::EmptyVocabulary: return "EmptyVocabulary";
    case Err::DuplicateId: return "DuplicateId";
    case Err::TooFewInliers: return "TooFewInliers";
    case Err::RansacFailed: return "RansacFailed";
    case Err::ProjectionInvalid: return "ProjectionInvalid";
    case Err::NoPairs: return "NoPairs";
    case Err::TrajectoryTooShort: return "TrajectoryTooShort";
    case Err::InitializationFailed: return "InitializationFailed";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
  }
  return "Unknown";
}

Mat3 so3_exp(const Vec3& omega) {
  const double theta2 = omega.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 w = skew(omega);
  double a, b;  // R = I + a W + b W^2
  if (theta < kSmallAngle) {
    a = 1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0;
    b = 0.5 - theta2 / 24.0 + theta2 * theta2 / 720.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  return Mat3::Identity() + a * w + b * (w * w);
}

double rotation_angle(const Mat3& r) {
  double c = (r.trace() - 1.0) * 0.5;
  c = std::min(1.0, std::max(-1.0, c));
  return std::acos(c);
}

Expected<Vec3> so3_log(const Mat3& r) {
  const double theta = rotation_angle(r);
  if (theta > M_PI - kNearPi) return Err::AngleNearPi;
  Vec3 w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  double f;  // omega = f * vee(R - R^T)
  if (theta < kSmallAngle) {
    f = 0.5 + theta * theta / 12.0 + 7.0 * std::pow(theta, 4) / 720.0;
  } else {
    f = theta / (2.0 * std::sin(theta));
  }
  return Vec3(f * w);
}

SE3Pose se3_exp(const Twist6& xi) {
  const Vec3 omega = xi.head<3>();
  const Vec3 upsilon = xi.tail<3>();
  const double theta2 = omega.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 w = skew(omega);
  const Mat3 w2 = w * w;

  double a, b, c;  // R = I + a W + b W^2, V = I + c W + ((1-a)/t^2)... see below
  if (theta < kSmallAngle) {
    a = 1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0;
    b = 0.5 - theta2 / 24.0 + theta2 * theta2 / 720.0;
    c = 1.0 / 6.0 - theta2 / 120.0 + theta2 * theta2 / 5040.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
    c = (1.0 - a) / theta2;
  }
  const Mat3 rot = Mat3::Identity() + a * w + b * w2;
  const Mat3 v = Mat3::Identity() + b * w + c * w2;
  return SE3Pose(rot, v * upsilon);
}

Expected<Twist6> se3_log(const SE3Pose& pose) {
  auto wres = so3_log(pose.rotation());
  if (!wres) return wres.error();
  const Vec3 omega = wres.value();
  const double theta2 = omega.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 w = skew(omega);
  const Mat3 w2 = w * w;

  // V^{-1} = I - W/2 + g W^2 with g = (1 - a/(2b)) / theta^2.
  double g;
  if (theta < kSmallAngle) {
    g = 1.0 / 12.0 + theta2 / 720.0 + theta2 * theta2 / 30240.0;
  } else {
    const double a = std::sin(theta) / theta;
    const double b = (1.0 - std::cos(theta)) / theta2;
    g = (1.0 - a / (2.0 * b)) / theta2;
  }
  const Mat3 vinv = Mat3::Identity() - 0.5 * w + g * w2;
  Twist6 xi;
  xi.head<3>() = omega;
  xi.tail<3>() = vinv * pose.translation();
  return xi;
}

namespace {

// Coefficients of W = C I + A hat(omega) + B hat(omega)^2 such that the
// sim(3) exponential translation is t = W upsilon, with
//   C = int_0^1 e^{l tau} dtau
//   A = (1/theta)   int_0^1 e^{l tau} sin(theta tau) dtau
//   B = (1/theta^2) int_0^1 e^{l tau} (1 - cos(theta tau)) dtau
void sim3_w_coeffs(double theta, double lambda, double& A, double& B, double& C) {
  constexpr double eps = 1e-6;
  const double scale = std::exp(lambda);
  const double theta2 = theta * theta;
  if (std::abs(lambda) < eps) {
    C = 1.0 + lambda / 2.0 + lambda * lambda / 6.0;
    if (theta < eps) {
      A = 0.5 + lambda / 3.0;
      B = 1.0 / 6.0 + lambda / 8.0;
    } else {
      // First order in lambda around the SE(3) values; the lambda^2 remainder
      // is below 1e-12 for |lambda| < 1e-6.
      const double a0 = (1.0 - std::cos(theta)) / theta2;
      const double b0 = (theta - std::sin(theta)) / (theta2 * theta);
      const double a1 = (std::sin(theta) - theta * std::cos(theta)) / (theta2 * theta);
      const double b1 =
          (0.5 * theta2 + 1.0 - std::cos(theta) - theta * std::sin(theta)) / (theta2 * theta2);
      A = a0 + lambda * a1;
      B = b0 + lambda * b1;
    }
  } else {
    C = (scale - 1.0) / lambda;
    if (theta < eps) {
      const double l2 = lambda * lambda;
      A = ((lambda - 1.0) * scale + 1.0) / l2;
      B = (scale * 0.5 * l2 + scale - 1.0 - lambda * scale) / (l2 * lambda);
    } else {
      const double a = scale * std::sin(theta);
      const double b = scale * std::cos(theta);
      const double c = theta2 + lambda * lambda;
      A = (a * lambda + (1.0 - b) * theta) / (theta * c);
      B = (C - ((b - 1.0) * lambda + a * theta) / c) / theta2;
    }
  }
}

}  // namespace

Sim3Transform sim3_exp(const Twist7& xi) {
  const Vec3 omega = xi.head<3>();
  const Vec3 upsilon = xi.segment<3>(3);
  const double lambda = xi(6);
  const double theta = omega.norm();
  double A, B, C;
  sim3_w_coeffs(theta, lambda, A, B, C);
  const Mat3 w = skew(omega);
  const Mat3 wmat = C * Mat3::Identity() + A * w + B * (w * w);
  return Sim3Transform(std::exp(lambda), so3_exp(omega), wmat * upsilon);
}

Expected<Twist7> sim3_log(const Sim3Transform& s) {
  auto wres = so3_log(s.rotation());
  if (!wres) return wres.error();
  const Vec3 omega = wres.value();
  const double lambda = std::log(s.scale());
  double A, B, C;
  sim3_w_coeffs(omega.norm(), lambda, A, B, C);
  const Mat3 w = skew(omega);
  const Mat3 wmat = C * Mat3::Identity() + A * w + B * (w * w);
  Twist7 xi;
  xi.head<3>() = omega;
  xi.segment<3>(3) = wmat.partialPivLu().solve(s.translation());
  xi(6) = lambda;
  return xi;
}

Eigen::Matrix<double, 7, 7> sim3_adjoint(const Sim3Transform& s) {
  Eigen::Matrix<double, 7, 7> ad = Eigen::Matrix<double, 7, 7>::Zero();
  const Mat3& r = s.rotation();
  ad.block<3, 3>(0, 0) = r;
  ad.block<3, 3>(3, 0) = skew(s.translation()) * r;
  ad.block<3, 3>(3, 3) = s.scale() * r;
  ad.block<3, 1>(3, 6) = -s.translation();
  ad(6, 6) = 1.0;
  return ad;
}

Eigen::Matrix<double, 7, 7> sim3_ad(const Twist7& x) {
  Eigen::Matrix<double, 7, 7> ad = Eigen::Matrix<double, 7, 7>::Zero();
  const Vec3 omega = x.head<3>();
  const Vec3 upsilon = x.segment<3>(3);
  const double lambda = x(6);
  ad.block<3, 3>(0, 0) = skew(omega);
  ad.block<3, 3>(3, 0) = skew(upsilon);
  ad.block<3, 3>(3, 3) = skew(omega) + lambda * Mat3::Identity();
  ad.block<3, 1>(3, 6) = -upsilon;
  return ad;
}

namespace {

Eigen::Matrix<double, 7, 7> dlog_series(const Eigen::Matrix<double, 7, 7>& adx) {
  // Bernoulli numbers B_n (B_1 = -1/2 convention); odd n > 1 vanish.
  static const double bern[] = {1.0, -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0, 0.0,
                                -1.0 / 30.0, 0.0, 5.0 / 66.0, 0.0, -691.0 / 2730.0, 0.0, 7.0 / 6.0, 0.0};
  Eigen::Matrix<double, 7, 7> result = Eigen::Matrix<double, 7, 7>::Zero();
  Eigen::Matrix<double, 7, 7> term = Eigen::Matrix<double, 7, 7>::Identity();
  double factorial = 1.0;
  for (int n = 0; n < 16; ++n) {
    if (n > 0) {
      term = term * adx;
      factorial *= n;
    }
    if (bern[n] != 0.0) result += (bern[n] / factorial) * term;
  }
  return result;
}

}  // namespace

Eigen::Matrix<double, 7, 7> sim3_dlog_left(const Twist7& x) { return dlog_series(sim3_ad(x)); }

Eigen::Matrix<double, 7, 7> sim3_dlog_right(const Twist7& x) {
  return dlog_series(Eigen::Matrix<double, 7, 7>(-sim3_ad(x)));
}

}  // namespace mcslam
