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

#include <stdexcept>
#include <string>
#include <variant>

namespace mcslam {

enum class Err {
  AngleNearPi,
  DegeneratePoint,
  OutsideBoundary,
  BehindCamera,
  DegenerateConfiguration,
  AmbiguousDecomposition,
  InsufficientParallax,
  CollinearPoints,
  NoRealSolution,
  ZeroSpread,
  NotConverged,
  NoModelFound,
  TooFewEdges,
  EmptyWindow,
  DisconnectedGraph,
  NoObservations,
  EmptyVocabulary,
  DuplicateId,
  TooFewInliers,
  RansacFailed,
  ProjectionInvalid,
  NoPairs,
  TrajectoryTooShort,
  InitializationFailed,
  ParseError,
  IoError,
};

const char* err_name(Err e);

/// Value-or-error result. Deliberately minimal: exactly what the solver and
/// pipeline interfaces need, nothing more.
template <typename T>
class Expected {
 public:
  Expected(T value) : v_(std::move(value)) {}
  Expected(Err e) : v_(e) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error(std::string("Expected::value on error: ") + err_name(error()));
    return std::get<T>(v_);
  }
  T& value() & {
    if (!ok()) throw std::logic_error(std::string("Expected::value on error: ") + err_name(error()));
    return std::get<T>(v_);
  }
  T&& take() && {
    if (!ok()) throw std::logic_error(std::string("Expected::take on error: ") + err_name(error()));
    return std::get<T>(std::move(v_));
  }
  Err error() const { return std::get<Err>(v_); }

  const T* operator->() const { return &value(); }
  const T& operator*() const { return value(); }

 private:
  std::variant<T, Err> v_;
};

}  // namespace mcslam
