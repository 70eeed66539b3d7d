// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinchannel {

/// Failure categories raised by the library. The CLI maps these onto
/// machine-readable error records.
enum class ErrorCode {
  kInvalidSector,
  kDimension,
  kConfiguration,
  kConvergence,
  kRefusal,
  kOrdering,
  kDomain,
  kNoThreshold,
  kUnsupportedRegime,
  kFlatCurve,
  kPropagation,
  kInsufficientData,
  kInternalConsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an iterative eigensolver exhausts its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(ErrorCode::kConvergence, what), best_residual_(best_residual) {}

  [[nodiscard]] double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace spinchannel
