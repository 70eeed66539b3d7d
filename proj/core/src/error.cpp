// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/error.hpp"

namespace spinchannel {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidSector: return "invalid-sector";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kConvergence: return "convergence";
    case ErrorCode::kRefusal: return "refusal";
    case ErrorCode::kOrdering: return "ordering";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kNoThreshold: return "no-threshold";
    case ErrorCode::kUnsupportedRegime: return "unsupported-regime";
    case ErrorCode::kFlatCurve: return "flat-curve";
    case ErrorCode::kPropagation: return "propagation";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kInternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

}  // namespace spinchannel
