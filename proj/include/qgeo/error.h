// Copyright 2026 The qgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGEO_ERROR_H
#define QGEO_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgeo {

enum class ErrorCode {
    LengthMismatch,
    ZeroVector,
    NotNormalized,
    DimensionMismatch,
    IndexOutOfRange,
    SingleQubitState,
    InvalidBasis,
    InconsistentSplit,
    NotNormalizedWeights,
    NotTwoQubits,
    OutOfRange,
    BadNormalization,
    KOutOfRange,
    NTooSmall,
    UnknownFamily,
    BadResolution,
    ParseError,
    BadRange,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Raised by every library operation that rejects its input.
class Error : public std::invalid_argument {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace qgeo

#endif
