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

#include "qgeo/error.h"

namespace qgeo {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::ZeroVector:
            return "ZeroVector";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::SingleQubitState:
            return "SingleQubitState";
        case ErrorCode::InvalidBasis:
            return "InvalidBasis";
        case ErrorCode::InconsistentSplit:
            return "InconsistentSplit";
        case ErrorCode::NotNormalizedWeights:
            return "NotNormalizedWeights";
        case ErrorCode::NotTwoQubits:
            return "NotTwoQubits";
        case ErrorCode::OutOfRange:
            return "OutOfRange";
        case ErrorCode::BadNormalization:
            return "BadNormalization";
        case ErrorCode::KOutOfRange:
            return "KOutOfRange";
        case ErrorCode::NTooSmall:
            return "NTooSmall";
        case ErrorCode::UnknownFamily:
            return "UnknownFamily";
        case ErrorCode::BadResolution:
            return "BadResolution";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::BadRange:
            return "BadRange";
        case ErrorCode::IoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::invalid_argument(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace qgeo
