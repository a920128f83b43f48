// Copyright 2026 The exactq Authors
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

#include "exactq/error.hpp"

namespace exactq {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::BindingConflict:
            return "BindingConflict";
        case ErrorCode::NotIsometry:
            return "NotIsometry";
        case ErrorCode::UnspecifiedInput:
            return "UnspecifiedInput";
        case ErrorCode::PartitionGap:
            return "PartitionGap";
        case ErrorCode::PartitionOverlap:
            return "PartitionOverlap";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::DivergedChain:
            return "DivergedChain";
        case ErrorCode::DegenerateCase:
            return "DegenerateCase";
        case ErrorCode::NoChain:
            return "NoChain";
        case ErrorCode::InconsistentSpec:
            return "InconsistentSpec";
        case ErrorCode::NotSymmetrizable:
            return "NotSymmetrizable";
        case ErrorCode::ZeroWitnessMissing:
            return "ZeroWitnessMissing";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace exactq
