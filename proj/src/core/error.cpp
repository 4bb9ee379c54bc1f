// Copyright 2026 The pest-lab Authors
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

#include "pestlab/error.hpp"

namespace pestlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotBent: return "NotBent";
    case ErrorCode::kWrongParity: return "WrongParity";
    case ErrorCode::kAllOnesValueZero: return "AllOnesValueZero";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kWidthMismatch: return "WidthMismatch";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pestlab
