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

#ifndef PESTLAB_ERROR_HPP
#define PESTLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pestlab {

enum class ErrorCode {
  kInvalidArgument,
  kReducibleModulus,
  kDegreeMismatch,
  kZeroInverse,
  kSearchExhausted,
  kBadParameters,
  kDegeneratePair,
  kTooLarge,
  kNotBent,
  kWrongParity,
  kAllOnesValueZero,
  kEmptySupport,
  kZeroElement,
  kWidthMismatch,
  kParse,
  kVerificationFailed,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Checks an internal invariant; a violation is a bug, not a user error.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::kInternal, what);
}

}  // namespace pestlab

#endif  // PESTLAB_ERROR_HPP
