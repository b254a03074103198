/*
   Copyright 2026 The aswkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ASW_ERROR_HPP
#define ASW_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace asw {

enum class ErrorCode {
    DivisionByZero,
    SpecMismatch,
    UnsupportedInput,
    ResidueTooSmall,
    PrecisionExhausted,
    NoRoot,
    ShapeMismatch,
    InternalInexactDivision,
    RuleViolation,
    HypothesisViolation,
    HypothesisNotVerified,
    UnsupportedCase,
    ParseError,
    Overflow,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this type; `code()` says which
/// contract was broken.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace asw

#endif
