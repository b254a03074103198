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

#include "asw/error.hpp"

namespace asw {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::SpecMismatch: return "SpecMismatch";
        case ErrorCode::UnsupportedInput: return "UnsupportedInput";
        case ErrorCode::ResidueTooSmall: return "ResidueTooSmall";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::InternalInexactDivision: return "InternalInexactDivision";
        case ErrorCode::RuleViolation: return "RuleViolation";
        case ErrorCode::HypothesisViolation: return "HypothesisViolation";
        case ErrorCode::HypothesisNotVerified: return "HypothesisNotVerified";
        case ErrorCode::UnsupportedCase: return "UnsupportedCase";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace asw
