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

#ifndef ASW_PARSE_HPP
#define ASW_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asw/brauer.hpp"
#include "asw/error.hpp"
#include "asw/valued.hpp"
#include "asw/witt.hpp"

namespace asw {

/// Syntax error at a byte offset, with the tokens that would have been accepted.
class ParseFailure : public Error {
   public:
    ParseFailure(std::size_t offset, std::vector<std::string> expected, const std::string& what);
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

   private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/**
 * Grammar (whitespace is ignored between tokens):
 *
 *   laurent := sum
 *   sum     := ["-"] term (("+" | "-") term)*
 *   term    := "O(t^" int ")" | product
 *   product := power (("*" | "/") power)*
 *   power   := atom ["^" ["-"] int]
 *   atom    := int | "u" | "t" | "(" sum ")"
 *   witt    := "[" laurent (";" laurent)* "]"
 *   symbol  := "[" witt ";" laurent ")"
 *
 * At most one O-term, at the top level. Without one the value is known to
 * O(t^implicit_precision). "u" is accepted only over F_p(u).
 */
LaurentElem parse_laurent(std::string_view src, const FieldSpec& spec, std::int64_t implicit_precision = kDefaultPrecision);
KWitt parse_witt(std::string_view src, const FieldSpec& spec, std::int64_t implicit_precision = kDefaultPrecision);
BrauerSymbol parse_symbol(std::string_view src, const FieldSpec& spec,
                          std::int64_t implicit_precision = kDefaultPrecision);

}  // namespace asw

#endif
