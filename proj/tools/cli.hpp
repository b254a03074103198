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

#ifndef ASW_TOOLS_CLI_HPP
#define ASW_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asw/coeff.hpp"
#include "asw/error.hpp"

namespace asw::cli {

enum ExitCode : int {
    kOk = 0,
    kOther = 1,
    kHypothesis = 2,
    kParse = 3,
    kPrecision = 4,
};

int exit_code_for(ErrorCode code) noexcept;

struct SessionConfig {
    std::uint32_t p = 2;
    std::size_t m = 1;
    ResidueKind residue = ResidueKind::PrimeField;
    std::int64_t precision = 64;
    bool structured = false;
    std::uint64_t seed = 1;

    /// InvalidArgument on anything out of range.
    void validate() const;
    FieldSpec spec() const { return FieldSpec::make(p, residue); }
    nlohmann::ordered_json to_json() const;
};

struct CommandArgs {
    std::vector<std::string> positional;
    std::optional<std::string> omega;
    std::optional<std::string> b;
    std::size_t count = 100;
};

/// A finished command: structured record plus the lines of the text form.
struct CommandResult {
    int exit_code = kOk;
    nlohmann::ordered_json report;
    std::vector<std::string> text;
    std::vector<std::string> errors;
};

const std::vector<std::string>& commands();

/// `command` is e.g. "witt add" or "thm roundtrip". Never throws for
/// library errors; they become the report's verdict and exit code.
CommandResult run_command(const SessionConfig& cfg, const std::string& command, const CommandArgs& args);

/// Full command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asw::cli

#endif
