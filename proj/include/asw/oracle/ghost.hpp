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

#ifndef ASW_ORACLE_GHOST_HPP
#define ASW_ORACLE_GHOST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace asw::oracle {

struct GhostCheck {
    std::uint32_t p = 0;
    std::size_t m = 0;
    /// One entry per identity checked, e.g. "sum n=1".
    std::vector<std::pair<std::string, bool>> results;
    bool all_ok() const;
};

/// Substitutes the solved sum / negation polynomials back into the ghost
/// components and checks w_n(S) = w_n(X) + w_n(Y), w_n(N) = -w_n(X) exactly.
GhostCheck ghost_check(std::uint32_t p, std::size_t m);

}  // namespace asw::oracle

#endif
