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

#include "asw/oracle/ghost.hpp"

#include "asw/witt.hpp"

namespace asw::oracle {

bool GhostCheck::all_ok() const {
    for (const auto& [name, ok] : results)
        if (!ok) return false;
    return true;
}

GhostCheck ghost_check(std::uint32_t p, std::size_t m) {
    GhostCheck out{p, m, {}};
    const auto polys = witt_polynomials(p, m);
    const auto gx = ghost_polys(p, m, false);
    const auto gy = ghost_polys(p, m, true);
    for (std::size_t n = 0; n < m; ++n) {
        std::vector<IntPoly> subs_s(2 * m), subs_n(2 * m);
        for (std::size_t i = 0; i <= n; ++i) {
            subs_s[x_var(i)] = polys->sum[i];
            subs_n[x_var(i)] = polys->neg[i];
        }
        out.results.emplace_back("sum n=" + std::to_string(n), (gx[n].compose(subs_s) - gx[n] - gy[n]).is_zero());
        out.results.emplace_back("neg n=" + std::to_string(n), (gx[n].compose(subs_n) + gx[n]).is_zero());
    }
    return out;
}

}  // namespace asw::oracle
