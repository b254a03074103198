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

#include "asw/witt.hpp"

#include <mutex>
#include <utility>

namespace asw {

namespace {

void validate(std::uint32_t p, std::size_t m) {
    if (!is_prime(p) || p > 5) fail(ErrorCode::InvalidArgument, "Witt polynomials need p in {2, 3, 5}");
    if (m < 1 || m > kMaxWittLength) fail(ErrorCode::InvalidArgument, "Witt length must be in [1, 4]");
}

mpz_class ipow(std::uint64_t base, std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

std::uint64_t upow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

std::shared_ptr<const WittPolynomials> compute(std::uint32_t p, std::size_t m,
                                               const WittPolynomials* prefix) {
    auto out = std::make_shared<WittPolynomials>();
    out->p = p;
    out->m = m;
    if (prefix) *out = *prefix;
    out->m = m;
    const auto gx = ghost_polys(p, m, false);
    const auto gy = ghost_polys(p, m, true);
    for (std::size_t n = out->sum.size(); n < m; ++n) {
        IntPoly s = gx[n] + gy[n];
        IntPoly g = -gx[n];
        for (std::size_t i = 0; i < n; ++i) {
            const mpz_class w = ipow(p, i);
            const std::uint64_t e = upow(p, n - i);
            s -= out->sum[i].pow(e) * w;
            g -= out->neg[i].pow(e) * w;
        }
        const mpz_class d = ipow(p, n);
        out->sum.push_back(s.divide_exact(d));
        out->neg.push_back(g.divide_exact(d));
        out->sum_mod_p.push_back(reduce_mod_p(out->sum.back(), p));
        out->neg_mod_p.push_back(reduce_mod_p(out->neg.back(), p));
    }
    return out;
}

}  // namespace

std::vector<IntPoly> ghost_polys(std::uint32_t p, std::size_t m, bool in_y) {
    validate(p, m);
    std::vector<IntPoly> out;
    for (std::size_t n = 0; n < m; ++n) {
        IntPoly w;
        for (std::size_t i = 0; i <= n; ++i) {
            const IntPoly v = IntPoly::variable(in_y ? y_var(i) : x_var(i));
            w += v.pow(upow(p, n - i)) * ipow(p, i);
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::shared_ptr<const WittPolynomials> witt_polynomials(std::uint32_t p, std::size_t m) {
    validate(p, m);
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::size_t>, std::shared_ptr<const WittPolynomials>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    const WittPolynomials* prefix = nullptr;
    for (std::size_t k = m - 1; k >= 1; --k)
        if (auto it = cache.find({p, k}); it != cache.end()) {
            prefix = it->second.get();
            break;
        }
    auto result = compute(p, m, prefix);
    cache.emplace(std::make_pair(p, m), result);
    return result;
}

mpz_class lemma54_coefficient(std::uint32_t p, std::uint32_t i) {
    mpz_class num, a, b;
    mpz_fac_ui(num.get_mpz_t(), p - 1);
    mpz_fac_ui(a.get_mpz_t(), i);
    mpz_fac_ui(b.get_mpz_t(), p - i);
    mpz_class den = a * b;
    return num / den;
}

}  // namespace asw
