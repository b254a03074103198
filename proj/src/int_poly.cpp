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

#include "asw/int_poly.hpp"

#include <algorithm>
#include <limits>

#include "asw/error.hpp"

namespace asw {

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly r;
    if (c != 0) r.terms_.emplace(Monomial{}, c);
    return r;
}

IntPoly IntPoly::variable(std::size_t index) {
    if (index >= kIntPolyVars) fail(ErrorCode::InvalidArgument, "variable index out of range");
    Monomial m{};
    m[index] = 1;
    IntPoly r;
    r.terms_.emplace(m, mpz_class(1));
    return r;
}

std::uint32_t IntPoly::degree_in(std::size_t var) const noexcept {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::uint32_t>(d, m[var]);
    return d;
}

void IntPoly::add_term(const Monomial& m, const mpz_class& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    r += o;
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    r -= o;
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

IntPoly IntPoly::operator*(const mpz_class& k) const {
    if (k == 0) return {};
    IntPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= k;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    mpz_class prod;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < kIntPolyVars; ++i) {
                const std::uint32_t e = std::uint32_t{ma[i]} + mb[i];
                if (e > std::numeric_limits<std::uint16_t>::max())
                    fail(ErrorCode::Overflow, "monomial exponent exceeds 16 bits");
                m[i] = static_cast<std::uint16_t>(e);
            }
            prod = ca * cb;
            r.add_term(m, prod);
        }
    }
    return r;
}

IntPoly IntPoly::pow(std::uint64_t e) const {
    IntPoly result = constant(1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

IntPoly IntPoly::divide_exact(const mpz_class& d) const {
    if (d == 0) fail(ErrorCode::DivisionByZero, "IntPoly division by zero");
    IntPoly r = *this;
    for (auto& [m, c] : r.terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            fail(ErrorCode::InternalInexactDivision,
                 "coefficient " + c.get_str() + " is not divisible by " + d.get_str());
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

IntPoly IntPoly::compose(const std::vector<IntPoly>& subs) const {
    // Powers of each substituted polynomial, computed on demand.
    std::vector<std::map<std::uint32_t, IntPoly>> powers(subs.size());
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const IntPoly& {
        auto it = powers[var].find(e);
        if (it == powers[var].end()) it = powers[var].emplace(e, subs[var].pow(e)).first;
        return it->second;
    };
    IntPoly r;
    for (const auto& [m, c] : terms_) {
        IntPoly term = constant(c);
        for (std::size_t i = 0; i < kIntPolyVars; ++i) {
            if (!m[i]) continue;
            if (i >= subs.size()) fail(ErrorCode::InvalidArgument, "compose: missing substitution");
            term = term * power_of(i, m[i]);
        }
        r += term;
    }
    return r;
}

std::string to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, mpz_class>> terms(f.terms().begin(), f.terms().end());
    auto total = [](const Monomial& m) {
        std::uint32_t d = 0;
        for (auto e : m) d += e;
        return d;
    };
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) { return total(a.first) > total(b.first); });
    std::string out;
    for (const auto& [m, c] : terms) {
        mpz_class mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < kIntPolyVars; ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += (i % 2 == 0 ? "X_" : "Y_") + std::to_string(i / 2);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

ModPPoly reduce_mod_p(const IntPoly& f, std::uint32_t p) {
    ModPPoly out;
    mpz_class r;
    const mpz_class mp(p);
    for (const auto& [m, c] : f.terms()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mp.get_mpz_t());
        if (r != 0) out.push_back({m, static_cast<std::uint32_t>(r.get_ui())});
    }
    return out;
}

}  // namespace asw
