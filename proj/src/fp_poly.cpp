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

#include "asw/fp_poly.hpp"

#include <algorithm>

#include "asw/error.hpp"

namespace asw {

std::uint32_t mod_reduce(std::int64_t x, std::uint32_t p) noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
    std::uint64_t result = 1 % p, base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    // Fermat; p is prime everywhere this is called.
    return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) { return FpPoly(p, {mod_reduce(c, p)}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t degree) {
    std::vector<std::uint32_t> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r;
    r.p_ = p_;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (coeff(i) + o.coeff(i)) % p_;
    r.trim();
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = c ? p_ - c : 0;
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r;
    r.p_ = p_;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    FpPoly r;
    r.p_ = p_;
    if (is_zero() || o.is_zero()) return r;
    std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
    }
    r.c_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

FpPoly FpPoly::scaled(std::uint32_t s) const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * s % p_);
    r.trim();
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    FpPoly rem = *this;
    FpPoly quo;
    quo.p_ = p_;
    if (rem.degree() < d.degree()) return {quo, rem};
    quo.c_.assign(static_cast<std::size_t>(rem.degree() - d.degree() + 1), 0);
    const std::uint32_t inv = mod_inverse(d.lead(), p_);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
        const std::uint32_t q = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem.lead()) * inv % p_);
        quo.c_[shift] = q;
        for (std::size_t i = 0; i < d.c_.size(); ++i) {
            auto& slot = rem.c_[i + shift];
            slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(p_ - q) * d.c_[i]) % p_);
        }
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inverse(lead(), p_));
}

FpPoly FpPoly::frobenius() const {
    if (is_zero()) return *this;
    std::vector<std::uint32_t> v(static_cast<std::size_t>(degree()) * p_ + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * p_] = c_[i];
    return FpPoly(p_, std::move(v));
}

std::optional<FpPoly> FpPoly::pth_root() const {
    if (is_zero()) return *this;
    std::vector<std::uint32_t> v(static_cast<std::size_t>(degree()) / p_ + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (i % p_) return std::nullopt;
        v[i / p_] = c_[i];
    }
    return FpPoly(p_, std::move(v));
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace asw
