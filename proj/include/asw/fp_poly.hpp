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

#ifndef ASW_FP_POLY_HPP
#define ASW_FP_POLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace asw {

/* Scalar helpers for Z/pZ, p < 2^31. */
std::uint32_t mod_reduce(std::int64_t x, std::uint32_t p) noexcept;
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;
bool is_prime(std::uint64_t n) noexcept;

/// Dense univariate polynomial over F_p in the variable u, lowest degree
/// first. The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
class FpPoly {
   public:
    FpPoly() = default;
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

    static FpPoly constant(std::uint32_t p, std::int64_t c);
    static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t degree);

    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    /// Degree of the polynomial; -1 for zero.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(std::uint32_t s) const;

    /// Euclidean division; throws DivisionByZero on a zero divisor.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
    FpPoly monic() const;
    /// p-th power: in characteristic p this is u -> u^p on exponents.
    FpPoly frobenius() const;
    /// Inverse Frobenius; empty when some exponent is not a multiple of p.
    std::optional<FpPoly> pth_root() const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) noexcept {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) noexcept { return !(a == b); }

   private:
    void trim();

    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);

}  // namespace asw

#endif
