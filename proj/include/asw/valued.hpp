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

#ifndef ASW_VALUED_HPP
#define ASW_VALUED_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asw/coeff.hpp"

namespace asw {

/// Default absolute precision: elements are known modulo t^64.
inline constexpr std::int64_t kDefaultPrecision = 64;
/// Precision of exactly known elements (constants, monomials built in code).
inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

/**
 * Laurent series over the residue field, known modulo t^precision.
 *
 * Precision propagation (v = valuation, or N for an apparent zero):
 *   a +- b : min(Na, Nb)
 *   a * b  : min(va + Nb, vb + Na)
 *   1 / a  : Na - 2 va
 *   a^p    : p Na           (Frobenius is additive)
 *   a^(1/p): ceil(Na / p)
 * kExact saturates every rule. Inverting an exact non-monomial yields a
 * finite precision of kDefaultPrecision relative to the valuation.
 */
class LaurentElem {
   public:
    using Term = std::pair<std::int64_t, ResidueElem>;

    LaurentElem() = default;

    static LaurentElem zero(const FieldSpec& spec, std::int64_t precision = kExact);
    static LaurentElem one(const FieldSpec& spec) { return constant(ResidueElem::one(spec)); }
    static LaurentElem from_int(const FieldSpec& spec, std::int64_t n) {
        return constant(ResidueElem::from_int(spec, n));
    }
    static LaurentElem constant(const ResidueElem& c, std::int64_t precision = kExact) {
        return monomial(c, 0, precision);
    }
    static LaurentElem monomial(const ResidueElem& c, std::int64_t exponent, std::int64_t precision = kExact);
    static LaurentElem t_power(const FieldSpec& spec, std::int64_t exponent, std::int64_t precision = kExact) {
        return monomial(ResidueElem::one(spec), exponent, precision);
    }
    /// Builds from arbitrary (exponent, coefficient) pairs: merges duplicate
    /// exponents and drops zeros and terms at or above the precision.
    static LaurentElem from_terms(const FieldSpec& spec, std::vector<Term> terms, std::int64_t precision);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::int64_t precision() const noexcept { return prec_; }
    bool is_exact() const noexcept { return prec_ == kExact; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    /// No known nonzero coefficient: zero up to the tracked precision.
    bool is_apparent_zero() const noexcept { return terms_.empty(); }

    /// Least exponent with nonzero coefficient; PrecisionExhausted on an apparent zero.
    std::int64_t valuation() const;
    std::optional<std::int64_t> try_valuation() const noexcept;
    const ResidueElem& leading_coefficient() const;
    ResidueElem coefficient(std::int64_t exponent) const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    LaurentElem operator+(const LaurentElem& o) const;
    LaurentElem operator-(const LaurentElem& o) const;
    LaurentElem operator*(const LaurentElem& o) const;
    LaurentElem operator/(const LaurentElem& o) const { return *this * o.inverse(); }
    LaurentElem operator-() const;
    LaurentElem& operator+=(const LaurentElem& o) { return *this = *this + o; }
    LaurentElem& operator-=(const LaurentElem& o) { return *this = *this - o; }
    LaurentElem& operator*=(const LaurentElem& o) { return *this = *this * o; }

    LaurentElem inverse() const;
    LaurentElem pow(std::int64_t e) const;
    LaurentElem scaled(const ResidueElem& c) const;
    /// Multiplication by t^k.
    LaurentElem shifted(std::int64_t k) const;
    /// Frobenius: exponents and coefficients raised to the p-th power.
    LaurentElem pth_power() const;
    /// Forget information: precision becomes min(precision, n).
    LaurentElem with_precision(std::int64_t n) const;
    /// Terms with exponent < bound (precision preserved up to bound).
    LaurentElem head(std::int64_t bound) const;
    /// Terms with exponent >= bound, at the original precision.
    LaurentElem tail(std::int64_t bound) const;

    /// Structural equality: same spec, same precision, same terms.
    friend bool operator==(const LaurentElem& a, const LaurentElem& b) noexcept {
        return a.spec_ == b.spec_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentElem& a, const LaurentElem& b) noexcept { return !(a == b); }

   private:
    void require_same(const LaurentElem& o) const;

    FieldSpec spec_;
    std::vector<Term> terms_;
    std::int64_t prec_ = kExact;
};

/// Equality within precision: every coefficient below min(Na, Nb) agrees.
bool agrees(const LaurentElem& a, const LaurentElem& b);

std::optional<LaurentElem> pth_root(const LaurentElem& a);

/// Text form `c*t^e + ... + O(t^N)`; the O-term is omitted when N equals
/// `implicit_precision` or the element is exact.
std::string to_string(const LaurentElem& a, std::int64_t implicit_precision = kDefaultPrecision);

/// Element of (1/p^k)Z in lowest terms.
class RationalValue {
   public:
    RationalValue() = default;
    RationalValue(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    /// Smallest k with den | p^k, or nothing when den is not a power of p.
    std::optional<int> p_exponent(std::uint32_t p) const noexcept;

    RationalValue operator+(const RationalValue& o) const;
    RationalValue operator-(const RationalValue& o) const;
    RationalValue operator*(std::int64_t k) const { return RationalValue(num_ * k, den_); }
    RationalValue operator/(std::int64_t k) const { return RationalValue(num_, den_ * k); }

    friend bool operator==(const RationalValue&, const RationalValue&) = default;
    friend bool operator<(const RationalValue& a, const RationalValue& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::string to_string(const RationalValue& v);

/// Value of an element of a degree-n extension from its norm: val(N(a)) / n.
RationalValue ext_val(std::int64_t degree, const LaurentElem& norm_value);

/// Checked exponent arithmetic; throws Overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace asw

#endif
