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

#ifndef ASW_COEFF_HPP
#define ASW_COEFF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asw/fp_poly.hpp"

namespace asw {

enum class ResidueKind { PrimeField, RationalFunctionField };

/// The residue field k: either F_p or F_p(u).
struct FieldSpec {
    std::uint32_t p = 2;
    ResidueKind kind = ResidueKind::PrimeField;

    /// Validating constructor; throws InvalidArgument unless p is prime.
    static FieldSpec make(std::uint32_t p, ResidueKind kind);

    bool perfect() const noexcept { return kind == ResidueKind::PrimeField; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

std::string to_string(const FieldSpec& spec);

/**
 * Element of the residue field. Prime-field elements are stored as constant
 * polynomials; F_p(u) elements as num/den in lowest terms with a monic
 * denominator, so structural equality is field equality.
 */
class ResidueElem {
   public:
    ResidueElem() = default;

    static ResidueElem zero(const FieldSpec& spec);
    static ResidueElem one(const FieldSpec& spec);
    static ResidueElem from_int(const FieldSpec& spec, std::int64_t n);
    /// The transcendental u of F_p(u); UnsupportedInput over F_p.
    static ResidueElem generator(const FieldSpec& spec);
    static ResidueElem from_poly(const FieldSpec& spec, FpPoly num);
    static ResidueElem fraction(const FieldSpec& spec, FpPoly num, FpPoly den);

    const FieldSpec& spec() const noexcept { return spec_; }
    const FpPoly& numerator() const noexcept { return num_; }
    const FpPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// True when the element lies in the prime field F_p.
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }

    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem operator/(const ResidueElem& o) const;
    ResidueElem operator-() const;
    ResidueElem& operator+=(const ResidueElem& o) { return *this = *this + o; }
    ResidueElem& operator-=(const ResidueElem& o) { return *this = *this - o; }
    ResidueElem& operator*=(const ResidueElem& o) { return *this = *this * o; }

    ResidueElem inverse() const;
    ResidueElem pow(std::int64_t e) const;
    /// x -> x^p.
    ResidueElem frobenius() const;

    friend bool operator==(const ResidueElem& a, const ResidueElem& b) noexcept {
        return a.spec_ == b.spec_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ResidueElem& a, const ResidueElem& b) noexcept { return !(a == b); }

   private:
    ResidueElem(const FieldSpec& spec, FpPoly num, FpPoly den);
    void normalize();
    void require_same(const ResidueElem& o) const;

    FieldSpec spec_;
    FpPoly num_;
    FpPoly den_;
};

/// r with r^p = a, or nothing. Always succeeds over F_p.
std::optional<ResidueElem> pth_root(const ResidueElem& a);

/**
 * Decides whether a = g^p - g for some g in k by degree descent on the
 * polynomial representative. Returns the witness g, or nothing when a is
 * outside the Artin-Schreier image. Rational functions with a nonconstant
 * denominator raise UnsupportedInput.
 */
std::optional<ResidueElem> as_preimage(const ResidueElem& a);

/// One entry of an F_p-independence sweep: c1*a1 + c2*a2 and its verdict.
struct SweepEntry {
    std::uint32_t c1 = 0;
    std::uint32_t c2 = 0;
    ResidueElem combination;
    bool in_image = false;
};

/// All p^2 - 1 nontrivial combinations c1*a1 + c2*a2 checked with as_preimage.
std::vector<SweepEntry> as_independence_sweep(const ResidueElem& a1, const ResidueElem& a2);

/// Two classes of k/P(k) spanning a 2-dimensional F_p-subspace.
/// ResidueTooSmall over F_p, where the quotient is 1-dimensional.
std::pair<ResidueElem, ResidueElem> build_disjoint_classes(const FieldSpec& spec);

std::string to_string(const ResidueElem& a);

}  // namespace asw

#endif
