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

// Random generators shared by the unit and acceptance suites.

#ifndef ASW_TESTS_SUPPORT_HPP
#define ASW_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "asw/coeff.hpp"
#include "asw/valued.hpp"
#include "asw/witt.hpp"

namespace asw::testing {

inline FieldSpec fp(std::uint32_t p) { return FieldSpec::make(p, ResidueKind::PrimeField); }
inline FieldSpec fpu(std::uint32_t p) { return FieldSpec::make(p, ResidueKind::RationalFunctionField); }

class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin() { return range(0, 1) == 1; }

    /// Polynomial in u of degree <= max_deg with uniform coefficients.
    FpPoly poly(std::uint32_t p, int max_deg) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(max_deg) + 1);
        for (auto& x : c) x = static_cast<std::uint32_t>(range(0, p - 1));
        return FpPoly(p, std::move(c));
    }

    /// Residue element; over F_p(u) a fraction when `fractions` is set.
    ResidueElem residue(const FieldSpec& spec, bool fractions = false, int max_deg = 6) {
        if (spec.perfect()) return ResidueElem::from_int(spec, range(0, spec.p - 1));
        FpPoly num = poly(spec.p, max_deg);
        if (!fractions || coin()) return ResidueElem::from_poly(spec, num);
        FpPoly den;
        do den = poly(spec.p, 3);
        while (den.is_zero());
        return ResidueElem::fraction(spec, num, den);
    }

    ResidueElem nonzero_residue(const FieldSpec& spec, bool fractions = false, int max_deg = 6) {
        ResidueElem r;
        do r = residue(spec, fractions, max_deg);
        while (r.is_zero());
        return r;
    }

    /// Laurent element with up to `terms` terms at exponents in [lo, hi].
    LaurentElem laurent(const FieldSpec& spec, std::int64_t lo, std::int64_t hi, int terms = 4,
                        std::int64_t precision = kExact, int max_deg = 3) {
        LaurentElem x = LaurentElem::zero(spec, precision);
        for (int k = 0; k < terms; ++k)
            x += LaurentElem::monomial(residue(spec, false, max_deg), range(lo, hi), precision);
        return x;
    }

    /// Laurent element with exact valuation v.
    LaurentElem laurent_with_valuation(const FieldSpec& spec, std::int64_t v, std::int64_t hi, int terms = 3,
                                       std::int64_t precision = kExact, int max_deg = 3) {
        LaurentElem x = LaurentElem::monomial(nonzero_residue(spec, false, max_deg), v, precision);
        if (hi > v) x += laurent(spec, v + 1, hi, terms, precision, max_deg);
        return x;
    }

    KWitt witt(const FieldSpec& spec, std::size_t m, std::int64_t lo, std::int64_t hi, int terms = 3) {
        std::vector<LaurentElem> c;
        for (std::size_t i = 0; i < m; ++i) c.push_back(laurent(spec, lo, hi, terms));
        return KWitt(spec.p, std::move(c));
    }

    std::mt19937_64& engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace asw::testing

#endif
