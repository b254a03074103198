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

#ifndef ASW_INT_POLY_HPP
#define ASW_INT_POLY_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace asw {

/// Witt vectors are capped at length 4, so eight variables suffice.
inline constexpr std::size_t kMaxWittLength = 4;
inline constexpr std::size_t kIntPolyVars = 2 * kMaxWittLength;

/// Exponent vector. Variables are interleaved: X_i is slot 2i, Y_i is 2i+1,
/// so the polynomials for length m are a prefix of those for length m+1.
using Monomial = std::array<std::uint16_t, kIntPolyVars>;

inline constexpr std::size_t x_var(std::size_t i) noexcept { return 2 * i; }
inline constexpr std::size_t y_var(std::size_t i) noexcept { return 2 * i + 1; }

/**
 * Sparse multivariate polynomial with arbitrary-precision integer
 * coefficients. Terms are kept in a sorted map with no zero coefficients,
 * which makes structural equality polynomial equality.
 */
class IntPoly {
   public:
    using TermMap = std::map<Monomial, mpz_class>;

    IntPoly() = default;
    static IntPoly constant(const mpz_class& c);
    static IntPoly variable(std::size_t index);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Largest exponent of the given variable.
    std::uint32_t degree_in(std::size_t var) const noexcept;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& c) const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);

    IntPoly pow(std::uint64_t e) const;
    /// Division by an integer that must divide every coefficient;
    /// throws InternalInexactDivision otherwise.
    IntPoly divide_exact(const mpz_class& d) const;
    /// Substitutes subs[i] for variable i (variables beyond subs.size() must not occur).
    IntPoly compose(const std::vector<IntPoly>& subs) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

   private:
    void add_term(const Monomial& m, const mpz_class& c);

    TermMap terms_;
};

/// Pretty form with variables X_i / Y_i, highest total degree first.
std::string to_string(const IntPoly& f);

/// An IntPoly with coefficients reduced into [0, p).
struct ModPTerm {
    Monomial exponents{};
    std::uint32_t coeff = 0;
};
using ModPPoly = std::vector<ModPTerm>;

ModPPoly reduce_mod_p(const IntPoly& f, std::uint32_t p);

}  // namespace asw

#endif
