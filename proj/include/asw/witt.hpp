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

#ifndef ASW_WITT_HPP
#define ASW_WITT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "asw/coeff.hpp"
#include "asw/error.hpp"
#include "asw/int_poly.hpp"
#include "asw/valued.hpp"

namespace asw {

/* ---- universal polynomials ------------------------------------------------ */

/// Ghost components w_n = sum_{i<=n} p^i X_i^{p^(n-i)}, n < m. With `in_y`
/// the same polynomials in the Y variables.
std::vector<IntPoly> ghost_polys(std::uint32_t p, std::size_t m, bool in_y = false);

/// Addition and negation polynomials for W_m, over Z and reduced mod p.
struct WittPolynomials {
    std::uint32_t p = 0;
    std::size_t m = 0;
    std::vector<IntPoly> sum;
    std::vector<IntPoly> neg;
    std::vector<ModPPoly> sum_mod_p;
    std::vector<ModPPoly> neg_mod_p;
};

/**
 * Solves w_n(S_0..S_n) = w_n(X) + w_n(Y) (and w_n(N) = -w_n(X)) one
 * component at a time by exact division by p^n. Results are cached per
 * (p, m); the cache is write-once and safe to read concurrently.
 * Requires p in {2, 3, 5} and 1 <= m <= 4.
 */
std::shared_ptr<const WittPolynomials> witt_polynomials(std::uint32_t p, std::size_t m);

inline const std::vector<IntPoly>& sum_polys(std::uint32_t p, std::size_t m) { return witt_polynomials(p, m)->sum; }
inline const std::vector<IntPoly>& neg_polys(std::uint32_t p, std::size_t m) { return witt_polynomials(p, m)->neg; }

/// (p-1)! / (i! (p-i)!) as an exact integer.
mpz_class lemma54_coefficient(std::uint32_t p, std::uint32_t i);

/* ---- coefficient ring glue ------------------------------------------------ */

inline ResidueElem ring_zero(const ResidueElem& proto) { return ResidueElem::zero(proto.spec()); }
inline ResidueElem ring_from_int(const ResidueElem& proto, std::int64_t n) {
    return ResidueElem::from_int(proto.spec(), n);
}
inline ResidueElem ring_frobenius(const ResidueElem& x) { return x.frobenius(); }
inline std::uint32_t ring_characteristic(const ResidueElem& x) { return x.spec().p; }

inline LaurentElem ring_zero(const LaurentElem& proto) { return LaurentElem::zero(proto.spec()); }
inline LaurentElem ring_from_int(const LaurentElem& proto, std::int64_t n) {
    return LaurentElem::from_int(proto.spec(), n);
}
inline LaurentElem ring_frobenius(const LaurentElem& x) { return x.pth_power(); }
inline std::uint32_t ring_characteristic(const LaurentElem& x) { return x.spec().p; }

template <class R>
R ring_pow(const R& x, std::uint64_t e) {
    R result = ring_from_int(x, 1), base = x;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// Evaluates a mod-p polynomial with variable slot i bound to *vars[i].
template <class R>
R evaluate(const ModPPoly& f, const std::vector<const R*>& vars, const R& proto) {
    std::vector<std::map<std::uint16_t, R>> cache(vars.size());
    auto power = [&](std::size_t var, std::uint16_t e) -> const R& {
        auto it = cache[var].find(e);
        if (it == cache[var].end()) it = cache[var].emplace(e, ring_pow(*vars[var], e)).first;
        return it->second;
    };
    R acc = ring_zero(proto);
    for (const auto& term : f) {
        R prod = ring_from_int(proto, term.coeff);
        for (std::size_t i = 0; i < kIntPolyVars; ++i) {
            if (!term.exponents[i]) continue;
            if (i >= vars.size() || !vars[i]) fail(ErrorCode::ShapeMismatch, "unbound polynomial variable");
            prod = prod * power(i, term.exponents[i]);
        }
        acc = acc + prod;
    }
    return acc;
}

/* ---- Witt vectors ---------------------------------------------------------- */

/// Truncated Witt vector (a_1, ..., a_m) over a ring of characteristic p.
template <class R>
class WittVector {
   public:
    WittVector() = default;
    WittVector(std::uint32_t p, std::vector<R> components) : p_(p), c_(std::move(components)) {
        if (c_.empty() || c_.size() > kMaxWittLength)
            fail(ErrorCode::ShapeMismatch, "Witt vector length must be in [1, 4]");
        for (const auto& x : c_)
            if (ring_characteristic(x) != p_) fail(ErrorCode::SpecMismatch, "component of wrong characteristic");
    }

    static WittVector zero(std::uint32_t p, std::size_t m, const R& proto) {
        return WittVector(p, std::vector<R>(m, ring_zero(proto)));
    }
    /// (x, 0, ..., 0).
    static WittVector teichmuller_like(std::uint32_t p, std::size_t m, const R& x) {
        std::vector<R> c(m, ring_zero(x));
        c[0] = x;
        return WittVector(p, std::move(c));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::size_t length() const noexcept { return c_.size(); }
    const R& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<R>& components() const noexcept { return c_; }

    friend bool operator==(const WittVector& a, const WittVector& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const WittVector& a, const WittVector& b) { return !(a == b); }

   private:
    std::uint32_t p_ = 2;
    std::vector<R> c_;
};

template <class R>
void require_same_shape(const WittVector<R>& a, const WittVector<R>& b) {
    if (a.p() != b.p() || a.length() != b.length())
        fail(ErrorCode::ShapeMismatch, "Witt vectors of different shape");
}

template <class R>
WittVector<R> witt_add(const WittVector<R>& a, const WittVector<R>& b) {
    require_same_shape(a, b);
    const auto polys = witt_polynomials(a.p(), a.length());
    std::vector<const R*> vars(2 * a.length());
    for (std::size_t i = 0; i < a.length(); ++i) {
        vars[x_var(i)] = &a[i];
        vars[y_var(i)] = &b[i];
    }
    std::vector<R> out;
    out.reserve(a.length());
    for (std::size_t n = 0; n < a.length(); ++n) out.push_back(evaluate(polys->sum_mod_p[n], vars, a[0]));
    return WittVector<R>(a.p(), std::move(out));
}

template <class R>
WittVector<R> witt_neg(const WittVector<R>& a) {
    const auto polys = witt_polynomials(a.p(), a.length());
    std::vector<const R*> vars(2 * a.length(), nullptr);
    for (std::size_t i = 0; i < a.length(); ++i) vars[x_var(i)] = &a[i];
    std::vector<R> out;
    out.reserve(a.length());
    for (std::size_t n = 0; n < a.length(); ++n) out.push_back(evaluate(polys->neg_mod_p[n], vars, a[0]));
    return WittVector<R>(a.p(), std::move(out));
}

template <class R>
WittVector<R> witt_sub(const WittVector<R>& a, const WittVector<R>& b) {
    return witt_add(a, witt_neg(b));
}

/// k * a as a repeated Witt sum; negative k goes through witt_neg.
template <class R>
WittVector<R> witt_multiple(const WittVector<R>& a, std::int64_t k) {
    if (k < 0) return witt_multiple(witt_neg(a), -k);
    WittVector<R> acc = WittVector<R>::zero(a.p(), a.length(), a[0]);
    for (std::int64_t i = 0; i < k; ++i) acc = witt_add(acc, a);
    return acc;
}

/// Each component raised to the p^r-th power.
template <class R>
WittVector<R> frobenius_twist(const WittVector<R>& a, unsigned r) {
    std::vector<R> out = a.components();
    for (auto& x : out)
        for (unsigned k = 0; k < r; ++k) x = ring_frobenius(x);
    return WittVector<R>(a.p(), std::move(out));
}

/// Verschiebung: (a_1, ..., a_k) -> (0, a_1, ..., a_k).
template <class R>
WittVector<R> shift_in(const WittVector<R>& a) {
    std::vector<R> out;
    out.reserve(a.length() + 1);
    out.push_back(ring_zero(a[0]));
    for (const auto& x : a.components()) out.push_back(x);
    return WittVector<R>(a.p(), std::move(out));
}

/**
 * (c^p, w2) + (b, 0) written out term by term:
 *   (c^p + b, w2 - sum_{i=1}^{p-1} (p-1)!/(i!(p-i)!) c^{pi} b^{p-i}).
 */
template <class R>
WittVector<R> lemma54_closed_form(std::uint32_t p, const R& c, const R& w2, const R& b) {
    R second = w2;
    const R cp = ring_frobenius(c);
    for (std::uint32_t i = 1; i < p; ++i) {
        const mpz_class k = lemma54_coefficient(p, i);
        const std::int64_t k_mod = mpz_class(k % p).get_si();
        second = second - ring_from_int(c, k_mod) * ring_pow(cp, i) * ring_pow(b, p - i);
    }
    return WittVector<R>(p, {cp + b, second});
}

/// Componentwise agreement within tracked precision.
inline bool agrees(const WittVector<LaurentElem>& a, const WittVector<LaurentElem>& b) {
    if (a.p() != b.p() || a.length() != b.length()) return false;
    for (std::size_t i = 0; i < a.length(); ++i)
        if (!agrees(a[i], b[i])) return false;
    return true;
}

inline std::string to_string(const WittVector<LaurentElem>& a, std::int64_t implicit_precision = kDefaultPrecision) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i) out += "; ";
        out += to_string(a[i], implicit_precision);
    }
    return out + "]";
}

inline std::string to_string(const WittVector<ResidueElem>& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i) out += "; ";
        out += to_string(a[i]);
    }
    return out + "]";
}

using KWitt = WittVector<LaurentElem>;

}  // namespace asw

#endif
