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

#include "asw/valued.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "asw/error.hpp"

namespace asw {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "exponent overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "exponent overflow in multiplication");
    return r;
}

namespace {

std::int64_t prec_add(std::int64_t a, std::int64_t b) {
    if (a == kExact || b == kExact) return kExact;
    return checked_add(a, b);
}

std::int64_t prec_scale(std::int64_t a, std::int64_t k) { return a == kExact ? kExact : checked_mul(a, k); }

std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
    std::int64_t q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

}  // namespace

LaurentElem LaurentElem::zero(const FieldSpec& spec, std::int64_t precision) {
    LaurentElem r;
    r.spec_ = spec;
    r.prec_ = precision;
    return r;
}

LaurentElem LaurentElem::monomial(const ResidueElem& c, std::int64_t exponent, std::int64_t precision) {
    LaurentElem r = zero(c.spec(), precision);
    if (!c.is_zero() && exponent < precision) r.terms_.emplace_back(exponent, c);
    return r;
}

LaurentElem LaurentElem::from_terms(const FieldSpec& spec, std::vector<Term> terms, std::int64_t precision) {
    std::map<std::int64_t, ResidueElem> acc;
    for (auto& [e, c] : terms) {
        if (c.spec() != spec) fail(ErrorCode::SpecMismatch, "coefficient over " + to_string(c.spec()));
        if (e >= precision) continue;
        auto it = acc.find(e);
        if (it == acc.end())
            acc.emplace(e, std::move(c));
        else
            it->second += c;
    }
    LaurentElem r = zero(spec, precision);
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
    return r;
}

void LaurentElem::require_same(const LaurentElem& o) const {
    if (spec_ != o.spec_)
        fail(ErrorCode::SpecMismatch, "Laurent series over " + to_string(spec_) + " and " + to_string(o.spec_));
}

std::optional<std::int64_t> LaurentElem::try_valuation() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
}

std::int64_t LaurentElem::valuation() const {
    if (terms_.empty()) {
        if (is_exact()) fail(ErrorCode::PrecisionExhausted, "valuation of exact zero");
        fail(ErrorCode::PrecisionExhausted, "all coefficients below t^" + std::to_string(prec_) + " vanish");
    }
    return terms_.front().first;
}

const ResidueElem& LaurentElem::leading_coefficient() const {
    valuation();
    return terms_.front().second;
}

ResidueElem LaurentElem::coefficient(std::int64_t exponent) const {
    if (exponent >= prec_)
        fail(ErrorCode::PrecisionExhausted, "coefficient of t^" + std::to_string(exponent) + " is unknown");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, std::int64_t e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return ResidueElem::zero(spec_);
}

LaurentElem LaurentElem::operator+(const LaurentElem& o) const {
    require_same(o);
    LaurentElem r = zero(spec_, std::min(prec_, o.prec_));
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            if (a->first < r.prec_) r.terms_.push_back(*a);
            ++a;
        } else if (a == terms_.end() || b->first < a->first) {
            if (b->first < r.prec_) r.terms_.push_back(*b);
            ++b;
        } else {
            if (a->first < r.prec_) {
                ResidueElem c = a->second + b->second;
                if (!c.is_zero()) r.terms_.emplace_back(a->first, std::move(c));
            }
            ++a;
            ++b;
        }
    }
    return r;
}

LaurentElem LaurentElem::operator-() const {
    LaurentElem r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentElem LaurentElem::operator-(const LaurentElem& o) const { return *this + (-o); }

LaurentElem LaurentElem::operator*(const LaurentElem& o) const {
    require_same(o);
    const std::int64_t va = terms_.empty() ? prec_ : terms_.front().first;
    const std::int64_t vb = o.terms_.empty() ? o.prec_ : o.terms_.front().first;
    const std::int64_t n = std::min(prec_add(va, o.prec_), prec_add(vb, prec_));
    LaurentElem r = zero(spec_, n);
    if (terms_.empty() || o.terms_.empty()) return r;

    const std::int64_t lo = checked_add(va, vb);
    const std::int64_t hi_all = checked_add(terms_.back().first, o.terms_.back().first) + 1;
    const std::int64_t hi = std::min(hi_all, n);
    if (hi <= lo) return r;
    const std::size_t width = static_cast<std::size_t>(hi - lo);
    std::vector<ResidueElem> acc(width);
    std::vector<char> used(width, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            const std::int64_t e = ea + eb;
            if (e >= hi) break;
            const std::size_t slot = static_cast<std::size_t>(e - lo);
            if (used[slot])
                acc[slot] += ca * cb;
            else {
                acc[slot] = ca * cb;
                used[slot] = 1;
            }
        }
    }
    for (std::size_t i = 0; i < width; ++i)
        if (used[i] && !acc[i].is_zero()) r.terms_.emplace_back(lo + static_cast<std::int64_t>(i), std::move(acc[i]));
    return r;
}

LaurentElem LaurentElem::inverse() const {
    if (terms_.empty()) {
        if (is_exact()) fail(ErrorCode::DivisionByZero, "inverse of exact zero");
        fail(ErrorCode::PrecisionExhausted, "inverse of an apparent zero modulo t^" + std::to_string(prec_));
    }
    const std::int64_t v = terms_.front().first;
    const ResidueElem c0inv = terms_.front().second.inverse();
    if (is_exact() && is_monomial()) return monomial(c0inv, checked_mul(v, -1), kExact);

    const std::int64_t known = is_exact() ? checked_add(v, kDefaultPrecision) : prec_;
    const std::int64_t rel = known - v;
    const std::int64_t n = checked_add(known, checked_mul(v, -2));
    std::vector<ResidueElem> w;
    w.reserve(static_cast<std::size_t>(rel));
    w.push_back(c0inv);
    for (std::int64_t k = 1; k < rel; ++k) {
        ResidueElem s = ResidueElem::zero(spec_);
        for (std::size_t j = 1; j < terms_.size(); ++j) {
            const std::int64_t off = terms_[j].first - v;
            if (off > k) break;
            const ResidueElem& prev = w[static_cast<std::size_t>(k - off)];
            if (!prev.is_zero()) s += terms_[j].second * prev;
        }
        w.push_back(-(c0inv * s));
    }
    LaurentElem r = zero(spec_, n);
    for (std::int64_t k = 0; k < rel; ++k)
        if (!w[static_cast<std::size_t>(k)].is_zero()) r.terms_.emplace_back(k - v, w[static_cast<std::size_t>(k)]);
    return r;
}

LaurentElem LaurentElem::pow(std::int64_t e) const {
    if (e < 0) return pow(-e).inverse();
    LaurentElem result = one(spec_), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

LaurentElem LaurentElem::scaled(const ResidueElem& c) const {
    if (c.spec() != spec_) fail(ErrorCode::SpecMismatch, "scalar over " + to_string(c.spec()));
    if (c.is_zero()) return zero(spec_, prec_);
    LaurentElem r = *this;
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

LaurentElem LaurentElem::shifted(std::int64_t k) const {
    LaurentElem r = *this;
    for (auto& [e, c] : r.terms_) e = checked_add(e, k);
    r.prec_ = prec_add(prec_, k);
    return r;
}

LaurentElem LaurentElem::pth_power() const {
    const std::int64_t p = spec_.p;
    LaurentElem r = zero(spec_, prec_scale(prec_, p));
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(checked_mul(e, p), c.frobenius());
    return r;
}

LaurentElem LaurentElem::with_precision(std::int64_t n) const { return head(n); }

LaurentElem LaurentElem::head(std::int64_t bound) const {
    LaurentElem r = zero(spec_, std::min(prec_, bound));
    for (const auto& t : terms_)
        if (t.first < r.prec_) r.terms_.push_back(t);
    return r;
}

LaurentElem LaurentElem::tail(std::int64_t bound) const {
    LaurentElem r = zero(spec_, prec_);
    for (const auto& t : terms_)
        if (t.first >= bound) r.terms_.push_back(t);
    return r;
}

bool agrees(const LaurentElem& a, const LaurentElem& b) {
    if (a.spec() != b.spec()) return false;
    const std::int64_t n = std::min(a.precision(), b.precision());
    return a.head(n).terms() == b.head(n).terms();
}

std::optional<LaurentElem> pth_root(const LaurentElem& a) {
    const std::int64_t p = a.spec().p;
    std::vector<LaurentElem::Term> terms;
    for (const auto& [e, c] : a.terms()) {
        if (e % p != 0) return std::nullopt;
        auto r = pth_root(c);
        if (!r) return std::nullopt;
        terms.emplace_back(e / p, *r);
    }
    const std::int64_t n = a.is_exact() ? kExact : ceil_div(a.precision(), p);
    return LaurentElem::from_terms(a.spec(), std::move(terms), n);
}

std::string to_string(const LaurentElem& a, std::int64_t implicit_precision) {
    std::string out;
    for (const auto& [e, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += to_string(c);
            continue;
        }
        const std::string tp = e == 1 ? "t" : "t^" + std::to_string(e);
        if (c.is_one()) {
            out += tp;
            continue;
        }
        const bool single = c.is_polynomial() && std::count_if(c.numerator().coeffs().begin(),
                                                               c.numerator().coeffs().end(),
                                                               [](std::uint32_t x) { return x != 0; }) == 1;
        out += single || !c.is_polynomial() ? to_string(c) : "(" + to_string(c) + ")";
        out += "*" + tp;
    }
    if (out.empty()) out = "0";
    if (!a.is_exact() && a.precision() != implicit_precision) out += " + O(t^" + std::to_string(a.precision()) + ")";
    return out;
}

RationalValue::RationalValue(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational value with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::optional<int> RationalValue::p_exponent(std::uint32_t p) const noexcept {
    std::int64_t d = den_;
    int k = 0;
    while (d % p == 0) {
        d /= p;
        ++k;
    }
    if (d != 1) return std::nullopt;
    return k;
}

RationalValue RationalValue::operator+(const RationalValue& o) const {
    return RationalValue(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalValue RationalValue::operator-(const RationalValue& o) const {
    return RationalValue(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

std::string to_string(const RationalValue& v) {
    return v.is_integer() ? std::to_string(v.num()) : std::to_string(v.num()) + "/" + std::to_string(v.den());
}

RationalValue ext_val(std::int64_t degree, const LaurentElem& norm_value) {
    if (degree < 1) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
    RationalValue v(norm_value.valuation(), degree);
    if (!v.p_exponent(norm_value.spec().p))
        fail(ErrorCode::InvalidArgument, "value " + to_string(v) + " is not in (1/p^k)Z");
    return v;
}

}  // namespace asw
