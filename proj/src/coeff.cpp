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

#include "asw/coeff.hpp"

#include "asw/error.hpp"

namespace asw {

FieldSpec FieldSpec::make(std::uint32_t p, ResidueKind kind) {
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p, kind};
}

std::string to_string(const FieldSpec& spec) {
    return spec.kind == ResidueKind::PrimeField ? "F_" + std::to_string(spec.p)
                                                : "F_" + std::to_string(spec.p) + "(u)";
}

ResidueElem::ResidueElem(const FieldSpec& spec, FpPoly num, FpPoly den)
    : spec_(spec), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

ResidueElem ResidueElem::zero(const FieldSpec& spec) {
    return ResidueElem(spec, FpPoly(spec.p, {}), FpPoly::constant(spec.p, 1));
}

ResidueElem ResidueElem::one(const FieldSpec& spec) { return from_int(spec, 1); }

ResidueElem ResidueElem::from_int(const FieldSpec& spec, std::int64_t n) {
    return ResidueElem(spec, FpPoly::constant(spec.p, n), FpPoly::constant(spec.p, 1));
}

ResidueElem ResidueElem::generator(const FieldSpec& spec) {
    if (spec.kind != ResidueKind::RationalFunctionField)
        fail(ErrorCode::UnsupportedInput, "u is not an element of " + to_string(spec));
    return ResidueElem(spec, FpPoly::monomial(spec.p, 1, 1), FpPoly::constant(spec.p, 1));
}

ResidueElem ResidueElem::from_poly(const FieldSpec& spec, FpPoly num) {
    return fraction(spec, std::move(num), FpPoly::constant(spec.p, 1));
}

ResidueElem ResidueElem::fraction(const FieldSpec& spec, FpPoly num, FpPoly den) {
    if (num.modulus() != spec.p || den.modulus() != spec.p)
        fail(ErrorCode::SpecMismatch, "polynomial modulus differs from characteristic");
    if (den.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
    if (spec.kind == ResidueKind::PrimeField && (!num.is_constant() || !den.is_constant()))
        fail(ErrorCode::UnsupportedInput, "non-constant element of " + to_string(spec));
    return ResidueElem(spec, std::move(num), std::move(den));
}

void ResidueElem::normalize() {
    if (num_.is_zero()) {
        den_ = FpPoly::constant(spec_.p, 1);
        return;
    }
    if (!den_.is_constant()) {
        FpPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    if (den_.lead() != 1) {
        const std::uint32_t inv = mod_inverse(den_.lead(), spec_.p);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

void ResidueElem::require_same(const ResidueElem& o) const {
    if (spec_ != o.spec_)
        fail(ErrorCode::SpecMismatch, "residue elements over " + to_string(spec_) + " and " + to_string(o.spec_));
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
    require_same(o);
    if (den_.is_one() && o.den_.is_one()) return ResidueElem(spec_, num_ + o.num_, den_);
    if (den_ == o.den_) return ResidueElem(spec_, num_ + o.num_, den_);
    return ResidueElem(spec_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const {
    require_same(o);
    if (den_ == o.den_) return ResidueElem(spec_, num_ - o.num_, den_);
    return ResidueElem(spec_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ResidueElem ResidueElem::operator-() const {
    ResidueElem r = *this;
    r.num_ = -num_;
    return r;
}

ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
    require_same(o);
    if (den_.is_one() && o.den_.is_one()) {
        ResidueElem r;
        r.spec_ = spec_;
        r.num_ = num_ * o.num_;
        r.den_ = den_;
        return r;
    }
    return ResidueElem(spec_, num_ * o.num_, den_ * o.den_);
}

ResidueElem ResidueElem::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero residue");
    return ResidueElem(spec_, den_, num_);
}

ResidueElem ResidueElem::operator/(const ResidueElem& o) const {
    require_same(o);
    return *this * o.inverse();
}

ResidueElem ResidueElem::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    ResidueElem result = one(spec_), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

ResidueElem ResidueElem::frobenius() const {
    ResidueElem r;
    r.spec_ = spec_;
    r.num_ = num_.frobenius();
    r.den_ = den_.frobenius();
    return r;
}

std::optional<ResidueElem> pth_root(const ResidueElem& a) {
    if (a.spec().kind == ResidueKind::PrimeField) return a;
    // num/den is in lowest terms, so it is a p-th power iff both parts are.
    auto n = a.numerator().pth_root();
    auto d = a.denominator().pth_root();
    if (!n || !d) return std::nullopt;
    return ResidueElem::fraction(a.spec(), *n, *d);
}

std::optional<ResidueElem> as_preimage(const ResidueElem& a) {
    const FieldSpec& spec = a.spec();
    if (!a.is_polynomial())
        fail(ErrorCode::UnsupportedInput, "Artin-Schreier membership of non-polynomial " + to_string(a));
    const std::uint32_t p = spec.p;
    ResidueElem witness = ResidueElem::zero(spec);
    FpPoly rest = a.numerator();
    while (rest.degree() > 0) {
        const int d = rest.degree();
        if (d % static_cast<int>(p) != 0) return std::nullopt;
        // Coefficients live in F_p, where Frobenius is the identity.
        const FpPoly top = FpPoly::monomial(p, rest.lead(), static_cast<std::size_t>(d) / p);
        witness += ResidueElem::from_poly(spec, top);
        rest = rest - (top.frobenius() - top);
    }
    // P(F_p) = {0} and no nonconstant g has constant g^p - g.
    if (!rest.is_zero()) return std::nullopt;
    return witness;
}

std::vector<SweepEntry> as_independence_sweep(const ResidueElem& a1, const ResidueElem& a2) {
    const FieldSpec& spec = a1.spec();
    std::vector<SweepEntry> out;
    for (std::uint32_t c1 = 0; c1 < spec.p; ++c1)
        for (std::uint32_t c2 = 0; c2 < spec.p; ++c2) {
            if (c1 == 0 && c2 == 0) continue;
            SweepEntry e;
            e.c1 = c1;
            e.c2 = c2;
            e.combination = ResidueElem::from_int(spec, c1) * a1 + ResidueElem::from_int(spec, c2) * a2;
            e.in_image = as_preimage(e.combination).has_value();
            out.push_back(std::move(e));
        }
    return out;
}

std::pair<ResidueElem, ResidueElem> build_disjoint_classes(const FieldSpec& spec) {
    if (spec.kind == ResidueKind::PrimeField)
        fail(ErrorCode::ResidueTooSmall, "dim F_p(k/P(k)) = 1 for k = " + to_string(spec));
    const ResidueElem a1 = ResidueElem::generator(spec);
    for (std::size_t k = 2;; ++k) {
        if (k % spec.p == 0) continue;
        ResidueElem a2 = ResidueElem::from_poly(spec, FpPoly::monomial(spec.p, 1, k));
        bool independent = true;
        for (const auto& e : as_independence_sweep(a1, a2)) independent = independent && !e.in_image;
        if (independent) return {a1, a2};
    }
}

namespace {

std::string poly_to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const std::uint32_t c = f.coeff(static_cast<std::size_t>(i));
        if (!c) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += "u";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace

std::string to_string(const ResidueElem& a) {
    if (a.is_polynomial()) return poly_to_string(a.numerator());
    return "(" + poly_to_string(a.numerator()) + ")/(" + poly_to_string(a.denominator()) + ")";
}

}  // namespace asw
