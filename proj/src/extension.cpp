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

#include "asw/extension.hpp"

#include "asw/error.hpp"
#include "asw/ramification.hpp"

namespace asw {

namespace {

bool exact_zero(const LaurentElem& x) { return x.is_exact() && x.is_apparent_zero(); }

}  // namespace

std::shared_ptr<const CyclicExtDesc> CyclicExtDesc::make(const KWitt& omega) {
    if (omega.length() > 2) fail(ErrorCode::UnsupportedCase, "extension arithmetic is implemented for m <= 2");
    try {
        if (classify_deg_p(omega[0]).classification == Classification::Split)
            fail(ErrorCode::HypothesisViolation, "omega_1 lies in P(K); K_omega is not a field");
    } catch (const Error& e) {
        // A rational residue constant cannot be tested; the relations are still well defined.
        if (e.code() != ErrorCode::UnsupportedInput) throw;
    }

    std::shared_ptr<CyclicExtDesc> d(new CyclicExtDesc());
    d->omega_ = omega;
    const std::uint32_t p = omega.p();
    d->degree_ = omega.length() == 1 ? p : std::size_t{p} * p;
    if (omega.length() == 2) {
        const FieldSpec& spec = omega[0].spec();
        d->f_.assign(p, LaurentElem::zero(spec));
        const auto polys = witt_polynomials(p, 2);
        for (const auto& term : polys->sum_mod_p[1]) {
            const auto& e = term.exponents;
            if (e[x_var(1)] || e[y_var(1)]) {
                // S_1 is X_1 + Y_1 + (terms in X_0, Y_0 only).
                if (term.coeff != 1 || e[x_var(1)] + e[y_var(1)] != 1 || e[x_var(0)] || e[y_var(0)])
                    fail(ErrorCode::InternalInexactDivision, "unexpected shape of S_1");
                continue;
            }
            if (e[x_var(0)] >= p) fail(ErrorCode::InternalInexactDivision, "x_1 degree >= p in S_1");
            d->f_[e[x_var(0)]] += omega[0].pow(e[y_var(0)]).scaled(ResidueElem::from_int(spec, term.coeff));
        }
    }
    return d;
}

ExtensionElem ExtensionElem::zero(const ExtDescPtr& desc) {
    ExtensionElem r;
    r.desc_ = desc;
    r.c_.assign(desc->degree(), LaurentElem::zero(desc->spec()));
    return r;
}

ExtensionElem ExtensionElem::scalar(const ExtDescPtr& desc, const LaurentElem& c) {
    ExtensionElem r = zero(desc);
    r.c_[0] = c;
    return r;
}

ExtensionElem ExtensionElem::basis(const ExtDescPtr& desc, std::size_t i, std::size_t j) {
    const std::size_t p = desc->p();
    if (i >= p || j >= p || (desc->m() == 1 && j > 0)) fail(ErrorCode::ShapeMismatch, "basis index out of range");
    ExtensionElem r = zero(desc);
    r.c_[i + p * j] = LaurentElem::one(desc->spec());
    return r;
}

ExtensionElem ExtensionElem::x2(const ExtDescPtr& desc) {
    if (desc->m() != 2) fail(ErrorCode::ShapeMismatch, "x_2 exists only for m = 2");
    return basis(desc, 0, 1);
}

ExtensionElem ExtensionElem::from_coefficients(const ExtDescPtr& desc, std::vector<LaurentElem> coeffs) {
    if (coeffs.size() != desc->degree()) fail(ErrorCode::ShapeMismatch, "wrong number of coefficients");
    ExtensionElem r;
    r.desc_ = desc;
    r.c_ = std::move(coeffs);
    return r;
}

const LaurentElem& ExtensionElem::coefficient(std::size_t i, std::size_t j) const {
    return c_.at(i + desc_->p() * j);
}

void ExtensionElem::require_same(const ExtensionElem& o) const {
    if (desc_ != o.desc_ && !(desc_->omega() == o.desc_->omega()))
        fail(ErrorCode::SpecMismatch, "elements of different extensions");
}

ExtensionElem ExtensionElem::operator+(const ExtensionElem& o) const {
    require_same(o);
    ExtensionElem r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
    return r;
}

ExtensionElem ExtensionElem::operator-(const ExtensionElem& o) const {
    require_same(o);
    ExtensionElem r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
    return r;
}

ExtensionElem ExtensionElem::operator-() const {
    ExtensionElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ExtensionElem ExtensionElem::operator*(const LaurentElem& s) const {
    ExtensionElem r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

ExtensionElem ExtensionElem::operator*(const ExtensionElem& o) const {
    require_same(o);
    const std::size_t p = desc_->p();
    const bool two = desc_->m() == 2;
    const FieldSpec& spec = desc_->spec();
    const std::size_t width = 3 * p;
    const std::size_t height = two ? 2 * p - 1 : 1;
    std::vector<LaurentElem> arr(width * height, LaurentElem::zero(spec));
    auto at = [&](std::size_t i, std::size_t j) -> LaurentElem& { return arr[i + width * j]; };

    const std::size_t rows = two ? p : 1;
    for (std::size_t j1 = 0; j1 < rows; ++j1)
        for (std::size_t i1 = 0; i1 < p; ++i1) {
            const LaurentElem& a = c_[i1 + p * j1];
            if (exact_zero(a)) continue;
            for (std::size_t j2 = 0; j2 < rows; ++j2)
                for (std::size_t i2 = 0; i2 < p; ++i2) {
                    const LaurentElem& b = o.c_[i2 + p * j2];
                    if (exact_zero(b)) continue;
                    at(i1 + i2, j1 + j2) += a * b;
                }
        }

    const KWitt& w = desc_->omega();
    if (two) {
        const auto& f = desc_->x2_relation();
        for (std::size_t j = height - 1; j >= p; --j)
            for (std::size_t i = 0; i < width; ++i) {
                LaurentElem c = at(i, j);
                if (exact_zero(c)) continue;
                at(i, j) = LaurentElem::zero(spec);
                // x_2^p = x_2 + omega_2 + sum_k f_k x_1^k
                at(i, j - p + 1) += c;
                at(i, j - p) += c * w[1];
                for (std::size_t k = 0; k < p; ++k)
                    if (!exact_zero(f[k])) at(i + k, j - p) += c * f[k];
            }
    }
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t i = width - 1; i >= p; --i) {
            LaurentElem c = at(i, j);
            if (exact_zero(c)) continue;
            at(i, j) = LaurentElem::zero(spec);
            // x_1^p = x_1 + omega_1
            at(i - p + 1, j) += c;
            at(i - p, j) += c * w[0];
        }

    ExtensionElem r = zero(desc_);
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t i = 0; i < p; ++i) r.c_[i + p * j] = std::move(at(i, j));
    return r;
}

ExtensionElem ExtensionElem::pow(std::uint64_t e) const {
    ExtensionElem result = scalar(desc_, LaurentElem::one(desc_->spec())), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool agrees(const ExtensionElem& a, const ExtensionElem& b) {
    if (a.coefficients().size() != b.coefficients().size()) return false;
    for (std::size_t k = 0; k < a.coefficients().size(); ++k)
        if (!agrees(a.coefficients()[k], b.coefficients()[k])) return false;
    return true;
}

std::string to_string(const ExtensionElem& a, std::int64_t implicit_precision) {
    const std::size_t p = a.desc()->p();
    std::string out;
    for (std::size_t k = 0; k < a.coefficients().size(); ++k) {
        const LaurentElem& c = a.coefficients()[k];
        if (c.is_apparent_zero() && c.is_exact()) continue;
        const std::size_t i = k % p, j = k / p;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c, implicit_precision) + ")";
        if (i) out += "*x1" + (i > 1 ? "^" + std::to_string(i) : std::string());
        if (j) out += "*x2" + (j > 1 ? "^" + std::to_string(j) : std::string());
    }
    return out.empty() ? "0" : out;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) fail(ErrorCode::ShapeMismatch, "matrix shapes do not match");
    const FieldSpec spec = a[0][0].spec();
    Matrix out(a.size(), std::vector<LaurentElem>(b[0].size(), LaurentElem::zero(spec)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (exact_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (!exact_zero(b[k][j])) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Matrix matrix_sub(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "matrix shapes do not match");
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) fail(ErrorCode::ShapeMismatch, "matrix shapes do not match");
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    }
    return out;
}

Matrix scalar_matrix(std::size_t n, const LaurentElem& c) {
    Matrix out(n, std::vector<LaurentElem>(n, LaurentElem::zero(c.spec())));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = c;
    return out;
}

Matrix multiplication_matrix(const ExtensionElem& a) {
    const std::size_t n = a.desc()->degree();
    const std::size_t p = a.desc()->p();
    Matrix m(n, std::vector<LaurentElem>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const ExtensionElem col = a * ExtensionElem::basis(a.desc(), k % p, k / p);
        for (std::size_t r = 0; r < n; ++r) m[r][k] = col.coefficients()[r];
    }
    return m;
}

LaurentElem determinant(const Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) fail(ErrorCode::ShapeMismatch, "empty matrix");
    const FieldSpec spec = a[0][0].spec();
    const LaurentElem one = LaurentElem::one(spec);

    // Coefficients of det(xI - A_r) for the leading r x r block, highest degree first.
    std::vector<LaurentElem> c{one, -a[0][0]};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<LaurentElem> q(r + 2, LaurentElem::zero(spec));
        q[0] = one;
        q[1] = -a[r][r];
        std::vector<LaurentElem> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            LaurentElem dot = LaurentElem::zero(spec);
            for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * v[i];
            q[k + 2] = -dot;
            if (k + 1 == r) break;
            std::vector<LaurentElem> next(r, LaurentElem::zero(spec));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += a[i][j] * v[j];
            v = std::move(next);
        }
        std::vector<LaurentElem> nc(r + 2, LaurentElem::zero(spec));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] += q[i - j] * c[j];
        c = std::move(nc);
    }
    return n % 2 == 1 ? -c[n] : c[n];
}

LaurentElem norm(const ExtensionElem& a) {
    LaurentElem d = determinant(multiplication_matrix(a));
    if (d.is_apparent_zero() && !d.is_exact())
        fail(ErrorCode::PrecisionExhausted, "norm vanishes below t^" + std::to_string(d.precision()));
    return d;
}

}  // namespace asw
