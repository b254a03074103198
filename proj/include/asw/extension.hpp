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

#ifndef ASW_EXTENSION_HPP
#define ASW_EXTENSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "asw/valued.hpp"
#include "asw/witt.hpp"

namespace asw {

/**
 * The cyclic extension K_omega = K(x_1[, x_2]) for omega of length 1 or 2,
 * defined by (x_1^p, x_2^p) = (x_1, x_2) + omega. The x_2 relation
 *   x_2^p = x_2 + omega_2 + sum_k f_k x_1^k,  k < p,
 * is read off the universal addition polynomial S_1 evaluated at
 * X = (x_1, x_2), Y = omega.
 */
class CyclicExtDesc {
   public:
    /// Refuses (HypothesisViolation) when omega_1 lies in P(K).
    static std::shared_ptr<const CyclicExtDesc> make(const KWitt& omega);

    std::uint32_t p() const noexcept { return omega_.p(); }
    std::size_t m() const noexcept { return omega_.length(); }
    /// p^m.
    std::size_t degree() const noexcept { return degree_; }
    const FieldSpec& spec() const noexcept { return omega_[0].spec(); }
    const KWitt& omega() const noexcept { return omega_; }
    /// f_0 .. f_{p-1}; empty for m = 1.
    const std::vector<LaurentElem>& x2_relation() const noexcept { return f_; }

   private:
    CyclicExtDesc() = default;

    KWitt omega_;
    std::size_t degree_ = 0;
    std::vector<LaurentElem> f_;
};

using ExtDescPtr = std::shared_ptr<const CyclicExtDesc>;

/// Element of K_omega in the basis x_1^i x_2^j, 0 <= i, j < p; the
/// coefficient of x_1^i x_2^j sits at index i + p j.
class ExtensionElem {
   public:
    ExtensionElem() = default;

    static ExtensionElem zero(const ExtDescPtr& desc);
    static ExtensionElem scalar(const ExtDescPtr& desc, const LaurentElem& c);
    static ExtensionElem basis(const ExtDescPtr& desc, std::size_t i, std::size_t j = 0);
    static ExtensionElem x1(const ExtDescPtr& desc) { return basis(desc, 1, 0); }
    static ExtensionElem x2(const ExtDescPtr& desc);
    static ExtensionElem from_coefficients(const ExtDescPtr& desc, std::vector<LaurentElem> coeffs);

    const ExtDescPtr& desc() const noexcept { return desc_; }
    const std::vector<LaurentElem>& coefficients() const noexcept { return c_; }
    const LaurentElem& coefficient(std::size_t i, std::size_t j = 0) const;

    ExtensionElem operator+(const ExtensionElem& o) const;
    ExtensionElem operator-(const ExtensionElem& o) const;
    ExtensionElem operator-() const;
    ExtensionElem operator*(const ExtensionElem& o) const;
    ExtensionElem operator*(const LaurentElem& c) const;
    ExtensionElem pow(std::uint64_t e) const;

    friend bool operator==(const ExtensionElem& a, const ExtensionElem& b) {
        return a.desc_ == b.desc_ && a.c_ == b.c_;
    }

   private:
    void require_same(const ExtensionElem& o) const;

    ExtDescPtr desc_;
    std::vector<LaurentElem> c_;
};

bool agrees(const ExtensionElem& a, const ExtensionElem& b);
std::string to_string(const ExtensionElem& a, std::int64_t implicit_precision = kDefaultPrecision);

inline ExtensionElem ring_zero(const ExtensionElem& proto) { return ExtensionElem::zero(proto.desc()); }
inline ExtensionElem ring_from_int(const ExtensionElem& proto, std::int64_t n) {
    return ExtensionElem::scalar(proto.desc(), LaurentElem::from_int(proto.desc()->spec(), n));
}
inline ExtensionElem ring_frobenius(const ExtensionElem& x) { return x.pow(x.desc()->p()); }
inline std::uint32_t ring_characteristic(const ExtensionElem& x) { return x.desc()->p(); }

using Matrix = std::vector<std::vector<LaurentElem>>;

Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix matrix_sub(const Matrix& a, const Matrix& b);
/// c times the n x n identity.
Matrix scalar_matrix(std::size_t n, const LaurentElem& c);

/// Matrix of y -> a y on the monomial basis; column k is a * e_k.
Matrix multiplication_matrix(const ExtensionElem& a);

/// Division-free determinant (Berkowitz); precision flows through ring operations.
LaurentElem determinant(const Matrix& m);

/// N_{K_omega/K}(a) = det of the multiplication matrix.
/// PrecisionExhausted when no coefficient of the determinant is known.
LaurentElem norm(const ExtensionElem& a);

}  // namespace asw

#endif
