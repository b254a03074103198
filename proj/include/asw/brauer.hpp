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

#ifndef ASW_BRAUER_HPP
#define ASW_BRAUER_HPP

#include <optional>
#include <string>
#include <vector>

#include "asw/extension.hpp"
#include "asw/ramification.hpp"
#include "asw/valued.hpp"
#include "asw/witt.hpp"

namespace asw {

/// The cyclic p-algebra [omega, b)_K, generated by K_omega and y with y^{p^m} = b.
class BrauerSymbol {
   public:
    BrauerSymbol() = default;
    /// InvalidArgument when b is zero up to precision; SpecMismatch when the fields differ.
    BrauerSymbol(KWitt omega, LaurentElem b);

    const KWitt& omega() const noexcept { return omega_; }
    const LaurentElem& b() const noexcept { return b_; }
    std::uint32_t p() const noexcept { return omega_.p(); }
    std::size_t m() const noexcept { return omega_.length(); }
    const FieldSpec& spec() const noexcept { return b_.spec(); }

    /// Syntactic equality, not Brauer equivalence.
    friend bool operator==(const BrauerSymbol&, const BrauerSymbol&) = default;

   private:
    KWitt omega_;
    LaurentElem b_;
};

/// Componentwise agreement within tracked precision.
bool agrees(const BrauerSymbol& a, const BrauerSymbol& b);
std::string to_string(const BrauerSymbol& s, std::int64_t implicit_precision = kDefaultPrecision);

enum class Rule {
    SameB,         // [w, b) + [w', b) = [w + w', b)
    SameOmega,     // [w, b) + [w, b') = [w, b b')
    StripZero,     // [(0, a_1, ...), b) = [(a_1, ...), b)
    Absorb,        // [(b, 0, ..., 0), b) = 0
    FrobTwist,     // [w, b) = [w^{p^r}, b)
    PowerAdjustB,  // [w, b) = [w, gamma^{p^m} b)
    PthPowerB,     // split when b is a p^m-th power
    ZeroOmega,     // [0, b) = 0
    ArtinSchreier, // [w, b) = [w - (c^p, 0, ...) + (c, 0, ...), b): same extension
    Lemma53,       // [(0, r c^{pi} b^{p-i}), b) is split
    Lemma54,       // [(c^p, w_2), b) = [(c^p + b, w_2), b)
};

std::string to_string(Rule r);

/**
 * One rewrite asserting before_mult * [before] = after_mult * [after] in
 * Br(K). Steps that combine with a second symbol carry it as `operand`
 * together with a proof that the operand is split. Lemma steps carry their
 * expansion in `substeps`.
 */
struct RewriteStep {
    Rule rule = Rule::SameB;
    BrauerSymbol before;
    BrauerSymbol after;
    std::int64_t before_mult = 1;
    std::int64_t after_mult = 1;
    std::optional<BrauerSymbol> operand;
    std::vector<RewriteStep> operand_proof;
    std::vector<RewriteStep> substeps;
    unsigned twist = 0;                // FrobTwist exponent r
    std::optional<LaurentElem> gamma;  // PowerAdjustB factor, PthPowerB root, ArtinSchreier c
    bool split = false;                // `after` is certified to be 0 in Br(K)
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;

    bool empty() const noexcept { return steps.empty(); }
    bool split() const noexcept { return !steps.empty() && steps.back().split; }
};

/// Empty string when the step's side conditions hold, otherwise the reason.
std::string check_step(const RewriteStep& step);
/// Every step checks and consecutive steps chain (after/after_mult feed the next step).
std::string check_trace(const std::vector<RewriteStep>& steps);
inline bool validate(const RewriteTrace& t) { return check_trace(t.steps).empty(); }

/* ---- the symbol rules --------------------------------------------------- */

BrauerSymbol add_same_b(const BrauerSymbol& s1, const BrauerSymbol& s2);
BrauerSymbol add_same_omega(const BrauerSymbol& s1, const BrauerSymbol& s2);
/// RuleViolation unless the first component is zero and m >= 2.
BrauerSymbol strip_zero(const BrauerSymbol& s);
/// Split witness for [(b, 0, ..., 0), b); RuleViolation otherwise.
RewriteTrace absorb(const BrauerSymbol& s);
BrauerSymbol frob_twist_symbol(const BrauerSymbol& s, unsigned r);
BrauerSymbol power_adjust_b(const BrauerSymbol& s, const LaurentElem& gamma);

struct QuickSplit {
    bool split = false;
    RewriteTrace trace;
};

/**
 * Partial split test: b a p^m-th power, omega collapsing to 0 modulo the
 * Artin-Schreier-Witt image (stripping zero leading components), or, for
 * m = 1, omega b^{-e} in K^p for some 1 <= e < p. Never claims non-split.
 */
QuickSplit is_split_quick(const BrauerSymbol& s);

/**
 * Split certificate for [(0, r c^{pi} b^{p-i}), b): strip the zero, write
 * the symbol as (p-i) [a', b) with a' = (p-i)^{-1} r c^{pi} b^{p-i}, move the
 * multiple into b, peel off [a', a') = 0, and finish with a p-th power b.
 * HypothesisViolation when i = 0 mod p.
 */
RewriteTrace lemma53_split(std::int64_t r, std::int64_t i, const LaurentElem& c, const LaurentElem& b,
                           std::uint32_t p);

struct SymbolRewrite {
    BrauerSymbol symbol;
    RewriteTrace trace;
};

/// [(w_1, w_2), b) -> [(w_1 + b, w_2), b) for w_1 = c^p; NoRoot when w_1 is not a p-th power.
SymbolRewrite lemma54_rewrite(const BrauerSymbol& s);

/**
 * Makes every component of omega a p-th power (one Frobenius twist, only
 * when needed) and forces v(b) < min(0, v(w_i)) with b -> t^{-p^m r} b for
 * the least r. HypothesisViolation when p | v(b).
 */
SymbolRewrite normalize_symbol(const BrauerSymbol& s);

struct DivisionCertificate {
    KWitt omega;
    LaurentElem b;
    std::int64_t v_b = 0;
    /// Residue vector of omega (coefficients at t^0).
    std::vector<ResidueElem> residue;
    RamReport ramification;
    /// Hypothesis name and outcome, in the order checked.
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::string valuation_argument;
    std::string residue_note;
};

/// Issued only when gcd(v(b), p) = 1 and K_omega/K is unramified;
/// HypothesisNotVerified naming the failing hypothesis otherwise.
DivisionCertificate division_certificate(const KWitt& omega, const LaurentElem& b);

/* ---- degree-p cyclic algebra ------------------------------------------- */

/**
 * Element sum_j a_j y^j of [omega, b)_K for m = 1, with a_j in K_omega,
 * y^p = b and y x = (x + 1) y.
 */
class CyclicAlgebraElem {
   public:
    static CyclicAlgebraElem zero(const ExtDescPtr& desc, const LaurentElem& b);
    static CyclicAlgebraElem scalar(const ExtDescPtr& desc, const LaurentElem& b, const LaurentElem& c);
    static CyclicAlgebraElem x(const ExtDescPtr& desc, const LaurentElem& b);
    static CyclicAlgebraElem y(const ExtDescPtr& desc, const LaurentElem& b);
    /// Basis element x^i y^j.
    static CyclicAlgebraElem basis(const ExtDescPtr& desc, const LaurentElem& b, std::size_t i, std::size_t j);

    const std::vector<ExtensionElem>& parts() const noexcept { return parts_; }
    const ExtDescPtr& desc() const noexcept { return desc_; }
    const LaurentElem& b() const noexcept { return b_; }
    /// Coefficient of x^i y^j.
    const LaurentElem& coefficient(std::size_t i, std::size_t j) const { return parts_.at(j).coefficient(i); }

    CyclicAlgebraElem operator+(const CyclicAlgebraElem& o) const;
    CyclicAlgebraElem operator-(const CyclicAlgebraElem& o) const;
    CyclicAlgebraElem operator*(const CyclicAlgebraElem& o) const;
    CyclicAlgebraElem pow(std::uint64_t e) const;

   private:
    ExtDescPtr desc_;
    LaurentElem b_;
    std::vector<ExtensionElem> parts_;
};

/// Matrix of left multiplication on the basis x^i y^j, index i + p j.
Matrix regular_representation(const CyclicAlgebraElem& a);

}  // namespace asw

#endif
