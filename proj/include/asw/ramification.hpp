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

#ifndef ASW_RAMIFICATION_HPP
#define ASW_RAMIFICATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "asw/valued.hpp"
#include "asw/witt.hpp"

namespace asw {

/// Normal form of w modulo P(K) = {c^p - c}.
struct AsReduction {
    enum class Stop {
        Zero,             // reduced to 0 (up to precision)
        RamifiedLeading,  // leading exponent < 0 and prime to p
        Stalled,          // p | leading exponent < 0, leading coefficient not a p-th power
        Integral,         // no negative part left: a residue-level constant
    };

    LaurentElem input;
    LaurentElem reduced;
    /// Elements c_i with input - sum (c_i^p - c_i) = reduced.
    std::vector<LaurentElem> trace;
    Stop stop = Stop::Zero;
};

/**
 * Strips negative leading terms c^p (p | exponent, coefficient a p-th power)
 * by subtracting c^p - c, then absorbs the strictly positive tail g through
 * c = -(g + g^p + g^{p^2} + ...).
 */
AsReduction as_reduce(const LaurentElem& w);

/// Replays the trace: input - sum (c^p - c) agrees with reduced.
bool replay_ok(const AsReduction& r);

enum class Classification { Split, Unramified, TotallyRamified, Unclassified, PartialEvidence };

std::string to_string(Classification c);

struct RamReport {
    Classification classification = Classification::Unclassified;
    /// Which criterion produced the verdict, e.g. "deg-p leading term".
    std::string criterion;
    KWitt input;
    /// Input after the Artin-Schreier reduction recorded in `trace`.
    KWitt reduced;
    /// Elements c_i; the reduction subtracts (c_i^p, 0, ...) - (c_i, 0, ...) in W_m(K).
    std::vector<LaurentElem> trace;
    /// Named valuations such as "v(x_1)".
    std::vector<std::pair<std::string, RationalValue>> evidence;

    const RationalValue* find_evidence(const std::string& name) const;
};

/// Replays a report's trace at the Witt-vector level.
bool replay_ok(const RamReport& r);

/// Ramification of the Artin-Schreier extension x^p - x = w.
RamReport classify_deg_p(const LaurentElem& w);

/**
 * Ramification of the length-2 Artin-Schreier-Witt extension K_eta.
 * Totally ramified when v(eta_1) < 0, v(eta_1) < v(eta_2) and p does not
 * divide v(eta_1) (checked on eta, then after reducing eta_1), or when the
 * residue field is perfect and the reduced eta_1 has a ramified leading
 * term. Unramified when eta is integral and its residue first component
 * lies outside P(k).
 */
RamReport classify_len2(const KWitt& eta);

/// Integral Witt vectors of any length: Unramified when the residue of the
/// first component is outside P(k), Split when it is inside, Unclassified
/// for non-integral input.
RamReport classify_integral(const KWitt& omega);

/// Dispatches on length: 1 -> classify_deg_p, 2 -> classify_len2,
/// otherwise classify_integral.
RamReport classify(const KWitt& omega);

/// (v(x_1), v(x_2)) for eta meeting the length-2 total ramification
/// hypotheses; HypothesisViolation otherwise.
std::pair<RationalValue, RationalValue> newton_valuations(const KWitt& eta);

/// True when v(eta_1) < 0, v(eta_1) < v(eta_2) and p does not divide v(eta_1).
/// PrecisionExhausted when the comparison depends on unseen coefficients.
bool lemma52_hypotheses(const KWitt& eta);

}  // namespace asw

#endif
