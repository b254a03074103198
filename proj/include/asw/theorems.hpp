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

#ifndef ASW_THEOREMS_HPP
#define ASW_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asw/brauer.hpp"
#include "asw/extension.hpp"
#include "asw/ramification.hpp"

namespace asw {

enum class WitnessKind { PurelyInseparable, Cyclic };

std::string to_string(WitnessKind k);

using CheckList = std::vector<std::pair<std::string, bool>>;

/**
 * A totally ramified maximal subfield of [omega, b), with the evidence that
 * it is one. PurelyInseparable: K(y), y^{p^m} = `b`, v(y) = v(b) / p^m.
 * Cyclic: K_omega for `omega`, with a ramification report.
 */
struct SubfieldWitness {
    WitnessKind kind = WitnessKind::PurelyInseparable;
    std::uint32_t p = 2;
    std::size_t m = 1;

    std::optional<LaurentElem> b;
    std::optional<RationalValue> root_valuation;

    std::optional<KWitt> omega;
    std::optional<RamReport> report;

    /// The algebra the witness lives in, after any rewriting.
    std::optional<BrauerSymbol> algebra;
    /// Rewrites taking the input symbol to `algebra`.
    RewriteTrace trace;
    CheckList checks;
    std::vector<std::pair<std::string, RationalValue>> evidence;
};

/// Recomputes every claim of the witness from its data; empty on success.
std::string revalidate(const SubfieldWitness& w);

/// K(b^{1/p^m}); HypothesisViolation when p | v(b).
SubfieldWitness insep_normal_form(const LaurentElem& b, std::size_t m);

/**
 * From a totally ramified K_omega inside [omega, b) to a purely inseparable
 * subfield: b itself when p does not divide v(b), otherwise c = N(u) b with
 * u = x_1 (m = 1) or u = x_2 (m = 2, length-2 valuation shape after reduction).
 */
SubfieldWitness cyclic_to_insep(const KWitt& omega, const LaurentElem& b);

/// Degree p: normalize, then omega' = omega_1 + b'.
SubfieldWitness insep_to_cyclic_p(const LaurentElem& omega1, const LaurentElem& b);

/// Degree p^2: normalize, rewrite to (omega_1 + b', omega_2) using the length-2 rewrite.
SubfieldWitness insep_to_cyclic_p2(const KWitt& omega, const LaurentElem& b);

/**
 * Perfect residue field, m <= 4: omega' = omega + (b', 0, ..., 0). Full
 * report for m <= 2; for larger m only the first component is checked and
 * the classification is PartialEvidence.
 */
SubfieldWitness insep_to_cyclic_perfect(const KWitt& omega, const LaurentElem& b);

struct DivisionPair {
    DivisionCertificate first;
    DivisionCertificate second;
    std::vector<SweepEntry> sweep;
    /// True when no nontrivial combination of the residue classes lies in P(k).
    bool residues_disjoint = false;
    std::string external_step;
};

/// Two division algebras [(a_i, 0, ...), b) with independent residue classes.
DivisionPair build_disjoint_division_pair(const LaurentElem& b, std::size_t m);

struct RoundtripStage {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct RoundtripReport {
    BrauerSymbol input;
    SubfieldWitness cyclic;
    SubfieldWitness inseparable;
    std::vector<RoundtripStage> stages;
    bool success = false;
};

/// Purely inseparable -> cyclic -> purely inseparable on one symbol. Errors
/// are rethrown with the failing stage named.
RoundtripReport conjecture_roundtrip(const KWitt& omega, const LaurentElem& b);

}  // namespace asw

#endif
