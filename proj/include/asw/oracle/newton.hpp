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

#ifndef ASW_ORACLE_NEWTON_HPP
#define ASW_ORACLE_NEWTON_HPP

#include <string>
#include <vector>

#include "asw/valued.hpp"

namespace asw::oracle {

/// Polynomial over K, constant coefficient first.
using KPoly = std::vector<LaurentElem>;

struct Segment {
    std::size_t from = 0;
    std::size_t to = 0;
    /// Common valuation of the roots on this segment (minus the slope).
    RationalValue root_valuation;
};

/// Lower convex hull of {(i, v(a_i))}, left to right.
std::vector<Segment> newton_polygon(const KPoly& f);

/// f(X + s), coefficients by binomial expansion.
KPoly taylor_shift(const KPoly& f, const LaurentElem& s);

enum class Verdict { Split, Unramified, TotallyRamified, Unclassified };

std::string to_string(Verdict v);

struct NewtonReport {
    Verdict verdict = Verdict::Unclassified;
    std::vector<std::string> steps;
};

/**
 * Classifies the splitting field of X^p - X - w from Newton polygons alone:
 * a non-integral slope means total ramification; an inseparable residue
 * polynomial (Y - b)^p is removed by a Taylor shift; once the roots are
 * integral, Split / Unramified is decided by searching k for a root of the
 * separable residue polynomial.
 */
NewtonReport newton_classify_as(const LaurentElem& w);

}  // namespace asw::oracle

#endif
