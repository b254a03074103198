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

#include "asw/oracle/newton.hpp"

#include "asw/error.hpp"

namespace asw::oracle {

namespace {

struct Point {
    std::int64_t x;
    std::int64_t y;
};

// Cross product of (b - a) and (c - a); <= 0 means b is not strictly below ac.
std::int64_t cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::vector<ResidueElem> polys_up_to(const FieldSpec& spec, int degree) {
    if (spec.perfect()) {
        std::vector<ResidueElem> out;
        for (std::uint32_t c = 0; c < spec.p; ++c) out.push_back(ResidueElem::from_int(spec, c));
        return out;
    }
    std::vector<ResidueElem> out;
    std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1, 0);
    while (true) {
        out.push_back(ResidueElem::from_poly(spec, FpPoly(spec.p, c)));
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == spec.p) c[i++] = 0;
        if (i == c.size()) break;
    }
    return out;
}

}  // namespace

std::vector<Segment> newton_polygon(const KPoly& f) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_apparent_zero()) pts.push_back({static_cast<std::int64_t>(i), f[i].valuation()});
    std::vector<Point> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }
    std::vector<Segment> out;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const auto& a = hull[k];
        const auto& b = hull[k + 1];
        out.push_back({static_cast<std::size_t>(a.x), static_cast<std::size_t>(b.x),
                       RationalValue(a.y - b.y, b.x - a.x)});
    }
    return out;
}

KPoly taylor_shift(const KPoly& f, const LaurentElem& s) {
    const FieldSpec& spec = s.spec();
    const std::size_t n = f.size();
    // binomials mod p
    std::vector<std::vector<std::int64_t>> binom(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) binom[i][j] = (binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0)) % spec.p;
    }
    std::vector<LaurentElem> spow{LaurentElem::one(spec)};
    for (std::size_t k = 1; k < n; ++k) spow.push_back(spow.back() * s);
    KPoly g(n, LaurentElem::zero(spec));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (binom[i][j]) g[j] += (f[i] * spow[i - j]).scaled(ResidueElem::from_int(spec, binom[i][j]));
    return g;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Split: return "Split";
        case Verdict::Unramified: return "Unramified";
        case Verdict::TotallyRamified: return "TotallyRamified";
        case Verdict::Unclassified: return "Unclassified";
    }
    return "?";
}

NewtonReport newton_classify_as(const LaurentElem& w) {
    const FieldSpec& spec = w.spec();
    const std::uint32_t p = spec.p;
    KPoly f(p + 1, LaurentElem::zero(spec));
    f[0] = -w;
    f[1] = LaurentElem::from_int(spec, -1);
    f[p] = LaurentElem::one(spec);

    NewtonReport rep;
    for (int iter = 0; iter < 512; ++iter) {
        if (f[0].is_apparent_zero()) {
            rep.verdict = Verdict::Split;
            rep.steps.push_back("X = 0 is a root");
            return rep;
        }
        const auto segs = newton_polygon(f);
        for (const auto& s : segs)
            if (!s.root_valuation.is_integer()) {
                rep.verdict = Verdict::TotallyRamified;
                rep.steps.push_back("slope " + to_string(s.root_valuation) + " is not integral");
                return rep;
            }
        const Segment& last = segs.back();
        const std::int64_t r = last.root_valuation.num();
        if (r < 0) {
            // Residue polynomial on the segment of the most negative roots.
            const std::int64_t level = f[last.from].valuation() + static_cast<std::int64_t>(last.from) * r;
            std::vector<std::pair<std::size_t, ResidueElem>> res;
            for (std::size_t i = last.from; i <= last.to; ++i)
                if (!f[i].is_apparent_zero() && f[i].valuation() + static_cast<std::int64_t>(i) * r == level)
                    res.emplace_back(i - last.from, f[i].leading_coefficient());
            if (res.size() != 2 || res[0].first != 0 || res[1].first != p) {
                rep.verdict = Verdict::Unclassified;
                rep.steps.push_back("unexpected residue polynomial shape");
                return rep;
            }
            const ResidueElem target = -res[0].second / res[1].second;
            auto beta = pth_root(target);
            if (!beta) {
                rep.verdict = Verdict::Unclassified;
                rep.steps.push_back("residue polynomial Y^p - (" + to_string(target) + ") is inseparable and irreducible");
                return rep;
            }
            rep.steps.push_back("shift X -> X + (" + to_string(*beta) + ")*t^" + std::to_string(r));
            f = taylor_shift(f, LaurentElem::monomial(*beta, r));
            continue;
        }
        // All roots integral: the residue polynomial is separable of degree p.
        std::vector<ResidueElem> res;
        for (const auto& a : f) res.push_back(a.coefficient(0));
        int bound = 0;
        if (!spec.perfect()) {
            if (!res[0].is_polynomial()) {
                rep.verdict = Verdict::Unclassified;
                rep.steps.push_back("rational residue constant");
                return rep;
            }
            bound = std::max(0, res[0].numerator().degree()) / static_cast<int>(p);
        }
        for (const auto& y : polys_up_to(spec, bound)) {
            ResidueElem acc = ResidueElem::zero(spec), power = ResidueElem::one(spec);
            for (const auto& c : res) {
                acc += c * power;
                power *= y;
            }
            if (acc.is_zero()) {
                rep.verdict = Verdict::Split;
                rep.steps.push_back("residue root " + to_string(y) + " lifts by Hensel");
                return rep;
            }
        }
        rep.verdict = Verdict::Unramified;
        rep.steps.push_back("separable residue polynomial without roots in k");
        return rep;
    }
    fail(ErrorCode::PrecisionExhausted, "Newton oracle did not terminate");
}

}  // namespace asw::oracle
