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

#include "asw/ramification.hpp"

#include "asw/error.hpp"

namespace asw {

namespace {

// Constant term must be visible before anything is concluded about it.
void require_constant_visible(const LaurentElem& x) {
    if (!x.is_exact() && x.precision() <= 0)
        fail(ErrorCode::PrecisionExhausted, "coefficients up to t^0 are unknown");
}

// c = -(g + g^p + g^{p^2} + ...) satisfies c^p - c = g for v(g) > 0.
LaurentElem as_tail_preimage(const LaurentElem& g, std::int64_t limit) {
    LaurentElem c = LaurentElem::zero(g.spec(), limit);
    LaurentElem power = g.with_precision(limit);
    while (!power.is_apparent_zero()) {
        c -= power;
        power = power.pth_power().with_precision(limit);
    }
    return c;
}

KWitt witt_as_step(const KWitt& cur, const LaurentElem& c) {
    const KWitt lift = KWitt::teichmuller_like(cur.p(), cur.length(), c);
    return witt_add(witt_sub(cur, frobenius_twist(lift, 1)), lift);
}

}  // namespace

AsReduction as_reduce(const LaurentElem& w) {
    const std::int64_t p = w.spec().p;
    AsReduction r;
    r.input = w;
    LaurentElem cur = w;
    r.stop = AsReduction::Stop::Zero;
    bool stopped = false;
    while (true) {
        if (cur.is_apparent_zero()) {
            require_constant_visible(cur);
            break;
        }
        const std::int64_t v = cur.valuation();
        if (v >= 0) break;
        if (v % p != 0) {
            r.stop = AsReduction::Stop::RamifiedLeading;
            stopped = true;
            break;
        }
        auto root = pth_root(cur.leading_coefficient());
        if (!root) {
            r.stop = AsReduction::Stop::Stalled;
            stopped = true;
            break;
        }
        const LaurentElem c = LaurentElem::monomial(*root, v / p);
        cur -= c.pth_power() - c;
        r.trace.push_back(c);
    }

    const LaurentElem g = cur.tail(1);
    if (!g.is_apparent_zero()) {
        const std::int64_t limit = cur.is_exact() ? kDefaultPrecision : cur.precision();
        const LaurentElem c = as_tail_preimage(g, limit);
        cur -= c.pth_power() - c;
        r.trace.push_back(c);
    }
    if (!stopped && !cur.is_apparent_zero() && cur.valuation() == 0) {
        // A residue constant in P(k) is absorbed too; rational constants are left alone.
        std::optional<ResidueElem> g;
        try {
            g = as_preimage(cur.coefficient(0));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UnsupportedInput) throw;
        }
        if (g) {
            const LaurentElem c = LaurentElem::constant(*g);
            cur -= c.pth_power() - c;
            r.trace.push_back(c);
        }
    }
    if (!stopped) r.stop = cur.is_apparent_zero() ? AsReduction::Stop::Zero : AsReduction::Stop::Integral;
    r.reduced = cur;
    return r;
}

bool replay_ok(const AsReduction& r) {
    LaurentElem acc = r.input;
    for (const auto& c : r.trace) acc -= c.pth_power() - c;
    return agrees(acc, r.reduced);
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Split: return "Split";
        case Classification::Unramified: return "Unramified";
        case Classification::TotallyRamified: return "TotallyRamified";
        case Classification::Unclassified: return "Unclassified";
        case Classification::PartialEvidence: return "PartialEvidence";
    }
    return "Unknown";
}

const RationalValue* RamReport::find_evidence(const std::string& name) const {
    for (const auto& [k, v] : evidence)
        if (k == name) return &v;
    return nullptr;
}

bool replay_ok(const RamReport& r) {
    KWitt acc = r.input;
    for (const auto& c : r.trace) acc = witt_as_step(acc, c);
    return agrees(acc, r.reduced);
}

RamReport classify_deg_p(const LaurentElem& w) {
    const std::int64_t p = w.spec().p;
    AsReduction red = as_reduce(w);
    RamReport rep;
    rep.input = KWitt(w.spec().p, {w});
    rep.trace = red.trace;
    LaurentElem reduced = red.reduced;

    switch (red.stop) {
        case AsReduction::Stop::RamifiedLeading: {
            const std::int64_t v = reduced.valuation();
            rep.classification = Classification::TotallyRamified;
            rep.criterion = "reduced leading exponent prime to p";
            rep.evidence.emplace_back("v(omega_1 reduced)", RationalValue(v, 1));
            rep.evidence.emplace_back("v(x_1)", RationalValue(v, p));
            break;
        }
        case AsReduction::Stop::Stalled: {
            rep.classification = Classification::Unclassified;
            rep.criterion = "p | leading exponent < 0 with a leading coefficient that is not a p-th power";
            rep.evidence.emplace_back("v(omega_1 reduced)", RationalValue(reduced.valuation(), 1));
            break;
        }
        case AsReduction::Stop::Zero:
            rep.classification = Classification::Split;
            rep.criterion = "omega_1 in P(K)";
            break;
        case AsReduction::Stop::Integral: {
            const ResidueElem a0 = reduced.coefficient(0);
            if (auto g = as_preimage(a0)) {
                const LaurentElem c = LaurentElem::constant(*g);
                reduced -= c.pth_power() - c;
                rep.trace.push_back(c);
                rep.classification = Classification::Split;
                rep.criterion = "residue of omega_1 in P(k)";
            } else {
                rep.classification = Classification::Unramified;
                rep.criterion = "residue of omega_1 outside P(k)";
                rep.evidence.emplace_back("v(x_1)", RationalValue(0, 1));
            }
            break;
        }
    }
    rep.reduced = KWitt(w.spec().p, {reduced});
    return rep;
}

bool lemma52_hypotheses(const KWitt& eta) {
    if (eta.length() != 2) fail(ErrorCode::ShapeMismatch, "length-2 Witt vector expected");
    const std::int64_t p = eta.p();
    if (eta[0].is_apparent_zero()) {
        require_constant_visible(eta[0]);
        return false;
    }
    const std::int64_t v1 = eta[0].valuation();
    if (v1 >= 0 || v1 % p == 0) return false;
    if (eta[1].is_apparent_zero()) {
        if (eta[1].precision() <= v1)
            fail(ErrorCode::PrecisionExhausted, "cannot compare v(eta_2) with v(eta_1)");
        return true;
    }
    return eta[1].valuation() > v1;
}

std::pair<RationalValue, RationalValue> newton_valuations(const KWitt& eta) {
    if (!lemma52_hypotheses(eta))
        fail(ErrorCode::HypothesisViolation, "need v(eta_1) < 0, v(eta_1) < v(eta_2), p does not divide v(eta_1)");
    const std::int64_t p = eta.p();
    const std::int64_t v1 = eta[0].valuation();
    const RationalValue x1(v1, p);
    // v(x_2) = ((p-1) v(eta_1) + v(x_1)) / p
    const RationalValue x2 = (RationalValue((p - 1) * v1, 1) + x1) / p;
    return {x1, x2};
}

namespace {

void add_lemma52_evidence(RamReport& rep, const KWitt& eta) {
    auto [x1, x2] = newton_valuations(eta);
    rep.evidence.emplace_back("v(eta_1)", RationalValue(eta[0].valuation(), 1));
    if (!eta[1].is_apparent_zero()) rep.evidence.emplace_back("v(eta_2)", RationalValue(eta[1].valuation(), 1));
    rep.evidence.emplace_back("v(x_1)", x1);
    rep.evidence.emplace_back("v(x_2)", x2);
}

void classify_integral_into(RamReport& rep, const KWitt& cur) {
    for (std::size_t i = 0; i < cur.length(); ++i) {
        const LaurentElem& x = cur[i];
        if (x.is_apparent_zero()) {
            require_constant_visible(x);
            continue;
        }
        if (x.valuation() < 0) {
            rep.classification = Classification::Unclassified;
            rep.criterion = "non-integral component outside the handled patterns";
            return;
        }
    }
    const ResidueElem a1 = cur[0].is_apparent_zero() ? ResidueElem::zero(cur[0].spec()) : cur[0].coefficient(0);
    if (as_preimage(a1)) {
        rep.classification = Classification::Split;
        rep.criterion = "residue of the first component in P(k)";
        return;
    }
    rep.classification = Classification::Unramified;
    rep.criterion = "integral with residue first component outside P(k) (inertial lift)";
    rep.evidence.emplace_back("v(x_1)", RationalValue(0, 1));
}

}  // namespace

RamReport classify_len2(const KWitt& eta) {
    if (eta.length() != 2) fail(ErrorCode::ShapeMismatch, "classify_len2 needs a length-2 Witt vector");
    const std::int64_t p = eta.p();
    RamReport rep;
    rep.input = eta;
    rep.reduced = eta;
    if (lemma52_hypotheses(eta)) {
        rep.classification = Classification::TotallyRamified;
        rep.criterion = "v(eta_1) < 0, v(eta_1) < v(eta_2), p does not divide v(eta_1)";
        add_lemma52_evidence(rep, eta);
        return rep;
    }

    KWitt cur = eta;
    while (true) {
        if (cur[0].is_apparent_zero()) {
            require_constant_visible(cur[0]);
            break;
        }
        const std::int64_t v = cur[0].valuation();
        if (v >= 0 || v % p != 0) break;
        auto root = pth_root(cur[0].leading_coefficient());
        if (!root) break;
        const LaurentElem c = LaurentElem::monomial(*root, v / p);
        cur = witt_as_step(cur, c);
        rep.trace.push_back(c);
    }
    rep.reduced = cur;

    const auto v1 = cur[0].try_valuation();
    if (v1 && *v1 < 0) {
        if (*v1 % p != 0) {
            if (lemma52_hypotheses(cur)) {
                rep.classification = Classification::TotallyRamified;
                rep.criterion = "length-2 total ramification conditions after reducing eta_1";
                add_lemma52_evidence(rep, cur);
            } else if (cur[0].spec().perfect()) {
                rep.classification = Classification::TotallyRamified;
                rep.criterion = "perfect residue field and ramified degree-p subextension";
                rep.evidence.emplace_back("v(eta_1 reduced)", RationalValue(*v1, 1));
                rep.evidence.emplace_back("v(x_1)", RationalValue(*v1, p));
            } else {
                rep.classification = Classification::Unclassified;
                rep.criterion = "ramified eta_1 but v(eta_2) <= v(eta_1) over an imperfect residue field";
                rep.evidence.emplace_back("v(eta_1 reduced)", RationalValue(*v1, 1));
            }
        } else {
            rep.classification = Classification::Unclassified;
            rep.criterion = "p | v(eta_1) < 0 with a leading coefficient that is not a p-th power";
            rep.evidence.emplace_back("v(eta_1 reduced)", RationalValue(*v1, 1));
        }
        return rep;
    }
    classify_integral_into(rep, cur);
    return rep;
}

RamReport classify_integral(const KWitt& omega) {
    RamReport rep;
    rep.input = omega;
    rep.reduced = omega;
    classify_integral_into(rep, omega);
    return rep;
}

RamReport classify(const KWitt& omega) {
    switch (omega.length()) {
        case 1: return classify_deg_p(omega[0]);
        case 2: return classify_len2(omega);
        default: return classify_integral(omega);
    }
}

}  // namespace asw
