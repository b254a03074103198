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

#include "asw/brauer.hpp"

#include "asw/error.hpp"

namespace asw {

namespace {

bool all_zero(const KWitt& w) {
    for (const auto& x : w.components())
        if (!x.is_apparent_zero()) return false;
    return true;
}

KWitt witt_as_step(const KWitt& cur, const LaurentElem& c) {
    const KWitt lift = KWitt::teichmuller_like(cur.p(), cur.length(), c);
    return witt_add(witt_sub(cur, frobenius_twist(lift, 1)), lift);
}

std::int64_t ipow(std::int64_t base, std::size_t e) {
    std::int64_t r = 1;
    while (e--) r = checked_mul(r, base);
    return r;
}

std::optional<LaurentElem> iterated_root(const LaurentElem& x, std::size_t times) {
    LaurentElem cur = x;
    for (std::size_t k = 0; k < times; ++k) {
        auto r = pth_root(cur);
        if (!r) return std::nullopt;
        cur = *r;
    }
    return cur;
}

LaurentElem residue_scalar(const FieldSpec& spec, std::int64_t k) { return LaurentElem::from_int(spec, k); }

RewriteStep split_step(Rule rule, const BrauerSymbol& s, std::int64_t mult = 1) {
    RewriteStep st;
    st.rule = rule;
    st.before = s;
    st.after = s;
    st.before_mult = mult;
    st.after_mult = mult;
    st.split = true;
    return st;
}

RewriteStep strip_step(const BrauerSymbol& s) {
    RewriteStep st;
    st.rule = Rule::StripZero;
    st.before = s;
    st.after = strip_zero(s);
    return st;
}

/*
 * [(x), b) = e [(a'), b) = [(a'), b^e) = [(a'), a') + [(a'), b^e / a') and
 * the last symbol is split when b^e / a' is a p-th power; a' = x / e.
 */
std::optional<std::vector<RewriteStep>> multiple_chain(const BrauerSymbol& s, std::int64_t e) {
    const FieldSpec& spec = s.spec();
    const std::uint32_t p = s.p();
    const std::int64_t e_mod = mod_reduce(e, p);
    if (s.m() != 1 || e_mod == 0) fail(ErrorCode::HypothesisViolation, "multiple chain needs m = 1 and p not dividing e");
    const LaurentElem x = s.omega()[0];
    const LaurentElem a = x.scaled(ResidueElem::from_int(spec, mod_inverse(e_mod, p)));
    const LaurentElem be = s.b().pow(e);
    const LaurentElem beta = be / a;
    auto root = pth_root(beta);
    if (!root) return std::nullopt;

    std::vector<RewriteStep> out;
    const BrauerSymbol sa(KWitt(p, {a}), s.b());
    RewriteStep st1;
    st1.rule = Rule::SameB;
    st1.before = s;
    st1.after = sa;
    st1.after_mult = e;
    out.push_back(st1);

    RewriteStep st2;
    st2.rule = Rule::SameOmega;
    st2.before = sa;
    st2.before_mult = e;
    st2.after = BrauerSymbol(KWitt(p, {a}), be);
    out.push_back(st2);

    RewriteStep st3;
    st3.rule = Rule::SameOmega;
    st3.before = st2.after;
    st3.operand = BrauerSymbol(KWitt(p, {a}), a);
    st3.operand_proof = absorb(*st3.operand).steps;
    st3.after = BrauerSymbol(KWitt(p, {a}), beta);
    out.push_back(st3);

    RewriteStep st4 = split_step(Rule::PthPowerB, st3.after);
    st4.gamma = *root;
    out.push_back(st4);
    return out;
}

std::string check_proof(const std::vector<RewriteStep>& proof, const BrauerSymbol& start) {
    if (proof.empty()) return "missing proof";
    if (!agrees(proof.front().before, start)) return "proof does not start at the symbol";
    if (!proof.back().split) return "proof does not end split";
    return check_trace(proof);
}

}  // namespace

BrauerSymbol::BrauerSymbol(KWitt omega, LaurentElem b) : omega_(std::move(omega)), b_(std::move(b)) {
    if (b_.is_apparent_zero()) fail(ErrorCode::InvalidArgument, "b must be nonzero");
    if (omega_[0].spec() != b_.spec()) fail(ErrorCode::SpecMismatch, "omega and b over different fields");
    if (omega_.p() != b_.spec().p) fail(ErrorCode::SpecMismatch, "Witt prime differs from the characteristic");
}

bool agrees(const BrauerSymbol& a, const BrauerSymbol& b) {
    return agrees(a.omega(), b.omega()) && agrees(a.b(), b.b());
}

std::string to_string(const BrauerSymbol& s, std::int64_t implicit_precision) {
    return "[" + to_string(s.omega(), implicit_precision) + "; " + to_string(s.b(), implicit_precision) + ")";
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::SameB: return "SameB";
        case Rule::SameOmega: return "SameOmega";
        case Rule::StripZero: return "StripZero";
        case Rule::Absorb: return "Absorb";
        case Rule::FrobTwist: return "FrobTwist";
        case Rule::PowerAdjustB: return "PowerAdjustB";
        case Rule::PthPowerB: return "PthPowerB";
        case Rule::ZeroOmega: return "ZeroOmega";
        case Rule::ArtinSchreier: return "ArtinSchreier";
        case Rule::Lemma53: return "Lemma53";
        case Rule::Lemma54: return "Lemma54";
    }
    return "?";
}

std::string check_step(const RewriteStep& st) {
    const BrauerSymbol& x = st.before;
    const BrauerSymbol& y = st.after;
    if (x.p() != y.p()) return "prime changed";
    const bool same_length = x.m() == y.m();
    auto same_b = [&] { return agrees(x.b(), y.b()); };
    auto terminal = [&]() -> std::string {
        if (!st.split) return "terminal rule without split flag";
        if (!agrees(x, y) || st.before_mult != st.after_mult) return "terminal rule changed the symbol";
        return "";
    };
    try {
        switch (st.rule) {
            case Rule::SameB:
                if (!same_length || !same_b()) return "b or length differs";
                if (st.operand) {
                    if (st.before_mult != 1 || st.after_mult != 1) return "sum with operand must be unweighted";
                    if (st.operand->m() != x.m() || !agrees(st.operand->b(), x.b())) return "operand has a different b";
                    if (!agrees(y.omega(), witt_add(x.omega(), st.operand->omega()))) return "omega is not the Witt sum";
                    return check_proof(st.operand_proof, *st.operand);
                }
                if (st.before_mult != 1 || st.after_mult == 0) return "bad multiplicities";
                if (!agrees(x.omega(), witt_multiple(y.omega(), st.after_mult))) return "omega is not the multiple";
                return "";
            case Rule::SameOmega:
                if (!same_length || !agrees(x.omega(), y.omega())) return "omega differs";
                if (st.operand) {
                    if (st.before_mult != 1 || st.after_mult != 1) return "sum with operand must be unweighted";
                    if (!agrees(st.operand->omega(), x.omega())) return "operand has a different omega";
                    if (!agrees(y.b() * st.operand->b(), x.b())) return "b is not the product";
                    return check_proof(st.operand_proof, *st.operand);
                }
                if (st.after_mult != 1 || st.before_mult == 0) return "bad multiplicities";
                if (!agrees(y.b(), x.b().pow(st.before_mult))) return "b is not the power";
                return "";
            case Rule::StripZero: {
                if (x.m() < 2 || y.m() + 1 != x.m()) return "length must drop by one";
                if (!x.omega()[0].is_apparent_zero()) return "first component is not zero";
                if (st.before_mult != st.after_mult || !same_b()) return "b or multiplicity changed";
                for (std::size_t i = 0; i < y.m(); ++i)
                    if (!agrees(y.omega()[i], x.omega()[i + 1])) return "components not shifted";
                return "";
            }
            case Rule::Absorb:
                if (!agrees(x.omega()[0], x.b())) return "first component differs from b";
                for (std::size_t i = 1; i < x.m(); ++i)
                    if (!x.omega()[i].is_apparent_zero()) return "trailing components not zero";
                return terminal();
            case Rule::FrobTwist:
                if (!same_length || !same_b() || st.before_mult != st.after_mult) return "b or multiplicity changed";
                if (!agrees(y.omega(), frobenius_twist(x.omega(), st.twist))) return "omega is not the twist";
                return "";
            case Rule::PowerAdjustB: {
                if (!same_length || !agrees(x.omega(), y.omega()) || st.before_mult != st.after_mult)
                    return "omega or multiplicity changed";
                if (!st.gamma || st.gamma->is_apparent_zero()) return "gamma missing";
                const auto pm = ipow(x.p(), x.m());
                if (!agrees(y.b(), st.gamma->pow(pm) * x.b())) return "b is not gamma^{p^m} b";
                return "";
            }
            case Rule::PthPowerB:
                if (!st.gamma) return "root missing";
                if (!agrees(st.gamma->pow(ipow(x.p(), x.m())), x.b())) return "gamma^{p^m} differs from b";
                return terminal();
            case Rule::ZeroOmega:
                if (!all_zero(x.omega())) return "omega is not zero";
                return terminal();
            case Rule::ArtinSchreier:
                if (!same_length || !same_b() || st.before_mult != st.after_mult) return "b or multiplicity changed";
                if (!st.gamma) return "c missing";
                if (!agrees(y.omega(), witt_as_step(x.omega(), *st.gamma))) return "omega is not w - (c^p) + (c)";
                return "";
            case Rule::Lemma53: {
                if (x.m() != 2 || !x.omega()[0].is_apparent_zero()) return "needs (0, x)";
                const std::string sub = check_proof(st.substeps, x);
                if (!sub.empty()) return "substeps: " + sub;
                return terminal();
            }
            case Rule::Lemma54: {
                if (x.m() != 2 || !same_length || !same_b() || st.before_mult != 1 || st.after_mult != 1)
                    return "needs length 2 and unchanged b";
                if (!pth_root(x.omega()[0])) return "first component is not a p-th power";
                if (!agrees(y.omega()[0], x.omega()[0] + x.b()) || !agrees(y.omega()[1], x.omega()[1]))
                    return "result is not (w_1 + b, w_2)";
                if (st.substeps.empty() || !agrees(st.substeps.front().before, x) ||
                    !agrees(st.substeps.back().after, y))
                    return "substeps do not connect";
                const std::string sub = check_trace(st.substeps);
                return sub.empty() ? "" : "substeps: " + sub;
            }
        }
    } catch (const Error& e) {
        return std::string("check raised ") + e.what();
    }
    return "unknown rule";
}

std::string check_trace(const std::vector<RewriteStep>& steps) {
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& st = steps[k];
        if (k == 0 && st.before_mult != 1) return "step 0: trace must start unweighted";
        if (k > 0) {
            const auto& prev = steps[k - 1];
            if (prev.split) return "step " + std::to_string(k) + ": follows a split";
            if (!agrees(prev.after, st.before) || prev.after_mult != st.before_mult)
                return "step " + std::to_string(k) + ": does not chain";
        }
        const std::string why = check_step(st);
        if (!why.empty()) return "step " + std::to_string(k) + " (" + to_string(st.rule) + "): " + why;
    }
    return "";
}

BrauerSymbol add_same_b(const BrauerSymbol& s1, const BrauerSymbol& s2) {
    if (s1.m() != s2.m() || !agrees(s1.b(), s2.b()))
        fail(ErrorCode::RuleViolation, "sum of symbols needs a common b");
    return BrauerSymbol(witt_add(s1.omega(), s2.omega()), s1.b());
}

BrauerSymbol add_same_omega(const BrauerSymbol& s1, const BrauerSymbol& s2) {
    if (s1.m() != s2.m() || !agrees(s1.omega(), s2.omega()))
        fail(ErrorCode::RuleViolation, "product rule needs a common omega");
    return BrauerSymbol(s1.omega(), s1.b() * s2.b());
}

BrauerSymbol strip_zero(const BrauerSymbol& s) {
    if (s.m() < 2) fail(ErrorCode::RuleViolation, "nothing to strip from a length-1 symbol");
    if (!s.omega()[0].is_apparent_zero()) fail(ErrorCode::RuleViolation, "first component is not zero");
    std::vector<LaurentElem> rest(s.omega().components().begin() + 1, s.omega().components().end());
    return BrauerSymbol(KWitt(s.p(), std::move(rest)), s.b());
}

RewriteTrace absorb(const BrauerSymbol& s) {
    RewriteTrace t;
    t.steps.push_back(split_step(Rule::Absorb, s));
    const std::string why = check_step(t.steps.back());
    if (!why.empty()) fail(ErrorCode::RuleViolation, "absorb: " + why);
    return t;
}

BrauerSymbol frob_twist_symbol(const BrauerSymbol& s, unsigned r) {
    return BrauerSymbol(frobenius_twist(s.omega(), r), s.b());
}

BrauerSymbol power_adjust_b(const BrauerSymbol& s, const LaurentElem& gamma) {
    if (gamma.is_apparent_zero()) fail(ErrorCode::InvalidArgument, "gamma must be nonzero");
    return BrauerSymbol(s.omega(), gamma.pow(ipow(s.p(), s.m())) * s.b());
}

QuickSplit is_split_quick(const BrauerSymbol& s) {
    QuickSplit out;
    BrauerSymbol cur = s;
    auto finish = [&](RewriteStep st) {
        out.trace.steps.push_back(std::move(st));
        out.split = true;
        return out;
    };
    try {
        while (true) {
            if (auto root = iterated_root(cur.b(), cur.m())) {
                RewriteStep st = split_step(Rule::PthPowerB, cur);
                st.gamma = *root;
                return finish(st);
            }
            if (all_zero(cur.omega())) return finish(split_step(Rule::ZeroOmega, cur));
            if (cur.omega()[0].is_apparent_zero()) {
                out.trace.steps.push_back(strip_step(cur));
                cur = out.trace.steps.back().after;
                continue;
            }
            const AsReduction red = as_reduce(cur.omega()[0]);
            if (red.reduced.is_apparent_zero()) {
                for (const auto& c : red.trace) {
                    RewriteStep st;
                    st.rule = Rule::ArtinSchreier;
                    st.before = cur;
                    st.after = BrauerSymbol(witt_as_step(cur.omega(), c), cur.b());
                    st.gamma = c;
                    out.trace.steps.push_back(st);
                    cur = st.after;
                }
                continue;
            }
            if (cur.m() == 1) {
                for (std::int64_t e = 1; e < cur.p(); ++e) {
                    const LaurentElem q = cur.omega()[0] * cur.b().pow(-e);
                    if (!pth_root(q)) continue;
                    if (auto chain = multiple_chain(cur, e)) {
                        for (auto& st : *chain) out.trace.steps.push_back(std::move(st));
                        out.split = true;
                        return out;
                    }
                }
            }
            break;
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PrecisionExhausted) throw;
    }
    return QuickSplit{};
}

RewriteTrace lemma53_split(std::int64_t r, std::int64_t i, const LaurentElem& c, const LaurentElem& b,
                           std::uint32_t p) {
    if (mod_reduce(i, p) == 0) fail(ErrorCode::HypothesisViolation, "i = 0 mod p is outside the proof's argument");
    const FieldSpec& spec = b.spec();
    const std::int64_t e = static_cast<std::int64_t>(p) - i;
    LaurentElem x = LaurentElem::zero(spec);
    if (!c.is_apparent_zero() && mod_reduce(r, p) != 0)
        x = c.pow(checked_mul(p, i)).scaled(ResidueElem::from_int(spec, r)) * b.pow(e);
    const BrauerSymbol start(KWitt(p, {LaurentElem::zero(spec), x}), b);

    RewriteTrace t;
    if (x.is_apparent_zero()) {
        t.steps.push_back(split_step(Rule::ZeroOmega, start));
        return t;
    }
    t.steps.push_back(strip_step(start));
    auto chain = multiple_chain(t.steps.back().after, e);
    if (!chain) fail(ErrorCode::RuleViolation, "b^{p-i} / a' is not a p-th power");
    // The closing b must be (p-i) r^{-1} c^{-pi}.
    const std::uint32_t coef = mod_reduce(checked_mul(mod_reduce(e, p), mod_inverse(mod_reduce(r, p), p)), p);
    const LaurentElem expected = c.pow(-checked_mul(p, i)).scaled(ResidueElem::from_int(spec, coef));
    if (!agrees(chain->back().before.b(), expected))
        fail(ErrorCode::RuleViolation, "closing symbol differs from (p-i) r^{-1} c^{-pi}");
    for (auto& st : *chain) t.steps.push_back(std::move(st));
    return t;
}

SymbolRewrite lemma54_rewrite(const BrauerSymbol& s) {
    if (s.m() != 2) fail(ErrorCode::ShapeMismatch, "the length-2 rewrite needs a length-2 symbol");
    auto c = pth_root(s.omega()[0]);
    if (!c) fail(ErrorCode::NoRoot, "omega_1 = " + to_string(s.omega()[0]) + " is not a p-th power");
    const std::uint32_t p = s.p();
    const FieldSpec& spec = s.spec();
    const LaurentElem& b = s.b();
    const LaurentElem zero = LaurentElem::zero(spec);

    SymbolRewrite out;
    BrauerSymbol cur = s;
    auto add_split = [&](const BrauerSymbol& operand, std::vector<RewriteStep> proof) {
        RewriteStep st;
        st.rule = Rule::SameB;
        st.before = cur;
        st.operand = operand;
        st.operand_proof = std::move(proof);
        st.after = BrauerSymbol(witt_add(cur.omega(), operand.omega()), b);
        out.trace.steps.push_back(st);
        cur = st.after;
    };

    const BrauerSymbol bb(KWitt(p, {b, zero}), b);
    add_split(bb, absorb(bb).steps);
    for (std::uint32_t i = 1; i < p; ++i) {
        const std::int64_t r = mpz_class(lemma54_coefficient(p, i) % p).get_si();
        RewriteTrace proof = lemma53_split(r, i, *c, b, p);
        RewriteStep l53 = split_step(Rule::Lemma53, proof.steps.front().before);
        l53.substeps = std::move(proof.steps);
        add_split(l53.before, {l53});
    }
    const KWitt target(p, {s.omega()[0] + b, s.omega()[1]});
    if (!agrees(cur.omega(), target)) fail(ErrorCode::RuleViolation, "corrections did not restore omega_2");
    out.symbol = BrauerSymbol(target, b);
    return out;
}

SymbolRewrite normalize_symbol(const BrauerSymbol& s) {
    const std::uint32_t p = s.p();
    const std::int64_t vb = s.b().valuation();
    if (vb % static_cast<std::int64_t>(p) == 0)
        fail(ErrorCode::HypothesisViolation, "p divides v(b) = " + std::to_string(vb));
    SymbolRewrite out;
    BrauerSymbol cur = s;

    bool twist = false;
    for (const auto& x : cur.omega().components())
        if (!x.is_apparent_zero() && !pth_root(x)) twist = true;
    if (twist) {
        RewriteStep st;
        st.rule = Rule::FrobTwist;
        st.before = cur;
        st.twist = 1;
        st.after = frob_twist_symbol(cur, 1);
        out.trace.steps.push_back(st);
        cur = st.after;
    }

    std::int64_t bound = 0;
    for (const auto& x : cur.omega().components())
        if (!x.is_apparent_zero()) bound = std::min(bound, x.valuation());
    const std::int64_t pm = ipow(p, cur.m());
    if (vb >= bound) {
        // least r >= 1 with vb - p^m r < bound
        const std::int64_t r = (vb - bound) / pm + 1;
        RewriteStep st;
        st.rule = Rule::PowerAdjustB;
        st.before = cur;
        st.gamma = LaurentElem::t_power(s.spec(), -r);
        st.after = power_adjust_b(cur, *st.gamma);
        out.trace.steps.push_back(st);
        cur = st.after;
    }
    const std::int64_t vb2 = cur.b().valuation();
    for (const auto& x : cur.omega().components())
        if (x.is_apparent_zero() && x.precision() <= vb2)
            fail(ErrorCode::PrecisionExhausted, "cannot compare v(b) with a component known only to O(t^" +
                                                    std::to_string(x.precision()) + ")");
    out.symbol = cur;
    return out;
}

DivisionCertificate division_certificate(const KWitt& omega, const LaurentElem& b) {
    DivisionCertificate cert;
    cert.omega = omega;
    cert.b = b;
    const std::uint32_t p = omega.p();
    cert.v_b = b.valuation();
    const bool coprime = cert.v_b % static_cast<std::int64_t>(p) != 0;
    cert.hypotheses.emplace_back("gcd(v(b), p) = 1", coprime);
    if (!coprime)
        fail(ErrorCode::HypothesisNotVerified, "gcd(v(b), p) = 1 fails: v(b) = " + std::to_string(cert.v_b));
    cert.ramification = classify(omega);
    const bool unramified = cert.ramification.classification == Classification::Unramified;
    cert.hypotheses.emplace_back("K_omega/K unramified", unramified);
    if (!unramified)
        fail(ErrorCode::HypothesisNotVerified,
             "K_omega/K unramified fails: classification " + to_string(cert.ramification.classification));
    for (const auto& x : omega.components()) cert.residue.push_back(x.coefficient(0));
    const std::string pm = std::to_string(ipow(p, omega.length()));
    cert.valuation_argument = "if b^r = N(alpha) then r*v(b) = " + pm + "*v(alpha) with v(alpha) in Z, and gcd(" +
                              std::to_string(cert.v_b) + ", " + std::to_string(p) + ") = 1 forces " + pm + " | r";
    cert.residue_note =
        "semiramified: the residue algebra is the residue field of K_omega, the cyclic extension of k given by the "
        "residue vector";
    return cert;
}

/* ---- degree-p cyclic algebra ------------------------------------------- */

namespace {

void require_m1(const ExtDescPtr& d) {
    if (d->m() != 1) fail(ErrorCode::ShapeMismatch, "cyclic algebra arithmetic is implemented for m = 1");
}

}  // namespace

CyclicAlgebraElem CyclicAlgebraElem::zero(const ExtDescPtr& desc, const LaurentElem& b) {
    require_m1(desc);
    if (b.is_apparent_zero()) fail(ErrorCode::InvalidArgument, "b must be nonzero");
    CyclicAlgebraElem r;
    r.desc_ = desc;
    r.b_ = b;
    r.parts_.assign(desc->p(), ExtensionElem::zero(desc));
    return r;
}

CyclicAlgebraElem CyclicAlgebraElem::scalar(const ExtDescPtr& desc, const LaurentElem& b, const LaurentElem& c) {
    CyclicAlgebraElem r = zero(desc, b);
    r.parts_[0] = ExtensionElem::scalar(desc, c);
    return r;
}

CyclicAlgebraElem CyclicAlgebraElem::basis(const ExtDescPtr& desc, const LaurentElem& b, std::size_t i,
                                           std::size_t j) {
    CyclicAlgebraElem r = zero(desc, b);
    if (j >= desc->p()) fail(ErrorCode::ShapeMismatch, "basis index out of range");
    r.parts_[j] = ExtensionElem::basis(desc, i);
    return r;
}

CyclicAlgebraElem CyclicAlgebraElem::x(const ExtDescPtr& desc, const LaurentElem& b) { return basis(desc, b, 1, 0); }
CyclicAlgebraElem CyclicAlgebraElem::y(const ExtDescPtr& desc, const LaurentElem& b) { return basis(desc, b, 0, 1); }

CyclicAlgebraElem CyclicAlgebraElem::operator+(const CyclicAlgebraElem& o) const {
    CyclicAlgebraElem r = *this;
    for (std::size_t j = 0; j < parts_.size(); ++j) r.parts_[j] = parts_[j] + o.parts_.at(j);
    return r;
}

CyclicAlgebraElem CyclicAlgebraElem::operator-(const CyclicAlgebraElem& o) const {
    CyclicAlgebraElem r = *this;
    for (std::size_t j = 0; j < parts_.size(); ++j) r.parts_[j] = parts_[j] - o.parts_.at(j);
    return r;
}

CyclicAlgebraElem CyclicAlgebraElem::operator*(const CyclicAlgebraElem& o) const {
    const std::size_t p = desc_->p();
    const FieldSpec& spec = desc_->spec();
    // sigma^j(x) = x + j, and y^j c = sigma^j(c) y^j.
    std::vector<std::vector<ExtensionElem>> shifted_powers(p);
    for (std::size_t j = 0; j < p; ++j) {
        const ExtensionElem xj = ExtensionElem::x1(desc_) + ExtensionElem::scalar(desc_, residue_scalar(spec, j));
        shifted_powers[j].push_back(ExtensionElem::scalar(desc_, LaurentElem::one(spec)));
        for (std::size_t k = 1; k < p; ++k) shifted_powers[j].push_back(shifted_powers[j].back() * xj);
    }
    auto sigma = [&](const ExtensionElem& c, std::size_t j) {
        ExtensionElem out = ExtensionElem::zero(desc_);
        for (std::size_t k = 0; k < p; ++k)
            if (!c.coefficient(k).is_apparent_zero() || !c.coefficient(k).is_exact())
                out = out + shifted_powers[j][k] * c.coefficient(k);
        return out;
    };
    CyclicAlgebraElem r = zero(desc_, b_);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t l = 0; l < p; ++l) {
            ExtensionElem term = parts_[j] * sigma(o.parts_[l], j);
            if (j + l >= p) r.parts_[j + l - p] = r.parts_[j + l - p] + term * b_;
            else r.parts_[j + l] = r.parts_[j + l] + term;
        }
    return r;
}

CyclicAlgebraElem CyclicAlgebraElem::pow(std::uint64_t e) const {
    CyclicAlgebraElem result = scalar(desc_, b_, LaurentElem::one(desc_->spec())), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Matrix regular_representation(const CyclicAlgebraElem& a) {
    const ExtDescPtr& d = a.desc();
    const std::size_t p = d->p();
    const std::size_t n = p * p;
    Matrix m(n, std::vector<LaurentElem>(n));
    const LaurentElem& b = a.b();
    for (std::size_t k = 0; k < n; ++k) {
        const CyclicAlgebraElem col = a * CyclicAlgebraElem::basis(d, b, k % p, k / p);
        for (std::size_t r = 0; r < n; ++r) m[r][k] = col.coefficient(r % p, r / p);
    }
    return m;
}

}  // namespace asw
