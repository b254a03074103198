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

#include "asw/theorems.hpp"

#include "asw/error.hpp"

namespace asw {

namespace {

std::int64_t ipow(std::int64_t base, std::size_t e) {
    std::int64_t r = 1;
    while (e--) r = checked_mul(r, base);
    return r;
}

bool coprime_to_p(const LaurentElem& b) { return b.valuation() % static_cast<std::int64_t>(b.spec().p) != 0; }

void require_coprime(const LaurentElem& b) {
    if (b.is_apparent_zero()) fail(ErrorCode::InvalidArgument, "b must be nonzero");
    if (!coprime_to_p(b))
        fail(ErrorCode::HypothesisViolation, "gcd(v(b), p) = 1 fails: v(b) = " + std::to_string(b.valuation()));
}

// [w, b') = [w, b') + [(b', 0, ...), b') = [w + (b', 0, ...), b').
RewriteStep absorb_b_step(const BrauerSymbol& cur) {
    std::vector<LaurentElem> c(cur.m(), LaurentElem::zero(cur.spec()));
    c[0] = cur.b();
    RewriteStep st;
    st.rule = Rule::SameB;
    st.before = cur;
    st.operand = BrauerSymbol(KWitt(cur.p(), std::move(c)), cur.b());
    st.operand_proof = absorb(*st.operand).steps;
    st.after = add_same_b(cur, *st.operand);
    return st;
}

std::int64_t min_valuation(const KWitt& w) {
    std::int64_t bound = 0;
    for (const auto& x : w.components())
        if (!x.is_apparent_zero()) bound = std::min(bound, x.valuation());
    return bound;
}

SubfieldWitness cyclic_witness(const BrauerSymbol& normalized, const BrauerSymbol& algebra, RewriteTrace trace,
                               RamReport report) {
    SubfieldWitness w;
    w.kind = WitnessKind::Cyclic;
    w.p = algebra.p();
    w.m = algebra.m();
    w.omega = algebra.omega();
    w.algebra = algebra;
    w.trace = std::move(trace);
    w.checks.emplace_back("gcd(v(b), p) = 1", coprime_to_p(algebra.b()));
    w.checks.emplace_back("normalized: v(b) < min(0, v(omega_i))",
                          normalized.b().valuation() < min_valuation(normalized.omega()));
    w.checks.emplace_back("trace replays", validate(w.trace));
    w.evidence = report.evidence;
    w.report = std::move(report);
    return w;
}

void require_totally_ramified(const SubfieldWitness& w) {
    const auto c = w.report->classification;
    if (c != Classification::TotallyRamified && c != Classification::PartialEvidence)
        fail(ErrorCode::RuleViolation, "constructed omega' is " + to_string(c) + ", expected TotallyRamified");
    for (const auto& [name, ok] : w.checks)
        if (!ok) fail(ErrorCode::RuleViolation, "check failed: " + name);
}

RamReport first_component_report(const KWitt& omega) {
    RamReport rep;
    rep.input = omega;
    rep.reduced = omega;
    const std::int64_t p = omega.p();
    const auto v = omega[0].try_valuation();
    if (v && *v < 0 && *v % p != 0) {
        rep.classification = Classification::PartialEvidence;
        rep.criterion = "first component ramified: K(x_1)/K totally ramified of degree p";
        rep.evidence.emplace_back("v(omega'_1)", RationalValue(*v, 1));
        rep.evidence.emplace_back("v(x_1)", RationalValue(*v, p));
    } else {
        rep.classification = Classification::Unclassified;
        rep.criterion = "first component not ramified";
    }
    return rep;
}

}  // namespace

std::string to_string(WitnessKind k) {
    return k == WitnessKind::PurelyInseparable ? "PurelyInseparable" : "Cyclic";
}

SubfieldWitness insep_normal_form(const LaurentElem& b, std::size_t m) {
    require_coprime(b);
    if (m == 0 || m > kMaxWittLength) fail(ErrorCode::ShapeMismatch, "m must be in [1, 4]");
    SubfieldWitness w;
    w.kind = WitnessKind::PurelyInseparable;
    w.p = b.spec().p;
    w.m = m;
    w.b = b;
    const std::int64_t pm = ipow(w.p, m);
    w.root_valuation = RationalValue(b.valuation(), pm);
    w.checks.emplace_back("gcd(v(b), p) = 1", true);
    w.checks.emplace_back("v(y) in (1/p^m)Z \\ (1/p^(m-1))Z", w.root_valuation->den() == pm);
    w.evidence.emplace_back("v(b)", RationalValue(b.valuation(), 1));
    w.evidence.emplace_back("v(y)", *w.root_valuation);
    return w;
}

SubfieldWitness cyclic_to_insep(const KWitt& omega, const LaurentElem& b) {
    if (omega.length() > 2) fail(ErrorCode::UnsupportedCase, "norm computation is implemented for m <= 2");
    if (b.is_apparent_zero()) fail(ErrorCode::InvalidArgument, "b must be nonzero");
    const BrauerSymbol algebra(omega, b);
    const RamReport rep = classify(omega);
    if (rep.classification != Classification::TotallyRamified)
        fail(ErrorCode::HypothesisViolation, "K_omega/K is " + to_string(rep.classification) +
                                                 ", not totally ramified (" + rep.criterion + ")");
    const std::size_t m = omega.length();
    const std::uint32_t p = omega.p();

    if (coprime_to_p(b)) {
        SubfieldWitness w = insep_normal_form(b, m);
        w.algebra = algebra;
        w.checks.emplace_back("K_omega/K totally ramified", true);
        return w;
    }

    const KWitt& eta = rep.reduced;
    if (m == 2 && !lemma52_hypotheses(eta))
        fail(ErrorCode::UnsupportedCase, "no element of value in (1/p^2)Z \\ (1/p)Z is known for this omega");
    const auto desc = CyclicExtDesc::make(eta);
    const ExtensionElem u = m == 1 ? ExtensionElem::x1(desc) : ExtensionElem::x2(desc);
    const LaurentElem nu = norm(u);
    const RationalValue vu = ext_val(desc->degree(), nu);
    const LaurentElem c = nu * b;
    if (!coprime_to_p(c))
        fail(ErrorCode::RuleViolation, "v(N(u) b) = " + std::to_string(c.valuation()) + " is divisible by p");

    SubfieldWitness w = insep_normal_form(c, m);
    w.algebra = BrauerSymbol(omega, c);
    w.checks.emplace_back("K_omega/K totally ramified", true);
    w.checks.emplace_back("v(u) in (1/p^m)Z \\ (1/p^(m-1))Z", vu.den() == ipow(p, m));
    w.evidence.emplace_back(m == 1 ? "v(x_1)" : "v(x_2)", vu);
    w.evidence.emplace_back("v(N(u))", RationalValue(nu.valuation(), 1));
    w.evidence.emplace_back("v(b) input", RationalValue(b.valuation(), 1));
    return w;
}

SubfieldWitness insep_to_cyclic_p(const LaurentElem& omega1, const LaurentElem& b) {
    require_coprime(b);
    const std::uint32_t p = b.spec().p;
    const SymbolRewrite n = normalize_symbol(BrauerSymbol(KWitt(p, {omega1}), b));
    RewriteTrace trace = n.trace;
    trace.steps.push_back(absorb_b_step(n.symbol));
    const BrauerSymbol algebra = trace.steps.back().after;
    SubfieldWitness w = cyclic_witness(n.symbol, algebra, std::move(trace), classify_deg_p(algebra.omega()[0]));
    require_totally_ramified(w);
    return w;
}

SubfieldWitness insep_to_cyclic_p2(const KWitt& omega, const LaurentElem& b) {
    if (omega.length() != 2) fail(ErrorCode::ShapeMismatch, "length-2 omega expected");
    require_coprime(b);
    const SymbolRewrite n = normalize_symbol(BrauerSymbol(omega, b));
    const SymbolRewrite r = lemma54_rewrite(n.symbol);
    RewriteTrace trace = n.trace;
    RewriteStep st;
    st.rule = Rule::Lemma54;
    st.before = n.symbol;
    st.after = r.symbol;
    st.substeps = r.trace.steps;
    trace.steps.push_back(std::move(st));
    SubfieldWitness w = cyclic_witness(n.symbol, r.symbol, std::move(trace), classify_len2(r.symbol.omega()));
    w.checks.emplace_back("v(eta_1) < 0, v(eta_1) < v(eta_2), p does not divide v(eta_1)",
                          lemma52_hypotheses(r.symbol.omega()));
    require_totally_ramified(w);
    return w;
}

SubfieldWitness insep_to_cyclic_perfect(const KWitt& omega, const LaurentElem& b) {
    if (!b.spec().perfect()) fail(ErrorCode::HypothesisViolation, "residue field must be perfect (F_p)");
    require_coprime(b);
    const SymbolRewrite n = normalize_symbol(BrauerSymbol(omega, b));
    RewriteTrace trace = n.trace;
    trace.steps.push_back(absorb_b_step(n.symbol));
    const BrauerSymbol algebra = trace.steps.back().after;
    RamReport rep = algebra.m() <= 2 ? classify(algebra.omega()) : first_component_report(algebra.omega());
    SubfieldWitness w = cyclic_witness(n.symbol, algebra, std::move(trace), std::move(rep));
    require_totally_ramified(w);
    return w;
}

std::string revalidate(const SubfieldWitness& w) {
    try {
        for (const auto& [name, ok] : w.checks)
            if (!ok) return "check failed: " + name;
        if (!validate(w.trace)) return "trace: " + check_trace(w.trace.steps);
        if (w.algebra && !w.trace.empty() && !agrees(w.trace.steps.back().after, *w.algebra))
            return "trace does not end at the algebra";
        if (w.kind == WitnessKind::PurelyInseparable) {
            if (!w.b || !w.root_valuation) return "missing b";
            if (!coprime_to_p(*w.b)) return "p divides v(b)";
            const std::int64_t pm = ipow(w.p, w.m);
            if (!(*w.root_valuation == RationalValue(w.b->valuation(), pm))) return "root valuation differs";
            if (w.root_valuation->den() != pm) return "root valuation has the wrong denominator";
            return "";
        }
        if (!w.omega || !w.report) return "missing omega";
        if (w.algebra && !agrees(w.algebra->omega(), *w.omega)) return "omega differs from the algebra";
        const RamReport again = w.m <= 2 ? classify(*w.omega) : first_component_report(*w.omega);
        if (again.classification != w.report->classification) return "classification changed on recomputation";
        if (again.classification != Classification::TotallyRamified &&
            again.classification != Classification::PartialEvidence)
            return "not totally ramified";
        return "";
    } catch (const Error& e) {
        return std::string("revalidation raised ") + e.what();
    }
}

DivisionPair build_disjoint_division_pair(const LaurentElem& b, std::size_t m) {
    if (b.is_apparent_zero()) fail(ErrorCode::InvalidArgument, "b must be nonzero");
    if (m == 0 || m > 2) fail(ErrorCode::UnsupportedCase, "division pairs are built for m <= 2");
    const FieldSpec& spec = b.spec();
    const auto [a1, a2] = build_disjoint_classes(spec);
    auto lift = [&](const ResidueElem& a) {
        std::vector<LaurentElem> c(m, LaurentElem::zero(spec));
        c[0] = LaurentElem::constant(a);
        return KWitt(spec.p, std::move(c));
    };
    DivisionPair out{division_certificate(lift(a1), b), division_certificate(lift(a2), b), {}, false, {}};
    out.sweep = as_independence_sweep(a1, a2);
    out.residues_disjoint = true;
    for (const auto& e : out.sweep)
        if ((e.c1 || e.c2) && e.in_image) out.residues_disjoint = false;
    if (!out.residues_disjoint)
        fail(ErrorCode::RuleViolation, "residue classes are not independent modulo P(k)");
    out.external_step =
        "the two division algebras share a cyclic maximal subfield: external theorem, not computed";
    return out;
}

RoundtripReport conjecture_roundtrip(const KWitt& omega, const LaurentElem& b) {
    if (omega.length() > 2) fail(ErrorCode::UnsupportedCase, "roundtrip is implemented for m <= 2");
    RoundtripReport rep;
    rep.input = BrauerSymbol(omega, b);
    auto stage = [&](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            rep.stages.push_back({name, false, e.what()});
            throw Error(e.code(), "stage " + name + ": " + e.detail());
        }
    };
    auto check = [&](const std::string& name, const SubfieldWitness& w) {
        const std::string why = revalidate(w);
        rep.stages.push_back({name, why.empty(), why.empty() ? "evidence re-validates" : why});
        if (!why.empty()) fail(ErrorCode::RuleViolation, "stage " + name + ": " + why);
    };

    stage("insep_to_cyclic", [&] {
        rep.cyclic = omega.length() == 1 ? insep_to_cyclic_p(omega[0], b) : insep_to_cyclic_p2(omega, b);
        rep.stages.push_back({"insep_to_cyclic", true, to_string(rep.cyclic.report->classification)});
    });
    check("revalidate_cyclic", rep.cyclic);
    stage("cyclic_to_insep", [&] {
        rep.inseparable = cyclic_to_insep(*rep.cyclic.omega, rep.cyclic.algebra->b());
        rep.stages.push_back({"cyclic_to_insep", true, "v(y) = " + to_string(*rep.inseparable.root_valuation)});
    });
    check("revalidate_inseparable", rep.inseparable);
    rep.success = true;
    return rep;
}

}  // namespace asw
