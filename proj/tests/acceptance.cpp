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

// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// correctness condition and wall-clock budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "asw/brauer.hpp"
#include "asw/extension.hpp"
#include "asw/oracle/ghost.hpp"
#include "asw/oracle/newton.hpp"
#include "asw/parse.hpp"
#include "asw/ramification.hpp"
#include "asw/theorems.hpp"
#include "cli.hpp"
#include "support.hpp"

namespace asw {
namespace {

using testing::fp;
using testing::fpu;
using testing::Gen;

struct Outcome {
    bool ok = true;
    std::string summary;
    std::string failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            failure = what;
        }
    }
};

bool run_criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < budget_s;
    const bool pass = o.ok && in_time;
    std::printf("%s %2d  %s: %s [%.2f s, budget %.0f s]\n", pass ? "PASS" : "FAIL", id, title.c_str(),
                o.summary.c_str(), secs, budget_s);
    if (!o.ok) std::printf("         reason: %s\n", o.failure.c_str());
    if (!in_time) std::printf("         reason: over the time budget\n");
    std::fflush(stdout);
    return pass;
}

std::int64_t coprime_valuation(Gen& gen, std::uint32_t p, std::int64_t lo, std::int64_t hi) {
    std::int64_t v;
    do v = gen.range(lo, hi);
    while (v % static_cast<std::int64_t>(p) == 0);
    return v;
}

/* ---- 1 ---- */
Outcome ghost_identities() {
    Outcome o;
    int identities = 0;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto g = oracle::ghost_check(p, m);
            for (const auto& [name, ok] : g.results) {
                ++identities;
                o.require(ok, "p=" + std::to_string(p) + " m=" + std::to_string(m) + " " + name);
            }
        }
    o.summary = std::to_string(identities) + " integer-polynomial identities, exact";
    return o;
}

/* ---- 2 ---- */
Outcome closed_form() {
    Outcome o;
    int n = 0;
    for (std::uint32_t p : {2u, 3u}) {
        Gen gen(20 + p);
        for (int k = 0; k < 100; ++k, ++n) {
            const auto s = gen.coin() ? fp(p) : fpu(p);
            const LaurentElem c = gen.laurent(s, -4, 4, 3);
            const LaurentElem w2 = gen.laurent(s, -4, 4, 3);
            const LaurentElem b = gen.laurent(s, -4, 4, 3);
            const KWitt universal = witt_add(KWitt(p, {c.pth_power(), w2}), KWitt(p, {b, LaurentElem::zero(s)}));
            o.require(lemma54_closed_form(p, c, w2, b) == universal, "mismatch at p=" + std::to_string(p) +
                                                                          " c=" + to_string(c) + " b=" + to_string(b));
        }
    }
    o.summary = std::to_string(n) + " instances (100 per p in {2,3}), exact equality";
    return o;
}

/* ---- 3 ---- */
Outcome newton_agreement() {
    Outcome o;
    int n = 0, unclassified = 0;
    for (std::uint32_t p : {2u, 3u})
        for (bool rational : {false, true}) {
            Gen gen(300 + p + 10 * rational);
            const auto s = rational ? fpu(p) : fp(p);
            for (int k = 0; k < 100; ++k, ++n) {
                const LaurentElem w = gen.laurent_with_valuation(s, gen.range(-6, 6), 6, 3, kExact, 2);
                const RamReport mine = classify_deg_p(w);
                const auto theirs = oracle::newton_classify_as(w);
                const std::string ctx = to_string(w) + " over " + to_string(s);
                o.require(to_string(mine.classification) == oracle::to_string(theirs.verdict),
                          "analyzer " + to_string(mine.classification) + " vs Newton " +
                              oracle::to_string(theirs.verdict) + " for " + ctx);
                if (mine.classification == Classification::Unclassified) {
                    ++unclassified;
                    o.require(!s.perfect(), "Unclassified over a perfect residue field: " + ctx);
                    o.require(as_reduce(w).stop == AsReduction::Stop::Stalled,
                              "Unclassified outside the stalled reduction: " + ctx);
                }
                o.require(replay_ok(mine), "reduction trace does not replay: " + ctx);
            }
        }
    o.summary = std::to_string(n) + " elements (100 per p and residue field), " + std::to_string(unclassified) +
                " Unclassified (stalled, F_p(u) only), all others agree";
    return o;
}

/* ---- 4 ---- */
Outcome lemma52_evidence() {
    Outcome o;
    int n = 0, norm_checked = 0;
    Gen gen(4);
    for (; n < 50; ++n) {
        const std::uint32_t p = n % 2 ? 3 : 2;
        const auto s = gen.coin() ? fp(p) : fpu(p);
        const std::int64_t v1 = coprime_valuation(gen, p, -5, -1);
        const LaurentElem e1 = gen.laurent_with_valuation(s, v1, 3, 2);
        LaurentElem e2 = gen.laurent(s, v1 + 1, 4, 2);
        const KWitt eta(p, {e1, e2});
        o.require(lemma52_hypotheses(eta), "generator produced an input outside the hypotheses");
        const auto [x1, x2] = newton_valuations(eta);
        o.require(x2.den() == static_cast<std::int64_t>(p * p),
                  "v(x_2) = " + to_string(x2) + " not in (1/p^2)Z \\ (1/p)Z");
        o.require(classify_len2(eta).classification == Classification::TotallyRamified,
                  "classify_len2 is not TotallyRamified for " + to_string(eta));
        // Independent check of v(x_2) through the determinant norm, on the p = 2 half.
        if (p == 2) {
            const auto d = CyclicExtDesc::make(eta);
            o.require(ext_val(4, norm(ExtensionElem::x2(d))) == x2, "v(x_2) differs from v(N(x_2))/4");
            ++norm_checked;
        }
    }
    o.summary = std::to_string(n) + " inputs, v(x_2) has denominator p^2 and classify_len2 = TotallyRamified (" +
                std::to_string(norm_checked) + " cross-checked against v(N(x_2))/p^2)";
    return o;
}

/* ---- 5 ---- */
Outcome algebra_identity() {
    Outcome o;
    int n = 0;
    Gen gen(5);
    for (; n < 25; ++n) {
        const std::uint32_t p = n % 2 ? 3 : 2;
        const auto s = gen.coin() ? fp(p) : fpu(p);
        const LaurentElem w1 =
            gen.laurent_with_valuation(s, coprime_valuation(gen, p, -5, -1), 4, 2).with_precision(64);
        LaurentElem b;
        do b = gen.laurent(s, -4, 4, 2).with_precision(64);
        while (b.is_apparent_zero());
        const auto d = CyclicExtDesc::make(KWitt(p, {w1}));
        const auto z = CyclicAlgebraElem::x(d, b) + CyclicAlgebraElem::y(d, b);
        const Matrix mz = regular_representation(z);
        Matrix power = mz;
        for (std::uint32_t k = 1; k < p; ++k) power = matrix_mul(power, mz);
        const Matrix lhs = matrix_sub(power, mz);
        const Matrix rhs = scalar_matrix(p * p, w1 + b);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            for (std::size_t j = 0; j < lhs.size(); ++j) {
                o.require(agrees(lhs[i][j], rhs[i][j]), "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                            ") differs for omega_1 = " + to_string(w1) +
                                                            ", b = " + to_string(b));
                if (i == j)
                    o.require(!lhs[i][j].is_apparent_zero(), "diagonal entry lost all precision");
            }
    }
    o.summary = std::to_string(n) + " instances, p in {2,3}: matrix of z^p - z equals (omega_1 + b) I within precision";
    return o;
}

/* ---- 6 ---- */
ExtensionElem conjugate_product(const ExtensionElem& u, const ExtDescPtr& d) {
    // Conjugates of (x_1, x_2) are (x_1, x_2) + (k, 0) in W_m(K_omega).
    const std::uint32_t p = d->p();
    ExtensionElem prod = ExtensionElem::scalar(d, LaurentElem::one(d->spec()));
    if (d->m() == 1) {
        for (std::uint32_t k = 0; k < p; ++k)
            prod = prod * (u + ExtensionElem::scalar(d, LaurentElem::from_int(d->spec(), k)));
        return prod;
    }
    const WittVector<ExtensionElem> x(p, {ExtensionElem::x1(d), ExtensionElem::x2(d)});
    for (std::uint32_t k = 0; k < p * p; ++k) {
        const WittVector<ExtensionElem> shift(
            p, {ExtensionElem::scalar(d, LaurentElem::one(d->spec())), ExtensionElem::zero(d)});
        WittVector<ExtensionElem> conj = x;
        for (std::uint32_t j = 0; j < k; ++j) conj = witt_add(conj, shift);
        prod = prod * conj[1];
    }
    return prod;
}

Outcome construction_check() {
    Outcome o;
    int n = 0, m1 = 0;
    Gen gen(6);
    for (; n < 25; ++n) {
        const std::uint32_t p = gen.coin() ? 2 : 3;
        const std::size_t m = n % 2 ? 2 : 1;
        const auto s = gen.coin() ? fp(p) : fpu(p);
        const std::int64_t v1 = coprime_valuation(gen, p, -4, -1);
        std::vector<LaurentElem> c{gen.laurent_with_valuation(s, v1, 2, 1)};
        if (m == 2) c.push_back(gen.laurent(s, v1 + 1, 3, 2));
        const KWitt omega(p, c);
        // p | v(b), so the norm branch runs; u lives over the reduced representative.
        const LaurentElem b = gen.laurent_with_valuation(s, p * gen.range(-2, 2), 4, 1);
        const SubfieldWitness w = cyclic_to_insep(omega, b);
        const KWitt eta = classify(omega).reduced;
        const auto d = CyclicExtDesc::make(eta);
        const ExtensionElem u = m == 1 ? ExtensionElem::x1(d) : ExtensionElem::x2(d);
        const LaurentElem nu = norm(u);
        o.require(agrees(*w.b, nu * b), "c differs from N(u) b");
        o.require(w.b->valuation() % static_cast<std::int64_t>(p) != 0, "p divides v(c)");
        o.require(revalidate(w).empty(), "witness does not re-validate");
        const ExtensionElem conj = conjugate_product(u, d);
        o.require(agrees(conj, ExtensionElem::scalar(d, nu)), "determinant norm differs from the conjugate product");
        if (m == 1) {
            ++m1;
            // (-1)^{p+1} = 1 in characteristic 2 and for odd p.
            o.require(agrees(nu, eta[0]), "N(x_1) differs from (-1)^{p+1} omega_1");
        }
    }
    o.summary = std::to_string(n) + " totally ramified inputs with p | v(b): gcd(v(N(u) b), p) = 1; norms match the "
                "conjugate product (" + std::to_string(m1) + " with N(x_1) = (-1)^{p+1} omega_1)";
    return o;
}

/* ---- 7 ---- */
Outcome roundtrip() {
    Outcome o;
    int n = 0;
    Gen gen(7);
    for (; n < 50; ++n) {
        const std::uint32_t p = gen.coin() ? 2 : 3;
        const auto s = gen.coin() ? fp(p) : fpu(p);
        const std::size_t m = gen.range(1, 2);
        const KWitt omega = gen.witt(s, m, -5, 5, 2);
        const std::int64_t vb = coprime_valuation(gen, p, -5, 5);
        const LaurentElem b = gen.laurent_with_valuation(s, vb, vb + 4, 2);
        const RoundtripReport r = conjecture_roundtrip(omega, b);
        o.require(r.success, "roundtrip failed");
        o.require(revalidate(r.cyclic).empty() && revalidate(r.inseparable).empty(), "evidence does not re-validate");
        o.require(r.cyclic.report->classification == Classification::TotallyRamified, "cyclic witness not TR");
    }
    o.summary = std::to_string(n) + " symbols, p in {2,3}, m in {1,2}: both directions succeed, evidence re-validates";
    return o;
}

/* ---- 8 ---- */
std::vector<ResidueElem> polys_up_to(const FieldSpec& s, int d) {
    std::vector<ResidueElem> out;
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
    while (true) {
        out.push_back(ResidueElem::from_poly(s, FpPoly(s.p, c)));
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == s.p) c[i++] = 0;
        if (i == c.size()) break;
    }
    return out;
}

bool brute_in_image(const ResidueElem& a) {
    const int n = std::max(0, a.numerator().degree());
    for (const auto& g : polys_up_to(a.spec(), n / static_cast<int>(a.spec().p)))
        if (g.frobenius() - g == a) return true;
    return false;
}

Outcome division_pair() {
    Outcome o;
    int pairs = 0, combos = 0;
    for (std::uint32_t p : {2u, 3u})
        for (std::size_t m : {1u, 2u}) {
            const auto s = fpu(p);
            const DivisionPair d = build_disjoint_division_pair(LaurentElem::t_power(s, 1), m);
            ++pairs;
            o.require(d.residues_disjoint, "residue classes not independent");
            for (const auto* c : {&d.first, &d.second})
                for (const auto& [name, ok] : c->hypotheses) o.require(ok, "hypothesis " + name + " unverified");
            const ResidueElem a1 = d.first.residue[0], a2 = d.second.residue[0];
            for (std::uint32_t c1 = 0; c1 < p; ++c1)
                for (std::uint32_t c2 = 0; c2 < p; ++c2) {
                    if (!c1 && !c2) continue;
                    ++combos;
                    const ResidueElem comb =
                        ResidueElem::from_int(s, c1) * a1 + ResidueElem::from_int(s, c2) * a2;
                    o.require(!brute_in_image(comb), "combination " + to_string(comb) + " lies in P(k)");
                }
            o.require(d.sweep.size() == static_cast<std::size_t>(p * p - 1), "sweep is not exhaustive");
        }
    o.summary = std::to_string(pairs) + " pairs over F_2(u), F_3(u), m in {1,2}: certificates issued, " +
                std::to_string(combos) + " nontrivial combinations outside P(k) (exhaustive brute force)";
    return o;
}

/* ---- 9 ---- */
Outcome lemma53_traces() {
    Outcome o;
    int n = 0;
    for (std::uint32_t p : {2u, 3u}) {
        Gen gen(90 + p);
        for (int k = 0; k < 25; ++k, ++n) {
            const auto s = gen.coin() ? fp(p) : fpu(p);
            std::int64_t i;
            do i = gen.range(-5, 8);
            while (i % static_cast<std::int64_t>(p) == 0);
            const std::int64_t r = gen.range(-6, 6);
            const LaurentElem c = gen.laurent(s, -3, 3, 2);
            const LaurentElem b = gen.laurent_with_valuation(s, gen.range(-3, 3), 4, 1);
            const RewriteTrace t = lemma53_split(r, i, c, b, p);
            o.require(t.split(), "trace does not end split");
            const std::string why = check_trace(t.steps);
            o.require(why.empty(), "r=" + std::to_string(r) + " i=" + std::to_string(i) + ": " + why);
        }
    }
    o.summary = std::to_string(n) + " (r, i, c, b), 25 per p in {2,3}: every step re-checks, every trace ends split";
    return o;
}

/* ---- 10 ---- */
LaurentElem random_value(Gen& gen, const FieldSpec& s) {
    const std::int64_t prec = gen.coin() ? kDefaultPrecision : gen.range(-3, 80);
    LaurentElem x = LaurentElem::zero(s, prec);
    const int terms = static_cast<int>(gen.range(0, 5));
    for (int k = 0; k < terms; ++k) x += LaurentElem::monomial(gen.residue(s, true, 3), gen.range(-8, 12), prec);
    return x;
}

Outcome cli_conformance() {
    Outcome o;
    Gen gen(10);
    int values = 0;
    for (int k = 0; k < 500; ++k) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[k % 3];
        const auto s = k % 2 ? fpu(p) : fp(p);
        const LaurentElem x = random_value(gen, s);
        o.require(parse_laurent(to_string(x), s) == x, "element round trip: " + to_string(x));
        std::vector<LaurentElem> c(gen.range(1, 4));
        for (auto& y : c) y = random_value(gen, s);
        const KWitt w(p, c);
        o.require(parse_witt(to_string(w), s) == w, "Witt round trip: " + to_string(w));
        LaurentElem b;
        do b = random_value(gen, s);
        while (b.is_apparent_zero());
        const BrauerSymbol sym(KWitt(p, std::vector<LaurentElem>(c.begin(), c.begin() + std::min<std::size_t>(2, c.size()))), b);
        o.require(parse_symbol(to_string(sym), s) == sym, "symbol round trip: " + to_string(sym));
        values += 3;
    }
    namespace fs = std::filesystem;
    int transcripts = 0;
    for (const auto& entry : fs::directory_iterator(ASW_GOLDEN_DIR)) {
        if (entry.path().extension() != ".args") continue;
        std::ifstream in(entry.path());
        std::vector<std::string> args;
        for (std::string line; std::getline(in, line);) args.push_back(line);
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        const std::string got = out.str() + "--- stderr\n" + err.str() + "--- exit " + std::to_string(code) + "\n";
        fs::path expected = entry.path();
        expected.replace_extension(".out");
        std::ifstream ex(expected);
        std::stringstream want;
        want << ex.rdbuf();
        o.require(got == want.str(), "transcript differs: " + entry.path().filename().string());
        ++transcripts;
    }
    o.require(transcripts >= 20, "too few golden transcripts");
    o.summary = std::to_string(values) + " values round-trip (500 per grammar category), " +
                std::to_string(transcripts) + " golden transcripts incl. exit codes 0/1/2/3/4 reproduced";
    return o;
}

}  // namespace
}  // namespace asw

int main() {
    using namespace asw;
    int failed = 0;
    failed += !run_criterion(1, "Ghost-identity suite", 2, ghost_identities);
    failed += !run_criterion(2, "Closed form vs universal Witt addition", 2, closed_form);
    failed += !run_criterion(3, "Ramification vs Newton-polygon oracle", 5, newton_agreement);
    failed += !run_criterion(4, "Length-2 total ramification evidence", 2, lemma52_evidence);
    failed += !run_criterion(5, "Degree-p algebra identity z^p - z = omega_1 + b", 10, algebra_identity);
    failed += !run_criterion(6, "Cyclic to purely inseparable construction", 10, construction_check);
    failed += !run_criterion(7, "Conjecture roundtrip", 15, roundtrip);
    failed += !run_criterion(8, "Division-pair construction", 2, division_pair);
    failed += !run_criterion(9, "Split-trace replay", 2, lemma53_traces);
    failed += !run_criterion(10, "CLI conformance", 5, cli_conformance);
    std::printf("%s: %d of 10 criteria passed\n", failed ? "FAIL" : "PASS", 10 - failed);
    return failed ? 1 : 0;
}
