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

#include <gtest/gtest.h>

#include "asw/error.hpp"
#include "asw/extension.hpp"
#include "asw/oracle/newton.hpp"
#include "asw/ramification.hpp"
#include "support.hpp"

namespace asw {
namespace {

using testing::fp;
using testing::fpu;
using testing::Gen;

LaurentElem T(const FieldSpec& s, std::int64_t e) { return LaurentElem::t_power(s, e); }
LaurentElem U(const FieldSpec& s) { return LaurentElem::constant(ResidueElem::generator(s)); }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

// Random omega with a ramified first component, so K_omega is a field.
KWitt random_omega(Gen& gen, const FieldSpec& s, std::size_t m) {
    const std::uint32_t p = s.p;
    std::int64_t v;
    do v = gen.range(-5, -1);
    while (v % p == 0);
    std::vector<LaurentElem> c{gen.laurent_with_valuation(s, v, 3, 2)};
    for (std::size_t i = 1; i < m; ++i) c.push_back(gen.laurent(s, -4, 3, 2));
    return KWitt(p, c);
}

ExtensionElem random_elem(Gen& gen, const ExtDescPtr& d) {
    std::vector<LaurentElem> c;
    for (std::size_t k = 0; k < d->degree(); ++k) c.push_back(gen.laurent(d->spec(), -2, 2, 2, 40));
    // keep it away from zero
    c[0] += LaurentElem::monomial(gen.nonzero_residue(d->spec(), false, 2), gen.range(-2, 2), 40);
    if (c[0].is_apparent_zero()) c[0] = LaurentElem::one(d->spec()).with_precision(40);
    return ExtensionElem::from_coefficients(d, c);
}

TEST(Extension, DegreePRelation) {
    const auto s = fp(2);
    const KWitt w(2, {T(s, -1)});
    auto d = CyclicExtDesc::make(w);
    const auto x = ExtensionElem::x1(d);
    EXPECT_EQ(x * x, x + ExtensionElem::scalar(d, w[0]));
    const auto one = ExtensionElem::scalar(d, LaurentElem::one(s));
    EXPECT_EQ(x * one, x);
    for (std::uint32_t p : {3u, 5u}) {
        const auto sp = fp(p);
        auto dp = CyclicExtDesc::make(KWitt(p, {T(sp, -1) + T(sp, 2)}));
        const auto xp = ExtensionElem::x1(dp);
        EXPECT_EQ(xp.pow(p) - xp, ExtensionElem::scalar(dp, dp->omega()[0]));
    }
}

TEST(Extension, LengthTwoRelationP2) {
    const auto s = fpu(2);
    const KWitt w(2, {T(s, -1), U(s) * T(s, -3)});
    auto d = CyclicExtDesc::make(w);
    const auto x1 = ExtensionElem::x1(d), x2 = ExtensionElem::x2(d);
    EXPECT_EQ(x2 * x2, x2 + ExtensionElem::scalar(d, w[1]) + x1 * w[0]);
}

// (x_1^p, x_2^p) = (x_1, x_2) + omega, with the Witt sum evaluated over K_omega itself.
TEST(Extension, RelationsReproduceWittSum) {
    for (std::uint32_t p : {2u, 3u}) {
        Gen gen(40 + p);
        for (int k = 0; k < 5; ++k) {
            const auto s = gen.coin() ? fp(p) : fpu(p);
            auto d = CyclicExtDesc::make(random_omega(gen, s, 2));
            using EW = WittVector<ExtensionElem>;
            const EW x(p, {ExtensionElem::x1(d), ExtensionElem::x2(d)});
            const EW w(p, {ExtensionElem::scalar(d, d->omega()[0]), ExtensionElem::scalar(d, d->omega()[1])});
            const EW lhs = frobenius_twist(x, 1);
            const EW rhs = witt_add(x, w);
            EXPECT_EQ(lhs[0], rhs[0]);
            EXPECT_EQ(lhs[1], rhs[1]);
        }
    }
}

TEST(Extension, RefusesSplitOmega) {
    const auto s = fp(2);
    EXPECT_EQ(code_of([&] { (void)CyclicExtDesc::make(KWitt(2, {T(s, -2) + T(s, -1)})); }),
              ErrorCode::HypothesisViolation);
    EXPECT_EQ(code_of([&] { (void)CyclicExtDesc::make(KWitt(2, {T(s, 3), T(s, -1)})); }),
              ErrorCode::HypothesisViolation);
}

TEST(Extension, NormExamples) {
    for (std::uint32_t p : {2u, 3u}) {
        Gen gen(50 + p);
        for (std::size_t m = 1; m <= 2; ++m) {
            const auto s = fpu(p);
            auto d = CyclicExtDesc::make(random_omega(gen, s, m));
            EXPECT_EQ(norm(ExtensionElem::scalar(d, LaurentElem::one(s))), LaurentElem::one(s));
            const auto c = gen.laurent_with_valuation(s, -2, 2, 2);
            EXPECT_EQ(norm(ExtensionElem::scalar(d, c)), c.pow(static_cast<std::int64_t>(d->degree())));
            if (m == 1) {
                // (-1)^{p+1} omega_1; the sign is +1 for p = 2 (characteristic 2) and p = 3
                EXPECT_EQ(norm(ExtensionElem::x1(d)), d->omega()[0]);
            }
        }
    }
}

// Conjugates of x_1 are x_1 + j, j in F_p; their product is the norm.
TEST(Extension, NormMatchesConjugateProduct) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Gen gen(60 + p);
        for (int k = 0; k < 5; ++k) {
            const auto s = fp(p);
            auto d = CyclicExtDesc::make(random_omega(gen, s, 1));
            const auto a = random_elem(gen, d);
            // sigma(x_1) = x_1 + 1 acts on a = sum a_i x_1^i
            auto sigma = [&](const ExtensionElem& e, std::uint32_t j) {
                ExtensionElem out = ExtensionElem::zero(d);
                const auto shifted = ExtensionElem::x1(d) + ExtensionElem::scalar(d, LaurentElem::from_int(s, j));
                for (std::size_t i = 0; i < p; ++i) out = out + shifted.pow(i) * e.coefficient(i);
                return out;
            };
            ExtensionElem prod = ExtensionElem::scalar(d, LaurentElem::one(s));
            for (std::uint32_t j = 0; j < p; ++j) prod = prod * sigma(a, j);
            for (std::size_t i = 1; i < p; ++i) EXPECT_TRUE(prod.coefficient(i).is_apparent_zero());
            EXPECT_TRUE(agrees(prod.coefficient(0), norm(a)));
        }
    }
}

TEST(Extension, MultiplicationLawsAndNormMultiplicative) {
    for (std::uint32_t p : {2u, 3u})
        for (std::size_t m = 1; m <= 2; ++m) {
            Gen gen(70 + p + 10 * m);
            const int rounds = (p == 3 && m == 2) ? 4 : 10;
            for (int k = 0; k < rounds; ++k) {
                const auto s = gen.coin() ? fp(p) : fpu(p);
                auto d = CyclicExtDesc::make(random_omega(gen, s, m));
                const auto a = random_elem(gen, d), b = random_elem(gen, d), c = random_elem(gen, d);
                EXPECT_TRUE(agrees(a * b, b * a));
                EXPECT_TRUE(agrees((a * b) * c, a * (b * c)));
                EXPECT_TRUE(agrees(a * (b + c), a * b + a * c));
                const auto nab = norm(a * b);
                EXPECT_TRUE(agrees(nab, norm(a) * norm(b)));
                EXPECT_GT(nab.precision(), nab.valuation());
            }
        }
}

TEST(Extension, MinimalRelationVanishes) {
    const auto s = fp(3);
    auto d = CyclicExtDesc::make(KWitt(3, {T(s, -2) + LaurentElem::one(s)}));
    const auto x = ExtensionElem::x1(d);
    const auto r = x.pow(3) - x - ExtensionElem::scalar(d, d->omega()[0]);
    for (const auto& c : r.coefficients()) EXPECT_TRUE(c.is_apparent_zero());
}

TEST(Extension, ExtValOfX1) {
    for (std::uint32_t p : {2u, 3u}) {
        Gen gen(80 + p);
        for (int k = 0; k < 20; ++k) {
            const auto s = fpu(p);
            const auto w = random_omega(gen, s, 1);
            auto d = CyclicExtDesc::make(w);
            EXPECT_EQ(ext_val(p, norm(ExtensionElem::x1(d))), RationalValue(w[0].valuation(), p));
        }
    }
}

TEST(Ramification, AsReduceExamples) {
    {
        const auto s = fp(2);
        auto r = as_reduce(T(s, -2));
        EXPECT_EQ(r.reduced, T(s, -1));
        ASSERT_EQ(r.trace.size(), 1u);
        EXPECT_EQ(r.trace[0], T(s, -1));
        EXPECT_TRUE(replay_ok(r));
    }
    {
        Gen gen(90);
        for (std::uint32_t p : {2u, 3u}) {
            const auto s = fpu(p);
            for (int k = 0; k < 20; ++k) {
                const auto g = gen.laurent(s, -5, 5);
                auto r = as_reduce(g.pth_power() - g);
                EXPECT_TRUE(r.reduced.is_apparent_zero()) << to_string(g);
                EXPECT_TRUE(replay_ok(r));
            }
        }
    }
    {
        const auto s = fpu(2);
        const auto w = U(s) * T(s, -2);
        auto r = as_reduce(w);
        EXPECT_EQ(r.reduced, w);
        EXPECT_EQ(r.stop, AsReduction::Stop::Stalled);
    }
    EXPECT_EQ(code_of([] { (void)as_reduce(LaurentElem::zero(fp(2), -3)); }), ErrorCode::PrecisionExhausted);
}

TEST(Ramification, DegreePExamples) {
    const auto s = fp(2);
    EXPECT_EQ(classify_deg_p(T(s, -1)).classification, Classification::TotallyRamified);
    EXPECT_EQ(classify_deg_p(U(fpu(2))).classification, Classification::Unramified);
    EXPECT_EQ(classify_deg_p(T(s, 2) + T(s, 5)).classification, Classification::Split);
    EXPECT_EQ(classify_deg_p(U(fpu(2)) * T(fpu(2), -2)).classification, Classification::Unclassified);
    const auto rep = classify_deg_p(T(fp(3), -4));
    ASSERT_TRUE(rep.find_evidence("v(x_1)"));
    EXPECT_EQ(*rep.find_evidence("v(x_1)"), RationalValue(-4, 3));
}

TEST(Ramification, DegreePAgreesWithNewtonOracle) {
    for (std::uint32_t p : {2u, 3u})
        for (bool rational : {false, true}) {
            Gen gen(100 + p + 7 * rational);
            const auto s = rational ? fpu(p) : fp(p);
            for (int k = 0; k < 100; ++k) {
                const auto w = gen.laurent_with_valuation(s, gen.range(-6, 6), 6, 3, kExact, 2);
                const auto mine = classify_deg_p(w);
                const auto theirs = oracle::newton_classify_as(w);
                EXPECT_EQ(to_string(mine.classification), oracle::to_string(theirs.verdict)) << to_string(w);
                EXPECT_TRUE(replay_ok(mine));
                if (!rational) { EXPECT_NE(mine.classification, Classification::Unclassified); }
            }
        }
}

TEST(Ramification, Length2Examples) {
    const auto s = fp(2);
    const auto rep = classify_len2(KWitt(2, {T(s, -1), LaurentElem::zero(s)}));
    EXPECT_EQ(rep.classification, Classification::TotallyRamified);
    EXPECT_EQ(*rep.find_evidence("v(x_1)"), RationalValue(-1, 2));
    EXPECT_EQ(*rep.find_evidence("v(x_2)"), RationalValue(-3, 4));

    const auto su = fpu(2);
    EXPECT_EQ(classify_len2(KWitt(2, {U(su), U(su).pow(3)})).classification, Classification::Unramified);
    EXPECT_EQ(classify_len2(KWitt(2, {U(su) * T(su, -2), T(su, 1)})).classification, Classification::Unclassified);
}

TEST(Ramification, NewtonValuations) {
    const auto s2 = fp(2), s3 = fp(3);
    auto z2 = LaurentElem::zero(s2), z3 = LaurentElem::zero(s3);
    EXPECT_EQ(newton_valuations(KWitt(2, {T(s2, -1), z2})), std::pair(RationalValue(-1, 2), RationalValue(-3, 4)));
    EXPECT_EQ(newton_valuations(KWitt(3, {T(s3, -1), z3})), std::pair(RationalValue(-1, 3), RationalValue(-7, 9)));
    EXPECT_EQ(newton_valuations(KWitt(2, {T(s2, -3), z2})), std::pair(RationalValue(-3, 2), RationalValue(-9, 4)));
    EXPECT_EQ(code_of([&] { (void)newton_valuations(KWitt(2, {T(s2, -2), z2})); }), ErrorCode::HypothesisViolation);
    EXPECT_EQ(code_of([&] { (void)newton_valuations(KWitt(2, {T(s2, -1), T(s2, -1)})); }),
              ErrorCode::HypothesisViolation);
}

// The second root valuation must equal v(norm(x_2)) / p^2 computed in K_eta.
TEST(Ramification, NewtonValuationsMatchNorms) {
    for (std::uint32_t p : {2u, 3u}) {
        Gen gen(120 + p);
        for (int k = 0; k < 6; ++k) {
            const auto s = fp(p);
            std::int64_t v;
            do v = gen.range(-4, -1);
            while (v % p == 0);
            const KWitt eta(p, {gen.laurent_with_valuation(s, v, 2, 2), gen.laurent(s, v + 1, 3, 2)});
            auto [x1, x2] = newton_valuations(eta);
            auto d = CyclicExtDesc::make(eta);
            EXPECT_EQ(ext_val(p * p, norm(ExtensionElem::x1(d))), x1);
            EXPECT_EQ(ext_val(p * p, norm(ExtensionElem::x2(d))), x2);
        }
    }
}

TEST(Ramification, ReplayLength2) {
    const auto s = fp(3);
    const KWitt eta(3, {T(s, -6) + T(s, -1), T(s, -2)});
    const auto rep = classify_len2(eta);
    EXPECT_TRUE(replay_ok(rep));
}

TEST(Oracle, NewtonPolygonShape) {
    const auto s = fp(3);
    oracle::KPoly f{T(s, 2), LaurentElem::from_int(s, -1), LaurentElem::zero(s), LaurentElem::one(s)};
    const auto segs = oracle::newton_polygon(f);
    ASSERT_EQ(segs.size(), 2u);
    EXPECT_EQ(segs[0].root_valuation, RationalValue(2, 1));
    EXPECT_EQ(segs[1].root_valuation, RationalValue(0, 1));
}

}  // namespace
}  // namespace asw
