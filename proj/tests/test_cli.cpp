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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "asw/parse.hpp"
#include "cli.hpp"
#include "support.hpp"

namespace asw {
namespace {

using testing::fp;
using testing::fpu;
using testing::Gen;

TEST(Parse, Examples) {
    const auto s = fpu(2);
    const LaurentElem a = parse_laurent("t^-1 + u + O(t^64)", s);
    EXPECT_EQ(a.valuation(), -1);
    EXPECT_EQ(a.precision(), 64);
    EXPECT_EQ(a.coefficient(0), ResidueElem::generator(s));

    const BrauerSymbol sym = parse_symbol("[[t^-1; 0]; t^2)", fp(2));
    EXPECT_EQ(sym.m(), 2u);
    EXPECT_EQ(sym.b().valuation(), 2);

    try {
        parse_laurent("t^", fp(2));
        ADD_FAILURE();
    } catch (const ParseFailure& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_EQ(e.offset(), 2u);
        EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "integer"), e.expected().end());
    }
}

TEST(Parse, Arithmetic) {
    const auto s = fpu(3);
    EXPECT_EQ(parse_laurent("(u+1)/(u^2)*t^3", s, 10),
              LaurentElem::monomial(ResidueElem::fraction(s, FpPoly(3, {1, 1}), FpPoly(3, {0, 0, 1})), 3, 10));
    EXPECT_EQ(parse_laurent("-t", s, 10), parse_laurent("2*t", s, 10));
    EXPECT_EQ(parse_laurent("4*t - t", s, 10), LaurentElem::zero(s, 10));
    EXPECT_EQ(parse_laurent("(t + 1)^3", s), parse_laurent("t^3 + 1", s));
    EXPECT_EQ(parse_laurent("0 + O(t^5)", s).precision(), 5);
    EXPECT_EQ(parse_laurent("t^7 + O(t^5)", s), LaurentElem::zero(s, 5));
    // Division by a non-monomial keeps 64 terms past the valuation.
    EXPECT_EQ(parse_laurent("1/(1 - t)", s, kExact).precision(), 64);
    EXPECT_EQ(to_string(parse_witt(" [ t ; 0 ] ", s)), "[t; 0]");
}

TEST(Parse, Errors) {
    const auto s = fp(2);
    auto offset = [&](const std::string& src) -> std::size_t {
        try {
            parse_symbol(src, s);
        } catch (const ParseFailure& e) {
            return e.offset();
        }
        return std::string::npos;
    };
    EXPECT_EQ(offset("[[t]; 0)"), 7u);       // zero b
    EXPECT_EQ(offset("[[t]; t]"), 7u);       // wrong closer
    EXPECT_EQ(offset("[t; t)"), 1u);         // missing Witt vector
    EXPECT_EQ(offset("[[t; (t]; t)"), 7u);   // unbalanced parenthesis
    EXPECT_EQ(offset("[[t]; t) x"), 9u);     // trailing input
    EXPECT_EQ(offset("[[O(t^3)]; (1 + O(t^2)))"), 16u);  // O-term inside parentheses
    EXPECT_THROW(parse_laurent("u", s), ParseFailure);
    EXPECT_THROW(parse_laurent("O(t^3) + O(t^4)", s), ParseFailure);
    EXPECT_THROW(parse_laurent("1/0", s), ParseFailure);
    EXPECT_THROW(parse_laurent("0^-1", s), ParseFailure);
    EXPECT_THROW(parse_laurent("99999999999999999999", s), ParseFailure);
    EXPECT_THROW(parse_witt("[1; 2; 3; 4; 5]", s), ParseFailure);
    EXPECT_THROW(parse_laurent("", s), ParseFailure);
}

/* ---- round trip -------------------------------------------------------------- */

LaurentElem random_value(Gen& gen, const FieldSpec& s, std::int64_t implicit) {
    const std::int64_t prec = gen.coin() ? implicit : gen.range(-3, 80);
    LaurentElem x = LaurentElem::zero(s, prec);
    const int terms = static_cast<int>(gen.range(0, 5));
    for (int k = 0; k < terms; ++k)
        x += LaurentElem::monomial(gen.residue(s, true, 3), gen.range(-8, 12), prec);
    return x;
}

class RoundTrip : public ::testing::TestWithParam<std::pair<std::uint32_t, bool>> {
   protected:
    FieldSpec spec() const { return GetParam().second ? fpu(GetParam().first) : fp(GetParam().first); }
};

TEST_P(RoundTrip, Laurent) {
    const auto s = spec();
    Gen gen(500 + s.p);
    for (int k = 0; k < 500; ++k) {
        const LaurentElem x = random_value(gen, s, 64);
        const std::string text = to_string(x, 64);
        const LaurentElem y = parse_laurent(text, s, 64);
        ASSERT_EQ(y, x) << text;
        EXPECT_EQ(to_string(y, 64), text);
    }
}

TEST_P(RoundTrip, Witt) {
    const auto s = spec();
    Gen gen(600 + s.p);
    for (int k = 0; k < 500; ++k) {
        std::vector<LaurentElem> c(gen.range(1, 4));
        for (auto& x : c) x = random_value(gen, s, 40);
        const KWitt w(s.p, c);
        const std::string text = to_string(w, 40);
        ASSERT_EQ(parse_witt(text, s, 40), w) << text;
    }
}

TEST_P(RoundTrip, Symbol) {
    const auto s = spec();
    Gen gen(700 + s.p);
    for (int k = 0; k < 500; ++k) {
        std::vector<LaurentElem> c(gen.range(1, 2));
        for (auto& x : c) x = random_value(gen, s, 64);
        LaurentElem b;
        do b = random_value(gen, s, 64);
        while (b.is_apparent_zero());
        const BrauerSymbol sym(KWitt(s.p, c), b);
        const std::string text = to_string(sym, 64);
        ASSERT_EQ(parse_symbol(text, s, 64), sym) << text;
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, RoundTrip,
                         ::testing::Values(std::pair{2u, false}, std::pair{2u, true}, std::pair{3u, true},
                                           std::pair{5u, true}),
                         [](const auto& info) {
                             return "p" + std::to_string(info.param.first) + (info.param.second ? "_fpu" : "_fp");
                         });

/* ---- command layer ------------------------------------------------------------- */

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, SpecExamples) {
    const CliRun a = run({"ram", "analyze", "--p", "2", "--m", "1", "t^-1"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "TotallyRamified");

    const CliRun b = run({"thm", "roundtrip", "--p", "2", "--m", "2", "--omega", "[[0;0]]", "--b", "t"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out.substr(0, b.out.find('\n')), "roundtrip: success");

    const CliRun c = run({"witt", "add", "--p", "2", "--m", "2", "[t; 0]", "[t; 0]"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "[0; t^2]\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"witt", "neg", "t^"}).code, cli::kParse);
    EXPECT_EQ(run({"thm", "insep-to-cyclic", "--omega", "0", "--b", "t^2"}).code, cli::kHypothesis);
    EXPECT_EQ(run({"thm", "disjoint-pair", "--residue", "fp-u", "--b", "t^2"}).code, cli::kHypothesis);
    EXPECT_EQ(run({"ram", "analyze", "O(t^-1)"}).code, cli::kPrecision);
    EXPECT_EQ(run({"ram", "analyze", "--p", "7", "t"}).code, cli::kOther);
    EXPECT_EQ(run({"witt", "frobnicate"}).code, cli::kOther);
}

TEST(Cli, StructuredReportsAreSchemaStable) {
    const std::vector<std::vector<std::string>> cases{
        {"witt", "add", "--m", "2", "[t; 0]", "[t; 1]"},
        {"witt", "neg", "--p", "3", "t"},
        {"ram", "analyze", "--p", "3", "t^-2"},
        {"symbol", "normalize", "--m", "2", "[[t^-1; 1]; t)"},
        {"symbol", "rewrite", "--m", "2", "--omega", "[t^2; 1]", "--b", "t^-1"},
        {"thm", "cyclic-to-insep", "--omega", "t^-1", "--b", "t^2"},
        {"thm", "insep-to-cyclic", "--omega", "t", "--b", "t^-1"},
        {"thm", "perfect", "--m", "2", "--omega", "[t^2; t^3]", "--b", "t^-1"},
        {"thm", "disjoint-pair", "--residue", "fp-u", "--b", "t"},
        {"thm", "roundtrip", "--omega", "0", "--b", "t^-1"},
        {"oracle", "ghost-check", "--m", "2"},
        {"oracle", "newton-check", "--count", "10"},
        {"witt", "neg", "t^"},
    };
    for (auto args : cases) {
        args.insert(args.begin(), {"--format", "structured"});
        const CliRun r = run(args);
        const auto j = nlohmann::json::parse(r.out);
        for (const char* key : {"config", "inputs", "trace", "verdict", "evidence"})
            EXPECT_TRUE(j.contains(key)) << key << " missing for " << args[2] << " " << args[3];
        EXPECT_EQ(j["config"]["format"], "structured");
        EXPECT_EQ(j["exit_code"], r.code);
        EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
    }
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"oracle", "newton-check", "--p", "3", "--residue", "fp-u", "--seed", "11"};
    EXPECT_EQ(run(args).out, run(args).out);
    auto other = args;
    other.back() = "12";
    EXPECT_NE(run(args).out, run(other).out);
}

/* ---- golden transcripts ------------------------------------------------------------ */

std::string transcript(const CliRun& r) {
    return r.out + "--- stderr\n" + r.err + "--- exit " + std::to_string(r.code) + "\n";
}

TEST(Cli, GoldenTranscripts) {
    namespace fs = std::filesystem;
    const fs::path dir = ASW_GOLDEN_DIR;
    const bool update = std::getenv("ASW_UPDATE_GOLDEN") != nullptr;
    int cases = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".args") continue;
        ++cases;
        std::ifstream in(entry.path());
        std::vector<std::string> args;
        for (std::string line; std::getline(in, line);) args.push_back(line);
        const std::string got = transcript(run(args));
        fs::path expected_path = entry.path();
        expected_path.replace_extension(".out");
        if (update) {
            std::ofstream(expected_path) << got;
            continue;
        }
        std::ifstream ex(expected_path);
        ASSERT_TRUE(ex.good()) << "missing " << expected_path;
        std::stringstream want;
        want << ex.rdbuf();
        EXPECT_EQ(got, want.str()) << entry.path().filename();
    }
    EXPECT_GE(cases, 20);
}

}  // namespace
}  // namespace asw
