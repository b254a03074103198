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

#include "asw/parse.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace asw {

namespace {

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

class Parser {
   public:
    Parser(std::string_view src, const FieldSpec& spec, std::int64_t implicit)
        : src_(src), spec_(spec), implicit_(implicit) {}

    LaurentElem laurent_to_end() {
        LaurentElem x = laurent();
        expect_end();
        return x;
    }

    KWitt witt_to_end() {
        KWitt w = witt();
        expect_end();
        return w;
    }

    BrauerSymbol symbol_to_end() {
        expect('[');
        KWitt w = witt();
        expect(';');
        LaurentElem b = laurent();
        const std::size_t at = pos_;
        expect(')');
        expect_end();
        if (b.is_apparent_zero()) throw ParseFailure(at, {"nonzero b"}, "b must be nonzero");
        return BrauerSymbol(std::move(w), std::move(b));
    }

   private:
    [[noreturn]] void error(std::vector<std::string> expected) {
        const std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
        throw ParseFailure(pos_, expected, "at offset " + std::to_string(pos_) + ": expected " + join(expected) +
                                               ", found " + found);
    }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) error({"'" + std::string(1, c) + "'"});
    }
    void expect_end() {
        skip();
        if (pos_ != src_.size()) error({"end of input"});
    }

    std::int64_t integer() {
        skip();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) error({"integer"});
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            const int d = src_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10)
                throw ParseFailure(start, {"integer fitting 64 bits"}, "integer literal too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    std::int64_t signed_integer() {
        skip();
        if (pos_ >= src_.size() || (src_[pos_] != '-' && !std::isdigit(static_cast<unsigned char>(src_[pos_]))))
            error({"'-'", "integer"});
        const bool neg = accept('-');
        const std::int64_t v = integer();
        return neg ? -v : v;
    }

    LaurentElem laurent() {
        std::optional<std::int64_t> big_o;
        LaurentElem x = sum(&big_o);
        // Parsed values carry the session precision unless an O-term says otherwise.
        return x.with_precision(big_o ? *big_o : implicit_);
    }

    // Parses O(t^N) if present at the cursor.
    bool big_o_term(std::optional<std::int64_t>* big_o) {
        skip();
        if (pos_ >= src_.size() || src_[pos_] != 'O') return false;
        const std::size_t at = pos_;
        ++pos_;
        if (!big_o) throw ParseFailure(at, {"term"}, "O-term only allowed at the top level");
        if (*big_o) throw ParseFailure(at, {"term"}, "more than one O-term");
        expect('(');
        expect('t');
        expect('^');
        *big_o = signed_integer();
        expect(')');
        return true;
    }

    LaurentElem sum(std::optional<std::int64_t>* big_o) {
        LaurentElem acc = LaurentElem::zero(spec_);
        bool negate = accept('-');
        while (true) {
            if (!big_o_term(big_o)) {
                const LaurentElem term = product();
                acc = negate ? acc - term : acc + term;
            } else if (negate) {
                error({"term"});
            }
            if (accept('+')) negate = false;
            else if (accept('-')) negate = true;
            else return acc;
        }
    }

    LaurentElem product() {
        LaurentElem acc = power();
        while (true) {
            if (accept('*')) {
                acc = acc * power();
            } else if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                const LaurentElem d = power();
                if (d.is_apparent_zero()) throw ParseFailure(at, {"nonzero divisor"}, "division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    LaurentElem power() {
        LaurentElem base = atom();
        if (!accept('^')) return base;
        const std::size_t at = pos_;
        const std::int64_t e = signed_integer();
        if (e < 0 && base.is_apparent_zero()) throw ParseFailure(at, {"nonnegative exponent"}, "zero to a negative power");
        return base.pow(e);
    }

    LaurentElem atom() {
        skip();
        if (pos_ >= src_.size()) error({"integer", "'u'", "'t'", "'('"});
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::int64_t v = integer();
            return LaurentElem::from_int(spec_, static_cast<std::int64_t>(v % spec_.p));
        }
        if (c == 't') {
            ++pos_;
            return LaurentElem::t_power(spec_, 1);
        }
        if (c == 'u') {
            if (spec_.kind != ResidueKind::RationalFunctionField)
                throw ParseFailure(pos_, {"integer", "'t'", "'('"}, "u is not an element of " + to_string(spec_));
            ++pos_;
            return LaurentElem::constant(ResidueElem::generator(spec_));
        }
        if (c == '(') {
            ++pos_;
            LaurentElem x = sum(nullptr);
            expect(')');
            return x;
        }
        error({"integer", "'u'", "'t'", "'('"});
    }

    KWitt witt() {
        expect('[');
        std::vector<LaurentElem> c{laurent()};
        while (accept(';')) c.push_back(laurent());
        const std::size_t at = pos_;
        expect(']');
        if (c.size() > kMaxWittLength) throw ParseFailure(at, {"at most 4 components"}, "Witt vector too long");
        return KWitt(spec_.p, std::move(c));
    }

    std::string_view src_;
    FieldSpec spec_;
    std::int64_t implicit_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseFailure::ParseFailure(std::size_t offset, std::vector<std::string> expected, const std::string& what)
    : Error(ErrorCode::ParseError, what), offset_(offset), expected_(std::move(expected)) {}

LaurentElem parse_laurent(std::string_view src, const FieldSpec& spec, std::int64_t implicit_precision) {
    return Parser(src, spec, implicit_precision).laurent_to_end();
}

KWitt parse_witt(std::string_view src, const FieldSpec& spec, std::int64_t implicit_precision) {
    return Parser(src, spec, implicit_precision).witt_to_end();
}

BrauerSymbol parse_symbol(std::string_view src, const FieldSpec& spec, std::int64_t implicit_precision) {
    return Parser(src, spec, implicit_precision).symbol_to_end();
}

}  // namespace asw
