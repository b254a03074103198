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

#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "asw/brauer.hpp"
#include "asw/oracle/ghost.hpp"
#include "asw/oracle/newton.hpp"
#include "asw/parse.hpp"
#include "asw/ramification.hpp"
#include "asw/theorems.hpp"

namespace asw::cli {

using json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::HypothesisViolation:
        case ErrorCode::HypothesisNotVerified: return kHypothesis;
        case ErrorCode::ParseError: return kParse;
        case ErrorCode::PrecisionExhausted: return kPrecision;
        default: return kOther;
    }
}

void SessionConfig::validate() const {
    if (p != 2 && p != 3 && p != 5) fail(ErrorCode::InvalidArgument, "--p must be 2, 3 or 5");
    if (m < 1 || m > kMaxWittLength) fail(ErrorCode::InvalidArgument, "--m must be in [1, 4]");
    if (precision < 1 || precision > 4096) fail(ErrorCode::InvalidArgument, "--precision must be in [1, 4096]");
}

json SessionConfig::to_json() const {
    return json{{"p", p},
                {"m", m},
                {"residue", residue == ResidueKind::PrimeField ? "fp" : "fp-u"},
                {"precision", precision},
                {"format", structured ? "structured" : "text"},
                {"seed", seed}};
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> all{
        "witt add",         "witt neg",           "ram analyze",        "symbol normalize", "symbol rewrite",
        "thm cyclic-to-insep", "thm insep-to-cyclic", "thm perfect",     "thm disjoint-pair", "thm roundtrip",
        "oracle ghost-check",  "oracle newton-check"};
    return all;
}

namespace {

/* ---- rendering ------------------------------------------------------------ */

class Session {
   public:
    explicit Session(const SessionConfig& cfg) : cfg_(cfg), spec_(cfg.spec()) {}

    const SessionConfig& cfg() const { return cfg_; }
    const FieldSpec& spec() const { return spec_; }

    std::string str(const LaurentElem& x) const { return to_string(x, cfg_.precision); }
    std::string str(const KWitt& w) const { return to_string(w, cfg_.precision); }
    std::string str(const BrauerSymbol& s) const { return to_string(s, cfg_.precision); }

    LaurentElem laurent(const std::string& src) const { return parse_laurent(src, spec_, cfg_.precision); }

    /// A Witt vector of the session length; a bare element is accepted for m = 1,
    /// and one redundant pair of outer brackets is tolerated.
    KWitt witt(const std::string& src) const {
        KWitt w = parse_witt_lenient(src);
        if (w.length() != cfg_.m)
            fail(ErrorCode::ShapeMismatch, "expected a Witt vector of length " + std::to_string(cfg_.m) +
                                               " (--m), got " + std::to_string(w.length()));
        return w;
    }

    BrauerSymbol symbol(const std::string& src) const {
        BrauerSymbol s = parse_symbol(src, spec_, cfg_.precision);
        if (s.m() != cfg_.m)
            fail(ErrorCode::ShapeMismatch, "expected a symbol of length " + std::to_string(cfg_.m) + " (--m)");
        return s;
    }

    json step(const RewriteStep& st) const {
        json j{{"rule", to_string(st.rule)}, {"before", str(st.before)}, {"after", str(st.after)}};
        if (st.before_mult != 1 || st.after_mult != 1) {
            j["before_mult"] = st.before_mult;
            j["after_mult"] = st.after_mult;
        }
        if (st.rule == Rule::FrobTwist) j["twist"] = st.twist;
        if (st.gamma) j["gamma"] = str(*st.gamma);
        if (st.operand) {
            j["operand"] = str(*st.operand);
            j["operand_proof"] = steps(st.operand_proof);
        }
        if (!st.substeps.empty()) j["substeps"] = steps(st.substeps);
        if (st.split) j["split"] = true;
        return j;
    }

    json steps(const std::vector<RewriteStep>& xs) const {
        json a = json::array();
        for (const auto& st : xs) a.push_back(step(st));
        return a;
    }

    json ram(const RamReport& r) const {
        json ev = json::object();
        for (const auto& [k, v] : r.evidence) ev[k] = to_string(v);
        json tr = json::array();
        for (const auto& c : r.trace) tr.push_back(str(c));
        return json{{"classification", to_string(r.classification)},
                    {"criterion", r.criterion},
                    {"reduced", str(r.reduced)},
                    {"reduction", tr},
                    {"valuations", ev}};
    }

    json witness(const SubfieldWitness& w) const {
        json j{{"kind", to_string(w.kind)}, {"m", w.m}};
        if (w.b) j["b"] = str(*w.b);
        if (w.root_valuation) j["root_valuation"] = to_string(*w.root_valuation);
        if (w.omega) j["omega"] = str(*w.omega);
        if (w.algebra) j["algebra"] = str(*w.algebra);
        if (w.report) j["ramification"] = ram(*w.report);
        json checks = json::object();
        for (const auto& [k, ok] : w.checks) checks[k] = ok;
        j["checks"] = checks;
        json ev = json::object();
        for (const auto& [k, v] : w.evidence) ev[k] = to_string(v);
        j["valuations"] = ev;
        const std::string why = revalidate(w);
        j["revalidated"] = why.empty();
        return j;
    }

    json certificate(const DivisionCertificate& c) const {
        json res = json::array();
        for (const auto& r : c.residue) res.push_back(to_string(r));
        json hyp = json::object();
        for (const auto& [k, ok] : c.hypotheses) hyp[k] = ok;
        return json{{"omega", str(c.omega)},     {"b", str(c.b)},
                    {"v_b", c.v_b},              {"residue", res},
                    {"hypotheses", hyp},         {"ramification", ram(c.ramification)},
                    {"valuation_argument", c.valuation_argument}, {"residue_note", c.residue_note}};
    }

   private:
    KWitt parse_witt_lenient(const std::string& src) const {
        const auto first = src.find_first_not_of(" \t");
        if (first == std::string::npos || src[first] != '[') return KWitt(spec_.p, {laurent(src)});
        try {
            return parse_witt(src, spec_, cfg_.precision);
        } catch (const ParseFailure&) {
            const auto last = src.find_last_not_of(" \t");
            if (src.compare(first, 2, "[[") == 0 && last != std::string::npos && last > first + 1 && src[last] == ']') {
                try {
                    return parse_witt(src.substr(first + 1, last - first - 1), spec_, cfg_.precision);
                } catch (const ParseFailure&) {
                }
            }
            throw;
        }
    }

    SessionConfig cfg_;
    FieldSpec spec_;
};

void add_trace_text(std::vector<std::string>& text, const json& trace, const std::string& indent = "  ") {
    for (const auto& st : trace) {
        std::string line = indent + st["rule"].get<std::string>() + ": " + st["before"].get<std::string>() + " -> " +
                           st["after"].get<std::string>();
        if (st.contains("after_mult"))
            line += "  (" + std::to_string(st["before_mult"].get<std::int64_t>()) + "x -> " +
                    std::to_string(st["after_mult"].get<std::int64_t>()) + "x)";
        if (st.contains("split")) line += "  [split]";
        text.push_back(line);
    }
}

void add_valuations_text(std::vector<std::string>& text, const json& vals, const std::string& indent = "") {
    for (const auto& [k, v] : vals.items()) text.push_back(indent + k + " = " + v.get<std::string>());
}

void add_witness_text(std::vector<std::string>& text, const json& w) {
    text.push_back("witness: " + w["kind"].get<std::string>());
    if (w.contains("b")) text.push_back("  b = " + w["b"].get<std::string>());
    if (w.contains("omega")) text.push_back("  omega' = " + w["omega"].get<std::string>());
    if (w.contains("algebra")) text.push_back("  algebra = " + w["algebra"].get<std::string>());
    if (w.contains("ramification"))
        text.push_back("  ramification: " + w["ramification"]["classification"].get<std::string>() + " (" +
                       w["ramification"]["criterion"].get<std::string>() + ")");
    add_valuations_text(text, w["valuations"], "  ");
    for (const auto& [k, ok] : w["checks"].items())
        text.push_back(std::string("  [") + (ok.get<bool>() ? "ok" : "FAILED") + "] " + k);
    text.push_back(std::string("  re-validated: ") + (w["revalidated"].get<bool>() ? "yes" : "no"));
}

const std::string& require(const std::optional<std::string>& v, const char* flag) {
    if (!v) fail(ErrorCode::InvalidArgument, std::string("missing ") + flag);
    return *v;
}

const std::string& positional(const CommandArgs& a, std::size_t i, const char* what) {
    if (a.positional.size() <= i) fail(ErrorCode::InvalidArgument, std::string("missing argument: ") + what);
    return a.positional[i];
}

/* ---- commands --------------------------------------------------------------- */

struct Out {
    json inputs = json::object();
    json trace = json::array();
    std::string verdict;
    json evidence = json::object();
    std::vector<std::string> text;
    int exit_code = kOk;
};

void witt_add_cmd(const Session& s, const CommandArgs& a, Out& o) {
    const KWitt x = s.witt(positional(a, 0, "first Witt vector"));
    const KWitt y = s.witt(positional(a, 1, "second Witt vector"));
    o.inputs = json{{"a", s.str(x)}, {"b", s.str(y)}};
    const KWitt r = witt_add(x, y);
    o.verdict = "ok";
    o.evidence["result"] = s.str(r);
    o.text.push_back(s.str(r));
}

void witt_neg_cmd(const Session& s, const CommandArgs& a, Out& o) {
    const KWitt x = s.witt(positional(a, 0, "Witt vector"));
    o.inputs = json{{"a", s.str(x)}};
    const KWitt r = witt_neg(x);
    o.verdict = "ok";
    o.evidence["result"] = s.str(r);
    o.text.push_back(s.str(r));
}

void ram_analyze_cmd(const Session& s, const CommandArgs& a, Out& o) {
    const KWitt w = s.witt(positional(a, 0, "omega"));
    o.inputs = json{{"omega", s.str(w)}};
    const RamReport r = classify(w);
    const json j = s.ram(r);
    o.verdict = j["classification"];
    o.evidence = j;
    for (const auto& c : j["reduction"]) o.trace.push_back(json{{"rule", "ArtinSchreier"}, {"c", c}});
    o.text.push_back(o.verdict);
    o.text.push_back("criterion: " + r.criterion);
    o.text.push_back("reduced: " + j["reduced"].get<std::string>());
    add_valuations_text(o.text, j["valuations"]);
}

BrauerSymbol symbol_input(const Session& s, const CommandArgs& a) {
    if (!a.positional.empty()) return s.symbol(a.positional[0]);
    return BrauerSymbol(s.witt(require(a.omega, "--omega")), s.laurent(require(a.b, "--b")));
}

void symbol_cmd(const Session& s, const CommandArgs& a, Out& o, bool rewrite) {
    const BrauerSymbol in = symbol_input(s, a);
    o.inputs = json{{"symbol", s.str(in)}};
    const SymbolRewrite r = rewrite ? lemma54_rewrite(in) : normalize_symbol(in);
    o.trace = s.steps(r.trace.steps);
    o.verdict = rewrite ? "rewritten" : "normalized";
    o.evidence["symbol"] = s.str(r.symbol);
    o.evidence["trace_valid"] = validate(r.trace);
    o.text.push_back(s.str(r.symbol));
    add_trace_text(o.text, o.trace);
    o.text.push_back(std::string("trace valid: ") + (validate(r.trace) ? "yes" : "no"));
}

void witness_out(const Session& s, const SubfieldWitness& w, Out& o) {
    o.trace = s.steps(w.trace.steps);
    o.verdict = to_string(w.kind);
    o.evidence = s.witness(w);
    o.text.push_back(o.verdict);
    add_witness_text(o.text, o.evidence);
    if (!o.trace.empty()) {
        o.text.push_back("trace:");
        add_trace_text(o.text, o.trace);
    }
}

void thm_cmd(const Session& s, const std::string& which, const CommandArgs& a, Out& o) {
    if (which == "disjoint-pair") {
        const LaurentElem b = s.laurent(require(a.b, "--b"));
        o.inputs = json{{"b", s.str(b)}, {"m", s.cfg().m}};
        const DivisionPair pair = build_disjoint_division_pair(b, s.cfg().m);
        json sweep = json::array();
        for (const auto& e : pair.sweep)
            sweep.push_back(json{{"c1", e.c1}, {"c2", e.c2}, {"combination", to_string(e.combination)},
                                 {"in_image", e.in_image}});
        o.verdict = "division pair";
        o.evidence = json{{"first", s.certificate(pair.first)},
                          {"second", s.certificate(pair.second)},
                          {"residue_sweep", sweep},
                          {"residues_disjoint", pair.residues_disjoint},
                          {"external_step", pair.external_step}};
        o.text.push_back(o.verdict);
        for (const auto* c : {&pair.first, &pair.second}) {
            o.text.push_back("division: " + s.str(BrauerSymbol(c->omega, c->b)));
            for (const auto& [k, ok] : c->hypotheses) o.text.push_back(std::string("  [") + (ok ? "ok" : "FAILED") + "] " + k);
            o.text.push_back("  " + c->valuation_argument);
        }
        o.text.push_back(std::string("residue classes independent mod P(k): ") + (pair.residues_disjoint ? "yes" : "no") +
                         " (" + std::to_string(pair.sweep.size()) + " combinations)");
        o.text.push_back("not computed: " + pair.external_step);
        return;
    }
    const KWitt w = s.witt(require(a.omega, "--omega"));
    const LaurentElem b = s.laurent(require(a.b, "--b"));
    o.inputs = json{{"omega", s.str(w)}, {"b", s.str(b)}};
    if (which == "cyclic-to-insep") return witness_out(s, cyclic_to_insep(w, b), o);
    if (which == "perfect") return witness_out(s, insep_to_cyclic_perfect(w, b), o);
    if (which == "insep-to-cyclic") {
        if (w.length() > 2) fail(ErrorCode::UnsupportedCase, "insep-to-cyclic handles m <= 2; see `thm perfect`");
        return witness_out(s, w.length() == 1 ? insep_to_cyclic_p(w[0], b) : insep_to_cyclic_p2(w, b), o);
    }
    // roundtrip
    const RoundtripReport r = conjecture_roundtrip(w, b);
    json stages = json::array();
    for (const auto& st : r.stages) stages.push_back(json{{"stage", st.name}, {"ok", st.ok}, {"detail", st.detail}});
    o.trace = s.steps(r.cyclic.trace.steps);
    o.verdict = r.success ? "success" : "failure";
    o.evidence = json{{"stages", stages}, {"cyclic", s.witness(r.cyclic)}, {"inseparable", s.witness(r.inseparable)}};
    o.text.push_back("roundtrip: " + o.verdict);
    for (const auto& st : r.stages) o.text.push_back("  " + st.name + ": " + (st.ok ? "ok" : "FAILED") + " - " + st.detail);
    add_witness_text(o.text, o.evidence["cyclic"]);
    add_witness_text(o.text, o.evidence["inseparable"]);
}

void ghost_check_cmd(const Session& s, Out& o) {
    const auto g = oracle::ghost_check(s.cfg().p, s.cfg().m);
    o.inputs = json::object();
    for (const auto& [k, ok] : g.results) o.evidence[k] = ok;
    o.verdict = g.all_ok() ? "pass" : "fail";
    o.exit_code = g.all_ok() ? kOk : kOther;
    o.text.push_back("ghost identities p=" + std::to_string(g.p) + " m=" + std::to_string(g.m) + ": " + o.verdict);
    for (const auto& [k, ok] : g.results) o.text.push_back(std::string("  [") + (ok ? "ok" : "FAILED") + "] " + k);
}

void newton_check_cmd(const Session& s, const CommandArgs& a, Out& o) {
    std::vector<LaurentElem> inputs;
    if (!a.positional.empty()) {
        inputs.push_back(s.laurent(a.positional[0]));
    } else {
        // Random omega_1 with valuation in [-6, 6] and up to four terms.
        std::mt19937_64 rng(s.cfg().seed);
        auto range = [&](std::int64_t lo, std::int64_t hi) {
            return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
        };
        const FieldSpec& spec = s.spec();
        for (std::size_t k = 0; k < a.count; ++k) {
            LaurentElem x = LaurentElem::zero(spec);
            const int terms = static_cast<int>(range(1, 4));
            for (int i = 0; i < terms; ++i) {
                ResidueElem c = ResidueElem::from_int(spec, range(1, spec.p - 1));
                if (!spec.perfect() && range(0, 1)) {
                    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(range(1, 3)) + 1);
                    for (auto& v : coeffs) v = static_cast<std::uint32_t>(range(0, spec.p - 1));
                    if (std::any_of(coeffs.begin(), coeffs.end(), [](auto v) { return v != 0; }))
                        c = ResidueElem::from_poly(spec, FpPoly(spec.p, coeffs));
                }
                x += LaurentElem::monomial(c, range(-6, 6));
            }
            inputs.push_back(x.with_precision(s.cfg().precision));
        }
    }
    o.inputs = json{{"count", inputs.size()}};
    if (!a.positional.empty()) o.inputs["omega_1"] = s.str(inputs[0]);
    std::size_t agree = 0, unclassified = 0;
    json mismatches = json::array();
    for (const auto& w : inputs) {
        const RamReport r = classify_deg_p(w);
        const auto n = oracle::newton_classify_as(w);
        const std::string ours = to_string(r.classification), theirs = oracle::to_string(n.verdict);
        if (r.classification == Classification::Unclassified || n.verdict == oracle::Verdict::Unclassified) {
            ++unclassified;
            if (ours != theirs) mismatches.push_back(json{{"omega_1", s.str(w)}, {"analyzer", ours}, {"newton", theirs}});
        } else if (ours == theirs) {
            ++agree;
        } else {
            mismatches.push_back(json{{"omega_1", s.str(w)}, {"analyzer", ours}, {"newton", theirs}});
        }
        if (inputs.size() == 1) {
            o.evidence["analyzer"] = ours;
            o.evidence["newton"] = theirs;
            json st = json::array();
            for (const auto& line : n.steps) st.push_back(line);
            o.evidence["newton_steps"] = st;
        }
    }
    o.evidence["agree"] = agree;
    o.evidence["unclassified"] = unclassified;
    o.evidence["mismatches"] = mismatches;
    o.verdict = mismatches.empty() ? "agree" : "disagree";
    o.exit_code = mismatches.empty() ? kOk : kOther;
    o.text.push_back("newton check: " + o.verdict + " (" + std::to_string(agree) + " agree, " +
                     std::to_string(unclassified) + " unclassified, " + std::to_string(mismatches.size()) +
                     " mismatches)");
    if (inputs.size() == 1)
        o.text.push_back("  analyzer " + o.evidence["analyzer"].get<std::string>() + ", newton " +
                         o.evidence["newton"].get<std::string>());
    for (const auto& mm : mismatches)
        o.text.push_back("  " + mm["omega_1"].get<std::string>() + ": analyzer " + mm["analyzer"].get<std::string>() +
                         ", newton " + mm["newton"].get<std::string>());
}

}  // namespace

CommandResult run_command(const SessionConfig& cfg, const std::string& command, const CommandArgs& args) {
    CommandResult res;
    json config;
    Out o;
    try {
        config = cfg.to_json();
        cfg.validate();
        const Session s(cfg);
        const auto space = command.find(' ');
        const std::string group = command.substr(0, space);
        const std::string which = space == std::string::npos ? "" : command.substr(space + 1);
        if (command == "witt add") witt_add_cmd(s, args, o);
        else if (command == "witt neg") witt_neg_cmd(s, args, o);
        else if (command == "ram analyze") ram_analyze_cmd(s, args, o);
        else if (command == "symbol normalize") symbol_cmd(s, args, o, false);
        else if (command == "symbol rewrite") symbol_cmd(s, args, o, true);
        else if (group == "thm" && std::find(commands().begin(), commands().end(), command) != commands().end())
            thm_cmd(s, which, args, o);
        else if (command == "oracle ghost-check") ghost_check_cmd(s, o);
        else if (command == "oracle newton-check") newton_check_cmd(s, args, o);
        else fail(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
        res.exit_code = o.exit_code;
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e.code());
        o.verdict = "error";
        o.trace = json::array();
        o.evidence = json{{"code", std::string(to_string(e.code()))}, {"message", e.detail()}};
        if (const auto* pf = dynamic_cast<const ParseFailure*>(&e)) {
            o.evidence["offset"] = pf->offset();
            o.evidence["expected"] = pf->expected();
        }
        o.text.clear();
        res.errors.push_back(std::string("error: ") + e.what());
    }
    res.report = json{{"config", config},     {"command", command},      {"inputs", o.inputs},
                      {"trace", o.trace},     {"verdict", o.verdict},    {"evidence", o.evidence},
                      {"exit_code", res.exit_code}};
    res.text = std::move(o.text);
    return res;
}

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for Artin-Schreier-Witt extensions and cyclic p-algebras", "aswkit"};
    app.fallthrough();
    app.require_subcommand(1);

    SessionConfig cfg;
    std::string residue = "fp", format = "text";
    app.add_option("--p", cfg.p, "characteristic (2, 3 or 5)")->capture_default_str();
    app.add_option("--m", cfg.m, "Witt vector length")->capture_default_str();
    app.add_option("--residue", residue, "residue field: fp or fp-u")
        ->check(CLI::IsMember({"fp", "fp-u"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision, "absolute precision N (elements known mod t^N)")
        ->capture_default_str();
    app.add_option("--format", format, "text or structured (JSON lines)")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized commands")->capture_default_str();

    CommandArgs args;
    std::string chosen;
    auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
        CLI::App* sub = group->add_subcommand(name, help);
        sub->callback([&chosen, group, name] { chosen = group->get_name() + " " + name; });
        return sub;
    };
    // Plain strings, not a vector option: CLI11 would read "[a; b]" as a container literal.
    std::vector<std::string> slots(2);
    auto with_positional = [&](CLI::App* sub, const std::string& name, const std::string& help, std::size_t n = 1) {
        for (std::size_t i = 0; i < n; ++i) sub->add_option(n == 1 ? name : name + std::to_string(i + 1), slots[i], help);
        return sub;
    };
    auto with_symbol_flags = [&](CLI::App* sub) {
        sub->add_option("--omega", args.omega, "Witt vector, e.g. \"[t^-1; 0]\"");
        sub->add_option("--b", args.b, "nonzero Laurent element");
        return sub;
    };

    CLI::App* witt = app.add_subcommand("witt", "Witt vector arithmetic")->require_subcommand(1);
    with_positional(leaf(witt, "add", "sum of two Witt vectors"), "vector", "Witt vector", 2);
    with_positional(leaf(witt, "neg", "negative of a Witt vector"), "vector", "Witt vector");
    CLI::App* ram = app.add_subcommand("ram", "ramification analysis")->require_subcommand(1);
    with_positional(leaf(ram, "analyze", "classify K_omega/K"), "omega", "Witt vector or element (m = 1)");
    CLI::App* symbol = app.add_subcommand("symbol", "cyclic algebra symbols")->require_subcommand(1);
    with_symbol_flags(with_positional(leaf(symbol, "normalize", "normal form used by the conversion theorems"),
                                      "symbol", "symbol \"[[w1; w2]; b)\""));
    with_symbol_flags(with_positional(leaf(symbol, "rewrite", "[(c^p, w2), b) -> [(c^p + b, w2), b)"), "symbol",
                                      "symbol \"[[w1; w2]; b)\""));
    CLI::App* thm = app.add_subcommand("thm", "subfield conversion pipelines")->require_subcommand(1);
    with_symbol_flags(leaf(thm, "cyclic-to-insep", "totally ramified cyclic -> purely inseparable subfield"));
    with_symbol_flags(leaf(thm, "insep-to-cyclic", "purely inseparable -> totally ramified cyclic subfield"));
    with_symbol_flags(leaf(thm, "perfect", "perfect residue field pipeline, m <= 4"));
    with_symbol_flags(leaf(thm, "disjoint-pair", "two division algebras with disjoint residue classes"));
    with_symbol_flags(leaf(thm, "roundtrip", "both directions on one symbol"));
    CLI::App* oracle = app.add_subcommand("oracle", "independent reference checks")->require_subcommand(1);
    leaf(oracle, "ghost-check", "ghost identities for the Witt polynomials");
    with_positional(leaf(oracle, "newton-check", "analyzer vs Newton polygon; random inputs without omega_1"),
                    "omega_1", "element")
        ->add_option("--count", args.count, "random instances")
        ->capture_default_str();

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kOther;
    }
    for (const auto& x : slots)
        if (!x.empty()) args.positional.push_back(x);
    cfg.residue = residue == "fp" ? ResidueKind::PrimeField : ResidueKind::RationalFunctionField;
    cfg.structured = format == "structured";

    const CommandResult r = run_command(cfg, chosen, args);
    if (cfg.structured) {
        out << r.report.dump() << '\n';
    } else {
        for (const auto& line : r.text) out << line << '\n';
        for (const auto& line : r.errors) err << line << '\n';
    }
    return r.exit_code;
}

}  // namespace asw::cli
