/*
   Copyright 2026 The ffdigits Authors

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

#include "ffdigits/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ffdigits/charfun.hpp"
#include "ffdigits/digits.hpp"
#include "ffdigits/verify.hpp"

namespace ffdigits {

namespace {

const std::vector<std::string> kVerifyKinds{"thm-q2", "hansen-mullen", "thm-qgt2", "support-period"};
const std::vector<std::string> kPeriodFns{"delta", "gamma", "Delta"};

unsigned to_unsigned(const std::string& s) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string quote(const std::string& s) {
    if (!s.empty() && s.find_first_of(" \t\"") == std::string::npos) return s;
    return '"' + s + '"';
}

struct Parser {
    CLI::App app{"Prescribed digit sums of irreducible polynomials over finite fields", "ffdigits"};
    std::string n_text, workers_text;

    explicit Parser(CliConfig& cfg) {
        app.require_subcommand(1);
        auto common = [&](CLI::App* sub) {
            sub->add_option("--out", cfg.out, "Write the report to a file");
            sub->add_option("--format", cfg.format, "json, csv or text")
                ->check(CLI::IsMember({"json", "csv", "text"}));
            sub->add_option("--cap-bits", cfg.cap_bits, "Field cardinality cap (log2)");
        };

        auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
        verify->add_option("kind", cfg.target, "thm-q2, hansen-mullen, thm-qgt2 or support-period")
            ->required()
            ->check(CLI::IsMember(kVerifyKinds));
        verify->add_option("--q", cfg.q, "Field size");
        verify->add_option("--n", n_text, "Degree or range a..b")->required();
        verify->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
        verify->add_option("--seed", cfg.seed, "RNG seed for support-period");
        verify->add_option("--trials", cfg.trials, "Trials for support-period");
        common(verify);

        auto* search = app.add_subcommand("search", "First irreducible with a prescribed digit sum");
        search->add_option("--q", cfg.q, "Field size");
        search->add_option("--n", n_text, "Degree")->required();
        search->add_option("--W", cfg.weights, "Weight set")->required();
        search->add_option("--c", cfg.c, "Target value (packed element of F_q)");
        search->add_option("--relation", cfg.relation, "eq or ne")->check(CLI::IsMember({"eq", "ne"}));
        common(search);

        auto* period = app.add_subcommand("period", "Least period of delta_W, gamma_{W,c} or Delta_{W,c}");
        period->add_option("function", cfg.target, "delta, gamma or Delta")
            ->required()
            ->check(CLI::IsMember(kPeriodFns));
        period->add_option("--q", cfg.q, "Field size");
        period->add_option("--n", n_text, "Degree")->required();
        period->add_option("--W", cfg.weights, "Weight set")->required();
        period->add_option("--c", cfg.c, "Value for gamma and Delta");
        common(period);

        auto* certify = app.add_subcommand("certify", "Period certificate for a degree-n irreducible factor");
        certify->add_option("--q", cfg.q, "Field size");
        certify->add_option("--n", n_text, "Factor degree")->required();
        certify->add_option("--poly", cfg.poly, "Polynomial, \"x^3+x+1\" or \"1,1,0,1\"")->required();
        certify->add_flag("--cross-check", cfg.cross_check, "Confirm by exhaustive trial division");
        common(certify);

        auto* field = app.add_subcommand("field", "Describe the tower F_p < F_q < F_{q^n}");
        field->add_option("--p", cfg.p, "Characteristic");
        field->add_option("--s", cfg.s, "q = p^s");
        field->add_option("--q", cfg.q, "Field size (instead of --p/--s)");
        field->add_option("--n", n_text, "Extension degree");
        common(field);
    }
};

void validate(CliConfig& cfg) {
    if (cfg.command == "verify") {
        if (cfg.target == "thm-q2" || cfg.target == "hansen-mullen") {
            if (cfg.q != 0 && cfg.q != 2) throw UsageError(cfg.target + " is defined for q = 2 only");
        }
        if (cfg.target == "thm-qgt2" && cfg.q != 0 && cfg.q <= 2) throw UsageError("thm-qgt2 needs q > 2");
        if (cfg.n_lo < 2) throw UsageError("n must be at least 2");
    } else if (cfg.command == "field") {
        if (cfg.n_lo == 0) cfg.n_lo = cfg.n_hi = 1;
        if (cfg.p != 0 && cfg.q != 0) throw UsageError("give either --p/--s or --q");
    } else {
        if (cfg.n_lo == 0) throw UsageError("n must be positive");
        if (cfg.n_lo != cfg.n_hi) throw UsageError(cfg.command + " takes a single n");
    }
}

}  // namespace

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const std::string t = trim(text);
    const auto dots = t.find("..");
    if (dots == std::string::npos) {
        const unsigned v = to_unsigned(t);
        return {v, v};
    }
    const unsigned lo = to_unsigned(t.substr(0, dots)), hi = to_unsigned(t.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
}

WeightSet parse_weights(const std::string& text, unsigned n) {
    WeightSet w(n, 0);
    std::stringstream ss(text);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw UsageError("empty item in W '" + text + "'");
        any = true;
        std::pair<unsigned, unsigned> r;
        if (item == "all") {
            r = {0, n};
        } else if (item == "interior") {
            if (n < 2) throw UsageError("interior needs n >= 2");
            r = {1, n - 1};
        } else {
            r = parse_range(item);
        }
        if (r.second > n) throw UsageError("W element above n in '" + text + "'");
        for (unsigned i = r.first; i <= r.second; ++i) w = w.with(i);
    }
    if (!any) throw UsageError("W is empty");
    return w;
}

std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false, have = false;
    for (char ch : line) {
        if (ch == '"') {
            in_quotes = !in_quotes;
            have = true;
        } else if ((ch == ' ' || ch == '\t') && !in_quotes) {
            if (have) out.push_back(cur);
            cur.clear();
            have = false;
        } else {
            cur += ch;
            have = true;
        }
    }
    if (in_quotes) throw UsageError("unbalanced quote");
    if (have) out.push_back(cur);
    return out;
}

std::string CliConfig::canonical() const {
    std::ostringstream os;
    os << command;
    if (!target.empty()) os << ' ' << target;
    if (q) os << " --q " << q;
    if (p) os << " --p " << p;
    if (command == "field" && s != 1) os << " --s " << s;
    if (n_lo) {
        os << " --n " << n_lo;
        if (n_hi != n_lo) os << ".." << n_hi;
    }
    if (!weights.empty()) os << " --W " << quote(weights);
    if (command == "search" || command == "period") os << " --c " << c;
    if (command == "search") os << " --relation " << relation;
    if (!poly.empty()) os << " --poly " << quote(poly);
    if (cross_check) os << " --cross-check";
    if (command == "verify") {
        os << " --workers " << workers;
        if (target == "support-period") os << " --seed " << seed << " --trials " << trials;
    }
    os << " --format " << format;
    if (!out.empty()) os << " --out " << quote(out);
    if (cap_bits) os << " --cap-bits " << *cap_bits;
    return os.str();
}

CliConfig parse_cli(const std::vector<std::string>& args) {
    CliConfig cfg;
    Parser parser(cfg);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        parser.app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (const auto* sub : parser.app.get_subcommands()) cfg.command = sub->get_name();
    if (!parser.n_text.empty()) std::tie(cfg.n_lo, cfg.n_hi) = parse_range(parser.n_text);
    validate(cfg);
    return cfg;
}

namespace {

Caps caps_for(const CliConfig& cfg) {
    Caps caps = Caps::from_env();
    if (cfg.cap_bits) caps.field_bits = *cfg.cap_bits;
    return caps;
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
    f << text;
}

std::string support_csv(const std::vector<ConnectionLemmaReport>& reports) {
    std::ostringstream os;
    os << "q,n,trials,seed,fired_i,violations_i,fired_ii,violations_ii,fired_iii,violations_iii,period_mismatches\n";
    for (const auto& r : reports) {
        os << r.q << ',' << r.n << ',' << r.trials << ',' << r.seed << ',' << r.fired_i << ',' << r.violations_i << ','
           << r.fired_ii << ',' << r.violations_ii << ',' << r.fired_iii << ',' << r.violations_iii << ','
           << r.period_mismatches << '\n';
    }
    return os.str();
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    SweepOptions opt;
    opt.workers = cfg.workers;
    opt.caps = caps_for(cfg);
    bool all_match = true;
    nlohmann::json arr = nlohmann::json::array();
    std::string text;

    if (cfg.target == "support-period") {
        const u64 q = cfg.q ? cfg.q : 2;
        std::vector<ConnectionLemmaReport> reports;
        for (unsigned n = cfg.n_lo; n <= cfg.n_hi; ++n) {
            reports.push_back(check_connection_lemma(q, n, cfg.trials, cfg.seed, opt.caps));
            all_match = all_match && reports.back().match;
            arr.push_back(to_json(reports.back()));
            const auto& r = reports.back();
            std::ostringstream line;
            line << "support-period q=" << r.q << " n=" << r.n << ": " << r.trials << " trials, fired " << r.fired_i << '/'
                 << r.fired_ii << '/' << r.fired_iii << ", violations "
                 << r.violations_i + r.violations_ii + r.violations_iii << ", period mismatches "
                 << r.period_mismatches << ", " << (r.match ? "MATCH" : "MISMATCH") << '\n';
            text += line.str();
        }
        emit(cfg, cfg.format == "json" ? arr.dump(2) + '\n' : cfg.format == "csv" ? support_csv(reports) : text, out);
    } else {
        std::vector<VerificationReport> reports;
        for (unsigned n = cfg.n_lo; n <= cfg.n_hi; ++n) {
            if (cfg.target == "thm-q2") {
                reports.push_back(verify_theorem_q2(n, opt));
            } else if (cfg.target == "hansen-mullen") {
                reports.push_back(verify_hansen_mullen_q2(n, opt));
            } else {
                reports.push_back(verify_theorem_qgt2(cfg.q ? cfg.q : 3, n, opt));
            }
            const auto& r = reports.back();
            all_match = all_match && r.match;
            if (!r.match) err << to_text(r);
            arr.push_back(to_json(r));
            text += to_text(r);
        }
        emit(cfg, cfg.format == "json" ? arr.dump(2) + '\n' : cfg.format == "csv" ? to_csv(reports) : text, out);
    }
    return all_match ? 0 : 1;
}

int cmd_search(const CliConfig& cfg, std::ostream& out) {
    const u64 q = cfg.q ? cfg.q : 2;
    const unsigned n = cfg.n_lo;
    const WeightSet w = parse_weights(cfg.weights, n);
    if (cfg.c >= q) throw UsageError("c must be below q");
    const Relation rel = cfg.relation == "eq" ? Relation::Equal : Relation::NotEqual;
    const auto found = search_witness(q, n, w, cfg.c, rel, caps_for(cfg));
    if (cfg.format == "json") {
        nlohmann::json j{{"q", q},
                         {"n", n},
                         {"W", w.elements()},
                         {"c", cfg.c},
                         {"relation", to_string(rel)},
                         {"witness", found ? nlohmann::json(format_poly_coeffs(*found)) : nlohmann::json()}};
        emit(cfg, j.dump(2) + '\n', out);
    } else if (cfg.format == "csv") {
        std::string ws = w.to_string();
        std::replace(ws.begin(), ws.end(), ',', ';');
        emit(cfg,
             "q,n,c,W,relation,witness\n" + std::to_string(q) + ',' + std::to_string(n) + ',' + std::to_string(cfg.c) +
                 ',' + ws + ',' + to_string(rel) + ',' +
                 (found ? '"' + format_poly_coeffs(*found) + '"' : std::string("NONE")) + '\n',
             out);
    } else {
        emit(cfg, (found ? format_poly(*found) : std::string("NONE (exhausted)")) + '\n', out);
    }
    return found ? 0 : 1;
}

int cmd_period(const CliConfig& cfg, std::ostream& out) {
    const u64 q = cfg.q ? cfg.q : 2;
    const unsigned n = cfg.n_lo;
    const Caps caps = caps_for(cfg);
    const WeightSet w = parse_weights(cfg.weights, n);
    const FieldCtx ctx = make_field_q(q, n, caps);
    check_cap(ctx.group_order(), caps.dft_bits, "period: sequence length");
    CyclicFn f;
    if (cfg.target == "delta") {
        f = delta_fn(q, n, w);
    } else {
        if (cfg.c >= q) throw UsageError("c must be below q");
        PrescriptionSpec spec{w, cfg.c, cfg.target == "gamma" ? PrescriptionMode::AvoidValue : PrescriptionMode::HitValue};
        f = cfg.target == "gamma" ? gamma_fn(ctx, spec) : delta_cap_fn(ctx, spec);
    }
    const u64 r = least_period(f);
    if (cfg.format == "json") {
        nlohmann::json j{{"function", cfg.target}, {"q", q}, {"n", n},
                         {"W", w.elements()},      {"N", f.size()}, {"least_period", r},
                         {"threshold", to_string(degree_threshold(q, n))},
                         {"verdict", to_string(period_criterion(r, q, n))}};
        if (cfg.target != "delta") j["c"] = cfg.c;
        emit(cfg, j.dump(2) + '\n', out);
    } else {
        emit(cfg, std::to_string(r) + '\n', out);
    }
    return 0;
}

int cmd_certify(const CliConfig& cfg, std::ostream& out) {
    const u64 q = cfg.q ? cfg.q : 2;
    const Caps caps = caps_for(cfg);
    const FieldCtx base = make_field_q(q, 1, caps);
    Poly h;
    try {
        h = parse_poly(base, base.q_level(), cfg.poly);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --poly: ") + e.what());
    }
    if (h.is_zero()) throw UsageError("--poly must be nonzero");
    // Same packed coefficients at q_level of the extension context.
    const FieldCtx ext = make_field_q(q, cfg.n_lo, caps);
    const Poly hq(ext.q_level(), h.coeffs());
    const auto cert = certify_factor(q, cfg.n_lo, hq, cfg.cross_check, caps);
    if (cfg.format == "text") {
        emit(cfg,
             to_string(cert.verdict) + " r=" + std::to_string(cert.least_period) +
                 " threshold=" + to_string(cert.threshold) + '\n',
             out);
    } else {
        emit(cfg, to_json(cert).dump(2) + '\n', out);
    }
    return cert.verdict == FactorVerdict::DegreeNFactorGuaranteed ? 0 : 1;
}

int cmd_field(const CliConfig& cfg, std::ostream& out) {
    const Caps caps = caps_for(cfg);
    const FieldCtx ctx = cfg.q ? make_field_q(cfg.q, cfg.n_lo, caps)
                               : make_field(cfg.p ? cfg.p : 2, cfg.s, cfg.n_lo, caps);
    const FieldElem z = ctx.primitive();
    if (cfg.format == "json") {
        nlohmann::json levels = nlohmann::json::array();
        for (int i = 0; i < ctx.level_count(); ++i) {
            const auto& l = ctx.level(i);
            levels.push_back({{"cardinality", to_string(l.cardinality)},
                              {"degree", l.degree},
                              {"modulus", l.modulus.empty() ? nlohmann::json() : nlohmann::json(l.modulus)}});
        }
        nlohmann::json j{{"p", ctx.characteristic()},
                         {"s", ctx.s()},
                         {"n", ctx.n()},
                         {"q", ctx.q()},
                         {"group_order", ctx.group_order()},
                         {"levels", levels},
                         {"primitive", format_elem(ctx, z)}};
        emit(cfg, j.dump(2) + '\n', out);
    } else {
        emit(cfg, ctx.describe() + "\nprimitive: " + format_elem(ctx, z) + '\n', out);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    {
        Parser parser(cfg);
        if (std::find_if(args.begin(), args.end(), [](const std::string& a) { return a == "-h" || a == "--help"; }) !=
            args.end()) {
            try {
                std::vector<std::string> rev(args.rbegin(), args.rend());
                parser.app.parse(rev);
            } catch (const CLI::ParseError& e) {
                return parser.app.exit(e, out, err) == 0 ? 0 : 2;
            }
        }
    }
    try {
        cfg = parse_cli(args);
    } catch (const UsageError& e) {
        CliConfig scratch;
        Parser parser(scratch);
        err << "error: " << e.what() << "\n" << parser.app.help();
        return 2;
    }
    try {
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "search") return cmd_search(cfg, out);
        if (cfg.command == "period") return cmd_period(cfg, out);
        if (cfg.command == "certify") return cmd_certify(cfg, out);
        return cmd_field(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace ffdigits
