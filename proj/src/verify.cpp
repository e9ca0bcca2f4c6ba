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

#include "ffdigits/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "ffdigits/cyclic.hpp"
#include "parallel.hpp"

namespace ffdigits {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Scan-order index of a monic polynomial: lower coefficients as base-Q digits.
u128 scan_index(const Poly& f, u64 card) {
    u128 idx = 0;
    for (int i = f.degree() - 1; i >= 0; --i) idx = idx * card + f[static_cast<std::size_t>(i)];
    return idx;
}

std::vector<Poly> collect_irreducibles(const FieldCtx& ctx, unsigned n, unsigned workers) {
    const unsigned shards = detail::resolve_workers(workers);
    std::vector<std::vector<Poly>> parts(shards);
    detail::parallel_chunks(shards, shards, [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            for_each_monic_irreducible(
                ctx, ctx.q_level(), n,
                [&](const Poly& f) {
                    parts[s].push_back(f);
                    return true;
                },
                s, shards);
        }
    });
    std::vector<Poly> all;
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    const u64 card = ctx.q();
    std::sort(all.begin(), all.end(),
              [card](const Poly& a, const Poly& b) { return scan_index(a, card) < scan_index(b, card); });
    return all;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// For one W: index of the first irreducible satisfying the relation for each c.
std::vector<std::size_t> first_witnesses(const FieldCtx& ctx, const std::vector<Poly>& irreducibles,
                                         const WeightSet& w, Relation rel) {
    const u64 q = ctx.q();
    std::vector<std::size_t> found(q, kNone);
    u64 remaining = q;
    for (std::size_t idx = 0; idx < irreducibles.size() && remaining; ++idx) {
        const u64 s = sum_of_digits(ctx, irreducibles[idx], w).value;
        if (rel == Relation::Equal) {
            if (found[s] == kNone) {
                found[s] = idx;
                --remaining;
            }
        } else {
            for (u64 c = 0; c < q; ++c) {
                if (c != s && found[c] == kNone) {
                    found[c] = idx;
                    --remaining;
                }
            }
        }
    }
    return found;
}

VerificationReport sweep(const FieldCtx& ctx, unsigned n, const std::vector<WeightSet>& ws, Relation rel,
                         const std::vector<u64>& cs, const SweepOptions& opt) {
    const auto irreducibles = collect_irreducibles(ctx, n, opt.workers);
    std::vector<std::vector<std::size_t>> per_w(ws.size());
    detail::parallel_chunks(ws.size(), opt.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) per_w[i] = first_witnesses(ctx, irreducibles, ws[i], rel);
    });

    VerificationReport r;
    r.q = ctx.q();
    r.n = n;
    r.relation = rel;
    r.irreducible_count = irreducibles.size();
    for (u64 c : cs) {
        for (std::size_t i = 0; i < ws.size(); ++i) {
            CaseOutcome out{c, ws[i], std::nullopt};
            if (per_w[i][c] != kNone) {
                out.witness = irreducibles[per_w[i][c]];
            } else {
                r.exceptions.push_back({c, ws[i]});
            }
            r.cases.push_back(std::move(out));
        }
    }
    std::sort(r.cases.begin(), r.cases.end(), [](const CaseOutcome& a, const CaseOutcome& b) {
        return PrescribedCase{a.c, a.weights} < PrescribedCase{b.c, b.weights};
    });
    std::sort(r.exceptions.begin(), r.exceptions.end());
    return r;
}

void require_degree(unsigned n, unsigned max_n) {
    if (n < 2) throw std::invalid_argument("verify: n must be at least 2");
    if (n > max_n) throw CapError("verify: n = " + std::to_string(n) + " above cap " + std::to_string(max_n));
}

}  // namespace

std::vector<PrescribedCase> ExceptionTable::instantiate(unsigned n) {
    if (n < 2) throw std::invalid_argument("ExceptionTable: n must be at least 2");
    std::set<PrescribedCase> s{
        {0, WeightSet::of(n, {0})},         {0, WeightSet::of(n, {n})},         {0, WeightSet::interval(n, 0, n)},
        {0, WeightSet::interval(n, 1, n - 1)}, {1, WeightSet::of(n, {0, n})},   {1, WeightSet::interval(n, 0, n - 1)},
        {1, WeightSet::interval(n, 1, n)},
    };
    return {s.begin(), s.end()};
}

std::string to_string(Relation r) { return r == Relation::Equal ? "eq" : "ne"; }

VerificationReport verify_theorem_q2(unsigned n, const SweepOptions& opt) {
    require_degree(n, 62);
    const auto start = Clock::now();
    const FieldCtx ctx = make_field(2, 1, 1, opt.caps, opt.modulus);
    std::vector<WeightSet> ws;
    for (u64 mask = 1; mask < (u64{1} << (n + 1)); ++mask) ws.emplace_back(n, mask);
    VerificationReport r = sweep(ctx, n, ws, Relation::Equal, {0, 1}, opt);
    r.kind = "thm-q2";
    r.scope = "nonempty W in [0,n], c in F_2, S_W(P) = c";
    r.expected_exceptions = ExceptionTable::instantiate(n);
    r.match = r.exceptions == r.expected_exceptions;
    r.wall_time_ms = elapsed_ms(start);
    return r;
}

VerificationReport verify_hansen_mullen_q2(unsigned n, const SweepOptions& opt) {
    require_degree(n, 62);
    const auto start = Clock::now();
    const FieldCtx ctx = make_field(2, 1, 1, opt.caps, opt.modulus);
    std::vector<WeightSet> ws;
    for (unsigned w = 0; w < n; ++w) ws.push_back(WeightSet::of(n, {w}));
    VerificationReport r = sweep(ctx, n, ws, Relation::Equal, {0, 1}, opt);
    r.kind = "hansen-mullen";
    r.scope = "W = {w}, 0 <= w < n, c in F_2, [x^w]P = c";
    r.expected_exceptions = {{0, WeightSet::of(n, {0})}};
    if (n == 2) r.expected_exceptions.push_back({0, WeightSet::of(n, {1})});
    std::sort(r.expected_exceptions.begin(), r.expected_exceptions.end());
    r.match = r.exceptions == r.expected_exceptions;
    r.wall_time_ms = elapsed_ms(start);
    return r;
}

VerificationReport verify_theorem_qgt2(u64 q, unsigned n, const SweepOptions& opt) {
    require_degree(n, 62);
    if (q <= 2) throw std::invalid_argument("verify_theorem_qgt2: q must exceed 2");
    const auto start = Clock::now();
    const FieldCtx ctx = make_field_q(q, 1, opt.caps, opt.modulus);
    std::vector<WeightSet> ws;
    for (u64 mask = 1; mask < (u64{1} << (n + 1)); ++mask) ws.emplace_back(n, mask);
    std::vector<u64> cs(q);
    for (u64 c = 0; c < q; ++c) cs[c] = c;
    VerificationReport r = sweep(ctx, n, ws, Relation::NotEqual, cs, opt);
    r.kind = "thm-qgt2";
    r.scope = "nonempty W in [0,n], c in F_q, S_W(P) != c";
    r.match = r.exceptions.empty();
    r.wall_time_ms = elapsed_ms(start);
    return r;
}

std::optional<Poly> search_witness(u64 q, unsigned n, const WeightSet& w, u64 c, Relation rel, const Caps& caps) {
    if (n < 1) throw std::invalid_argument("search_witness: n must be positive");
    if (w.n() != n) throw std::invalid_argument("search_witness: W ambient degree differs from n");
    if (c >= q) throw std::invalid_argument("search_witness: c outside F_q");
    const FieldCtx ctx = make_field_q(q, 1, caps);
    std::optional<Poly> found;
    for_each_monic_irreducible(ctx, ctx.q_level(), n, [&](const Poly& f) {
        const u64 s = sum_of_digits(ctx, f, w).value;
        if ((s == c) == (rel == Relation::Equal)) {
            found = f;
            return false;
        }
        return true;
    });
    return found;
}

std::string to_string(FactorVerdict v) {
    return v == FactorVerdict::DegreeNFactorGuaranteed ? "DegreeNFactorGuaranteed" : "Inconclusive";
}

bool has_irreducible_factor_of_degree(const FieldCtx& ctx, const Poly& h, unsigned n) {
    if (h.is_zero()) return true;
    if (h.degree() < static_cast<int>(n)) return false;
    bool found = false;
    for_each_monic_irreducible(ctx, h.level(), n, [&](const Poly& p) {
        found = poly_rem(ctx, h, p).is_zero();
        return !found;
    });
    return found;
}

FactorCertificate certify_factor(u64 q, unsigned n, const Poly& h, bool cross_check, const Caps& caps) {
    if (n < 2) throw std::invalid_argument("certify_factor: n must be at least 2");
    if (h.is_zero()) throw std::invalid_argument("certify_factor: zero polynomial");
    const FieldCtx ctx = make_field_q(q, n, caps);
    if (h.level() != ctx.q_level()) throw std::invalid_argument("certify_factor: h must be over F_q");
    const u64 len = ctx.group_order();
    check_cap(len, caps.dft_bits, "certify_factor: sequence length");

    const int top = ctx.top_level();
    const FieldElem zeta = ctx.primitive();

    // Image of h on the multiplicative group.
    std::vector<u64> image(len);
    u64 point = 1;
    for (u64 k = 0; k < len; ++k) {
        image[k] = poly_eval(ctx, h, {point, top}).value;
        point = ctx.mul_raw(top, point, zeta.value);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    // Smallest subfield F_{p^e} (e | [F_{q^n} : F_p]) fixed pointwise on the image.
    const u64 p = ctx.characteristic();
    const unsigned total = ctx.s() * n;
    unsigned e = total;
    for (u64 d : divisors(total)) {
        const u128 pe = checked_pow(p, static_cast<unsigned>(d));
        if (std::all_of(image.begin(), image.end(), [&](u64 v) { return ctx.pow_raw(top, v, pe) == v; })) {
            e = static_cast<unsigned>(d);
            break;
        }
    }
    const u64 subfield = static_cast<u64>(checked_pow(p, e));

    // h mod (x^len - 1) as a cyclic coefficient sequence, then powered by
    // square-and-multiply in F_q[x]/(x^len - 1).
    const int lq = ctx.q_level();
    CyclicFn base{lq, std::vector<u64>(len, 0)};
    for (int i = 0; i <= h.degree(); ++i) {
        const u64 slot = static_cast<u64>(i) % len;
        base.values[slot] = ctx.add_raw(lq, base.values[slot], h[static_cast<std::size_t>(i)]);
    }
    CyclicFn acc = kronecker(len, lq);
    for (u64 ex = subfield - 1; ex; ex >>= 1) {
        if (ex & 1) acc = convolve(ctx, acc, base);
        if (ex > 1) base = convolve(ctx, base, base);
    }
    const CyclicFn s = cyclic_sub(ctx, kronecker(len, lq), acc);

    FactorCertificate cert;
    cert.q = q;
    cert.n = n;
    cert.h = h;
    cert.subfield_size = subfield;
    cert.subfield_degree = e;
    cert.sequence_length = len;
    cert.least_period = least_period(s);
    cert.threshold = degree_threshold(q, n);
    cert.verdict = period_criterion(cert.least_period, q, n) == PeriodVerdict::DegreeNGuaranteed
                       ? FactorVerdict::DegreeNFactorGuaranteed
                       : FactorVerdict::Inconclusive;
    if (cross_check) cert.has_degree_n_factor = has_irreducible_factor_of_degree(ctx, h, n);
    return cert;
}

ConnectionLemmaReport check_connection_lemma(u64 q, unsigned n, u64 trials, u64 seed, const Caps& caps) {
    if (n < 2) throw std::invalid_argument("check_connection_lemma: n must be at least 2");
    const auto start = Clock::now();
    check_cap(checked_pow(q, n), 12, "check_connection_lemma: q^n");
    const FieldCtx ctx = make_field_q(q, n, caps);
    const int top = ctx.top_level();
    const u64 card = static_cast<u64>(ctx.cardinality(top));
    const u64 len = ctx.group_order();
    const FieldElem zeta = ctx.primitive();

    // Per-element brute-force facts.
    std::vector<bool> full_degree(card, false), primitive(card, false);
    std::vector<u64> low_degree;  // nonzero elements of degree < n
    for (u64 v = 1; v < card; ++v) {
        full_degree[v] = ctx.element_degree({v, top}) == n;
        primitive[v] = ctx.has_order({v, top}, len);
        if (!full_degree[v]) low_degree.push_back(v);
    }
    std::vector<u64> powers(len);
    for (u64 k = 0, pw = 1; k < len; ++k, pw = ctx.mul_raw(top, pw, zeta.value)) powers[k] = pw;

    std::vector<u64> proper;  // q^d - 1 for proper divisors d of n
    for (u64 d : divisors(n)) {
        if (d < n) proper.push_back(static_cast<u64>(checked_pow(q, static_cast<unsigned>(d)) - 1));
    }

    ConnectionLemmaReport rep;
    rep.q = q;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    rep.threshold = degree_threshold(q, n);

    std::mt19937_64 rng(seed);
    auto below = [&](u64 bound) { return bound ? rng() % bound : 0; };
    std::vector<u64> table(card);
    for (u64 t = 0; t < trials; ++t) {
        std::fill(table.begin(), table.end(), 0);
        switch (t % 5) {
            case 0:  // sparse, anywhere
                for (u64 k = below(4); k > 0; --k) table[below(card)] = 1 + below(card - 1);
                break;
            case 1:  // subfield elements only
                for (u64 k = 1 + below(4); k > 0 && !low_degree.empty(); --k) {
                    table[low_degree[below(low_degree.size())]] = 1 + below(card - 1);
                }
                break;
            case 2:  // one element
                table[1 + below(card - 1)] = 1 + below(card - 1);
                break;
            case 3:  // dense random
                for (auto& v : table) v = below(card);
                break;
            default:  // everything nonzero except a random subset
                for (auto& v : table) v = below(3) ? 1 + below(card - 1) : 0;
                break;
        }
        CyclicFn f{top, std::vector<u64>(len)};
        for (u64 k = 0; k < len; ++k) f.values[k] = table[powers[k]];

        const u64 r = least_period(idft(ctx, zeta, f));
        if (least_period(dft(ctx, zeta, f)) != r) ++rep.period_mismatches;

        bool has_full = false, has_primitive = false;
        for (u64 v = 1; v < card; ++v) {
            if (table[v] == 0) continue;
            has_full = has_full || full_degree[v];
            has_primitive = has_primitive || primitive[v];
        }
        if (rep.threshold % r != 0) {
            ++rep.fired_i;
            if (!has_full) ++rep.violations_i;
        }
        if (has_full) {
            ++rep.fired_ii;
            if (std::any_of(proper.begin(), proper.end(), [r](u64 m) { return m % r == 0; })) ++rep.violations_ii;
        }
        if (has_primitive) {
            ++rep.fired_iii;
            if (r != len) ++rep.violations_iii;
        }
    }
    rep.match = rep.violations_i == 0 && rep.violations_ii == 0 && rep.violations_iii == 0 && rep.period_mismatches == 0;
    rep.wall_time_ms = elapsed_ms(start);
    return rep;
}

namespace {

nlohmann::json case_json(const PrescribedCase& c) { return {{"c", c.c}, {"W", c.weights.elements()}}; }

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
        cases.push_back({{"c", c.c},
                         {"W", c.weights.elements()},
                         {"witness", c.witness ? nlohmann::json(format_poly_coeffs(*c.witness)) : nlohmann::json()}});
    }
    nlohmann::json exc = nlohmann::json::array(), expected = nlohmann::json::array();
    for (const auto& e : r.exceptions) exc.push_back(case_json(e));
    for (const auto& e : r.expected_exceptions) expected.push_back(case_json(e));
    return {{"params", {{"q", r.q}, {"n", r.n}, {"kind", r.kind}, {"scope", r.scope}, {"relation", to_string(r.relation)}}},
            {"cases", cases},
            {"exceptions", exc},
            {"expected_exceptions", expected},
            {"match", r.match},
            {"counts", {{"irreducibles", r.irreducible_count}, {"cases", r.cases.size()}}},
            {"wall_time_ms", r.wall_time_ms}};
}

nlohmann::json to_json(const FactorCertificate& c) {
    nlohmann::json j{{"q", c.q},
                     {"n", c.n},
                     {"h", format_poly_coeffs(c.h)},
                     {"h_text", format_poly(c.h)},
                     {"subfield_size", c.subfield_size},
                     {"subfield_degree", c.subfield_degree},
                     {"sequence_length", c.sequence_length},
                     {"least_period", c.least_period},
                     {"threshold", to_string(c.threshold)},
                     {"verdict", to_string(c.verdict)}};
    j["has_degree_n_factor"] = c.has_degree_n_factor ? nlohmann::json(*c.has_degree_n_factor) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const ConnectionLemmaReport& r) {
    return {{"params", {{"q", r.q}, {"n", r.n}, {"trials", r.trials}, {"seed", r.seed}}},
            {"threshold", to_string(r.threshold)},
            {"part_i", {{"fired", r.fired_i}, {"violations", r.violations_i}}},
            {"part_ii", {{"fired", r.fired_ii}, {"violations", r.violations_ii}}},
            {"part_iii", {{"fired", r.fired_iii}, {"violations", r.violations_iii}}},
            {"period_mismatches", r.period_mismatches},
            {"match", r.match},
            {"wall_time_ms", r.wall_time_ms}};
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "kind,q,n,c,W,witness\n";
    for (const auto& r : reports) {
        for (const auto& c : r.cases) {
            std::string w = c.weights.to_string();
            std::replace(w.begin(), w.end(), ',', ';');
            os << r.kind << ',' << r.q << ',' << r.n << ',' << c.c << ',' << w << ','
               << (c.witness ? '"' + format_poly_coeffs(*c.witness) + '"' : std::string("NONE")) << '\n';
        }
    }
    return os.str();
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.kind << " q=" << r.q << " n=" << r.n << ": " << r.cases.size() << " cases, " << r.irreducible_count
       << " irreducibles, " << r.exceptions.size() << " without witness, " << (r.match ? "MATCH" : "MISMATCH") << '\n';
    for (const auto& e : r.exceptions) os << "  none: c=" << e.c << " W={" << e.weights.to_string() << "}\n";
    if (!r.match) {
        for (const auto& e : r.expected_exceptions) {
            os << "  expected: c=" << e.c << " W={" << e.weights.to_string() << "}\n";
        }
    }
    return os.str();
}

}  // namespace ffdigits
