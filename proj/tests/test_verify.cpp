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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ffdigits/cyclic.hpp"
#include "ffdigits/verify.hpp"
#include "oracle.hpp"

using namespace ffdigits;

namespace {

// (c, mask) -> first witness index in oracle order, or -1.
std::map<std::pair<u64, u64>, long> oracle_sweep(u64 p, unsigned n, bool equal) {
    const auto irr = oracle::irreducibles(p, n);
    std::map<std::pair<u64, u64>, long> out;
    for (u64 mask = 1; mask < (u64{1} << (n + 1)); ++mask) {
        for (u64 c = 0; c < p; ++c) {
            long found = -1;
            for (std::size_t i = 0; i < irr.size() && found < 0; ++i) {
                u64 s = 0;
                for (unsigned w = 0; w <= n; ++w) {
                    if ((mask >> w) & 1) s = (s + irr[i][w]) % p;
                }
                if ((s == c) == equal) found = static_cast<long>(i);
            }
            out[{c, mask}] = found;
        }
    }
    return out;
}

nlohmann::json strip_timing(nlohmann::json j) {
    if (j.is_object()) {
        j.erase("wall_time_ms");
        for (auto& [k, v] : j.items()) v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(v);
    }
    return j;
}

Poly over(const FieldCtx& ctx, std::vector<u64> c) { return Poly(ctx.q_level(), std::move(c)); }

}  // namespace

TEST_CASE("exception table") {
    for (unsigned n = 2; n <= 20; ++n) {
        const auto t = ExceptionTable::instantiate(n);
        CHECK(t.size() == ExceptionTable::kPatternCount);
        CHECK(std::is_sorted(t.begin(), t.end()));
    }
    const auto t3 = ExceptionTable::instantiate(3);
    CHECK(std::find(t3.begin(), t3.end(), PrescribedCase{0, WeightSet::of(3, {1, 2})}) != t3.end());
    CHECK(std::find(t3.begin(), t3.end(), PrescribedCase{1, WeightSet::of(3, {0, 3})}) != t3.end());
    CHECK_THROWS_AS(ExceptionTable::instantiate(1), std::invalid_argument);
}

TEST_CASE("binary sweep agrees with the brute-force oracle") {
    for (unsigned n = 2; n <= 8; ++n) {
        SweepOptions opt;
        opt.workers = 2;
        const auto r = verify_theorem_q2(n, opt);
        CHECK(r.match);
        CHECK(r.irreducible_count == necklace_count(2, n));
        const auto want = oracle_sweep(2, n, true);
        const auto irr = oracle::irreducibles(2, n);
        REQUIRE(r.cases.size() == want.size());
        for (const auto& cs : r.cases) {
            const long idx = want.at({cs.c, cs.weights.mask()});
            CHECK(cs.witness.has_value() == (idx >= 0));
            if (cs.witness && idx >= 0) CHECK(cs.witness->coeffs() == irr[static_cast<std::size_t>(idx)]);
        }
    }
}

TEST_CASE("binary sweep examples") {
    const auto r2 = verify_theorem_q2(2);
    CHECK(r2.irreducible_count == 1);
    CHECK(std::find(r2.exceptions.begin(), r2.exceptions.end(), PrescribedCase{0, WeightSet::of(2, {1})}) !=
          r2.exceptions.end());
    const auto r3 = verify_theorem_q2(3);
    for (const auto& cs : r3.cases) {
        if (cs.c == 1 && cs.weights == WeightSet::of(3, {1})) CHECK(format_poly(*cs.witness) == "x^3+x+1");
        if (cs.c == 0 && cs.weights == WeightSet::all(3)) CHECK_FALSE(cs.witness.has_value());
    }
    for (unsigned n = 9; n <= 12; ++n) CHECK(verify_theorem_q2(n).match);
    CHECK_THROWS_AS(verify_theorem_q2(1), std::invalid_argument);
}

TEST_CASE("singleton sweep") {
    for (unsigned n = 2; n <= 14; ++n) {
        const auto r = verify_hansen_mullen_q2(n);
        CHECK(r.match);
        CHECK(r.cases.size() == 2 * n);
    }
    const auto r2 = verify_hansen_mullen_q2(2);
    CHECK(r2.exceptions.size() == 2);
    CHECK(verify_hansen_mullen_q2(3).exceptions == std::vector<PrescribedCase>{{0, WeightSet::of(3, {0})}});
    const auto r5 = verify_hansen_mullen_q2(5);
    for (const auto& cs : r5.cases) {
        if (cs.c == 1 && cs.weights == WeightSet::of(5, {2})) CHECK(cs.witness.has_value());
    }
}

TEST_CASE("sweep for q > 2 agrees with the oracle over prime fields") {
    for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
        const auto r = verify_theorem_qgt2(p, n);
        const auto want = oracle_sweep(p, n, false);
        const auto irr = oracle::irreducibles(p, n);
        REQUIRE(r.cases.size() == want.size());
        for (const auto& cs : r.cases) {
            const long idx = want.at({cs.c, cs.weights.mask()});
            CHECK(cs.witness.has_value() == (idx >= 0));
            if (cs.witness && idx >= 0) CHECK(cs.witness->coeffs() == irr[static_cast<std::size_t>(idx)]);
        }
    }
}

TEST_CASE("for q > 2 only the leading coefficient case lacks a witness") {
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {3, 4}, {4, 3}, {5, 2}, {8, 2}, {9, 3}}) {
        const auto r = verify_theorem_qgt2(q, n);
        CHECK(r.exceptions == std::vector<PrescribedCase>{{1, WeightSet::of(n, {n})}});
        CHECK(r.expected_exceptions.empty());
        CHECK_FALSE(r.match);
    }
}

TEST_CASE("empty weight set") {
    CHECK_FALSE(search_witness(2, 5, WeightSet(5, 0), 1, Relation::Equal).has_value());
    CHECK(search_witness(2, 5, WeightSet(5, 0), 0, Relation::Equal).has_value());
    CHECK_FALSE(search_witness(3, 3, WeightSet(3, 0), 0, Relation::NotEqual).has_value());
    for (const auto& cs : verify_theorem_q2(4).cases) CHECK_FALSE(cs.weights.empty());
}

TEST_CASE("witness search") {
    CHECK(format_poly(*search_witness(2, 4, WeightSet::of(4, {1, 2}), 1, Relation::Equal)) == "x^4+x+1");
    CHECK_FALSE(search_witness(2, 3, WeightSet::all(3), 0, Relation::Equal).has_value());
    CHECK(format_poly(*search_witness(2, 3, WeightSet::of(3, {0}), 1, Relation::Equal)) == "x^3+x+1");
    CHECK(format_poly(*search_witness(3, 2, WeightSet::of(2, {1}), 0, Relation::NotEqual)) == "x^2+x+2");
    const auto f = search_witness(2, 5, WeightSet::of(5, {0, 2}), 1, Relation::Equal);
    REQUIRE(f.has_value());
    CHECK(((*f)[0] + (*f)[2]) % 2 == 1);
    CHECK_THROWS_AS(search_witness(2, 5, WeightSet::of(4, {0}), 1, Relation::Equal), std::invalid_argument);
    CHECK_THROWS_AS(search_witness(2, 5, WeightSet::of(5, {0}), 2, Relation::Equal), std::invalid_argument);
    Caps tiny;
    tiny.enum_bits = 10;
    CHECK_THROWS_AS(search_witness(2, 11, WeightSet::of(11, {1}), 0, Relation::Equal, tiny), CapError);
}

TEST_CASE("witness existence is symmetric under reflection") {
    for (unsigned n = 2; n <= 12; ++n) {
        const auto r = verify_theorem_q2(n);
        std::set<std::pair<u64, u64>> none;
        for (const auto& e : r.exceptions) none.insert({e.c, e.weights.mask()});
        for (const auto& e : r.exceptions) CHECK(none.count({e.c, e.weights.reflect().mask()}) == 1);
    }
}

TEST_CASE("verdicts do not depend on the field representation") {
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{4, 2}, {4, 3}, {8, 2}, {9, 2}, {9, 3}}) {
        SweepOptions a, b;
        b.modulus = ModulusChoice::LexLast;
        const auto ra = verify_theorem_qgt2(q, n, a), rb = verify_theorem_qgt2(q, n, b);
        CHECK(ra.exceptions == rb.exceptions);
        CHECK(ra.irreducible_count == rb.irreducible_count);
    }
}

TEST_CASE("reports do not depend on the worker count") {
    SweepOptions one, many;
    one.workers = 1;
    many.workers = 8;
    for (unsigned n = 2; n <= 9; ++n) {
        CHECK(strip_timing(to_json(verify_theorem_q2(n, one))) == strip_timing(to_json(verify_theorem_q2(n, many))));
    }
    CHECK(strip_timing(to_json(verify_theorem_qgt2(4, 3, one))) ==
          strip_timing(to_json(verify_theorem_qgt2(4, 3, many))));
}

TEST_CASE("report serialization") {
    const auto r = verify_theorem_q2(3);
    const auto j = to_json(r);
    CHECK(j.at("params").at("q") == 2);
    CHECK(j.at("params").at("n") == 3);
    CHECK(j.at("match") == true);
    CHECK(j.at("exceptions").size() == 7);
    CHECK(j.at("expected_exceptions").size() == 7);
    CHECK(j.contains("wall_time_ms"));
    bool saw_null = false, saw_string = false;
    for (const auto& c : j.at("cases")) {
        saw_null = saw_null || c.at("witness").is_null();
        saw_string = saw_string || c.at("witness") == "1,1,0,1";
    }
    CHECK(saw_null);
    CHECK(saw_string);
    const std::string csv = to_csv({r});
    CHECK(csv.rfind("kind,q,n,c,W,witness\n", 0) == 0);
    CHECK(csv.find("thm-q2,2,3,0,0;1;2;3,NONE\n") != std::string::npos);
    CHECK(csv.find("thm-q2,2,3,1,1,\"1,1,0,1\"\n") != std::string::npos);
    CHECK(to_text(r).find("MATCH") != std::string::npos);
}

TEST_CASE("factor certificate examples") {
    const FieldCtx c22 = make_field_q(2, 2);
    const auto a = certify_factor(2, 2, over(c22, {1, 1, 1}), true);
    CHECK(a.has_degree_n_factor == std::optional<bool>(true));
    CHECK(a.sequence_length == 3);
    CHECK(a.threshold == 1);
    if (a.verdict == FactorVerdict::DegreeNFactorGuaranteed) CHECK(a.least_period > 1);
    const auto b = certify_factor(2, 2, over(c22, {0, 0, 1}), true);
    CHECK(b.has_degree_n_factor == std::optional<bool>(false));
    CHECK(b.verdict == FactorVerdict::Inconclusive);
    const FieldCtx c23 = make_field_q(2, 3);
    // (x^3+x+1)(x+1) = x^4+x^3+x^2+1
    const auto c = certify_factor(2, 3, over(c23, {1, 0, 1, 1, 1}), true);
    CHECK(c.has_degree_n_factor == std::optional<bool>(true));
    const auto d = certify_factor(2, 3, over(c23, {1}), true);
    CHECK(d.subfield_degree == 1);
    CHECK(d.least_period == 1);
    CHECK(d.verdict == FactorVerdict::Inconclusive);
    const auto e = certify_factor(2, 3, over(c23, {0, 1}));
    CHECK(e.subfield_size == 8);
    CHECK_FALSE(e.has_degree_n_factor.has_value());
    const FieldCtx c26 = make_field_q(2, 6);
    CHECK_NOTHROW(certify_factor(2, 6, over(c26, {1, 1, 0, 0, 0, 0, 1})));
    CHECK_THROWS_AS(certify_factor(2, 3, Poly(c23.q_level(), {})), std::invalid_argument);
    CHECK_THROWS_AS(certify_factor(2, 1, over(c23, {1, 1})), std::invalid_argument);
    const auto j = to_json(a);
    CHECK(j.at("h") == "1,1,1");
    CHECK(j.at("has_degree_n_factor") == true);
}

TEST_CASE("factor certificates are sound against trial division") {
    std::mt19937_64 rng(44);
    int guaranteed = 0;
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
        const FieldCtx ctx = make_field_q(q, n);
        for (int t = 0; t < 40; ++t) {
            const unsigned deg = n + static_cast<unsigned>(rng() % (2 * n + 1));
            std::vector<u64> c(deg + 1);
            for (auto& v : c) v = rng() % q;
            c.back() = 1 + rng() % (q - 1);
            const Poly h = over(ctx, c);
            const auto cert = certify_factor(q, n, h, true);
            CHECK(*cert.has_degree_n_factor == oracle::has_factor_of_degree(c, n, q));
            if (cert.verdict == FactorVerdict::DegreeNFactorGuaranteed) {
                ++guaranteed;
                CHECK(*cert.has_degree_n_factor);
                CHECK(cert.threshold % cert.least_period != 0);
            }
        }
    }
    CHECK(guaranteed > 20);
    // non-prime q: soundness against the library's exhaustive divisibility check
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{4, 2}, {4, 3}, {9, 2}}) {
        const FieldCtx ctx = make_field_q(q, n);
        for (int t = 0; t < 25; ++t) {
            std::vector<u64> c(n + rng() % (n + 1) + 1);
            for (auto& v : c) v = rng() % q;
            c.back() = 1;
            const auto cert = certify_factor(q, n, over(ctx, c), true);
            if (cert.verdict == FactorVerdict::DegreeNFactorGuaranteed) CHECK(*cert.has_degree_n_factor);
            CHECK(cert.subfield_degree >= 1);
        }
    }
}

TEST_CASE("connection lemma harness") {
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {4, 2}, {2, 6}, {3, 3}}) {
        const auto r = check_connection_lemma(q, n, 150);
        CHECK(r.match);
        CHECK(r.violations_i + r.violations_ii + r.violations_iii == 0);
        CHECK(r.period_mismatches == 0);
        CHECK(r.fired_iii > 0);
    }
    const auto a = check_connection_lemma(2, 4, 50, 1), b = check_connection_lemma(2, 4, 50, 1);
    CHECK(strip_timing(to_json(a)) == strip_timing(to_json(b)));
    CHECK_THROWS_AS(check_connection_lemma(2, 13, 1), CapError);
    CHECK_THROWS_AS(check_connection_lemma(2, 1, 1), std::invalid_argument);

    // indicator of one primitive element has full period; F = 0 has period 1
    const FieldCtx ctx = make_field_q(2, 4);
    const FieldElem z = ctx.primitive();
    CyclicFn f{ctx.top_level(), std::vector<u64>(15, 0)};
    f.values[7] = 1;  // zeta^7 is primitive since gcd(7, 15) = 1
    CHECK(least_period(idft(ctx, z, f)) == 15);
    CHECK(least_period(idft(ctx, z, CyclicFn{ctx.top_level(), std::vector<u64>(15, 0)})) == 1);
}
