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

#include <algorithm>
#include <numeric>
#include <random>

#include "ffdigits/cyclic.hpp"
#include "oracle.hpp"

using namespace ffdigits;

namespace {

CyclicFn random_fn(const FieldCtx& ctx, int level, u64 n, std::mt19937_64& rng, u64 period = 0) {
    const u64 card = static_cast<u64>(ctx.cardinality(level));
    CyclicFn f{level, std::vector<u64>(n)};
    if (period == 0) period = n;
    for (u64 i = 0; i < n; ++i) f.values[i] = i < period ? rng() % card : f.values[i - period];
    return f;
}

}  // namespace

TEST_CASE("least period against exhaustive shift search") {
    std::mt19937_64 rng(2);
    const FieldCtx ctx = make_field(3, 1, 1);
    for (int t = 0; t < 500; ++t) {
        const u64 n = 1 + rng() % 60;
        const auto divs = divisors(n);
        const u64 period = divs[rng() % divs.size()];
        // few symbols so short periods show up
        CyclicFn f{0, std::vector<u64>(n)};
        for (u64 i = 0; i < n; ++i) f.values[i] = i < period ? rng() % 2 : f.values[i - period];
        CHECK(least_period(f) == oracle::least_period(f.values));
    }
    CHECK(least_period(kronecker(15)) == 15);
    CHECK(least_period(CyclicFn{0, std::vector<u64>(12, 1)}) == 1);
    CHECK(least_period(CyclicFn{0, {1, 0, 1, 0, 1, 0}}) == 2);
}

TEST_CASE("transforms preserve the least period") {
    std::mt19937_64 rng(4);
    const FieldCtx ctx = make_field(5, 1, 1);
    std::vector<u64> sigma{3, 0, 4, 1, 2};
    for (int t = 0; t < 200; ++t) {
        const u64 n = 1 + rng() % 40;
        const auto divs = divisors(n);
        const CyclicFn f = random_fn(ctx, 0, n, rng, divs[rng() % divs.size()]);
        const u64 r = least_period(f);
        CHECK(least_period(shift(f, static_cast<std::int64_t>(rng() % 100) - 50)) == r);
        CHECK(least_period(reversal(f)) == r);
        CHECK(least_period(permute(ctx, f, sigma)) == r);
        CyclicFn b = f;
        for (auto& v : b.values) v %= 2;
        CHECK(least_period(complement(b)) == least_period(b));
    }
    const CyclicFn f{0, {1, 2, 3, 4}};
    CHECK(shift(f, 1).values == std::vector<u64>{2, 3, 4, 1});
    CHECK(shift(f, -1).values == std::vector<u64>{4, 1, 2, 3});
    CHECK(reversal(f).values == std::vector<u64>{4, 3, 2, 1});
    CHECK(complement(CyclicFn{0, {1, 0, 0}}).values == std::vector<u64>{0, 1, 1});
    CHECK_THROWS_AS(complement(f), std::invalid_argument);
    std::vector<u64> not_bijective{0, 0, 1, 2, 3};
    CHECK_THROWS_AS(permute(ctx, f, not_bijective), std::invalid_argument);
}

TEST_CASE("period under composition divides the original period") {
    std::mt19937_64 rng(6);
    const FieldCtx ctx = make_field(7, 1, 1);
    for (int t = 0; t < 300; ++t) {
        const u64 n = 1 + rng() % 48;
        const CyclicFn f = random_fn(ctx, 0, n, rng);
        const u64 table_seed = rng();
        const CyclicFn g = compose(f, [&](u64 v) { return (v * table_seed >> 7) % 2; }, 0);
        CHECK(least_period(f) % least_period(g) == 0);
    }
}

TEST_CASE("dft agrees with the oracle over prime extensions") {
    for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {2, 6}}) {
        const FieldCtx ctx = make_field(p, 1, n);
        const int top = ctx.top_level();
        const oracle::PrimeExt ext{p, ctx.level(top).modulus};
        const u64 len = ctx.group_order();
        std::mt19937_64 rng(p * 100 + n);
        const CyclicFn f = random_fn(ctx, top, len, rng);
        const CyclicFn g = dft(ctx, ctx.primitive(), f);
        for (u64 i = 0; i < len; ++i) {
            u64 acc = 0;
            for (u64 j = 0; j < len; ++j) acc = ext.add(acc, ext.mul(f.values[j], ext.pow(ctx.primitive().value, i * j % len)));
            CHECK(g.values[i] == acc);
            CHECK(dft_at(ctx, ctx.primitive(), f, i).value == acc);
        }
    }
}

TEST_CASE("inverse, convolution theorem, convolution powers") {
    std::mt19937_64 rng(8);
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {4, 2}, {2, 5}, {9, 1}, {16, 1}}) {
        const FieldCtx ctx = make_field_q(q, n);
        const int top = ctx.top_level();
        const FieldElem z = ctx.primitive();
        const u64 len = ctx.group_order();
        for (int t = 0; t < 30; ++t) {
            const CyclicFn f = random_fn(ctx, top, len, rng), g = random_fn(ctx, top, len, rng);
            CHECK(idft(ctx, z, dft(ctx, z, f)) == f);
            CHECK(dft(ctx, z, idft(ctx, z, f)) == f);
            const CyclicFn lhs = dft(ctx, z, convolve(ctx, f, g));
            const CyclicFn fa = dft(ctx, z, f), ga = dft(ctx, z, g);
            for (u64 i = 0; i < len; ++i) CHECK(lhs.values[i] == ctx.mul_raw(top, fa.values[i], ga.values[i]));
            CHECK(least_period(dft(ctx, z, f)) == least_period(idft(ctx, z, f)));
        }
        const CyclicFn f = random_fn(ctx, top, len, rng);
        CHECK(conv_power(ctx, f, 0) == kronecker(len, top));
        CHECK(conv_power(ctx, f, 1) == f);
        CHECK(conv_power(ctx, f, 3) == convolve(ctx, f, convolve(ctx, f, f)));
    }
}

TEST_CASE("q-fold self convolution fixes F_q-valued functions when N | q-1") {
    std::mt19937_64 rng(10);
    for (u64 q : {3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const FieldCtx ctx = make_field_q(q, 1);
        const int lq = ctx.q_level();
        for (u64 len : divisors(q - 1)) {
            const CyclicFn f = random_fn(ctx, lq, len, rng);
            CHECK(conv_power(ctx, f, static_cast<unsigned>(q)) == f);
        }
    }
}

TEST_CASE("dft argument checks") {
    const FieldCtx ctx = make_field(2, 1, 4);
    const CyclicFn f = kronecker(15, 1);
    CHECK_THROWS_AS(dft(ctx, ctx.one(1), f), std::invalid_argument);
    const FieldElem z3 = ctx.pow(ctx.primitive(), 5);  // order 3
    CHECK_NOTHROW(dft(ctx, z3, kronecker(3, 1)));
    CHECK_THROWS_AS(dft(ctx, z3, f), std::invalid_argument);
    Caps tiny;
    tiny.dft_bits = 3;
    const FieldCtx small = make_field(2, 1, 4, tiny);
    CHECK_THROWS_AS(dft(small, small.primitive(), f), CapError);
    CHECK_THROWS(convolve(ctx, kronecker(3, 1), kronecker(5, 1)));
}

TEST_CASE("degree threshold and the period criterion") {
    CHECK(degree_threshold(2, 4) == 3);
    CHECK(degree_threshold(2, 6) == 21);
    CHECK(degree_threshold(2, 5) == 1);
    CHECK(degree_threshold(3, 2) == 2);
    for (u64 q : {2, 3, 4, 5}) {
        for (unsigned n = 1; n <= 8; ++n) {
            const u128 big = checked_pow(q, n) - 1;
            CHECK(big % degree_threshold(q, n) == 0);
            CHECK(big / degree_threshold(q, n) == oracle::cyclotomic(n, q));
        }
    }
    CHECK(period_criterion(15, 2, 4) == PeriodVerdict::DegreeNGuaranteed);
    CHECK(period_criterion(5, 2, 4) == PeriodVerdict::DegreeNGuaranteed);
    CHECK(period_criterion(3, 2, 4) == PeriodVerdict::Inconclusive);
    CHECK(period_criterion(1, 2, 4) == PeriodVerdict::Inconclusive);
    CHECK_THROWS_AS(period_criterion(4, 2, 4), std::invalid_argument);
    CHECK(to_string(PeriodVerdict::Inconclusive) == "Inconclusive");
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(12);
    const FieldCtx ctx = make_field(3, 2, 2);
    const CyclicFn f = random_fn(ctx, 2, 80, rng);
    const auto j = to_json(ctx, f);
    CHECK(j.at("N") == 80);
    CHECK(j.at("values").size() == 80);
    CHECK(cyclic_from_json(ctx, j) == f);
    CHECK(to_json(ctx, CyclicFn{0, {1, 0}}).dump() == R"({"N":2,"level":0,"values":["1","0"]})");
}
