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

#include "ffdigits/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace ffdigits {

Poly::Poly(int level, std::vector<u64> coeffs) : level_(level), coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

WeightSet::WeightSet(unsigned n, u64 mask) : n_(n), mask_(mask) {
    if (n > 63) throw std::invalid_argument("WeightSet: n must be at most 63");
    if (mask >> (n + 1)) throw std::invalid_argument("WeightSet: mask has elements above n");
}

WeightSet WeightSet::of(unsigned n, std::initializer_list<unsigned> ws) { return from(n, std::vector<unsigned>(ws)); }

WeightSet WeightSet::from(unsigned n, const std::vector<unsigned>& ws) {
    u64 mask = 0;
    for (unsigned w : ws) {
        if (w > n) throw std::invalid_argument("WeightSet: element " + std::to_string(w) + " outside [0, n]");
        mask |= u64{1} << w;
    }
    return WeightSet(n, mask);
}

WeightSet WeightSet::interval(unsigned n, unsigned lo, unsigned hi) {
    u64 mask = 0;
    for (unsigned w = lo; w <= hi && w <= n; ++w) mask |= u64{1} << w;
    return WeightSet(n, mask);
}

unsigned WeightSet::size() const { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<unsigned> WeightSet::elements() const {
    std::vector<unsigned> out;
    for (unsigned w = 0; w <= n_; ++w) {
        if (contains(w)) out.push_back(w);
    }
    return out;
}

WeightSet WeightSet::reflect() const {
    u64 mask = 0;
    for (unsigned w : elements()) mask |= u64{1} << (n_ - w);
    return WeightSet(n_, mask);
}

WeightSet WeightSet::with(unsigned w) const { return WeightSet(n_, mask_ | (u64{1} << w)); }
WeightSet WeightSet::without(unsigned w) const { return WeightSet(n_, mask_ & ~(u64{1} << w)); }

std::string WeightSet::to_string() const {
    std::string out;
    for (unsigned w : elements()) {
        if (!out.empty()) out += ',';
        out += std::to_string(w);
    }
    return out;
}

WeightSet reflect(const WeightSet& w) { return w.reflect(); }

namespace {

void require_same_level(const Poly& f, const Poly& g) {
    if (f.level() != g.level()) throw std::invalid_argument("polynomial level mismatch");
}

}  // namespace

Poly poly_add(const FieldCtx& ctx, const Poly& f, const Poly& g) {
    require_same_level(f, g);
    const int lv = f.level();
    std::vector<u64> out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add_raw(lv, f[i], g[i]);
    return Poly(lv, std::move(out));
}

Poly poly_sub(const FieldCtx& ctx, const Poly& f, const Poly& g) {
    require_same_level(f, g);
    const int lv = f.level();
    std::vector<u64> out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub_raw(lv, f[i], g[i]);
    return Poly(lv, std::move(out));
}

Poly poly_mul(const FieldCtx& ctx, const Poly& f, const Poly& g) {
    require_same_level(f, g);
    if (f.is_zero() || g.is_zero()) return Poly(f.level(), {});
    const int lv = f.level();
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<u64> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = ctx.add_raw(lv, out[i + j], ctx.mul_raw(lv, a[i], b[j]));
        }
    }
    return Poly(lv, std::move(out));
}

Poly poly_scale(const FieldCtx& ctx, const Poly& f, u64 c) {
    std::vector<u64> out(f.coeffs());
    for (auto& v : out) v = ctx.mul_raw(f.level(), v, c);
    return Poly(f.level(), std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& ctx, const Poly& f, const Poly& g) {
    require_same_level(f, g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const int lv = f.level();
    std::vector<u64> rem(f.coeffs());
    const auto& d = g.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly(lv, {}), f};
    const u64 lead_inv = ctx.inv_raw(lv, d.back());
    std::vector<u64> quot(static_cast<std::size_t>(f.degree() - dg + 1), 0);
    for (int i = f.degree(); i >= dg; --i) {
        const u64 t = ctx.mul_raw(lv, rem[i], lead_inv);
        if (t == 0) continue;
        quot[i - dg] = t;
        for (int j = 0; j <= dg; ++j) {
            if (d[j] == 0) continue;
            rem[i - dg + j] = ctx.sub_raw(lv, rem[i - dg + j], ctx.mul_raw(lv, t, d[j]));
        }
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Poly(lv, std::move(quot)), Poly(lv, std::move(rem))};
}

Poly poly_rem(const FieldCtx& ctx, const Poly& f, const Poly& g) { return poly_divmod(ctx, f, g).second; }

Poly poly_make_monic(const FieldCtx& ctx, const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return poly_scale(ctx, f, ctx.inv_raw(f.level(), f.coeffs().back()));
}

Poly poly_gcd(const FieldCtx& ctx, const Poly& f, const Poly& g) {
    require_same_level(f, g);
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_rem(ctx, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(ctx, a);
}

Poly poly_powmod(const FieldCtx& ctx, const Poly& f, u128 e, const Poly& g) {
    Poly base = poly_rem(ctx, f, g);
    Poly result = poly_rem(ctx, Poly::constant(f.level(), 1), g);
    while (e) {
        if (e & 1) result = poly_rem(ctx, poly_mul(ctx, result, base), g);
        e >>= 1;
        if (e) base = poly_rem(ctx, poly_mul(ctx, base, base), g);
    }
    return result;
}

FieldElem poly_eval(const FieldCtx& ctx, const Poly& f, const FieldElem& x) {
    if (f.level() > x.level) throw std::invalid_argument("poly_eval: point below coefficient level");
    u64 acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = ctx.add_raw(x.level, ctx.mul_raw(x.level, acc, x.value), f[i]);
    return {acc, x.level};
}

namespace {

// Binary polynomials packed into machine words, bit i = coefficient of x^i.
u64 gf2_mulmod(u64 a, u64 b, u64 m, int dm) {
    u128 prod = 0;
    for (u64 bb = b; bb; bb &= bb - 1) prod ^= static_cast<u128>(a) << __builtin_ctzll(bb);
    for (int i = 2 * dm - 2; i >= dm; --i) {
        if ((prod >> i) & 1) prod ^= static_cast<u128>(m) << (i - dm);
    }
    return static_cast<u64>(prod);
}

int gf2_degree(u64 a) { return a ? 63 - __builtin_clzll(a) : -1; }

u64 gf2_gcd(u64 a, u64 b) {
    while (b) {
        const int db = gf2_degree(b);
        while (gf2_degree(a) >= db) a ^= b << (gf2_degree(a) - db);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible_gf2(const Poly& f) {
    u64 m = 0;
    for (int i = 0; i <= f.degree(); ++i) m |= (f[i] & 1) << i;
    const int n = f.degree();
    std::vector<unsigned> checkpoints;
    for (u64 l : prime_divisors(static_cast<u64>(n))) checkpoints.push_back(static_cast<unsigned>(n / l));
    u64 cur = 2;  // x
    for (int k = 1; k <= n; ++k) {
        cur = gf2_mulmod(cur, cur, m, n);
        if (std::find(checkpoints.begin(), checkpoints.end(), static_cast<unsigned>(k)) != checkpoints.end()) {
            if (gf2_gcd(m, cur ^ 2) != 1) return false;
        }
    }
    return cur == 2;
}

}  // namespace

bool is_irreducible(const FieldCtx& ctx, const Poly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
    if (n == 1) return true;
    if (f[0] == 0) return false;
    const int lv = f.level();
    const u128 card = ctx.cardinality(lv);
    if (card == 2 && n <= 62) return is_irreducible_gf2(f);

    const Poly m = poly_make_monic(ctx, f);
    const Poly x = Poly::x(lv);
    std::vector<unsigned> checkpoints;
    for (u64 l : prime_divisors(static_cast<u64>(n))) checkpoints.push_back(static_cast<unsigned>(n / l));
    Poly cur = x;
    for (int k = 1; k <= n; ++k) {
        cur = poly_powmod(ctx, cur, card, m);
        if (std::find(checkpoints.begin(), checkpoints.end(), static_cast<unsigned>(k)) != checkpoints.end()) {
            if (poly_gcd(ctx, poly_sub(ctx, cur, x), m).degree() != 0) return false;
        }
    }
    return cur == x;
}

void for_each_monic_irreducible(const FieldCtx& ctx, int level, unsigned n,
                                const std::function<bool(const Poly&)>& visit, u64 shard, u64 shard_count) {
    if (n < 1) throw std::invalid_argument("enumerate: degree must be at least 1");
    if (shard_count == 0 || shard >= shard_count) throw std::invalid_argument("enumerate: bad shard");
    const u64 bc = static_cast<u64>(ctx.cardinality(level));
    const u128 count = checked_pow(bc, n);
    check_cap(count, ctx.caps().enum_bits, "enumerate_monic_irreducibles: candidate count");
    std::vector<u64> coeffs(n + 1, 0);
    coeffs[n] = 1;
    for (u128 idx = shard; idx < count; idx += shard_count) {
        u128 rest = idx;
        for (unsigned i = 0; i < n; ++i) {
            coeffs[i] = static_cast<u64>(rest % bc);
            rest /= bc;
        }
        if (n > 1 && coeffs[0] == 0) continue;
        Poly f(level, coeffs);
        if (is_irreducible(ctx, f) && !visit(f)) return;
    }
}

std::vector<Poly> enumerate_monic_irreducibles(const FieldCtx& ctx, unsigned n) {
    std::vector<Poly> out;
    for_each_monic_irreducible(ctx, ctx.q_level(), n, [&](const Poly& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

Poly char_poly(const FieldCtx& ctx, const FieldElem& xi) {
    const int top = ctx.top_level();
    const FieldElem x = ctx.lift(xi, top);
    std::vector<u64> acc{1};
    u64 conj = x.value;
    for (unsigned k = 0; k < ctx.n(); ++k) {
        // acc *= (x - conj)
        std::vector<u64> next(acc.size() + 1, 0);
        const u64 minus = ctx.neg_raw(top, conj);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = ctx.add_raw(top, next[i + 1], acc[i]);
            next[i] = ctx.add_raw(top, next[i], ctx.mul_raw(top, acc[i], minus));
        }
        acc = std::move(next);
        conj = ctx.pow_raw(top, conj, ctx.q());
    }
    for (auto& c : acc) c = ctx.descend({c, top}, ctx.q_level()).value;
    return Poly(ctx.q_level(), std::move(acc));
}

Poly reciprocal(const FieldCtx& ctx, const Poly& h) {
    if (h.is_zero() || h[0] == 0) throw std::domain_error("reciprocal: zero constant term");
    std::vector<u64> rev(h.coeffs().rbegin(), h.coeffs().rend());
    return poly_scale(ctx, Poly(h.level(), std::move(rev)), ctx.inv_raw(h.level(), h[0]));
}

FieldElem sum_of_digits(const FieldCtx& ctx, const Poly& h, const WeightSet& w) {
    u64 acc = 0;
    for (unsigned i : w.elements()) acc = ctx.add_raw(h.level(), acc, h[i]);
    return {acc, h.level()};
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const u64 c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

std::string format_poly_coeffs(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (u64 c : f.coeffs()) {
        if (!out.empty()) out += ',';
        out += std::to_string(c);
    }
    return out;
}

namespace {

u64 parse_u64(const std::string& s, const std::string& context) {
    if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("parse_poly: malformed number '" + s + "' in '" + context + "'");
    }
    return std::stoull(s);
}

}  // namespace

Poly parse_poly(const FieldCtx& ctx, int level, const std::string& raw) {
    std::string text;
    for (char ch : raw) {
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    }
    if (text.empty()) throw std::invalid_argument("parse_poly: empty input");
    std::vector<u64> coeffs;
    auto put = [&](std::size_t deg, u64 c) {
        if (static_cast<u128>(c) >= ctx.cardinality(level)) {
            throw std::invalid_argument("parse_poly: coefficient " + std::to_string(c) + " outside the field");
        }
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = ctx.add_raw(level, coeffs[deg], c);
    };
    if (text.find('x') == std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        std::size_t i = 0;
        while (std::getline(ss, tok, ',')) put(i++, parse_u64(tok, raw));
        if (text.back() == ',') throw std::invalid_argument("parse_poly: trailing comma");
        return Poly(level, std::move(coeffs));
    }
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '+')) {
        if (term.empty()) throw std::invalid_argument("parse_poly: empty term in '" + raw + "'");
        const auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            put(0, parse_u64(term, raw));
            continue;
        }
        std::string coef = term.substr(0, xpos);
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        const u64 c = coef.empty() ? 1 : parse_u64(coef, raw);
        const std::string tail = term.substr(xpos + 1);
        std::size_t deg = 1;
        if (!tail.empty()) {
            if (tail[0] != '^') throw std::invalid_argument("parse_poly: malformed term '" + term + "'");
            deg = static_cast<std::size_t>(parse_u64(tail.substr(1), raw));
            if (deg > 4096) throw std::invalid_argument("parse_poly: degree too large");
        }
        put(deg, c);
    }
    if (text.back() == '+') throw std::invalid_argument("parse_poly: trailing '+'");
    return Poly(level, std::move(coeffs));
}

}  // namespace ffdigits
