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

#include "ffdigits/field.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

#include "ffdigits/poly.hpp"

namespace ffdigits {

namespace {

constexpr unsigned kMaxDegree = 64;

unsigned log2_exact(u64 v) {
    if (v == 0 || (v & (v - 1)) != 0) return 0;
    return static_cast<unsigned>(__builtin_ctzll(v));
}

}  // namespace

Caps Caps::from_env() {
    Caps caps;
    if (const char* env = std::getenv("FFDIGITS_CAP_BITS")) {
        char* end = nullptr;
        const unsigned long bits = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && bits >= 1 && bits <= 64) {
            caps.field_bits = static_cast<unsigned>(bits);
        }
    }
    return caps;
}

void check_cap(u128 value, unsigned bits, const char* what) {
    const u128 limit = bits >= 127 ? ~u128{0} : (u128{1} << bits);
    if (value > limit) {
        throw CapError(std::string(what) + ": " + to_string(value) + " exceeds cap 2^" +
                       std::to_string(bits));
    }
}

std::vector<u64> find_modulus(const FieldCtx& ctx, int base, unsigned degree, ModulusChoice choice) {
    const u64 bc = static_cast<u64>(ctx.cardinality(base));
    const u128 count = checked_pow(bc, degree);
    std::vector<u64> coeffs(degree + 1, 0);
    coeffs[degree] = 1;
    for (u128 step = 0; step < count; ++step) {
        u128 idx = choice == ModulusChoice::LexFirst ? step : count - 1 - step;
        for (unsigned i = 0; i < degree; ++i) {
            coeffs[i] = static_cast<u64>(idx % bc);
            idx /= bc;
        }
        if (is_irreducible(ctx, Poly(base, coeffs))) return coeffs;
    }
    throw std::logic_error("find_modulus: no irreducible polynomial found");
}

FieldCtx FieldCtx::make(u64 p, unsigned s, unsigned n, const Caps& caps, ModulusChoice choice) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: characteristic " + std::to_string(p) + " is not prime");
    if (s < 1 || n < 1) throw std::invalid_argument("make_field: degrees must be at least 1");
    if (static_cast<u64>(s) * n > kMaxDegree) throw CapError("make_field: total degree exceeds 64");
    check_cap(checked_pow(p, s * n), std::min(caps.field_bits, 64u), "make_field: field cardinality");

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.s_ = s;
    ctx.n_ = n;
    ctx.caps_ = caps;
    ctx.q_ = static_cast<u64>(checked_pow(p, s));

    FieldLevel prime;
    prime.cardinality = p;
    prime.base_cardinality = p;
    ctx.levels_.push_back(prime);

    if (s > 1) ctx.push_level(0, find_modulus(ctx, 0, s, choice));
    ctx.q_level_ = ctx.level_count() - 1;
    if (n > 1) ctx.push_level(ctx.q_level_, find_modulus(ctx, ctx.q_level_, n, choice));
    ctx.top_level_ = ctx.level_count() - 1;

    ctx.group_order_ = static_cast<u64>(ctx.cardinality(ctx.top_level_) - 1);
    ctx.group_order_factors_ = ctx.group_order_ > 1 ? factorize(ctx.group_order_, caps.trial_division_bound)
                                                    : std::vector<PrimeFactor>{};
    ctx.primitive_ = ctx.find_primitive();
    return ctx;
}

FieldCtx make_field_q(u64 q, unsigned n, const Caps& caps, ModulusChoice choice) {
    const auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("make_field: q = " + std::to_string(q) + " is not a prime power");
    return FieldCtx::make(pp->first, pp->second, n, caps, choice);
}

void FieldCtx::push_level(int base, std::vector<u64> modulus) {
    FieldLevel lv;
    lv.base = base;
    lv.degree = static_cast<unsigned>(modulus.size() - 1);
    lv.modulus = std::move(modulus);
    lv.base_cardinality = static_cast<u64>(levels_[base].cardinality);
    lv.cardinality = checked_pow(lv.base_cardinality, lv.degree);
    lv.digit_bits = log2_exact(lv.base_cardinality);
    lv.prime_degree = levels_[base].prime_degree * lv.degree;
    levels_.push_back(std::move(lv));
}

const FieldLevel& FieldCtx::level(int index) const {
    require_level(index);
    return levels_[index];
}

void FieldCtx::require_level(int index) const {
    if (index < 0 || index >= level_count()) {
        throw std::invalid_argument("field level " + std::to_string(index) + " does not exist");
    }
}

void FieldCtx::require_same(const FieldElem& a, const FieldElem& b) const {
    if (a.level != b.level) throw std::invalid_argument("field level mismatch");
    require_level(a.level);
}

FieldElem FieldCtx::zero(int level) const { return element(level, 0); }
FieldElem FieldCtx::one(int level) const { return element(level, 1); }

FieldElem FieldCtx::element(int level, u64 value) const {
    require_level(level);
    if (static_cast<u128>(value) >= levels_[level].cardinality) {
        throw std::invalid_argument("element value " + std::to_string(value) + " outside level " +
                                    std::to_string(level));
    }
    return {value, level};
}

FieldElem FieldCtx::from_coeffs(int level, std::span<const u64> coeffs) const {
    require_level(level);
    const FieldLevel& lv = levels_[level];
    if (lv.base < 0) {
        if (coeffs.size() != 1) throw std::invalid_argument("prime field element takes one coefficient");
        return element(level, coeffs[0]);
    }
    if (coeffs.size() != lv.degree) throw std::invalid_argument("coefficient count must equal extension degree");
    std::array<u64, kMaxDegree> digits{};
    for (unsigned i = 0; i < lv.degree; ++i) {
        if (static_cast<u128>(coeffs[i]) >= levels_[lv.base].cardinality) {
            throw std::invalid_argument("coefficient outside base level");
        }
        digits[i] = coeffs[i];
    }
    return {pack(level, digits.data()), level};
}

std::vector<u64> FieldCtx::coeffs(const FieldElem& x) const {
    require_level(x.level);
    const FieldLevel& lv = levels_[x.level];
    if (lv.base < 0) return {x.value};
    std::array<u64, kMaxDegree> digits{};
    unpack(x.level, x.value, digits.data());
    return {digits.begin(), digits.begin() + lv.degree};
}

unsigned FieldCtx::unpack(int level, u64 v, u64* digits) const {
    const FieldLevel& lv = levels_[level];
    if (lv.digit_bits) {
        const u64 mask = lv.base_cardinality - 1;
        for (unsigned i = 0; i < lv.degree; ++i) {
            digits[i] = v & mask;
            v = lv.digit_bits >= 64 ? 0 : v >> lv.digit_bits;
        }
    } else {
        for (unsigned i = 0; i < lv.degree; ++i) {
            digits[i] = v % lv.base_cardinality;
            v /= lv.base_cardinality;
        }
    }
    return lv.degree;
}

u64 FieldCtx::pack(int level, const u64* digits) const {
    const FieldLevel& lv = levels_[level];
    u64 v = 0;
    for (unsigned i = lv.degree; i-- > 0;) {
        v = lv.digit_bits ? (v << lv.digit_bits) | digits[i] : v * lv.base_cardinality + digits[i];
    }
    return v;
}

u64 FieldCtx::add_raw(int level, u64 a, u64 b) const {
    if (p_ == 2) return a ^ b;
    const FieldLevel& lv = levels_[level];
    if (lv.base < 0) return a >= p_ - b ? a - (p_ - b) : a + b;
    std::array<u64, kMaxDegree> da{}, db{};
    unpack(level, a, da.data());
    unpack(level, b, db.data());
    for (unsigned i = 0; i < lv.degree; ++i) da[i] = add_raw(lv.base, da[i], db[i]);
    return pack(level, da.data());
}

u64 FieldCtx::neg_raw(int level, u64 a) const {
    if (p_ == 2) return a;
    const FieldLevel& lv = levels_[level];
    if (lv.base < 0) return a == 0 ? 0 : p_ - a;
    std::array<u64, kMaxDegree> da{};
    unpack(level, a, da.data());
    for (unsigned i = 0; i < lv.degree; ++i) da[i] = neg_raw(lv.base, da[i]);
    return pack(level, da.data());
}

u64 FieldCtx::sub_raw(int level, u64 a, u64 b) const { return add_raw(level, a, neg_raw(level, b)); }

u64 FieldCtx::mul_raw(int level, u64 a, u64 b) const {
    const FieldLevel& lv = levels_[level];
    if (lv.base < 0) return p_ == 2 ? (a & b) : mul_mod(a, b, p_);
    if (a == 0 || b == 0) return 0;
    const unsigned d = lv.degree;
    if (p_ == 2 && lv.base == 0) {
        // Carry-less product then reduction by the binary modulus.
        u128 prod = 0;
        for (u64 bb = b; bb; bb &= bb - 1) prod ^= static_cast<u128>(a) << __builtin_ctzll(bb);
        u128 mod = 0;
        for (unsigned i = 0; i <= d; ++i) mod |= static_cast<u128>(lv.modulus[i]) << i;
        for (int i = 2 * static_cast<int>(d) - 2; i >= static_cast<int>(d); --i) {
            if ((prod >> i) & 1) prod ^= mod << (i - d);
        }
        return static_cast<u64>(prod);
    }
    std::array<u64, kMaxDegree> da{}, db{};
    std::array<u64, 2 * kMaxDegree> prod{};
    unpack(level, a, da.data());
    unpack(level, b, db.data());
    const int base = lv.base;
    for (unsigned i = 0; i < d; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (db[j] == 0) continue;
            prod[i + j] = add_raw(base, prod[i + j], mul_raw(base, da[i], db[j]));
        }
    }
    for (int i = 2 * static_cast<int>(d) - 2; i >= static_cast<int>(d); --i) {
        const u64 t = prod[i];
        if (t == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (lv.modulus[j] == 0) continue;
            prod[i - d + j] = sub_raw(base, prod[i - d + j], mul_raw(base, t, lv.modulus[j]));
        }
        prod[i] = 0;
    }
    return pack(level, prod.data());
}

u64 FieldCtx::pow_raw(int level, u64 a, u128 e) const {
    u64 result = 1;
    while (e) {
        if (e & 1) result = mul_raw(level, result, a);
        e >>= 1;
        if (e) a = mul_raw(level, a, a);
    }
    return result;
}

u64 FieldCtx::inv_raw(int level, u64 a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow_raw(level, a, levels_[level].cardinality - 2);
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    require_same(a, b);
    return {add_raw(a.level, a.value, b.value), a.level};
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    require_same(a, b);
    return {sub_raw(a.level, a.value, b.value), a.level};
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    require_level(a.level);
    return {neg_raw(a.level, a.value), a.level};
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    require_same(a, b);
    return {mul_raw(a.level, a.value, b.value), a.level};
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    require_level(a.level);
    return {inv_raw(a.level, a.value), a.level};
}

FieldElem FieldCtx::pow(const FieldElem& a, u128 e) const {
    require_level(a.level);
    return {pow_raw(a.level, a.value, e), a.level};
}

FieldElem FieldCtx::lift(const FieldElem& x, int level) const {
    require_level(level);
    if (x.level > level) throw std::invalid_argument("lift: target level is below the element's level");
    return {x.value, level};
}

bool FieldCtx::in_level(const FieldElem& x, int level) const {
    require_level(level);
    return static_cast<u128>(x.value) < levels_[level].cardinality;
}

FieldElem FieldCtx::descend(const FieldElem& x, int level) const {
    if (!in_level(x, level)) throw std::domain_error("descend: element is not in the requested subfield");
    return {x.value, level};
}

bool FieldCtx::has_order(const FieldElem& x, u64 order) const {
    require_level(x.level);
    if (order == 0 || x.value == 0) return false;
    if (pow_raw(x.level, x.value, order) != 1) return false;
    for (u64 l : prime_divisors(order)) {
        if (pow_raw(x.level, x.value, order / l) == 1) return false;
    }
    return true;
}

FieldElem FieldCtx::find_primitive() const {
    const u64 n = group_order_;
    if (n == 1) return one(top_level_);
    for (u64 idx = 2;; ++idx) {
        bool primitive = pow_raw(top_level_, idx, n) == 1;
        for (std::size_t i = 0; primitive && i < group_order_factors_.size(); ++i) {
            primitive = pow_raw(top_level_, idx, n / group_order_factors_[i].prime) != 1;
        }
        if (primitive) return {idx, top_level_};
    }
}

FieldElem FieldCtx::frobenius(const FieldElem& x, unsigned k) const {
    require_level(x.level);
    if (k >= n_) throw std::invalid_argument("frobenius: k must be below n");
    u64 v = x.value;
    for (unsigned i = 0; i < k; ++i) v = pow_raw(x.level, v, q_);
    return {v, x.level};
}

unsigned FieldCtx::element_degree(const FieldElem& x) const {
    require_level(x.level);
    u64 conj = x.value;
    for (unsigned d = 1; d <= n_; ++d) {
        conj = pow_raw(x.level, conj, q_);
        if (n_ % d == 0 && conj == x.value) return d;
    }
    throw std::logic_error("element_degree: element outside F_{q^n}");
}

std::pair<FieldElem, FieldElem> FieldCtx::trace_and_norm(const FieldElem& x) const {
    require_level(x.level);
    u64 trace = 0, norm = 1, conj = x.value;
    for (unsigned k = 0; k < n_; ++k) {
        trace = add_raw(x.level, trace, conj);
        norm = mul_raw(x.level, norm, conj);
        conj = pow_raw(x.level, conj, q_);
    }
    return {descend({trace, x.level}, q_level_), descend({norm, x.level}, q_level_)};
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << p_ << " <= F_" << q_ << " <= F_" << to_string(cardinality(top_level_)) << " (q=" << q_
       << ", n=" << n_ << ", N=" << group_order_ << ")";
    return os.str();
}

std::string format_elem(const FieldCtx& ctx, const FieldElem& x) {
    std::string out;
    for (u64 c : ctx.coeffs(x)) {
        if (!out.empty()) out += ',';
        out += std::to_string(c);
    }
    return out;
}

FieldElem parse_elem(const FieldCtx& ctx, int level, const std::string& text) {
    std::vector<u64> digits;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("parse_elem: malformed coefficient '" + tok + "'");
        }
        digits.push_back(std::stoull(tok));
    }
    return ctx.from_coeffs(level, digits);
}

}  // namespace ffdigits
