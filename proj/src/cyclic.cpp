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

#include "ffdigits/cyclic.hpp"

#include <algorithm>

namespace ffdigits {

CyclicFn kronecker(u64 n, int level) {
    if (n == 0) throw std::invalid_argument("kronecker: N must be positive");
    CyclicFn f{level, std::vector<u64>(n, 0)};
    f.values[0] = 1;
    return f;
}

u64 least_period(const CyclicFn& f) { return least_period(std::span<const u64>(f.values)); }

CyclicFn shift(const CyclicFn& f, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(f.size());
    CyclicFn out{f.level, std::vector<u64>(f.size())};
    const std::int64_t off = ((k % n) + n) % n;
    for (std::int64_t i = 0; i < n; ++i) out.values[i] = f.values[(i + off) % n];
    return out;
}

CyclicFn reversal(const CyclicFn& f) {
    const u64 n = f.size();
    CyclicFn out{f.level, std::vector<u64>(n)};
    // -(1 + i) mod N = N - 1 - i
    for (u64 i = 0; i < n; ++i) out.values[i] = f.values[n - 1 - i];
    return out;
}

CyclicFn complement(const CyclicFn& f) {
    CyclicFn out = f;
    for (auto& v : out.values) {
        if (v > 1) throw std::invalid_argument("complement: function is not {0,1}-valued");
        v ^= 1;
    }
    return out;
}

CyclicFn permute(const FieldCtx& ctx, const CyclicFn& f, std::span<const u64> sigma) {
    const u128 card = ctx.cardinality(f.level);
    if (static_cast<u128>(sigma.size()) != card) throw std::invalid_argument("permute: table size differs from field size");
    std::vector<bool> seen(sigma.size(), false);
    for (u64 v : sigma) {
        if (v >= sigma.size() || seen[v]) throw std::invalid_argument("permute: table is not a bijection");
        seen[v] = true;
    }
    CyclicFn out{f.level, std::vector<u64>(f.size())};
    for (u64 i = 0; i < f.size(); ++i) out.values[i] = sigma[f.values[i]];
    return out;
}

CyclicFn compose(const CyclicFn& f, const std::function<u64(u64)>& pi, int target_level) {
    CyclicFn out{target_level, std::vector<u64>(f.size())};
    std::transform(f.values.begin(), f.values.end(), out.values.begin(), pi);
    return out;
}

CyclicFn lift(const FieldCtx& ctx, const CyclicFn& f, int level) {
    ctx.level(level);
    if (f.level > level) throw std::invalid_argument("lift: target level is below the function's level");
    return {level, f.values};
}

namespace {

void require_same_size(const CyclicFn& f, const CyclicFn& g) {
    if (f.size() != g.size()) throw std::invalid_argument("cyclic functions have different N");
}

}  // namespace

CyclicFn cyclic_add(const FieldCtx& ctx, const CyclicFn& f, const CyclicFn& g) {
    require_same_size(f, g);
    const int lv = std::max(f.level, g.level);
    CyclicFn out{lv, std::vector<u64>(f.size())};
    for (u64 i = 0; i < f.size(); ++i) out.values[i] = ctx.add_raw(lv, f.values[i], g.values[i]);
    return out;
}

CyclicFn cyclic_sub(const FieldCtx& ctx, const CyclicFn& f, const CyclicFn& g) {
    require_same_size(f, g);
    const int lv = std::max(f.level, g.level);
    CyclicFn out{lv, std::vector<u64>(f.size())};
    for (u64 i = 0; i < f.size(); ++i) out.values[i] = ctx.sub_raw(lv, f.values[i], g.values[i]);
    return out;
}

CyclicFn cyclic_scale(const FieldCtx& ctx, const CyclicFn& f, const FieldElem& c) {
    const int lv = std::max(f.level, c.level);
    CyclicFn out{lv, std::vector<u64>(f.size())};
    for (u64 i = 0; i < f.size(); ++i) out.values[i] = ctx.mul_raw(lv, f.values[i], c.value);
    return out;
}

namespace {

void check_transform(const FieldCtx& ctx, const FieldElem& zeta, const CyclicFn& f) {
    const u64 n = f.size();
    if (n == 0) throw std::invalid_argument("dft: empty function");
    check_cap(n, ctx.caps().dft_bits, "dft: group order");
    if (f.level > zeta.level) throw std::invalid_argument("dft: values do not embed in zeta's field");
    if (!ctx.has_order(zeta, n)) throw std::invalid_argument("dft: zeta does not have order N");
}

FieldElem dft_at_unchecked(const FieldCtx& ctx, int lv, u64 w, const CyclicFn& f) {
    u64 acc = 0, t = 1;
    for (u64 j = 0; j < f.size(); ++j) {
        if (f.values[j] != 0) acc = ctx.add_raw(lv, acc, ctx.mul_raw(lv, f.values[j], t));
        t = ctx.mul_raw(lv, t, w);
    }
    return {acc, lv};
}

}  // namespace

CyclicFn dft(const FieldCtx& ctx, const FieldElem& zeta, const CyclicFn& f) {
    check_transform(ctx, zeta, f);
    const int lv = zeta.level;
    CyclicFn out{lv, std::vector<u64>(f.size())};
    u64 w = 1;  // zeta^i
    for (u64 i = 0; i < f.size(); ++i) {
        out.values[i] = dft_at_unchecked(ctx, lv, w, f).value;
        w = ctx.mul_raw(lv, w, zeta.value);
    }
    return out;
}

FieldElem dft_at(const FieldCtx& ctx, const FieldElem& zeta, const CyclicFn& f, u64 i) {
    check_transform(ctx, zeta, f);
    return dft_at_unchecked(ctx, zeta.level, ctx.pow_raw(zeta.level, zeta.value, i % f.size()), f);
}

CyclicFn idft(const FieldCtx& ctx, const FieldElem& zeta, const CyclicFn& g) {
    check_transform(ctx, zeta, g);
    const u64 n_mod_p = g.size() % ctx.characteristic();
    if (n_mod_p == 0) throw std::domain_error("idft: N is not invertible in the field");
    const FieldElem n_inv{ctx.inv_raw(0, n_mod_p), zeta.level};
    return cyclic_scale(ctx, dft(ctx, ctx.inv(zeta), g), n_inv);
}

CyclicFn convolve(const FieldCtx& ctx, const CyclicFn& f, const CyclicFn& g) {
    require_same_size(f, g);
    const u64 n = f.size();
    const int lv = std::max(f.level, g.level);
    std::vector<u64> nz_f, nz_g;
    for (u64 j = 0; j < n; ++j) {
        if (f.values[j]) nz_f.push_back(j);
        if (g.values[j]) nz_g.push_back(j);
    }
    CyclicFn out{lv, std::vector<u64>(n, 0)};
    for (u64 j : nz_f) {
        for (u64 k : nz_g) {
            const u64 i = j + k >= n ? j + k - n : j + k;
            out.values[i] = ctx.add_raw(lv, out.values[i], ctx.mul_raw(lv, f.values[j], g.values[k]));
        }
    }
    return out;
}

CyclicFn conv_power(const FieldCtx& ctx, const CyclicFn& f, unsigned m) {
    if (m == 0) return kronecker(f.size(), f.level);
    CyclicFn out = f;
    for (unsigned i = 1; i < m; ++i) out = convolve(ctx, out, f);
    return out;
}

std::string to_string(PeriodVerdict v) {
    return v == PeriodVerdict::DegreeNGuaranteed ? "DegreeNGuaranteed" : "Inconclusive";
}

u128 degree_threshold(u64 q, unsigned n) { return (checked_pow(q, n) - 1) / cyclotomic_value(n, q); }

PeriodVerdict period_criterion(u64 r, u64 q, unsigned n) {
    const u128 order = checked_pow(q, n) - 1;
    if (r == 0 || order % r != 0) {
        throw std::invalid_argument("period_criterion: r = " + std::to_string(r) + " does not divide q^n - 1");
    }
    return degree_threshold(q, n) % r == 0 ? PeriodVerdict::Inconclusive : PeriodVerdict::DegreeNGuaranteed;
}

nlohmann::json to_json(const FieldCtx& ctx, const CyclicFn& f) {
    nlohmann::json values = nlohmann::json::array();
    for (u64 v : f.values) values.push_back(format_elem(ctx, {v, f.level}));
    return {{"N", f.size()}, {"level", f.level}, {"values", values}};
}

CyclicFn cyclic_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
    CyclicFn f;
    f.level = j.at("level").get<int>();
    for (const auto& v : j.at("values")) f.values.push_back(parse_elem(ctx, f.level, v.get<std::string>()).value);
    if (f.size() != j.at("N").get<u64>()) throw std::invalid_argument("cyclic_from_json: N does not match values");
    return f;
}

}  // namespace ffdigits
