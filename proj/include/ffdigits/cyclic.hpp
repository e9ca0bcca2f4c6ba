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

#ifndef FFDIGITS_CYCLIC_HPP
#define FFDIGITS_CYCLIC_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffdigits/field.hpp"

namespace ffdigits {

/// f : Z_N -> (tower level), N = values.size().
struct CyclicFn {
    int level = 0;
    std::vector<u64> values;

    u64 size() const { return values.size(); }
    friend bool operator==(const CyclicFn&, const CyclicFn&) = default;
};

/// Kronecker delta at 0 on Z_N.
CyclicFn kronecker(u64 n, int level = 0);

/// Smallest r >= 1 with v[i] = v[i + r mod N] for all i, found by scanning
/// the divisors of N in increasing order.
template <class T>
u64 least_period(std::span<const T> v) {
    const u64 n = v.size();
    if (n == 0) return 1;
    for (u64 d : divisors(n)) {
        bool periodic = true;
        for (u64 i = 0; i + d < n; ++i) {
            if (v[i] != v[i + d]) {
                periodic = false;
                break;
            }
        }
        if (periodic) return d;
    }
    return n;
}

u64 least_period(const CyclicFn& f);

/// f_k(i) = f(i + k).
CyclicFn shift(const CyclicFn& f, std::int64_t k);
/// f*(i) = f(-(1 + i)).
CyclicFn reversal(const CyclicFn& f);
/// Swaps 0 and 1; throws std::invalid_argument unless f is {0,1}-valued.
CyclicFn complement(const CyclicFn& f);
/// f^sigma(i) = sigma(f(i)); `sigma` is a table over every element of the
/// value level and must be a bijection.
CyclicFn permute(const FieldCtx& ctx, const CyclicFn& f, std::span<const u64> sigma);
/// pi o f with values landing in `target_level`.
CyclicFn compose(const CyclicFn& f, const std::function<u64(u64)>& pi, int target_level);

CyclicFn lift(const FieldCtx& ctx, const CyclicFn& f, int level);
CyclicFn cyclic_add(const FieldCtx& ctx, const CyclicFn& f, const CyclicFn& g);
CyclicFn cyclic_sub(const FieldCtx& ctx, const CyclicFn& f, const CyclicFn& g);
CyclicFn cyclic_scale(const FieldCtx& ctx, const CyclicFn& f, const FieldElem& c);

/// F_zeta[f](i) = sum_j f(j) zeta^{ij}. zeta must have order exactly N.
CyclicFn dft(const FieldCtx& ctx, const FieldElem& zeta, const CyclicFn& f);
/// One output index of the transform, O(N).
FieldElem dft_at(const FieldCtx& ctx, const FieldElem& zeta, const CyclicFn& f, u64 i);
/// N^{-1} F_{zeta^{-1}}[g].
CyclicFn idft(const FieldCtx& ctx, const FieldElem& zeta, const CyclicFn& g);

CyclicFn convolve(const FieldCtx& ctx, const CyclicFn& f, const CyclicFn& g);
/// m-fold convolution; m = 0 gives the Kronecker delta.
CyclicFn conv_power(const FieldCtx& ctx, const CyclicFn& f, unsigned m);

enum class PeriodVerdict { DegreeNGuaranteed, Inconclusive };

std::string to_string(PeriodVerdict v);

/// (q^n - 1) / Phi_n(q).
u128 degree_threshold(u64 q, unsigned n);

/// DegreeNGuaranteed iff r does not divide (q^n - 1)/Phi_n(q).
/// Throws std::invalid_argument unless r | q^n - 1.
PeriodVerdict period_criterion(u64 r, u64 q, unsigned n);

/// {"N": ..., "level": ..., "values": ["1,0", ...]}
nlohmann::json to_json(const FieldCtx& ctx, const CyclicFn& f);
CyclicFn cyclic_from_json(const FieldCtx& ctx, const nlohmann::json& j);

}  // namespace ffdigits

#endif  // FFDIGITS_CYCLIC_HPP
