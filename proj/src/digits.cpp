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

#include "ffdigits/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffdigits {

std::vector<u64> q_digits(u64 t, u64 q) {
    if (q < 2) throw std::invalid_argument("q_digits: base must be at least 2");
    std::vector<u64> out;
    for (; t; t /= q) out.push_back(t % q);
    return out;
}

unsigned weight_q(u64 t, u64 q) {
    const auto d = q_digits(t, q);
    return static_cast<unsigned>(std::count_if(d.begin(), d.end(), [](u64 v) { return v != 0; }));
}

std::vector<unsigned> supp_q(u64 t, u64 q) {
    const auto d = q_digits(t, q);
    std::vector<unsigned> out;
    for (unsigned i = 0; i < d.size(); ++i) {
        if (d[i]) out.push_back(i);
    }
    return out;
}

u64 OmegaSet::modulus() const { return static_cast<u64>(checked_pow(q, n) - 1); }

bool OmegaSet::contains(u64 k) const { return std::binary_search(residues.begin(), residues.end(), k); }

OmegaSet omega(u64 q, unsigned n, const WeightSet& w) {
    if (q < 2) throw std::invalid_argument("omega: q must be at least 2");
    if (n < 1) throw std::invalid_argument("omega: n must be positive");
    if (w.n() != n) throw std::invalid_argument("omega: weight set ambient degree differs from n");
    const u128 full = checked_pow(q, n);
    check_cap(full, 64, "omega: q^n");

    std::vector<u64> powers(n);
    u64 pw = 1;
    for (unsigned i = 0; i < n; ++i, pw *= q) powers[i] = pw;

    OmegaSet out{q, n, w, {}};
    for (unsigned weight : w.elements()) {
        if (weight == 0) {
            out.residues.push_back(0);
            continue;
        }
        if (q == 2 && weight == n) continue;
        // Walk the w-subsets of [0, n-1] via an index vector.
        std::vector<unsigned> idx(weight);
        for (unsigned i = 0; i < weight; ++i) idx[i] = i;
        while (true) {
            u64 k = 0;
            for (unsigned i : idx) k += powers[i];
            out.residues.push_back(k);
            int pos = static_cast<int>(weight) - 1;
            while (pos >= 0 && idx[pos] == n - weight + static_cast<unsigned>(pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (unsigned i = static_cast<unsigned>(pos) + 1; i < weight; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    std::sort(out.residues.begin(), out.residues.end());
    return out;
}

CyclicFn delta_fn(u64 q, unsigned n, const WeightSet& w) {
    const OmegaSet om = omega(q, n, w);
    const u64 size = om.modulus();
    if (size == 0) throw std::invalid_argument("delta_fn: q^n - 1 must be positive");
    CyclicFn f{0, std::vector<u64>(size, 0)};
    for (u64 k : om.residues) f.values[k] = 1;
    return f;
}

}  // namespace ffdigits
