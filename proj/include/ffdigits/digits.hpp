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

#ifndef FFDIGITS_DIGITS_HPP
#define FFDIGITS_DIGITS_HPP

#include <vector>

#include "ffdigits/cyclic.hpp"
#include "ffdigits/numtheory.hpp"
#include "ffdigits/poly.hpp"

namespace ffdigits {

/// Base-q expansion, lowest digit first; t = 0 gives an empty vector.
std::vector<u64> q_digits(u64 t, u64 q);
/// Number of nonzero base-q digits.
unsigned weight_q(u64 t, u64 q);
/// Positions of the nonzero base-q digits, ascending.
std::vector<unsigned> supp_q(u64 t, u64 q);

/// Residues of Z_{q^n-1} whose canonical representative has all base-q
/// digits in {0,1} and Hamming weight in W.
struct OmegaSet {
    u64 q = 2;
    unsigned n = 1;
    WeightSet weights;
    std::vector<u64> residues;  // sorted

    u64 modulus() const;  // q^n - 1
    bool contains(u64 k) const;
};

/// Built from the w-subsets of [0, n-1] for each w in W; Omega(0) = {0} and
/// for q = 2 the weight n contributes nothing.
OmegaSet omega(u64 q, unsigned n, const WeightSet& w);

/// Indicator of omega(q, n, W) on Z_{q^n-1}, F_p-valued (level 0).
CyclicFn delta_fn(u64 q, unsigned n, const WeightSet& w);

}  // namespace ffdigits

#endif  // FFDIGITS_DIGITS_HPP
