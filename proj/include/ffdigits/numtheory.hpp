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

#ifndef FFDIGITS_NUMTHEORY_HPP
#define FFDIGITS_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ffdigits {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimeFactor {
    u64 prime;
    unsigned exponent;
    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Trial division up to `trial_bound`, Pollard-rho (Brent) on the cofactor.
/// Result is sorted by prime.
std::vector<PrimeFactor> factorize(u64 n, u64 trial_bound = u64{1} << 20);

std::vector<u64> prime_divisors(u64 n);

/// All positive divisors of n, ascending.
std::vector<u64> divisors(u64 n);

int mobius(u64 m);

/// Phi_n(q) evaluated as prod_{d|n} (q^d - 1)^{mu(n/d)}.
/// Throws std::overflow_error if an intermediate leaves 128 bits.
u128 cyclotomic_value(unsigned n, u64 q);

/// Q_n = (q^n - 1) / (q - 1).
u128 q_repunit(u64 q, unsigned n);

/// base^e, throws std::overflow_error past 128 bits.
u128 checked_pow(u64 base, unsigned e);

/// (p, s) with q = p^s, or nullopt if q is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

u64 binomial(unsigned n, unsigned k);

/// Number of monic irreducibles of degree n over F_q: (1/n) sum_{d|n} mu(d) q^{n/d}.
u128 necklace_count(u64 q, unsigned n);

std::string to_string(u128 v);

}  // namespace ffdigits

#endif  // FFDIGITS_NUMTHEORY_HPP
