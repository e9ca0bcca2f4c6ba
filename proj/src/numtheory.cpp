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

#include "ffdigits/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ffdigits {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's variant; n is odd, composite and not a perfect prime power of a
// small prime (trial division removed those).
u64 rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

std::vector<PrimeFactor> factorize(u64 n, u64 trial_bound) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::map<u64, unsigned> acc;
    for (u64 d = 2; d <= trial_bound && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            ++acc[d];
            n /= d;
        }
    }
    split(n, acc);
    std::vector<PrimeFactor> out;
    for (auto [p, e] : acc) out.push_back({p, e});
    return out;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (const auto& f : factorize(n)) out.push_back(f.prime);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (const auto& f : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            pk *= f.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(u64 m) {
    if (m == 0) throw std::invalid_argument("mobius: m must be positive");
    int sign = 1;
    for (const auto& f : factorize(m)) {
        if (f.exponent > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u128 checked_pow(u64 base, unsigned e) {
    u128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, static_cast<u128>(base), &r)) {
            throw std::overflow_error("checked_pow: result exceeds 128 bits");
        }
    }
    return r;
}

namespace {

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

u128 cyclotomic_value(unsigned n, u64 q) {
    if (n == 0) throw std::invalid_argument("cyclotomic_value: n must be positive");
    u128 num = 1, den = 1;
    for (u64 d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        const u128 term = checked_pow(q, static_cast<unsigned>(d)) - 1;
        u128& side = mu > 0 ? num : den;
        if (__builtin_mul_overflow(side, term, &side)) {
            throw std::overflow_error("cyclotomic_value: intermediate exceeds 128 bits");
        }
        const u128 g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) throw std::logic_error("cyclotomic_value: inexact quotient");
    return num;
}

u128 q_repunit(u64 q, unsigned n) {
    if (q < 2) throw std::invalid_argument("q_repunit: q must be at least 2");
    return (checked_pow(q, n) - 1) / (q - 1);
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    const auto fs = factorize(q);
    if (fs.size() != 1) return std::nullopt;
    return std::pair{fs[0].prime, fs[0].exponent};
}

u64 binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<u64>(r);
}

u128 necklace_count(u64 q, unsigned n) {
    if (n == 0) throw std::invalid_argument("necklace_count: n must be positive");
    __int128 sum = 0;
    for (u64 d : divisors(n)) {
        sum += static_cast<__int128>(mobius(d)) *
               static_cast<__int128>(checked_pow(q, static_cast<unsigned>(n / d)));
    }
    return static_cast<u128>(sum / n);
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace ffdigits
