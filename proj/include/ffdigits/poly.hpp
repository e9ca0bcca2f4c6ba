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

#ifndef FFDIGITS_POLY_HPP
#define FFDIGITS_POLY_HPP

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "ffdigits/field.hpp"

namespace ffdigits {

/// Dense polynomial over one tower level, little-endian packed coefficients.
/// Never stores trailing zeros; the zero polynomial has no coefficients.
class Poly {
   public:
    Poly() = default;
    Poly(int level, std::vector<u64> coeffs);
    Poly(int level, std::initializer_list<u64> coeffs) : Poly(level, std::vector<u64>(coeffs)) {}

    static Poly constant(int level, u64 c) { return Poly(level, {c}); }
    static Poly x(int level) { return Poly(level, {0, 1}); }

    int level() const { return level_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    u64 operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<u64>& coeffs() const { return coeffs_; }

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    void normalize();
    int level_ = 0;
    std::vector<u64> coeffs_;
};

/// Subset of [0, n], n <= 63.
class WeightSet {
   public:
    WeightSet() = default;
    WeightSet(unsigned n, u64 mask);
    static WeightSet of(unsigned n, std::initializer_list<unsigned> ws);
    static WeightSet from(unsigned n, const std::vector<unsigned>& ws);
    /// [lo, hi] inclusive; empty if lo > hi.
    static WeightSet interval(unsigned n, unsigned lo, unsigned hi);
    static WeightSet all(unsigned n) { return interval(n, 0, n); }

    unsigned n() const { return n_; }
    u64 mask() const { return mask_; }
    bool contains(unsigned w) const { return w <= n_ && ((mask_ >> w) & 1); }
    bool empty() const { return mask_ == 0; }
    unsigned size() const;
    std::vector<unsigned> elements() const;
    /// n - W.
    WeightSet reflect() const;
    WeightSet with(unsigned w) const;
    WeightSet without(unsigned w) const;
    /// "0,2,3"; empty set is "".
    std::string to_string() const;

    friend bool operator==(const WeightSet&, const WeightSet&) = default;

   private:
    unsigned n_ = 0;
    u64 mask_ = 0;
};

WeightSet reflect(const WeightSet& w);

Poly poly_add(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly poly_sub(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly poly_mul(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly poly_scale(const FieldCtx& ctx, const Poly& f, u64 c);
/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> poly_divmod(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly poly_rem(const FieldCtx& ctx, const Poly& f, const Poly& g);
/// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly poly_make_monic(const FieldCtx& ctx, const Poly& f);
/// f^e mod g.
Poly poly_powmod(const FieldCtx& ctx, const Poly& f, u128 e, const Poly& g);
FieldElem poly_eval(const FieldCtx& ctx, const Poly& f, const FieldElem& x);

/// Rabin test over the coefficient level: x^{Q^n} = x mod f and
/// gcd(x^{Q^{n/l}} - x, f) = 1 for every prime l | n, Q the level's size.
/// Throws std::invalid_argument for constants.
bool is_irreducible(const FieldCtx& ctx, const Poly& f);

/// Calls `visit` on every monic irreducible of degree n over `level`, in
/// increasing packed-index order of the lower coefficients (constant term
/// least significant). Only candidate indices congruent to `shard` modulo
/// `shard_count` are examined. `visit` returning false stops the scan.
void for_each_monic_irreducible(const FieldCtx& ctx, int level, unsigned n,
                                const std::function<bool(const Poly&)>& visit,
                                u64 shard = 0, u64 shard_count = 1);

/// Every monic irreducible of degree n over F_q (ctx.q_level()), in scan order.
std::vector<Poly> enumerate_monic_irreducibles(const FieldCtx& ctx, unsigned n);

/// h_xi(x) = prod_k (x - xi^{q^k}), returned over F_q.
Poly char_poly(const FieldCtx& ctx, const FieldElem& xi);

/// Monic reciprocal h(0)^{-1} x^{deg h} h(1/x); throws std::domain_error if h(0) = 0.
Poly reciprocal(const FieldCtx& ctx, const Poly& h);

/// S_W(h) = sum over w in W of [x^w] h. Indices above deg h contribute 0.
FieldElem sum_of_digits(const FieldCtx& ctx, const Poly& h, const WeightSet& w);

/// "x^3+x+1"; coefficients other than 1 are printed as decimal packed values, e.g. "2x^2+x+2".
std::string format_poly(const Poly& f);
/// "1,1,0,1".
std::string format_poly_coeffs(const Poly& f);
/// Accepts either form. Throws std::invalid_argument on malformed text or
/// coefficients outside the level.
Poly parse_poly(const FieldCtx& ctx, int level, const std::string& text);

}  // namespace ffdigits

#endif  // FFDIGITS_POLY_HPP
