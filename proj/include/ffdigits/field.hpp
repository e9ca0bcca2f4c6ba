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

#ifndef FFDIGITS_FIELD_HPP
#define FFDIGITS_FIELD_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffdigits/numtheory.hpp"

namespace ffdigits {

/// Size limits. Cardinalities are bounded by 2^bits.
struct Caps {
    unsigned field_bits = 64;  // any field level
    unsigned dft_bits = 40;    // group order of DFT-bearing workflows
    unsigned enum_bits = 32;   // candidate count of exhaustive polynomial scans
    u64 trial_division_bound = u64{1} << 20;

    /// Defaults, with FFDIGITS_CAP_BITS (if set) overriding field_bits.
    static Caps from_env();
};

class CapError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Throws CapError when value > 2^bits.
void check_cap(u128 value, unsigned bits, const char* what);

enum class ModulusChoice { LexFirst, LexLast };

/*
   An element of one level of the tower. The payload is the coefficient
   vector over the level's base, packed as the integer sum c_i * |base|^i
   (each c_i itself packed the same way). Embedding a level into the next
   one is the identity on packed values, so subfield elements keep their
   value when lifted.
*/
struct FieldElem {
    u64 value = 0;
    int level = 0;
    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

struct FieldLevel {
    int base = -1;             // -1 marks the prime field
    unsigned degree = 1;       // over base
    std::vector<u64> modulus;  // monic, low-to-high, degree + 1 packed base elements
    u128 cardinality = 0;
    u64 base_cardinality = 1;
    unsigned digit_bits = 0;  // log2(base_cardinality) when that is a power of two
    unsigned prime_degree = 1;
};

class FieldCtx {
   public:
    /// Tower F_p <= F_q <= F_{q^n} with q = p^s. Moduli are the first (or last)
    /// monic irreducible in packed-index order, constant term least significant.
    static FieldCtx make(u64 p, unsigned s, unsigned n, const Caps& caps = {},
                         ModulusChoice choice = ModulusChoice::LexFirst);

    u64 characteristic() const { return p_; }
    unsigned s() const { return s_; }
    unsigned n() const { return n_; }
    u64 q() const { return q_; }
    /// N = q^n - 1.
    u64 group_order() const { return group_order_; }
    const std::vector<PrimeFactor>& group_order_factors() const { return group_order_factors_; }
    const Caps& caps() const { return caps_; }

    int prime_level() const { return 0; }
    int q_level() const { return q_level_; }
    int top_level() const { return top_level_; }
    int level_count() const { return static_cast<int>(levels_.size()); }
    const FieldLevel& level(int index) const;
    u128 cardinality(int index) const { return level(index).cardinality; }

    FieldElem zero(int level) const;
    FieldElem one(int level) const;
    FieldElem element(int level, u64 value) const;
    FieldElem from_coeffs(int level, std::span<const u64> coeffs) const;
    std::vector<u64> coeffs(const FieldElem& x) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, u128 e) const;

    FieldElem lift(const FieldElem& x, int level) const;
    /// Throws std::domain_error when x is not in the image of `level`.
    FieldElem descend(const FieldElem& x, int level) const;
    bool in_level(const FieldElem& x, int level) const;

    /// The designated primitive element of the top level (computed at construction).
    const FieldElem& primitive() const { return primitive_; }
    /// True iff x has multiplicative order exactly `order`.
    bool has_order(const FieldElem& x, u64 order) const;

    FieldElem frobenius(const FieldElem& x, unsigned k) const;
    unsigned element_degree(const FieldElem& x) const;
    /// Trace and norm down to F_q, returned at q_level().
    std::pair<FieldElem, FieldElem> trace_and_norm(const FieldElem& x) const;

    // Unchecked arithmetic on packed values, for inner loops.
    u64 add_raw(int level, u64 a, u64 b) const;
    u64 sub_raw(int level, u64 a, u64 b) const;
    u64 neg_raw(int level, u64 a) const;
    u64 mul_raw(int level, u64 a, u64 b) const;
    u64 pow_raw(int level, u64 a, u128 e) const;
    u64 inv_raw(int level, u64 a) const;

    std::string describe() const;

   private:
    FieldCtx() = default;
    void require_level(int index) const;
    void require_same(const FieldElem& a, const FieldElem& b) const;
    unsigned unpack(int level, u64 v, u64* digits) const;
    u64 pack(int level, const u64* digits) const;
    void push_level(int base, std::vector<u64> modulus);
    FieldElem find_primitive() const;

    u64 p_ = 2;
    unsigned s_ = 1;
    unsigned n_ = 1;
    u64 q_ = 2;
    u64 group_order_ = 1;
    int q_level_ = 0;
    int top_level_ = 0;
    Caps caps_;
    std::vector<FieldLevel> levels_;
    std::vector<PrimeFactor> group_order_factors_;
    FieldElem primitive_;

    friend std::vector<u64> find_modulus(const FieldCtx&, int, unsigned, ModulusChoice);
};

inline FieldCtx make_field(u64 p, unsigned s, unsigned n, const Caps& caps = {},
                           ModulusChoice choice = ModulusChoice::LexFirst) {
    return FieldCtx::make(p, s, n, caps, choice);
}

/// Field with q elements at F_q level and extension degree n; q must be a prime power.
FieldCtx make_field_q(u64 q, unsigned n, const Caps& caps = {},
                      ModulusChoice choice = ModulusChoice::LexFirst);

/// Canonical coefficient form: digits over the level's base, low first, comma separated.
std::string format_elem(const FieldCtx& ctx, const FieldElem& x);
FieldElem parse_elem(const FieldCtx& ctx, int level, const std::string& text);

}  // namespace ffdigits

#endif  // FFDIGITS_FIELD_HPP
