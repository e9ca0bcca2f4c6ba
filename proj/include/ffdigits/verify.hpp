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

#ifndef FFDIGITS_VERIFY_HPP
#define FFDIGITS_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffdigits/field.hpp"
#include "ffdigits/poly.hpp"

namespace ffdigits {

/// A (c, W) pair; ordered by (c, mask).
struct PrescribedCase {
    u64 c = 0;
    WeightSet weights;

    friend bool operator==(const PrescribedCase&, const PrescribedCase&) = default;
    friend bool operator<(const PrescribedCase& a, const PrescribedCase& b) {
        return a.c != b.c ? a.c < b.c : a.weights.mask() < b.weights.mask();
    }
};

/// The seven binary (c, W) patterns with no irreducible witness of S_W(P) = c:
/// (0,{0}), (0,{n}), (0,[0,n]), (0,[1,n-1]), (1,{0,n}), (1,[0,n-1]), (1,[1,n]).
struct ExceptionTable {
    static constexpr std::size_t kPatternCount = 7;
    /// Sorted by (c, mask).
    static std::vector<PrescribedCase> instantiate(unsigned n);
};

enum class Relation { Equal, NotEqual };

std::string to_string(Relation r);

struct CaseOutcome {
    u64 c = 0;
    WeightSet weights;
    std::optional<Poly> witness;  // nullopt only after a complete scan
};

struct SweepOptions {
    unsigned workers = 0;  // 0 = hardware concurrency
    Caps caps = Caps::from_env();
    ModulusChoice modulus = ModulusChoice::LexFirst;
};

struct VerificationReport {
    std::string kind;  // "thm-q2", "hansen-mullen", "thm-qgt2"
    u64 q = 2;
    unsigned n = 2;
    std::string scope;
    Relation relation = Relation::Equal;
    std::vector<CaseOutcome> cases;  // sorted by (c, mask)
    std::vector<PrescribedCase> exceptions;
    std::vector<PrescribedCase> expected_exceptions;
    bool match = false;
    u64 irreducible_count = 0;
    double wall_time_ms = 0;
};

/// Every (c, W), W nonempty; expects exactly ExceptionTable::instantiate(n).
VerificationReport verify_theorem_q2(unsigned n, const SweepOptions& opt = {});

/// W = {w}, 0 <= w < n; expects (w,c) = (0,0), plus (1,0) when n = 2.
VerificationReport verify_hansen_mullen_q2(unsigned n, const SweepOptions& opt = {});

/// Every (c, W), W nonempty, with relation S_W(P) != c; expects no exceptions.
VerificationReport verify_theorem_qgt2(u64 q, unsigned n, const SweepOptions& opt = {});

/// First monic irreducible of degree n over F_q (scan order) with
/// S_W(P) related to c, or nullopt after an exhaustive scan.
std::optional<Poly> search_witness(u64 q, unsigned n, const WeightSet& w, u64 c, Relation rel,
                                   const Caps& caps = Caps::from_env());

enum class FactorVerdict { DegreeNFactorGuaranteed, Inconclusive };

std::string to_string(FactorVerdict v);

struct FactorCertificate {
    u64 q = 2;
    unsigned n = 2;
    Poly h;
    u64 subfield_size = 2;      // #L, L = F_{p^e} smallest subfield containing h(F_{q^n}^x)
    unsigned subfield_degree = 1;  // e
    u64 sequence_length = 1;    // q^n - 1
    u64 least_period = 1;
    u128 threshold = 1;         // (q^n - 1) / Phi_n(q)
    FactorVerdict verdict = FactorVerdict::Inconclusive;
    std::optional<bool> has_degree_n_factor;  // filled when cross-checked
};

/// S(x) = (1 - h(x)^{#L^x}) mod (x^{q^n-1} - 1); guaranteed iff the least
/// period of its coefficient sequence does not divide (q^n - 1)/Phi_n(q).
/// `h` is over F_q (level q of a make_field_q(q, n) context).
FactorCertificate certify_factor(u64 q, unsigned n, const Poly& h, bool cross_check = false,
                                 const Caps& caps = Caps::from_env());

/// Exhaustive divisibility check against every monic irreducible of degree n.
bool has_irreducible_factor_of_degree(const FieldCtx& ctx, const Poly& h, unsigned n);

struct ConnectionLemmaReport {
    u64 q = 2;
    unsigned n = 2;
    u64 trials = 0;
    u64 seed = 0;
    u128 threshold = 1;
    u64 fired_i = 0, violations_i = 0;
    u64 fired_ii = 0, violations_ii = 0;
    u64 fired_iii = 0, violations_iii = 0;
    u64 period_mismatches = 0;  // least_period(dft f) != least_period(idft f)
    bool match = false;         // zero violations and zero mismatches
    double wall_time_ms = 0;
};

/// Random F : F_{q^n} -> F_{q^n}, f(k) = F(zeta^k); checks the three support
/// statements against brute force. q^n must be at most 2^12.
ConnectionLemmaReport check_connection_lemma(u64 q, unsigned n, u64 trials, u64 seed = 0x5eed,
                                             const Caps& caps = Caps::from_env());

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const FactorCertificate& c);
nlohmann::json to_json(const ConnectionLemmaReport& r);

/// One row per case: kind,q,n,c,W,witness.
std::string to_csv(const std::vector<VerificationReport>& reports);
std::string to_text(const VerificationReport& r);

}  // namespace ffdigits

#endif  // FFDIGITS_VERIFY_HPP
