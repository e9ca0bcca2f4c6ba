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

#ifndef FFDIGITS_CHARFUN_HPP
#define FFDIGITS_CHARFUN_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "ffdigits/cyclic.hpp"
#include "ffdigits/digits.hpp"
#include "ffdigits/field.hpp"
#include "ffdigits/poly.hpp"

namespace ffdigits {

/// sigma_w(xi): (-1)^w times [x^{n-w}] of the characteristic polynomial. Result at q_level().
FieldElem sigma(const FieldCtx& ctx, unsigned w, const FieldElem& xi);

/// sigma_w(xi) from its definition, the sum of xi^{q^{i_1} + ... + q^{i_w}}
/// over w-subsets of [0, n-1]. Limited to n <= 12.
FieldElem sigma_subset_sum(const FieldCtx& ctx, unsigned w, const FieldElem& xi);

/// F_zeta[delta_w](k). zeta must be primitive; (q, w) = (2, n) is rejected.
FieldElem sigma_via_dft(const FieldCtx& ctx, const FieldElem& zeta, unsigned w, u64 k);

enum class PrescriptionMode {
    AvoidValue,  // S_{n-W}(P) != c, via gamma_{W,c}
    HitValue,    // S_{n-W}(P) == c, via Delta_{W,c}
};

struct PrescriptionSpec {
    WeightSet weights;  // W, ambient n = ctx.n()
    u64 c = 0;          // packed element of F_q
    PrescriptionMode mode = PrescriptionMode::AvoidValue;
};

/// Checks the spec against ctx; throws std::invalid_argument when q = 2 and n is in W.
void validate(const FieldCtx& ctx, const PrescriptionSpec& spec);

/// gamma_{W,c} = sum_{w in W} (-1)^w delta_w - c delta_0, F_q-valued.
CyclicFn gamma_fn(const FieldCtx& ctx, const PrescriptionSpec& spec);

/// Delta_{W,c} = delta_0 - gamma_{W,c}^{(q-1)-fold convolution}, F_q-valued.
CyclicFn delta_cap_fn(const FieldCtx& ctx, const PrescriptionSpec& spec);

enum class CertificateVerdict { WitnessGuaranteed, Inconclusive };

std::string to_string(CertificateVerdict v);

/// One-sided: Inconclusive says nothing about nonexistence.
struct PrescriptionCertificate {
    u64 q = 2;
    unsigned n = 1;
    PrescriptionMode mode = PrescriptionMode::AvoidValue;
    WeightSet weights;            // W used to build gamma / Delta
    WeightSet prescribed;         // n - W, the coefficient positions the witness satisfies
    u64 c = 0;
    u64 least_period = 1;
    u128 threshold = 1;           // (q^n - 1) / Phi_n(q)
    CertificateVerdict verdict = CertificateVerdict::Inconclusive;
};

PrescriptionCertificate prescription_certificate(const FieldCtx& ctx, const PrescriptionSpec& spec);

nlohmann::json to_json(const PrescriptionCertificate& cert);

}  // namespace ffdigits

#endif  // FFDIGITS_CHARFUN_HPP
