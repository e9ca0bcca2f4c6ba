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

#include "ffdigits/charfun.hpp"

#include <stdexcept>

namespace ffdigits {

namespace {

void require_weight(const FieldCtx& ctx, unsigned w) {
    if (w > ctx.n()) throw std::invalid_argument("sigma: w = " + std::to_string(w) + " exceeds n");
}

// (-1)^w c, as negation applied w mod 2 times.
u64 signed_term(const FieldCtx& ctx, int level, unsigned w, u64 c) { return w % 2 ? ctx.neg_raw(level, c) : c; }

}  // namespace

FieldElem sigma(const FieldCtx& ctx, unsigned w, const FieldElem& xi) {
    require_weight(ctx, w);
    const Poly h = char_poly(ctx, xi);
    return {signed_term(ctx, h.level(), w, h[ctx.n() - w]), h.level()};
}

FieldElem sigma_subset_sum(const FieldCtx& ctx, unsigned w, const FieldElem& xi) {
    require_weight(ctx, w);
    const unsigned n = ctx.n();
    if (n > 12) throw std::invalid_argument("sigma_subset_sum: n above 12");
    const int top = ctx.top_level();
    const FieldElem x = ctx.lift(xi, top);
    if (w == 0) return ctx.one(ctx.q_level());
    std::vector<u64> conj(n);
    conj[0] = x.value;
    for (unsigned i = 1; i < n; ++i) conj[i] = ctx.pow_raw(top, conj[i - 1], ctx.q());
    // xi^{q^{i_1} + ... + q^{i_w}} is the product of the chosen conjugates.
    u64 acc = 0;
    for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountll(mask)) != w) continue;
        u64 term = 1;
        for (unsigned i = 0; i < n; ++i) {
            if ((mask >> i) & 1) term = ctx.mul_raw(top, term, conj[i]);
        }
        acc = ctx.add_raw(top, acc, term);
    }
    return ctx.descend({acc, top}, ctx.q_level());
}

FieldElem sigma_via_dft(const FieldCtx& ctx, const FieldElem& zeta, unsigned w, u64 k) {
    require_weight(ctx, w);
    if (ctx.q() == 2 && w == ctx.n()) throw std::invalid_argument("sigma_via_dft: (q, w) = (2, n) is excluded");
    const CyclicFn d = delta_fn(ctx.q(), ctx.n(), WeightSet::of(ctx.n(), {w}));
    return ctx.descend(dft_at(ctx, zeta, d, k), ctx.q_level());
}

void validate(const FieldCtx& ctx, const PrescriptionSpec& spec) {
    if (spec.weights.n() != ctx.n()) throw std::invalid_argument("prescription: W ambient degree differs from n");
    if (ctx.n() < 2) throw std::invalid_argument("prescription: n must be at least 2");
    if (static_cast<u128>(spec.c) >= ctx.q()) throw std::invalid_argument("prescription: c outside F_q");
    if (ctx.q() == 2 && spec.weights.contains(ctx.n())) {
        throw std::invalid_argument("prescription: q = 2 requires n not in W");
    }
}

CyclicFn gamma_fn(const FieldCtx& ctx, const PrescriptionSpec& spec) {
    validate(ctx, spec);
    const int lq = ctx.q_level();
    const u64 size = ctx.group_order();
    CyclicFn g{lq, std::vector<u64>(size, 0)};
    for (unsigned w : spec.weights.elements()) {
        const OmegaSet om = omega(ctx.q(), ctx.n(), WeightSet::of(ctx.n(), {w}));
        const u64 v = signed_term(ctx, lq, w, 1);
        for (u64 k : om.residues) g.values[k] = ctx.add_raw(lq, g.values[k], v);
    }
    g.values[0] = ctx.sub_raw(lq, g.values[0], spec.c);
    return g;
}

CyclicFn delta_cap_fn(const FieldCtx& ctx, const PrescriptionSpec& spec) {
    const CyclicFn g = gamma_fn(ctx, spec);
    const auto power = static_cast<unsigned>(ctx.q() - 1);
    return cyclic_sub(ctx, kronecker(g.size(), g.level), conv_power(ctx, g, power));
}

std::string to_string(CertificateVerdict v) {
    return v == CertificateVerdict::WitnessGuaranteed ? "WitnessGuaranteed" : "Inconclusive";
}

PrescriptionCertificate prescription_certificate(const FieldCtx& ctx, const PrescriptionSpec& spec) {
    validate(ctx, spec);
    const CyclicFn f = spec.mode == PrescriptionMode::AvoidValue ? gamma_fn(ctx, spec) : delta_cap_fn(ctx, spec);
    PrescriptionCertificate cert;
    cert.q = ctx.q();
    cert.n = ctx.n();
    cert.mode = spec.mode;
    cert.weights = spec.weights;
    cert.prescribed = spec.weights.reflect();
    cert.c = spec.c;
    cert.least_period = least_period(f);
    cert.threshold = degree_threshold(ctx.q(), ctx.n());
    cert.verdict = period_criterion(cert.least_period, ctx.q(), ctx.n()) == PeriodVerdict::DegreeNGuaranteed
                       ? CertificateVerdict::WitnessGuaranteed
                       : CertificateVerdict::Inconclusive;
    return cert;
}

nlohmann::json to_json(const PrescriptionCertificate& cert) {
    return {{"q", cert.q},
            {"n", cert.n},
            {"mode", cert.mode == PrescriptionMode::AvoidValue ? "avoid" : "hit"},
            {"W", cert.weights.elements()},
            {"prescribed_W", cert.prescribed.elements()},
            {"c", cert.c},
            {"least_period", cert.least_period},
            {"threshold", to_string(cert.threshold)},
            {"verdict", to_string(cert.verdict)}};
}

}  // namespace ffdigits
