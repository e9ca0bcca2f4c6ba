# Copyright 2026 The ffdigits Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Digit-sum prescriptions for irreducible polynomials over finite fields."""

import json

from . import _core
from ._core import (
    CapError,
    UsageError,
    degree_threshold,
    delta,
    exception_table,
    field_info,
    least_period,
    omega,
    run_cli,
    search_witness,
)

__all__ = [
    "CapError",
    "UsageError",
    "certify_factor",
    "check_connection_lemma",
    "degree_threshold",
    "delta",
    "exception_table",
    "field_info",
    "least_period",
    "omega",
    "prescription_certificate",
    "run_cli",
    "search_witness",
    "verify_hansen_mullen",
    "verify_q2",
    "verify_qgt2",
]


def verify_q2(n, workers=0):
    """Binary sweep over every (c, W); report as a dict."""
    return json.loads(_core.verify_q2(n, workers))


def verify_hansen_mullen(n, workers=0):
    return json.loads(_core.verify_hansen_mullen(n, workers))


def verify_qgt2(q, n, workers=0):
    """Sweep with S_W(P) != c over F_q, q > 2."""
    return json.loads(_core.verify_qgt2(q, n, workers))


def certify_factor(q, n, coeffs, cross_check=False):
    """coeffs are packed F_q elements, constant term first."""
    return json.loads(_core.certify_factor(q, n, list(coeffs), cross_check))


def check_connection_lemma(q, n, trials, seed=0x5EED):
    return json.loads(_core.check_connection_lemma(q, n, trials, seed))


def prescription_certificate(q, n, W, c, hit=False):
    return json.loads(_core.prescription_certificate(q, n, list(W), c, hit))
