# Copyright 2026 The uvar Authors
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

"""Exact Weyl-algebra verification suites and branch simulators."""

import json

from ._core import (
    UvarError,
    adjoint,
    antisymmetrize,
    apply,
    build_operators,
    canonical,
    casimir_blocks,
    cli,
    commutator,
    eigen_branch_check,
    matrix_rep,
    run_collapse,
    run_scenario,
    verify_angular_momentum,
    verify_car,
    verify_hermiticity,
    verify_invariance,
)


def report(*args):
    """Run a uvar command and return (exit code, report as a dict)."""
    code, out, err = cli([*args, "--format", "json"])
    if code == 1:
        raise UvarError(err.strip())
    return code, json.loads(out)


__all__ = [
    "UvarError",
    "adjoint",
    "antisymmetrize",
    "apply",
    "build_operators",
    "canonical",
    "casimir_blocks",
    "cli",
    "commutator",
    "eigen_branch_check",
    "matrix_rep",
    "report",
    "run_collapse",
    "run_scenario",
    "verify_angular_momentum",
    "verify_car",
    "verify_hermiticity",
    "verify_invariance",
]
