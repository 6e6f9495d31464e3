# Copyright 2026 The Semmut Project Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Semantic-preserving mutation of C functions and ensemble voting."""

from semmut._core import (
    DimensionMismatch,
    EmptyInput,
    OutOfRange,
    average_probability,
    check_static,
    majority_vote,
    mutate,
    operators,
    run_cli,
    stub_probability,
    weighted_predict,
)

__all__ = [
    "DimensionMismatch",
    "EmptyInput",
    "OutOfRange",
    "average_probability",
    "check_static",
    "majority_vote",
    "mutate",
    "operators",
    "run_cli",
    "stub_probability",
    "weighted_predict",
]
