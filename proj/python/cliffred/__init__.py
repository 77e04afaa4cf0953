# Copyright 2026 The Cliffred Authors
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

"""Python bindings for the cliffred reduction library."""

from ._core import (
    NoThresholdInBracket,
    PauliOperator,
    UndefinedResultError,
    builtin_names,
    find_threshold,
    iterate_map,
    magic_state,
    output_state,
    run_cli,
    sweep,
    verify_theorem,
)

__all__ = [
    "NoThresholdInBracket",
    "PauliOperator",
    "UndefinedResultError",
    "builtin_names",
    "find_threshold",
    "iterate_map",
    "magic_state",
    "output_state",
    "run_cli",
    "sweep",
    "verify_theorem",
]
