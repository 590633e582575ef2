# Copyright 2026 The conflictfair Authors
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

"""Maximal EF1 allocations of goods under conflict graphs."""

from conflictfair._core import (
    BudgetExceeded,
    Instance,
    InvalidInput,
    ParseError,
    bipartite_ef1,
    build_reduction,
    compute_gamma,
    cut_and_choose,
    equitable_tree_coloring,
    exists_maximal_ef1,
    gen_counterexample,
    interval_ef1,
    is_ef1,
    is_maximal,
    is_wellformed,
    iteration_bound_additive,
    round_robin_small,
    run_cli,
    swap_ef1,
)

__all__ = [
    "BudgetExceeded",
    "Instance",
    "InvalidInput",
    "ParseError",
    "bipartite_ef1",
    "build_reduction",
    "compute_gamma",
    "cut_and_choose",
    "equitable_tree_coloring",
    "exists_maximal_ef1",
    "gen_counterexample",
    "interval_ef1",
    "is_ef1",
    "is_maximal",
    "is_wellformed",
    "iteration_bound_additive",
    "round_robin_small",
    "run_cli",
    "swap_ef1",
]
