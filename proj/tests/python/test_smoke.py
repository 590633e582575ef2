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

import json
import os
import subprocess

import pytest

import conflictfair as cf


def instance(goods, edges, values, agents=2, mode="goods", intervals=None):
    doc = {
        "agents": agents,
        "goods": goods,
        "edges": edges,
        "mode": mode,
        "valuations": {"identical": {"type": "additive", "values": [str(v) for v in values]}},
    }
    if intervals is not None:
        doc["intervals"] = [[str(l), str(r)] for l, r in intervals]
    return cf.Instance.from_json(json.dumps(doc))


def test_instance_properties_and_round_trip():
    inst = instance(3, [[0, 1], [1, 2]], [5, 0, 5])
    assert (inst.agents, inst.goods, inst.mode, inst.identical) == (2, 3, "goods", True)
    assert inst.edges == [(0, 1), (1, 2)]
    again = cf.Instance.from_json(inst.to_json())
    assert again.to_json() == inst.to_json()
    assert "goods=3" in repr(inst)


def test_swap_on_path():
    inst = instance(3, [[0, 1], [1, 2]], [5, 0, 5])
    bundles, iterations = cf.swap_ef1(inst)
    assert bundles == [[2], [0]]
    assert iterations == 1
    assert cf.is_maximal(inst, bundles)
    assert cf.is_ef1(inst, bundles)
    assert cf.is_wellformed(inst, bundles)
    assert not cf.is_wellformed(inst, [[0, 1], [2]])


def test_graph_class_solvers():
    bip = instance(4, [[0, 2], [0, 3], [1, 2], [1, 3]], [3, 3, 2, 2])
    assert cf.bipartite_ef1(bip) == [[0, 1], [2, 3]]
    iv = instance(3, [[0, 1], [1, 2]], [1, 1, 1], intervals=[(0, 2), (1, 3), (2, 4)])
    bundles = cf.interval_ef1(iv)
    assert cf.is_maximal(iv, bundles) and cf.is_ef1(iv, bundles)
    rr = instance(4, [[0, 1], [1, 2], [2, 3]], [4, 3, 2, 1], agents=3)
    assert cf.round_robin_small(rr) == [[0, 3], [1], [2]]
    assert cf.iteration_bound_additive(10) == 23


def test_cut_and_choose_distinct_valuations():
    doc = {
        "agents": 2,
        "goods": 4,
        "edges": [[0, 1], [1, 2], [2, 3], [0, 3]],
        "valuations": {
            "perAgent": [
                {"type": "additive", "values": ["1", "3", "1", "3"]},
                {"type": "additive", "values": ["3", "1", "3", "1"]},
            ]
        },
    }
    inst = cf.Instance.from_json(json.dumps(doc))
    bundles = cf.cut_and_choose(inst)
    assert cf.is_maximal(inst, bundles) and cf.is_ef1(inst, bundles)


def test_oracle_and_hardness():
    three = cf.gen_counterexample(3)
    assert three.goods == 7 and len(three.edges) == 11
    exists, witness = cf.exists_maximal_ef1(three)
    assert not exists and witness is None
    assert cf.compute_gamma(cf.gen_counterexample(4)) == "1"
    reduced, gamma, lam = cf.build_reduction(
        cf.gen_counterexample(4), 5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], 3
    )
    assert (reduced.goods, gamma, lam) == (46, "1", "1/3")
    k2 = instance(2, [[0, 1]], [1, 1])
    exists, witness = cf.exists_maximal_ef1(k2, workers=2)
    assert exists and cf.is_ef1(k2, witness)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        cf.Instance.from_json("{")
    with pytest.raises(ValueError):
        cf.gen_counterexample(2)
    with pytest.raises(cf.BudgetExceeded):
        cf.exists_maximal_ef1(cf.gen_counterexample(3), max_assignments=10)


def test_tree_coloring():
    colors, sizes = cf.equitable_tree_coloring(4, [(0, 1), (0, 2), (0, 3)], 2)
    assert colors[0] == 0
    assert sorted(sizes) == [1, 2]
    assert cf.equitable_tree_coloring(1, [], 1) == ([1], [1])


def test_run_cli_in_process(tmp_path):
    path = tmp_path / "path.json"
    path.write_text(instance(3, [[0, 1], [1, 2]], [5, 0, 5]).to_json())
    code, out, _ = cf.run_cli(["solve", str(path), "-a", "swap"])
    assert code == 0
    assert "bundles:[[2],[0]]" in out.splitlines()
    code, _, _ = cf.run_cli(["solve", str(tmp_path / "missing.json")])
    assert code == 3


@pytest.mark.skipif("CONFLICTFAIR_CLI" not in os.environ, reason="CLI binary not provided")
def test_cli_binary(tmp_path):
    cli = os.environ["CONFLICTFAIR_CLI"]
    out = tmp_path / "three.json"
    done = subprocess.run([cli, "gen", "counterexample", "-n", "3", "-o", str(out)],
                          capture_output=True, text=True, check=True)
    assert "goods:7" in done.stdout.splitlines()
    done = subprocess.run([cli, "oracle", str(out)], capture_output=True, text=True)
    assert done.returncode == 0
    assert "exists:false" in done.stdout.splitlines()
    done = subprocess.run([cli, "solve", str(out)], capture_output=True, text=True)
    assert done.returncode == 4
