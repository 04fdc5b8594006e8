#
# Copyright 2026 The finzeta Authors
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
#

"""Contract tests for the finzeta command-line tool."""

import json
import os
import subprocess

import jsonschema
import pytest

CLI = os.environ.get("FINZETA_CLI", "build/tools/finzeta")
SCHEMA_PATH = os.environ.get("FINZETA_SCHEMA", "docs/report_schema.json")

POWERFUL_243 = [1, 4, 9, 16, 25, 32, 36, 49, 64, 81, 100, 121, 128, 144, 169, 196, 225, 243]

COMMANDS = [
    ["eval", "-N", "6", "-m", "1", "-s", "-1", "--exact"],
    ["eval", "-N", "4", "-m", "2", "-s", "0"],
    ["eval", "-N", "8", "-m", "2", "-s", "0.5+2i", "--mode", "both"],
    ["zeros", "-N", "12", "-m", "3", "--height", "20"],
    ["zeros", "-N", "1", "-m", "2"],
    ["gfun", "--gamma", "2,1", "-l", "4"],
    ["gfun", "--gamma", "1,1,1", "-l", "3"],
    ["gfun", "--gamma", "2,2,1", "--infinite", "--trunc", "25"],
    ["powerful", "-k", "2", "-l", "2", "--max", "243"],
    ["powerful", "-k", "2", "-l", "2", "--canonical", "324"],
    ["unitarity", "--kmax", "4", "--lmax", "2"],
    ["average", "g_m_inf", "-m", "2", "--max", "20000"],
    ["average", "Z_at_sigma", "-m", "1", "--sigma", "-1", "--max", "20000"],
    ["eisenstein", "-m", "2", "-s", "2", "--trunc", "10", "--verify"],
    ["eisenstein", "-m", "1", "-s", "1+i", "--trunc", "10", "--verify"],
]


def run(args, fmt="json"):
    return subprocess.run([CLI, "--format", fmt, *args], capture_output=True, text=True, timeout=120)


def report(args):
    proc = run(args)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA_PATH, encoding="utf-8") as fh:
        return json.load(fh)


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_json_matches_schema(args, schema):
    jsonschema.validate(report(args), schema)


@pytest.mark.parametrize("fmt", ["json", "table", "csv"])
@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_output_is_deterministic(args, fmt):
    first, second = run(args, fmt), run(args, fmt)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_timing_adds_wall_time(schema):
    proc = subprocess.run([CLI, "--format", "json", "--timing", "eval", "-N", "12", "-m", "2", "-s", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    jsonschema.validate(out, schema)
    assert out["wall_time_s"] >= 0


def test_eval_exact_divisor_sum():
    out = report(["eval", "-N", "6", "-m", "1", "-s", "-1", "--exact"])
    assert out["results"][0]["value"] == {"num": "12", "den": "1"}


def test_eval_chain_count():
    out = report(["eval", "-N", "4", "-m", "2", "-s", "0"])
    assert out["results"][0]["value"]["re"] == pytest.approx(6.0, abs=1e-12)


def test_eval_both_modes_agree():
    out = report(["eval", "-N", "8", "-m", "2", "-s", "0.5+2i", "--mode", "both"])
    check = next(c for c in out["checks"] if c["name"] == "brute_vs_euler")
    assert check["pass"]
    values = {r["method"]: complex(r["value"]["re"], r["value"]["im"]) for r in out["results"]}
    assert abs(values["brute"] - values["euler"]) <= 1e-10 * max(1.0, abs(values["brute"]))


def test_powerful_list():
    out = report(["powerful", "-k", "2", "-l", "2", "--max", "243"])
    assert [r["n"] for r in out["results"]] == POWERFUL_243


def test_powerful_csv():
    proc = run(["powerful", "-k", "2", "-l", "2", "--max", "243"], "csv")
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "n"
    assert [int(x) for x in lines[1:]] == POWERFUL_243


def test_unitarity_table():
    out = report(["unitarity", "--kmax", "4", "--lmax", "2"])
    assert len(out["results"]) == 8
    for row in out["results"]:
        assert row["unitary"] == (row["k"] <= 2)


def test_zeros_trivial_modulus_is_empty():
    assert report(["zeros", "-N", "1", "-m", "2"])["results"] == []


def test_zeros_report_net_order():
    out = report(["zeros", "-N", "2", "-m", "2", "--height", "30"])
    assert out["results"]
    assert all(r["net_order"] in (0, 1) for r in out["results"])
    for r in out["results"]:
        if r["net_order"] == 1:
            assert r["abs_Z"] < 1e-9


@pytest.mark.parametrize(
    "args",
    [
        ["eval", "-N", "0", "-m", "1", "-s", "1"],
        ["eval", "-N", "6", "-m", "1", "-s", "not-a-number"],
        ["eval", "-N", "6", "-m", "1"],
        ["powerful", "-k", "0", "-l", "2"],
        ["average", "nonsense", "-m", "2"],
        ["gfun", "--gamma", "0,1", "-l", "3"],
        ["frobnicate"],
    ],
    ids=lambda a: " ".join(a),
)
def test_usage_errors_exit_two(args):
    assert run(args).returncode == 2
