# Copyright 2026 The fairnoma Authors
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

import math
import os
import subprocess

import pytest

import fairnoma as fn


def test_version():
    assert fn.__version__


def test_special_functions():
    assert fn.exp_integral_e1(1.0) == pytest.approx(0.21938393439552029, rel=1e-13)
    assert fn.erfc(0.5) == pytest.approx(math.erfc(0.5), rel=1e-14)
    assert fn.digamma(1.0) == pytest.approx(-fn.EULER_GAMMA, rel=1e-14)
    assert fn.db_to_linear(30.0) == pytest.approx(1000.0)
    assert fn.linear_to_db(100.0) == pytest.approx(20.0)


def test_fair_region():
    r = fn.fair_region(1.0, 3.0, 8.0)
    assert r.a_inf == pytest.approx(0.25)
    assert r.a_sup == pytest.approx(1.0 / 3.0)
    assert not r.degenerate
    assert r.contains(0.3)
    assert fn.noma_capacity_strong(1.0, 8.0, r.a_inf) == pytest.approx(fn.oma_capacity(1.0, 8.0), rel=1e-12)
    assert fn.noma_capacity_weak(1.0, 3.0, r.a_sup) == pytest.approx(fn.oma_capacity(1.0, 3.0), rel=1e-12)
    assert fn.sum_rate(1.0, 3.0, 8.0, 0.25) > fn.oma_capacity(1.0, 3.0) + fn.oma_capacity(1.0, 8.0)


def test_domain_errors():
    with pytest.raises(fn.DomainError):
        fn.fair_region(1.0, -1.0, 2.0)
    with pytest.raises(ValueError):
        fn.exp_integral_e1(0.0)


def test_closed_forms():
    e = fn.ergodic(1.0)
    assert e["e_c1_noma_ainf"] >= e["e_c1_oma"]
    assert e["e_c2_noma_asup"] >= e["e_c2_oma"]
    o = fn.outage(100.0, 2.0)
    assert 0.0 < o["p_noma_strong_asup"] < o["p_oma_strong"] < 1.0
    assert fn.pairing_gain_asup(2) == pytest.approx(1.0, abs=1e-12)
    assert fn.pairing_gain_asup(3) == pytest.approx(1.5, abs=1e-12)


def test_multiuser():
    m = fn.multiuser_allocation(1000.0, [0.5, 2.0, 1.0])
    assert m["gains"] == sorted(m["gains"])
    assert all(0.0 < a < 1.0 for a in m["a"])
    assert sum(m["a"]) <= 1.0 + 1e-12
    assert all(b < a for a, b in zip(m["a"], m["b"]))
    assert max(abs(s) for s in m["slack_b"]) <= 1e-9


def test_monte_carlo_is_deterministic():
    a = fn.run_ergodic_pair([100.0], trials=20000, seed=5, workers=1)
    b = fn.run_ergodic_pair([100.0], trials=20000, seed=5, workers=2)
    assert a == b
    assert fn.figure_csv(4, trials=2000, seed=3) == fn.figure_csv(4, trials=2000, seed=3, workers=2)


def test_cli_in_process():
    code, out, err = fn.run_cli(["region", "--xi", "1", "--g1", "3", "--g2", "8"])
    assert code == 0
    assert "0.25" in out
    code, _, _ = fn.run_cli(["region", "--xi", "1"])
    assert code == 2


@pytest.mark.skipif("FAIRNOMA_CLI" not in os.environ, reason="CLI binary not provided")
def test_cli_binary(tmp_path):
    tool = os.environ["FAIRNOMA_CLI"]
    done = subprocess.run([tool, "region", "--xi-db", "10", "--g1", "0.5", "--g2", "2", "--format", "json"],
                          capture_output=True, text=True)
    assert done.returncode == 0
    assert '"a_sup"' in done.stdout
    done = subprocess.run([tool, "figure", "6", "--trials", "2000", "--xi-db-step", "30", "--out-dir",
                           str(tmp_path)], capture_output=True, text=True)
    assert done.returncode == 0
    assert (tmp_path / "fig6.csv").read_text().startswith("xi_db,sum_b_mc")
