import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from suir.cli import main
from suir.engine import ScenarioError, run
from suir.io import (
    load_scenario,
    read_trace_lines,
    scenario_from_dict,
    scenario_to_dict,
    trace_lines,
)

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def write(tmp_path, data, name="s.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(path)


MINIMAL = {"mode": "Line1DDisoriented", "protocol": "mod4_disoriented", "positions": [0, 3]}


class TestScenarioFormat:
    @pytest.mark.parametrize("path", sorted(SCENARIOS.glob("*.json")), ids=lambda p: p.stem)
    def test_shipped_scenarios_roundtrip(self, path):
        sc = load_scenario(path)
        assert scenario_from_dict(scenario_to_dict(sc)) == sc

    def test_defaults(self):
        sc = scenario_from_dict(MINIMAL)
        assert sc.positions == (0.0, 3.0) and sc.delta == 1.0
        assert sc.scheduler.kind == "fsync" and sc.truncation.rigid and sc.crash.victim is None

    def test_field_level_errors(self):
        bad = dict(MINIMAL, positions=[0, [1, 2]], similarities=[{"scale": -1}, 7], extra=1)
        with pytest.raises(ScenarioError) as err:
            scenario_from_dict(bad)
        text = "\n".join(err.value.fields)
        assert "positions[1]" in text and "similarities[0]" in text
        assert "similarities[1]" in text and "extra: unknown field" in text

    def test_missing_and_unknown_mode(self):
        with pytest.raises(ScenarioError, match="required field missing"):
            scenario_from_dict({"mode": "Disoriented"})
        with pytest.raises(ScenarioError, match="unknown mode"):
            scenario_from_dict(dict(MINIMAL, mode="Sideways"))

    def test_not_json(self, tmp_path):
        with pytest.raises(ScenarioError, match="not valid JSON"):
            load_scenario(write(tmp_path, "{oops"))


class TestTrace:
    def test_lines(self):
        sc = load_scenario(SCENARIOS / "mod4_rigid.json")
        lines = list(trace_lines(run(sc)))
        first, last = json.loads(lines[0]), json.loads(lines[-1])
        assert "scenario" in first and last["terminal"] == "Gathered"
        rec = json.loads(lines[1])
        assert set(rec) >= {"round", "before", "active", "views", "local_destinations",
                            "global_destinations", "after", "crashed"}

    @given(st.floats(-1e9, 1e9).filter(lambda v: abs(v) > 1e-6))
    def test_floats_replay_exactly(self, x):
        sc = scenario_from_dict(dict(MINIMAL, positions=[0.0, x]))
        rec = json.loads(list(trace_lines(run(sc)))[1])
        assert rec["before"][1] == x
        assert scenario_from_dict(json.loads(list(trace_lines(run(sc)))[0])["scenario"]) == sc


class TestCli:
    def test_run(self, tmp_path):
        out = tmp_path / "t.jsonl"
        assert main(["run", "--scenario", str(SCENARIOS / "mod4_rigid.json"), "--out", str(out)]) == 0
        lines = read_trace_lines(out)
        assert lines[-1] == {"terminal": "Gathered", "round": 2}

    def test_run_is_byte_identical(self, tmp_path):
        outs = []
        for i in range(2):
            out = tmp_path / f"t{i}.jsonl"
            main(["run", "--scenario", str(SCENARIOS / "mod4_crash_nonrigid.json"), "--out", str(out)])
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_expected_non_termination_is_success(self, tmp_path):
        out = tmp_path / "t.jsonl"
        path = str(SCENARIOS / "luminous_impossibility.json")
        assert main(["run", "--scenario", path, "--out", str(out), "--max-rounds", "200"]) == 0
        assert read_trace_lines(out)[-1]["terminal"] == "RoundLimit"

    def test_violation_exit(self, tmp_path):
        path = write(tmp_path, dict(MINIMAL, protocol="goto_other", expect="gather",
                                    scheduler={"type": "impossibility"}, max_rounds=50))
        assert main(["run", "--scenario", path, "--out", str(tmp_path / "t")]) == 1

    def test_input_errors(self, tmp_path, capsys):
        assert main(["run", "--scenario", write(tmp_path, "[1,")]) == 2
        assert main(["run", "--scenario", write(tmp_path, dict(MINIMAL, delta=0))]) == 2
        assert "delta" in capsys.readouterr().err
        assert main(["run", "--scenario", str(tmp_path / "missing.json")]) == 2
        assert main(["bogus"]) == 2
        assert main(["sweep", "--scenario", write(tmp_path, MINIMAL), "--seeds", "0"]) == 2

    def test_adversary(self, tmp_path):
        out = tmp_path / "t.jsonl"
        assert main(["adversary", "--out", str(out), "--max-rounds", "300"]) == 0
        lines = read_trace_lines(out)
        assert lines[0]["scenario"]["scheduler"] == {"type": "impossibility"}
        assert lines[-1]["terminal"] == "RoundLimit" and len(lines) == 302

    def test_adversary_with_scenario(self, tmp_path):
        out = tmp_path / "t.jsonl"
        path = write(tmp_path, dict(MINIMAL, protocol="goto_other"))
        assert main(["adversary", "--scenario", path, "--out", str(out), "--max-rounds", "100"]) == 0

    def test_sweep(self, tmp_path):
        out = tmp_path / "s.json"
        path = str(SCENARIOS / "mod4_rigid.json")
        assert main(["sweep", "--scenario", path, "--seeds", "50", "--out", str(out)]) == 0
        summary = json.loads(out.read_text())
        assert summary["seeds_run"] == summary["gathered"] == 50
        assert summary["max_rounds"] <= 3 and summary["violations"] == []

    def test_seed_env(self, tmp_path, monkeypatch):
        path = str(SCENARIOS / "mod4_crash_nonrigid.json")
        outs = {}
        for seed in ("1", "2"):
            monkeypatch.setenv("SUIR_SEED", seed)
            out = tmp_path / f"s{seed}.json"
            main(["sweep", "--scenario", path, "--seeds", "5", "--out", str(out)])
            outs[seed] = out.read_text()
        assert outs["1"] != outs["2"]
        monkeypatch.setenv("SUIR_SEED", "x")
        assert main(["sweep", "--scenario", path, "--seeds", "5"]) == 2

    def test_module_entry_point(self, tmp_path):
        out = tmp_path / "t.jsonl"
        proc = subprocess.run(
            [sys.executable, "-m", "suir", "run", "--scenario", str(SCENARIOS / "rigid_common.json"),
             "--out", str(out)], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        assert "Gathered(2)" in proc.stderr
