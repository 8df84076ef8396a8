"""End-to-end CLI behavior: flags, formats, exit codes, report schema."""

import json

from uct.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_field_info(capsys):
    code, out, _ = run_cli(capsys, "field", "info", "--p", "2", "--k", "2")
    assert code == 0
    assert "q=4" in out
    assert "modulus=1,1,1" in out


def test_field_info_table(capsys):
    code, out, _ = run_cli(capsys, "field", "info", "--p", "3", "--k", "1",
                           "--table")
    assert code == 0
    rows = [line for line in out.splitlines() if "," in line and "=" not in line]
    assert rows == ["0,0,0", "0,1,2", "0,2,1"]


def test_build_edges_counts(capsys, tmp_path):
    out_file = tmp_path / "g.edges"
    code, out, _ = run_cli(capsys, "build", "--ring", "tri", "--n", "2",
                           "--p", "3", "--k", "1", "--format", "edges",
                           "--out", str(out_file))
    assert code == 0
    assert "27 vertices, 162 edges" in out
    lines = out_file.read_text().splitlines()
    assert len(lines) == 162
    u, v = lines[0].split()
    assert int(u) < int(v)


def test_build_dot_k5(capsys):
    code, out, _ = run_cli(capsys, "build", "--ring", "zn", "--modulus", "5",
                           "--format", "dot")
    assert code == 0
    assert "5 vertices, 10 edges" in out
    assert out.count(" -- ") == 10


def test_build_json(capsys, tmp_path):
    out_file = tmp_path / "g.json"
    code, _, _ = run_cli(capsys, "build", "--ring", "zn", "--modulus", "6",
                         "--format", "json", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["vertex_count"] == 6
    assert len(payload["edges"]) == 6


def test_build_over_cap_exits_3(capsys):
    code, _, err = run_cli(capsys, "build", "--ring", "tri", "--n", "9",
                           "--p", "2", "--k", "1")
    assert code == 3
    assert "error" in err


def test_build_missing_ring_flags_exits_2(capsys):
    code, _, _ = run_cli(capsys, "build", "--ring", "tri")
    assert code == 2


def test_invariants_connected(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--ring", "tri", "--n", "2",
                           "--p", "3", "--k", "1")
    assert code == 0
    assert json.loads(out) == {"degree": 12, "components": 1, "diameter": 2,
                               "triameter": 6, "clique": 3}


def test_invariants_disconnected(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--ring", "tri", "--n", "3",
                           "--p", "2", "--k", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 8
    assert payload["components"] == 4
    assert payload["diameter"] == "undefined: disconnected"
    assert payload["triameter"] == "undefined: disconnected"
    assert payload["clique"] == 2


def test_invariants_zn(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--ring", "zn",
                           "--modulus", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"degree": 4, "components": 1, "diameter": 2,
                       "triameter": 6, "clique": 2}


def test_invariants_text_format(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--ring", "zn",
                           "--modulus", "5", "--format", "text")
    assert code == 0
    assert "degree 4" in out
    assert "clique 5" in out


def test_verify_single_spec(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, _, err = run_cli(capsys, "verify", "--spec", "tri:2,3,1",
                           "--out", str(report))
    assert code == 0
    payload = json.loads(report.read_text())
    assert len(payload["verdicts"]) == 7
    assert all(v["pass"] for v in payload["verdicts"])
    assert err.count("PASS") == 7


def test_verify_default_suite(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, _, err = run_cli(capsys, "verify", "--out", str(report))
    assert code == 0
    payload = json.loads(report.read_text())
    specs = {v["spec"] for v in payload["verdicts"]}
    assert specs == {"tri:2,2,1", "tri:3,2,1", "tri:4,2,1", "tri:2,3,1",
                     "tri:3,3,1", "tri:2,2,2", "tri:2,5,1"}
    assert all(v["pass"] for v in payload["verdicts"])


def test_verify_inapplicable_check_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--spec", "tri:2,2,1",
                           "--check", "theorem3")
    assert code == 2
    assert "not applicable" in err


def test_verify_named_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "--spec", "tri:2,3,1",
                           "--check", "triameter")
    assert code == 0
    payload = json.loads(out)
    assert [v["claim_id"] for v in payload["verdicts"]] == ["triameter.value"]


def test_verify_bad_spec_exits_2(capsys):
    code, _, _ = run_cli(capsys, "verify", "--spec", "tri:banana")
    assert code == 2


def test_verify_over_cap_spec_exits_1(capsys):
    code, out, _ = run_cli(capsys, "verify", "--spec", "tri:9,2,1")
    assert code == 1
    payload = json.loads(out)
    assert payload["verdicts"][0]["certificate"]["error"] == "RingTooLarge"


def test_verify_zn_spec(capsys):
    code, out, _ = run_cli(capsys, "verify", "--spec", "zn:8")
    assert code == 0
    payload = json.loads(out)
    assert [v["claim_id"] for v in payload["verdicts"]] == ["zn.baselines"]


def test_verify_output_is_stable_modulo_millis(capsys, tmp_path):
    reports = []
    for name in ["a.json", "b.json"]:
        path = tmp_path / name
        assert run_cli(capsys, "verify", "--spec", "tri:2,3,1", "--seed", "3",
                       "--out", str(path))[0] == 0
        payload = json.loads(path.read_text())
        for v in payload["verdicts"]:
            v.pop("millis")
        reports.append(json.dumps(payload, sort_keys=True))
    assert reports[0] == reports[1]


def test_cap_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("UCT_VERTEX_CAP", "10")
    code, _, _ = run_cli(capsys, "build", "--ring", "zn", "--modulus", "12")
    assert code == 3
    monkeypatch.setenv("UCT_VERTEX_CAP", "12")
    code, _, _ = run_cli(capsys, "build", "--ring", "zn", "--modulus", "12")
    assert code == 0


def test_cap_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("UCT_VERTEX_CAP", "10")
    code, _, _ = run_cli(capsys, "build", "--ring", "zn", "--modulus", "12",
                         "--cap", "20")
    assert code == 0


def test_cap_above_hard_ceiling_exits_2(capsys):
    code, _, _ = run_cli(capsys, "build", "--ring", "zn", "--modulus", "5",
                         "--cap", str(2 ** 21))
    assert code == 2


def test_unknown_subcommand_exits_2(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2


def test_failed_verdicts_exit_1(capsys, monkeypatch):
    import uct.cli as cli_mod

    def fake_suite(specs, cap, threads, seed):
        from uct.theorem_checker import Verdict
        return [Verdict(claim_id="x", spec="tri:2,3,1", expected=1, computed=2,
                        passed=False, certificate={}, millis=0.0)]

    monkeypatch.setattr(cli_mod, "run_suite", fake_suite)
    code, _, err = run_cli(capsys, "verify", "--spec", "tri:2,3,1")
    assert code == 1
    assert "FAIL" in err
