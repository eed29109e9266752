import json

from torsep import cli

M_JSON = '{"d":2,"weights":[[1,1],[2,0],[0,2]],"label":"M"}'
FIVE_JSON = '{"d":3,"weights":[[1,0,0],[1,1,0],[0,1,2],[0,2,1],[1,0,1]]}'


def run_cli(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_text(capsys, monkeypatch, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(M_JSON)
    code, out, _ = run_cli(capsys, ["decide", str(path)])
    assert code == 0
    assert "SP (affine): FAILS" in out
    assert "verified: yes" in out


def test_decide_json_verdicts(capsys, monkeypatch, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(M_JSON)
    code, out, _ = run_cli(capsys, ["decide", "--format", "json", str(path)])
    assert code == 0
    payload = json.loads(out)
    by_prop = {v["property"]: v for v in payload["verdicts"]}
    assert not by_prop["SP"]["holds"]
    assert by_prop["SP"]["certificate"]["pair"] == [1, 0]
    assert by_prop["WSP"]["holds"]
    assert all(v["verified"] for v in payload["verdicts"])


def test_input_error_exit_code(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["decide", "-"], stdin="nonsense", monkeypatch=monkeypatch)
    assert code == 2
    assert "error" in err


def test_hypothesis_error_exit_code(capsys, monkeypatch):
    code, _, err = run_cli(
        capsys,
        ["decide", "--property", "ssp", "-"],
        stdin=FIVE_JSON,
        monkeypatch=monkeypatch,
    )
    assert code == 3
    assert "hypothesis" in err


def test_property_all_skips_ssp_in_band(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys,
        ["decide", "--format", "json", "-"],
        stdin=FIVE_JSON,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    payload = json.loads(out)
    assert {v["property"] for v in payload["verdicts"]} == {"SP", "WSP"}
    assert payload["extra"]["skipped"][0]["property"] == "SSP"


def test_verify_golden_exit_zero(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys,
        ["verify", "--format", "json", "-"],
        stdin=M_JSON,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["extra"]["agreement"] is True
    routes = payload["extra"]["routes"]
    assert routes["SP"] == {"theorem": False, "oracle": False, "scan": False}


def test_unverifiable_certificate_exits_four(capsys, monkeypatch):
    monkeypatch.setattr(cli, "check_verdict", lambda ws, v: ["forced failure"])
    code, out, err = run_cli(
        capsys, ["decide", "-"], stdin=M_JSON, monkeypatch=monkeypatch
    )
    assert code == 4
    assert "re-verification" in err
    assert "verified: NO" in out


def test_ideal_command(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys,
        ["ideal", "--format", "json", "-"],
        stdin=FIVE_JSON,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    payload = json.loads(out)
    texts = [b["text"] for b in payload["extra"]["binomials"]]
    assert "x1^3*x3 - x2*x5^2" in texts
    assert payload["extra"]["spans_relation_lattice"]


def test_strata_and_chpairs_commands(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys,
        ["strata", "--format", "json", "-"],
        stdin=M_JSON,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    payload = json.loads(out)
    assert [s["indices"] for s in payload["extra"]["strata"]] == [[], [1], [2], [0, 1, 2]]

    code, out, _ = run_cli(
        capsys,
        ["chpairs", "--format", "json", "-"],
        stdin=M_JSON,
        monkeypatch=monkeypatch,
    )
    payload = json.loads(out)
    assert [1, 0] in payload["extra"]["pairs"]
    assert not payload["extra"]["diagonal_only"]


def test_binary_command_with_flag(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, ["binary", "--form", "x*y^3", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["extra"]["separation_property"] is True
    assert {p["multiplicity"] for p in payload["extra"]["parts"]} == {1, 3}


def test_binary_command_rejects_weights(capsys, monkeypatch):
    code, _, err = run_cli(
        capsys, ["binary", "-"], stdin=M_JSON, monkeypatch=monkeypatch
    )
    assert code == 2


def test_batch_mode_preserves_order(capsys, monkeypatch):
    lines = "\n".join(
        [
            '{"d":1,"weights":[[1]],"label":"first"}',
            '{"d":1,"weights":[[1],[-1]],"label":"second"}',
        ]
    )
    code, out, _ = run_cli(
        capsys,
        ["decide", "--format", "json", "--batch", "-"],
        stdin=lines,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    reports = [json.loads(chunk) for chunk in _split_json_stream(out)]
    assert [r["instance"]["label"] for r in reports] == ["first", "second"]


def test_batch_mode_reports_per_line_errors(capsys, monkeypatch):
    lines = "garbage\n" + M_JSON
    code, out, err = run_cli(
        capsys,
        ["decide", "--format", "json", "--batch", "-"],
        stdin=lines,
        monkeypatch=monkeypatch,
    )
    assert code == 2
    assert "SP" in out  # the good line still produced a report


def test_same_seed_identical_reports(capsys, monkeypatch):
    code1, out1, _ = run_cli(
        capsys,
        ["verify", "--format", "json", "--seed", "7", "-"],
        stdin=M_JSON,
        monkeypatch=monkeypatch,
    )
    code2, out2, _ = run_cli(
        capsys,
        ["verify", "--format", "json", "--seed", "7", "-"],
        stdin=M_JSON,
        monkeypatch=monkeypatch,
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("TORSEP_SEED", "99")
    code, out, _ = run_cli(
        capsys,
        ["verify", "--format", "json", "-"],
        stdin=M_JSON,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert json.loads(out)["seed"] == 99


def _split_json_stream(text):
    chunks = []
    depth = 0
    start = None
    for i, ch in enumerate(text):
        if ch == "{":
            if depth == 0:
                start = i
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                chunks.append(text[start : i + 1])
    return chunks


def test_weight_commands_reject_binary_instances(capsys, monkeypatch):
    code, _, err = run_cli(
        capsys,
        ["decide", "-"],
        stdin='{"form": "x*y^3"}',
        monkeypatch=monkeypatch,
    )
    assert code == 2
    assert "weight system" in err


def test_resource_guard_exit_code(capsys, monkeypatch):
    big = {"d": 1, "weights": [[1]] * 13}
    import json as _json

    code, _, err = run_cli(
        capsys,
        ["strata", "-"],
        stdin=_json.dumps(big),
        monkeypatch=monkeypatch,
    )
    assert code == 2
    assert "guard" in err
