"""CLI subcommands, output JSON, and exit codes."""

from __future__ import annotations

import json

import pytest

from quiverforge.cli import cli_main
from quiverforge.serialization import dumps_canonical

from helpers import REMARK_ARROWS


@pytest.fixture()
def files(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return {
        "p3": write("p3.json", {"n": 3, "arrows": [[1, 2, 1], [2, 3, 1]]}),
        "p2": write("p2.json", {"n": 2, "arrows": [[1, 2, 1]]}),
        "remark": write(
            "remark.json",
            {"n": 6, "arrows": [[i, j, m] for i, j, m in REMARK_ARROWS]},
        ),
        "markov": write(
            "markov.json", {"n": 3, "arrows": [[1, 2, 2], [2, 3, 2], [3, 1, 2]]}
        ),
        "cycle": write(
            "cycle.json", {"n": 3, "arrows": [[1, 2, 1], [2, 3, 1], [3, 1, 1]]}
        ),
        "dir": tmp_path,
    }


def run(capsys, argv):
    code = cli_main(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


def test_analyze_remark(files, capsys):
    code, doc = run(capsys, ["analyze", files["remark"]])
    assert code == 0
    assert doc["covering_pairs"] == [[6, 5]]
    assert doc["sources"] == [6]


def test_mutate_involution_echoes_input(files, capsys):
    code, doc = run(capsys, ["mutate", files["p3"], "-k", "2", "-k", "2"])
    assert code == 0
    assert doc == {"n": 3, "arrows": [[1, 2, 1], [2, 3, 1]]}


def test_mutate_sequence_flag(files, capsys):
    code_w, doc_w = run(capsys, ["mutate", files["p3"], "-w", "2,2"])
    assert code_w == 0
    assert doc_w == {"n": 3, "arrows": [[1, 2, 1], [2, 3, 1]]}


def test_mutate_single_step(files, capsys):
    code, doc = run(capsys, ["mutate", files["p3"], "-k", "2"])
    assert code == 0
    assert doc == {"n": 3, "arrows": [[1, 3, 1], [2, 1, 1], [3, 2, 1]]}


def test_canon_reports_witness(files, capsys):
    code, doc = run(capsys, ["canon", files["p3"]])
    assert code == 0
    assert set(doc) == {"quiver", "permutation"}
    assert sorted(doc["permutation"]) == [1, 2, 3]


def test_search_exhausts_a3(files, capsys):
    code, doc = run(capsys, ["search", files["p3"]])
    assert code == 0
    assert doc["exhausted"] is True
    assert len(doc["representatives"]) == 4


def test_search_budget_flags(files, capsys):
    code, doc = run(capsys, ["search", files["p3"], "--max-classes", "1"])
    assert code == 0
    assert doc["truncation_reason"] == "node_cap"


def test_certify_acyclic_banff(files, capsys):
    code, doc = run(capsys, ["certify", files["p3"], "--class", "banff"])
    assert code == 0
    assert doc["verdict"] == "certified"
    assert doc["certificate"]["kind"] == "base_acyclic"


def test_certify_refuted_exits_one(files, capsys):
    code, doc = run(capsys, ["certify", files["markov"], "--class", "banff"])
    assert code == 1
    assert doc["verdict"] == "refuted_exhaustive"


def test_certify_unknown_exits_three(files, capsys):
    code, doc = run(
        capsys, ["certify", files["cycle"], "--class", "banff", "--max-classes", "1"]
    )
    assert code == 3
    assert doc["verdict"] == "unknown"


def test_checkcert_roundtrip(files, capsys, tmp_path):
    code, doc = run(capsys, ["certify", files["p2"], "--class", "bprime"])
    assert code == 0
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(dumps_canonical(doc))
    code, verdict = run(capsys, ["checkcert", files["p2"], str(cert_path)])
    assert code == 0
    assert verdict == {"class": "bprime", "valid": True}
    # against the wrong quiver the certificate must fail
    code, verdict = run(capsys, ["checkcert", files["p3"], str(cert_path)])
    assert code == 1
    assert verdict["valid"] is False


def test_transform_chain(files, capsys, tmp_path):
    code, doc = run(capsys, ["certify", files["cycle"], "--class", "banff"])
    assert code == 0
    cert_path = tmp_path / "banff.json"
    cert_path.write_text(dumps_canonical(doc))

    code, bprime = run(capsys, ["transform", files["cycle"], str(cert_path), "--to", "bprime"])
    assert code == 0
    assert bprime["class"] == "bprime"

    bprime_path = tmp_path / "bprime.json"
    bprime_path.write_text(dumps_canonical(bprime))
    code, verdict = run(capsys, ["checkcert", files["cycle"], str(bprime_path)])
    assert code == 0 and verdict["valid"] is True

    code, pprime = run(capsys, ["transform", files["cycle"], str(bprime_path), "--to", "pprime"])
    assert code == 0
    pprime_path = tmp_path / "pprime.json"
    pprime_path.write_text(dumps_canonical(pprime))
    code, verdict = run(capsys, ["checkcert", files["cycle"], str(pprime_path)])
    assert code == 0 and verdict["valid"] is True


def test_transform_rejects_unsupported_route(files, capsys, tmp_path):
    code, doc = run(capsys, ["certify", files["p2"], "--class", "bprime"])
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(dumps_canonical(doc))
    code = cli_main(["transform", files["p2"], str(cert_path), "--to", "lprime"])
    assert code == 2


def test_scan_runs_and_reports(files, capsys):
    code, doc = run(
        capsys,
        ["scan", "--n", "6", "--seed", "4", "--samples", "3", "--max-classes", "200"],
    )
    assert code == 0
    assert doc["examined"] == 3
    assert doc["seed"] == 4
    assert "candidates" in doc


def test_scan_small_n_is_usage_error(capsys):
    assert cli_main(["scan", "--n", "4"]) == 2


def test_missing_file_is_usage_error(capsys):
    assert cli_main(["analyze", "/nonexistent/q.json"]) == 2


def test_bad_json_is_usage_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert cli_main(["analyze", str(path)]) == 2


def test_invalid_quiver_is_usage_error(tmp_path, capsys):
    path = tmp_path / "twocycle.json"
    path.write_text(json.dumps({"n": 2, "arrows": [[1, 2, 1], [2, 1, 1]]}))
    assert cli_main(["analyze", str(path)]) == 2


def test_missing_subcommand_argument(capsys):
    assert cli_main(["certify"]) == 2


def test_serve_port_resolution(monkeypatch):
    from quiverforge.cli import _resolve_port

    monkeypatch.delenv("QUIVERFORGE_PORT", raising=False)
    assert _resolve_port(None) == 8000
    monkeypatch.setenv("QUIVERFORGE_PORT", "9100")
    assert _resolve_port(None) == 9100
    assert _resolve_port(7777) == 7777
