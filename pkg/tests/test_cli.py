from __future__ import annotations

import json

import pytest

from sumperfect.cli import main
from sumperfect.graph6 import emit_graph6, parse_graph6
from sumperfect.graphs import cycle_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_family_text_format(capsys):
    code, out, _ = run(capsys, "family", "--set", "F")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 27
    idx, name, g6 = lines[0].split("\t")
    assert idx == "1" and name == "C5"
    assert parse_graph6(g6).n == 5


def test_family_b_set(capsys):
    code, out, _ = run(capsys, "family", "--set", "B", "--format", "graph6")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 24
    for line in lines:
        assert parse_graph6(line).n == 6


def test_family_graph6_reparses_isomorphic(capsys):
    from sumperfect.canon import canonical_key
    from sumperfect.family import build_family

    code, out, _ = run(capsys, "family", "--format", "graph6")
    keys = {canonical_key(parse_graph6(line)) for line in out.strip().splitlines()}
    assert keys == set(build_family().keys())


def test_family_edges_format(capsys):
    code, out, _ = run(capsys, "family", "--format", "edges")
    assert code == 0
    assert "# 1 C5" in out


def test_analyze_json(tmp_path, capsys, c5):
    path = tmp_path / "in.g6"
    path.write_text(emit_graph6(c5) + "\n")
    code, out, err = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 0 and not err
    rec = json.loads(out.strip())
    assert rec["alpha"] == 2 and rec["omega"] == 2 and rec["deficit"] == 1
    assert rec["sum_perfect"] is False
    assert rec["forbidden_name"] == "C5" and rec["forbidden_index"] == 1
    assert rec["nu"] == 2 and rec["tau"] == 3 and rec["triangles"] == 0


def test_analyze_k33(tmp_path, capsys, k33):
    path = tmp_path / "in.g6"
    path.write_text(emit_graph6(k33) + "\n")
    code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
    rec = json.loads(out.strip())
    assert rec["alpha"] == 3 and rec["omega"] == 2 and rec["nu"] == 3
    assert rec["sum_perfect"] is False and rec["forbidden_index"] == 13


def test_analyze_empty_input(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text("")
    code, out, err = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 0 and out == "" and err == ""


def test_analyze_parse_error_continues(tmp_path, capsys, c5):
    path = tmp_path / "in.g6"
    path.write_text("!!notgraph6!!\n" + emit_graph6(c5) + "\n")
    code, out, err = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 2
    assert "line 1" in err
    assert len(out.strip().splitlines()) == 1


def test_analyze_edge_list_blocks(tmp_path, capsys):
    path = tmp_path / "in.txt"
    path.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n\n3\n0 1\n")
    code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert code == 0 and len(recs) == 2
    assert recs[0]["n"] == 5 and recs[1]["n"] == 3


def test_recognize_wire_format(tmp_path, capsys, c5):
    path = tmp_path / "in.g6"
    path.write_text(emit_graph6(c5) + "\n" + emit_graph6(cycle_graph(3)) + "\n")
    code, out, _ = run(capsys, "recognize", str(path))
    neg, pos = (json.loads(line) for line in out.strip().splitlines())
    assert code == 0
    assert set(neg) == {
        "id", "verdict", "witness_kind", "witness_vertices",
        "forbidden_index", "forbidden_name",
    }
    assert neg["verdict"] is False and neg["forbidden_index"] == 1
    assert neg["witness_kind"] == "forbidden_copy"
    assert neg["witness_vertices"] == [0, 1, 2, 3, 4]
    assert pos["verdict"] is True and pos["forbidden_index"] is None


def test_recognize_witness_flag(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(emit_graph6(cycle_graph(3)) + "\n")
    code, out, _ = run(capsys, "recognize", str(path), "--witness")
    rec = json.loads(out.strip())
    assert rec["witness_kind"] == "stable_clique_pair"
    assert set(rec["witness_vertices"]) == {"stable", "clique"}


def test_recognize_all_witnesses(tmp_path, capsys):
    from sumperfect.graphs import disjoint_union, from_edge_list

    g = disjoint_union(cycle_graph(5), from_edge_list(1, []))
    path = tmp_path / "in.g6"
    path.write_text(emit_graph6(g) + "\n")
    code, out, _ = run(capsys, "recognize", str(path), "--all-witnesses")
    rec = json.loads(out.strip())
    assert rec["verdict"] is False
    assert len(rec["all_copies"]) == 1
    assert rec["all_copies"][0]["forbidden_index"] == 1


def test_mine_emits_certs_then_summary(capsys):
    code, out, _ = run(capsys, "mine", "--class", "threshold", "--max-n", "4",
                       "--jobs", "1")
    lines = out.strip().splitlines()
    assert code == 0
    summary = json.loads(lines[-1])
    assert summary == {
        "class": "threshold", "max_n": 4,
        "counts_by_order": {"4": 3}, "total": 3,
    }
    assert len(lines) == 4
    for line in lines[:-1]:
        assert parse_graph6(line).n == 4


def test_mine_bad_class(capsys):
    code, _, err = run(capsys, "mine", "--class", "nope", "--max-n", "4")
    assert code == 2 and "unknown class" in err


def test_mine_from_source(tmp_path, capsys, c5):
    src = tmp_path / "src.g6"
    src.write_text(emit_graph6(c5) + "\n")
    code, out, _ = run(capsys, "mine", "--class", "sum-perfect", "--max-n", "5",
                       "--jobs", "1", "--source", str(src))
    lines = out.strip().splitlines()
    assert code == 0 and json.loads(lines[-1])["total"] == 1


def test_verify_threshold_pass(capsys):
    code, out, _ = run(capsys, "verify", "threshold", "--max-n", "6", "--jobs", "1")
    assert code == 0
    assert "threshold: PASS" in out


def test_verify_theorem27_small(capsys):
    code, out, _ = run(capsys, "verify", "theorem27", "--max-n", "7", "--jobs", "1")
    assert code == 0
    assert "theorem27: PASS" in out


def test_verify_conjecture_small(capsys):
    code, out, _ = run(capsys, "verify", "conjecture", "--max-n", "6", "--jobs", "1")
    assert code == 0
    assert "conjecture: PASS" in out


def test_verify_envelope_usage_error(capsys):
    code, _, err = run(capsys, "verify", "conjecture", "--max-n", "11")
    assert code == 2 and "max-n" in err


def test_usage_error_exit_code(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "mine", "--max-n", "4")[0] == 2  # missing --class


def test_stdin_input(capsys, monkeypatch, c5):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(emit_graph6(c5) + "\n"))
    code, out, _ = run(capsys, "recognize", "-")
    assert code == 0 and json.loads(out.strip())["verdict"] is False
