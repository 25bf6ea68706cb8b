"""The ``edge`` command line tool, driven through main() plus one
entry-point smoke test."""

import io
import json
import subprocess
import sys

import pytest

from edgegame import cli, is_edge_distinguishing, path
from edgegame.cli import main

# ---------------------------------------------------------------------------
# usage errors
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["solve"],                                     # no graph at all
        ["solve", "--family", "path:3", "--graph", "x"],  # both sources
        ["solve", "--family", "path:3", "--frobnicate"],
    ],
)
def test_usage_errors_exit_64(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 64


def test_unknown_family_is_a_domain_error(capsys):
    assert main(["solve", "--family", "nosuchthing:3"]) == 1
    assert "error" in capsys.readouterr().err


def test_missing_graph_file_is_a_domain_error(capsys):
    assert main(["solve", "--graph", "/nonexistent/board.txt"]) == 1
    assert "error" in capsys.readouterr().err


def test_malformed_graph_file_is_a_domain_error(tmp_path, capsys):
    bad = tmp_path / "board.txt"
    bad.write_text("3\n1 2 3\n")
    assert main(["solve", "--graph", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "line 2" in err


# ---------------------------------------------------------------------------
# edcn
# ---------------------------------------------------------------------------


def test_edcn_command(capsys):
    assert main(["edcn", "--family", "path:5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "edcn=3"
    assert out[1].startswith("witness=")
    witness = [int(c) for c in out[1].removeprefix("witness=").split()]
    assert len(witness) == 5
    assert all(1 <= c <= 3 for c in witness)
    assert is_edge_distinguishing(path(5), witness)


def test_edcn_reads_graph_files(tmp_path, capsys):
    board = tmp_path / "board.txt"
    board.write_text("3\n1 2\n2 3\n")
    assert main(["edcn", "--graph", str(board)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "edcn=2"


def test_edcn_reads_json_graph_files(tmp_path, capsys):
    board = tmp_path / "board.json"
    board.write_text(json.dumps({"n": 2, "edges": [[1, 2]]}))
    assert main(["edcn", "--graph", str(board)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "edcn=1"


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def test_solve_prints_winner_and_stats(capsys):
    assert main(["solve", "--family", "path:5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "Player 1 wins on path:5 (k=3)"
    stats = json.loads(lines[1])
    assert stats["winner"] == "Player1"
    assert stats["k"] == 3
    assert stats["nodes"] > 0
    assert isinstance(stats["millis"], int)


def test_solve_with_color_override(capsys):
    assert main(["solve", "--family", "path:6", "--colors", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "Player 2 wins on path:6 (k=4)"


def test_solve_with_reductions_disabled(capsys):
    assert main(["solve", "--family", "path:6", "--no-canon", "--no-auto"]) == 0
    assert "Player 1 wins" in capsys.readouterr().out


def test_solve_node_limit_exits_2(capsys):
    assert main(["solve", "--family", "petersen", "--node-limit", "10"]) == 2
    assert "resource limit" in capsys.readouterr().err


def test_entry_point_runs():
    proc = subprocess.run(
        ["edge", "solve", "--family", "path:3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "Player 1 wins on path:3 (k=2)"


# ---------------------------------------------------------------------------
# tree
# ---------------------------------------------------------------------------


def test_tree_writes_dot_to_stdout(capsys):
    assert main(["tree", "--family", "path:3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph edge_game {")
    assert out.endswith("}\n")
    assert out.count("[label=") == 23
    assert out.count("->") == 42


def test_tree_output_is_deterministic(capsys):
    main(["tree", "--family", "path:3"])
    first = capsys.readouterr().out
    main(["tree", "--family", "path:3"])
    assert capsys.readouterr().out == first


def test_tree_dedup_is_smaller(capsys):
    main(["tree", "--family", "path:3", "--dedup"])
    merged = capsys.readouterr().out
    assert 0 < merged.count("[label=") < 23


def test_tree_root_color_matches_winner(capsys):
    # the empty board of a first-player win is an N position, drawn gray
    main(["tree", "--family", "path:3"])
    out = capsys.readouterr().out
    root = next(line for line in out.splitlines() if line.startswith("  n0 "))
    assert "fillcolor=gray" in root


def test_tree_out_file(tmp_path, capsys):
    target = tmp_path / "tree.dot"
    assert main(["tree", "--family", "path:3", "--out", str(target)]) == 0
    assert capsys.readouterr().out.strip() == f"wrote 23 nodes, 42 arcs to {target}"
    assert target.read_text().startswith("digraph edge_game {")


def test_tree_node_limit_exits_2(capsys):
    assert main(["tree", "--family", "path:5", "--node-limit", "5"]) == 2
    assert "resource limit" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# play
# ---------------------------------------------------------------------------


def _play(monkeypatch, capsys, argv, stdin_text):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    return code, capsys.readouterr().out


def test_play_scripted_game(monkeypatch, capsys):
    code, out = _play(
        monkeypatch,
        capsys,
        ["play", "--family", "path:5"],
        "1 1\n3 1\n4 2\n5 1\n5 3\n",
    )
    assert code == 0
    assert "playing on path:5 with k=3" in out
    assert "player 1 plays 1 1" in out
    assert "unmarkable: v2" in out
    assert "illegal: color 1 on vertex 5 repeats the edge color {1,2}" in out
    assert "player 2 plays 5 3" in out
    assert out.strip().endswith("Player 2 wins")


def test_play_against_engine(monkeypatch, capsys):
    code, out = _play(
        monkeypatch,
        capsys,
        ["play", "--family", "path:3", "--engine", "first"],
        "1 1\n",
    )
    assert code == 0
    assert "player 1 (engine) plays 2 1" in out
    assert "player 2 plays 1 1" in out
    assert "player 1 (engine) plays 3 2" in out
    assert out.strip().endswith("Player 1 wins")


def test_play_handles_malformed_input_and_eof(monkeypatch, capsys):
    code, out = _play(
        monkeypatch,
        capsys,
        ["play", "--family", "path:3"],
        "zap\n1\n1 x\n",
    )
    assert code == 0  # EOF simply ends the session
    assert out.count("error:") == 3


def test_play_with_color_override(monkeypatch, capsys):
    code, out = _play(
        monkeypatch, capsys, ["play", "--family", "path:3", "--colors", "5"], ""
    )
    assert code == 0
    assert "with k=5" in out


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_path_rows(capsys):
    assert main(["verify", "--only", "path"]) == 0
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l.startswith("path:")]
    assert len(lines) == 8  # path:1..7 plus the k=4 override row
    assert all("PASS" in l for l in lines)
    assert "8 passed, 0 failed, 0 skipped" in out


def test_verify_json_rows(capsys):
    assert main(["verify", "--json", "--only", "cycle"]) == 0
    lines = capsys.readouterr().out.splitlines()
    rows = [json.loads(l) for l in lines[:-1]]
    assert len(rows) == 6
    assert all(r["status"] == "PASS" for r in rows)
    summary = json.loads(lines[-1])
    assert summary == {"passed": 6, "failed": 0, "skipped": 0}


def test_verify_reports_failures_with_exit_1(capsys):
    assert main(["verify", "--only", "ladder:8"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "winner mismatch" in out


def test_verify_no_matching_rows(capsys):
    assert main(["verify", "--only", "zzz-nothing"]) == 0
    assert "0 passed, 0 failed, 0 skipped" in capsys.readouterr().out


def test_verify_node_limit_skips(capsys):
    assert main(["verify", "--only", "petersen", "--node-limit", "10"]) == 0
    out = capsys.readouterr().out
    assert "SKIPPED" in out
    assert "0 passed, 0 failed, 1 skipped" in out
