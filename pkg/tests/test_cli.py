"""Command-line interface: exit codes, output keys, reproducibility."""

import json

import pytest

from cochaincut import (
    ChainForm,
    CutAssignment,
    block_structure_counterexample,
    cut_size,
    expand,
    graph_from_edges,
    skeleton,
)
from cochaincut.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_REJECTED,
    main,
    run_bench,
)
from cochaincut.formats import read_chain_form, write_chain_form, write_edge_list


@pytest.fixture
def counterexample_file(tmp_path):
    path = tmp_path / "cx.chain"
    write_chain_form(block_structure_counterexample(), path)
    return str(path)


def _out_lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_solve_chain_form_file(counterexample_file, capsys):
    assert main(["solve", counterexample_file]) == EXIT_OK
    lines = _out_lines(capsys)
    assert "size: 223" in lines
    assert "edges: 396" in lines
    assert "algorithm: dp" in lines
    assert any(line.startswith("wall_time_s: ") for line in lines)


def test_solve_json_output(counterexample_file, capsys):
    assert main(["solve", counterexample_file, "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["size"] == 223
    assert report["n"] == 36
    assert report["k"] == 8


def test_solve_edge_list_with_sniffing(tmp_path, capsys):
    path = tmp_path / "k5.edges"
    write_edge_list(graph_from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)]), path)
    assert main(["solve", str(path)]) == EXIT_OK
    assert "size: 6" in _out_lines(capsys)


def test_certificate_output_re_evaluates(counterexample_file, capsys):
    assert main(["solve", counterexample_file, "--certify", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    cut = CutAssignment(tuple(report["certificate_s"]), tuple(report["certificate_sp"]))
    assert cut_size(block_structure_counterexample(), cut) == report["size"]


def test_oracle_confirmation(tmp_path, capsys):
    path = tmp_path / "cc2.chain"
    write_chain_form(skeleton(2), path)
    assert main(["solve", str(path), "--oracle"]) == EXIT_OK
    lines = _out_lines(capsys)
    assert "oracle_verdict: OK" in lines
    assert "summary: dp=7 oracle=7 OK" in lines


def test_oracle_budget_exit_code(counterexample_file, capsys):
    assert main(["solve", counterexample_file, "--oracle", "--oracle-limit", "1000"]) == EXIT_BUDGET
    assert "budget" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "nope.chain")]) == EXIT_PARSE
    assert "error:" in capsys.readouterr().err


def test_malformed_file_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("not a graph\n")
    assert main(["solve", str(bad)]) == EXIT_PARSE
    assert "error:" in capsys.readouterr().err


def test_format_override_can_force_a_parse_failure(tmp_path, capsys):
    path = tmp_path / "cc2.chain"
    write_chain_form(skeleton(2), path)
    assert main(["solve", str(path), "--format", "edgelist"]) == EXIT_PARSE


def test_rejection_exit_codes(tmp_path, capsys):
    c5 = tmp_path / "c5.edges"
    write_edge_list(graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)]), c5)
    assert main(["solve", str(c5)]) == EXIT_REJECTED
    assert "rejected: complement not bipartite" in capsys.readouterr().err
    c4 = tmp_path / "c4.edges"
    write_edge_list(graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), c4)
    assert main(["solve", str(c4)]) == EXIT_REJECTED
    assert "rejected: chain condition violated" in capsys.readouterr().err


def test_closed_form_command(capsys):
    assert main(["closed-form", "2"]) == EXIT_OK
    lines = _out_lines(capsys)
    assert "pattern: 1 1 1 0" in lines
    assert "value: 7" in lines
    assert "search: 7 OK" in lines


def test_closed_form_trimmed_json(capsys):
    assert main(["closed-form", "5", "--trimmed", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["value"] == 25
    assert report["variant"] == "trimmed"


def test_closed_form_rejects_k_zero(capsys):
    assert main(["closed-form", "0"]) == EXIT_PARSE
    assert "error:" in capsys.readouterr().err


def test_generate_is_reproducible(tmp_path, capsys):
    first = tmp_path / "a"
    second = tmp_path / "b"
    for out in (first, second):
        out.mkdir()
        code = main(
            ["generate", "--seed", "9", "--count", "4", "--out", str(out)]
        )
        assert code == EXIT_OK
    capsys.readouterr()
    names = sorted(p.name for p in first.iterdir())
    assert names == [f"instance_{i:04d}.chain" for i in range(4)]
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()
        read_chain_form(first / name)  # parses back


def test_generate_twin_free_forms(tmp_path, capsys):
    assert (
        main(
            [
                "generate",
                "--seed",
                "3",
                "--count",
                "5",
                "--k-min",
                "1",
                "--k-max",
                "3",
                "--twin-free",
                "--out",
                str(tmp_path),
            ]
        )
        == EXIT_OK
    )
    capsys.readouterr()
    for path in tmp_path.iterdir():
        form = read_chain_form(path)
        assert all(v == 1 for v in form.m)
        assert all(v in (0, 1) for v in form.m_prime)


def test_generate_edge_list_output(tmp_path, capsys):
    assert (
        main(["generate", "--seed", "1", "--count", "2", "--format", "edgelist", "--out", str(tmp_path)])
        == EXIT_OK
    )
    out = capsys.readouterr().out
    assert out.count("wrote: ") == 2
    files = sorted(tmp_path.iterdir())
    assert [p.suffix for p in files] == [".edges", ".edges"]
    # generated edge lists are solvable co-bipartite chain instances
    assert main(["solve", str(files[0])]) == EXIT_OK
    capsys.readouterr()


def test_run_bench_reports_rows_and_exponent():
    result = run_bench([8, 16], repeats=1)
    assert [row["n"] for row in result["rows"]] == [8, 16]
    for row in result["rows"]:
        assert row["best_time_s"] > 0
        assert row["size"] > 0
    assert result["fitted_exponent"] is not None
    with pytest.raises(ValueError):
        run_bench([7])
    with pytest.raises(ValueError):
        run_bench([2])


def test_bench_command_smoke(capsys):
    assert main(["bench", "--sizes", "8,16", "--repeats", "1", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert len(report["rows"]) == 2
