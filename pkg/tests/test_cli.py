import csv
import json

import pytest

from tvps.cli import CSV_COLUMNS, main
from tvps.graphs import Graph, make_cycle
from tvps.labeling import all_ones, builtin_cycle_sequence


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_cycle(tmp_path, capsys):
    f = tmp_path / "c5.json"
    assert run(capsys, "gen", "cycle:5", "-o", f)[0] == 0
    g = Graph.from_json(f.read_text())
    assert (g.n, g.m) == (5, 5)


def test_gen_torus_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "torus:3,3")
    g = Graph.from_json(out)
    assert code == 0 and g.n == 9 and g.m == 18 and g.is_regular()


def test_gen_dot(capsys):
    code, out, _ = run(capsys, "gen", "multipartite:3,3", "--dot")
    assert code == 0 and out.count("--") == 9


def test_gen_bad_spec(capsys):
    code, _, err = run(capsys, "gen", "wheel:5")
    assert code == 2 and "usage error" in err


def test_label_table(capsys):
    code, out, _ = run(capsys, "label", "cycle:9", "--method", "table")
    d = json.loads(out)
    assert code == 0 and d["strength"] == 3
    assert d["provenance"]["method"] == "table"


def test_label_greedy_complete(capsys):
    code, out, _ = run(capsys, "label", "complete:6", "--method", "greedy")
    assert code == 0 and json.loads(out)["strength"] <= 6


def test_label_inapplicable_method(capsys):
    code, _, err = run(capsys, "label", "complete:5", "--method", "div3")
    assert code == 2


def test_label_prime_chain_budget_too_small(capsys):
    code, _, err = run(capsys, "label", "cycle:500", "--method", "prime_chain", "--budget", "5")
    assert code == 2 and "least feasible budget" in err


def test_verify_messages(tmp_path, capsys):
    c3 = tmp_path / "c3.json"
    c3.write_text(make_cycle(3).to_json())
    lab = tmp_path / "lab.json"
    lab.write_text(json.dumps(builtin_cycle_sequence(3).to_dict()))
    code, out, _ = run(capsys, "verify", c3, lab)
    assert code == 0 and "irregular, strength 2" in out

    c4 = tmp_path / "c4.json"
    c4.write_text(make_cycle(4).to_json())
    bad = tmp_path / "ones.json"
    bad.write_text(json.dumps(all_ones(make_cycle(4)).to_dict()))
    code, out, _ = run(capsys, "verify", c4, bad)
    assert code == 1 and "NOT irregular" in out and "vertices 0 and 1" in out


def test_verify_thirteen(tmp_path, capsys):
    lab = tmp_path / "s13.json"
    lab.write_text(json.dumps(builtin_cycle_sequence(13).to_dict()))
    code, out, _ = run(capsys, "verify", "cycle:13", lab)
    assert code == 0 and "irregular, strength 4" in out


def test_verify_shape_mismatch(tmp_path, capsys):
    lab = tmp_path / "s3.json"
    lab.write_text(json.dumps(builtin_cycle_sequence(3).to_dict()))
    assert run(capsys, "verify", "cycle:4", lab)[0] == 2


@pytest.mark.parametrize("spec", ["cycle:5", "cycle:40", "path:7", "grid:3,4", "torus:7,7",
                                  "grid:3,3,3", "complete:6", "multipartite:3,4"])
def test_round_trip(tmp_path, capsys, spec):
    g, lab = tmp_path / "g.json", tmp_path / "lab.json"
    assert run(capsys, "gen", spec, "-o", g)[0] == 0
    assert run(capsys, "label", g, "-o", lab)[0] == 0
    code, out, _ = run(capsys, "verify", g, lab)
    assert code == 0 and "irregular, strength" in out


def test_label_grid_flag(tmp_path, capsys):
    lab, g = tmp_path / "lab.json", tmp_path / "g.json"
    assert run(capsys, "label", "--torus", "7,7", "-o", lab, "--graph-out", g)[0] == 0
    code, out, _ = run(capsys, "verify", g, lab)
    assert code == 0 and "irregular, strength 29" in out


def test_output_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "label", "cycle:200", "-o", a)
    run(capsys, "label", "cycle:200", "-o", b)
    assert a.read_bytes() == b.read_bytes()


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "cycle:20")
    d = json.loads(out)
    assert code == 0 and d["best_lower"] == d["best_upper"] == 5


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--graph", "multipartite:3,4")
    assert code == 0 and json.loads(out)["tvps"] == 3


def test_solve_budget(capsys):
    code, out, _ = run(capsys, "solve", "--graph", "cycle:12", "--budget-nodes", "1")
    d = json.loads(out)
    assert code == 3 and d["tvps"] is None and len(d["interval"]) == 2


def test_bench(tmp_path, capsys):
    f = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "bench", "--max-n", 60, "--exact-max", 10, "--csv", f)
    assert code == 0
    assert "0 failures, 0 table mismatches" in out
    rows = list(csv.reader(f.read_text().splitlines()))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert all(len(r) == 6 for r in rows)
    assert len(rows) == 1 + 58
    strengths = [line.split()[1] for line in out.splitlines() if line.startswith("C_")]
    assert strengths == ["2", "2", "3", "3", "3", "3", "3", "3", "4", "4", "4", "4", "4", "4"]


def test_bench_threads_match(tmp_path, capsys, monkeypatch):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "bench", "--max-n", 80, "--exact-max", 3, "--csv", a)
    monkeypatch.setenv("TVPS_THREADS", "2")
    run(capsys, "bench", "--max-n", 80, "--exact-max", 3, "--csv", b)
    assert a.read_bytes() == b.read_bytes()


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
