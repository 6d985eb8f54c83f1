import json

import pytest
from click.testing import CliRunner

from pdthrottle import generators as gen
from pdthrottle import harness
from pdthrottle.cli import cli
from pdthrottle.graph import format_edge_list, graph_hash, parse_edge_list
from pdthrottle.harness import CaseSpec, FINITE_RANGE_NOTE, table, verify
from pdthrottle.store import ResultsStore


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def spider_file(tmp_path):
    p = tmp_path / "spider.txt"
    p.write_text(format_edge_list(gen.spider([7, 2, 2, 2, 2, 2])))
    return str(p)


def invoke(runner, args):
    return runner.invoke(cli, args, catch_exceptions=False)


# -- generate / solve -----------------------------------------------------------

def test_generate_edge_list(runner):
    r = invoke(runner, ["generate", "path", "4"])
    assert r.exit_code == 0 and parse_edge_list(r.output) == gen.path(4)
    r = invoke(runner, ["generate", "unit-path", "3"])
    assert r.exit_code == 0 and len(r.output.splitlines()) == 3
    assert invoke(runner, ["generate", "grid", "3"]).exit_code == 2


def test_solve_text_and_json(runner, spider_file):
    r = invoke(runner, ["solve", "thpdx", spider_file])
    assert r.exit_code == 0 and r.output.startswith("thpdx = 4")
    d = json.loads(invoke(runner, ["solve", "gamma", spider_file, "--json"]).output)
    assert d["value"] == 8 and len(d["witness"]) == 8
    d = json.loads(invoke(runner, ["--json", "solve", "thpdx", spider_file, "--k", "1"]).output)
    assert d["value"] == 7 and d["time"] == 7
    d = json.loads(invoke(runner, ["solve", "pt", spider_file, "--set", "0,15", "--json"]).output)
    assert d["value"] == 2


def test_solve_trace_is_json(runner, spider_file):
    d = json.loads(invoke(runner, ["solve", "trace", spider_file, "--set", "0"]).output)
    assert d["propagation_time"] == 7 and d["terminal"] == "total"


def test_solve_intervals(runner, tmp_path):
    p = tmp_path / "iv.txt"
    p.write_text("0 1\n9/10 19/10\n9/5 14/5\n")
    d = json.loads(invoke(runner, ["solve", "greedy", "--intervals", str(p), "--json"]).output)
    assert d["value"] == 1 and d["witness"] == [1]
    d = json.loads(invoke(runner, ["solve", "thpdx", "--intervals", str(p), "--json"]).output)
    assert d["value"] == 1


def test_malformed_input_exits_2(runner, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\n0 9\n")
    r = runner.invoke(cli, ["solve", "gamma", str(p)])
    assert r.exit_code == 2 and "line 2" in r.output
    p.write_text("3 2\n0 1\n1 2\n")
    r = runner.invoke(cli, ["solve", "trace", str(p), "--set", "0,7"])
    assert r.exit_code == 2


def test_solve_budget_overrun_is_skipped(runner, tmp_path):
    p = tmp_path / "grid.txt"
    p.write_text(format_edge_list(gen.grid(6, 6)))
    d = json.loads(invoke(runner, ["solve", "thpdx", str(p), "--json", "--budget", "1e-6"]).output)
    assert d["status"] == "skipped"


# -- verify ---------------------------------------------------------------------

def test_unknown_suite_exits_2(runner):
    r = runner.invoke(cli, ["verify", "nope"])
    assert r.exit_code == 2 and "paths-cycles" in r.output


def test_verify_suite_passes(runner, tmp_path):
    r = invoke(runner, ["verify", "spiders", "--cache", str(tmp_path)])
    assert r.exit_code == 0 and "0 fail, 0 mismatch" in r.output


def test_verify_json_reproducible(runner, tmp_path):
    args = ["verify", "g-d", "--json", "--no-timing", "-p", "max_d=4"]
    a = invoke(runner, args).output
    b = invoke(runner, args + ["--workers", "2", "--cache", str(tmp_path)]).output
    assert a == b
    doc = json.loads(a)
    assert doc["summary"]["fail"] == 0 and all("seconds" not in c for c in doc["cases"])


def test_bad_param_is_usage_error(runner):
    assert runner.invoke(cli, ["verify", "spiders", "-p", "bogus=1"]).exit_code == 2
    assert runner.invoke(cli, ["verify", "spiders", "-p", "max_n"]).exit_code == 2


def _injected(monkeypatch, specs, notes=()):
    monkeypatch.setitem(harness.SUITES, "injected", lambda p: (list(specs), list(notes)))


def test_published_disagreement_is_mismatch(monkeypatch, runner):
    G = gen.path(6)
    _injected(monkeypatch, [
        CaseSpec("P_6", "thpdx", harness.PUBLISHED, 3, "made-up citation", "param_value", (G, "thpdx")),
        CaseSpec("P_6", "gamma", harness.DERIVED, 5, "", "param_value", (G, "gamma")),
        CaseSpec("P_6", "gammap", harness.PUBLISHED, 1, "", "param_value", (G, "gammap")),
    ])
    rep = verify("injected")
    assert rep.summary == {"pass": 1, "fail": 1, "mismatch": 1, "skipped": 0} and not rep.ok
    mm = next(c for c in rep.cases if c.status == "mismatch")
    assert mm.computed == 2 and "made-up citation" in rep.format_text()
    r = runner.invoke(cli, ["verify", "injected"])
    assert r.exit_code == 1 and "[MISMATCH]" in r.output


def test_budget_overrun_is_skipped(monkeypatch):
    G = gen.grid(6, 6)
    _injected(monkeypatch, [CaseSpec("P6xP6", "thpdx", harness.PUBLISHED, 6, "", "param_value",
                                     (G, "thpdx"))])
    rep = verify("injected", budget=1e-6)
    assert rep.cases[0].status == "skipped" and rep.ok


def test_finite_range_note_reported():
    rep = verify("cartesian-bounds", {"samples_proj": 5})
    assert FINITE_RANGE_NOTE in rep.notes and rep.ok
    assert "note:" in rep.format_text()


# -- table / store -----------------------------------------------------------------

def test_table_rerun_hits_cache(tmp_path):
    first = table(["path:1-6", "family-a"], cache_dir=str(tmp_path))
    assert first.solver_calls > 0
    again = table(["path:1-6", "family-a"], cache_dir=str(tmp_path))
    assert again.solver_calls == 0 and again.rows == first.rows
    row = next(r for r in first.rows if r["graph"] == "path-6")
    assert (row["thpdx"], row["gamma"], row["thpd"]) == (2, 2, 3)


def test_table_cli_csv(runner, tmp_path):
    res = runner.invoke(cli, ["table", "cycle:3-5", "--csv", "--cache", str(tmp_path)])
    assert res.exit_code == 0 and "solver calls: " in res.stderr
    lines = res.stdout.splitlines()
    assert lines[0].startswith("graph,n,gammap,gamma") and len(lines) == 4
    res = runner.invoke(cli, ["table", "bogus:1-3", "--cache", str(tmp_path)])
    assert res.exit_code == 2


def test_store_round_trip(tmp_path):
    G = gen.cycle(5)
    with ResultsStore(str(tmp_path)) as st:
        assert st.fetch(G, "gamma", lambda: 2) == 2
        assert st.fetch(G, "gamma", lambda: 99) == 2
        assert (st.solver_calls, st.hits) == (1, 1)
    with ResultsStore(str(tmp_path)) as st:
        assert st.get(graph_hash(G), "gamma") == 2
