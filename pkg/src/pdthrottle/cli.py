"""Command-line front end: generate, solve, verify, table."""

from __future__ import annotations

import json
import random
import sys
import time

import click

from . import generators as gen
from .graph import GraphError, VertexSet, format_edge_list, read_graph
from .harness import DEFAULT_BUDGET, SUITES, UnknownSuite, table as run_table, verify as run_verify
from .propagation import INFINITY, propagate
from .solvers import (
    BudgetExceeded,
    domination_number,
    power_domination_number,
    product_throttling,
    pt_pd_k,
    sum_throttling,
)
from .store import default_cache_dir


class InputError(click.ClickException):
    exit_code = 2


def _num(x):
    return "inf" if x == INFINITY else x


def _opts(ctx: click.Context, **local):
    """Merge subcommand flags over the group-level ones."""
    merged = dict(ctx.obj or {})
    merged.update({k: v for k, v in local.items() if v is not None and v is not False})
    return merged


def _parse_set(text: str | None, n: int) -> list[int] | None:
    if text is None:
        return None
    try:
        verts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated vertices, got {text!r}", param_hint="--set")
    bad = [v for v in verts if not 0 <= v < n]
    if bad or not verts:
        raise click.BadParameter(f"vertices must lie in 0..{n - 1}", param_hint="--set")
    return sorted(set(verts))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.option("--csv", "as_csv", is_flag=True, help="Emit CSV (tables).")
@click.option("--workers", type=click.IntRange(1), default=1, show_default=True)
@click.option("--budget", type=click.FloatRange(min=0, min_open=True), default=DEFAULT_BUDGET,
              show_default=True, help="Seconds per case or table row.")
@click.option("--cache", "cache_dir", type=click.Path(file_okay=False),
              help="Results store directory (default: $PDTHROTTLE_CACHE or ~/.cache/pdthrottle).")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized suites.")
@click.pass_context
def cli(ctx, as_json, as_csv, workers, budget, cache_dir, seed):
    """Exact power domination and product power throttling."""
    ctx.obj = {"as_json": as_json, "as_csv": as_csv, "workers": workers, "budget": budget,
               "cache_dir": cache_dir, "seed": seed}


# -- generate -----------------------------------------------------------------

INTERVAL_FAMILIES = ("unit-path", "random-unit", "interval-claw-intervals")


@cli.command()
@click.argument("family")
@click.argument("params", nargs=-1)
@click.option("--seed", type=int, default=None)
@click.pass_context
def generate(ctx, family, params, seed):
    """Print a family member as an edge list (or intervals for interval families).

    Families: path, cycle, complete, star, spider, corona-path, corona-cycle,
    half-order-path, grid, cylinder, torus, rook, g-d, family-a, example-h,
    example-w, example-w-prism, spider-prism, interval-claw, and the
    interval families unit-path, random-unit, interval-claw-intervals.
    """
    o = _opts(ctx, seed=seed)
    from .unit_interval import format_intervals, random_unit_representation

    try:
        if family in INTERVAL_FAMILIES:
            if family == "interval-claw-intervals":
                rep = gen.fig7_interval_graph()[1]
            elif len(params) != 1:
                raise GraphError(f"{family} expects one parameter n")
            elif family == "unit-path":
                rep = gen.unit_interval_path(int(params[0]))
            else:
                rep = random_unit_representation(int(params[0]), random.Random(o["seed"]))
            click.echo(format_intervals(rep), nl=False)
            return
        G = gen.generate(family, list(params))
    except (GraphError, ValueError, IndexError) as exc:
        raise click.UsageError(str(exc))
    click.echo(format_edge_list(G), nl=False)


# -- solve --------------------------------------------------------------------

PARAMS = ("gamma", "gammap", "pt", "thpdx", "thpd", "trace", "greedy")


def _load(graph_file, intervals):
    try:
        if intervals:
            from .unit_interval import graph_from_intervals, read_intervals

            rep = read_intervals(intervals)
            return graph_from_intervals(rep)[0], rep
        if graph_file is None:
            raise click.UsageError("give a graph file or --intervals FILE")
        return read_graph(graph_file), None
    except (GraphError, OSError) as exc:
        raise InputError(str(exc))


@cli.command()
@click.argument("param", type=click.Choice(PARAMS))
@click.argument("graph_file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", "k", type=click.IntRange(1), help="Restrict to sets of this size.")
@click.option("--set", "set_text", help="Comma-separated source set, e.g. 0,15.")
@click.option("--intervals", type=click.Path(exists=True, dir_okay=False),
              help="Read the graph from an interval file instead.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--workers", type=click.IntRange(1), default=None)
@click.option("--budget", type=click.FloatRange(min=0, min_open=True), default=None)
@click.pass_context
def solve(ctx, param, graph_file, k, set_text, intervals, as_json, workers, budget):
    """Compute PARAM for a graph: gamma, gammap, pt, thpdx, thpd, trace or greedy."""
    o = _opts(ctx, as_json=as_json, workers=workers, budget=budget)
    G, rep = _load(graph_file, intervals)
    S = _parse_set(set_text, G.n)
    if k is not None and k > G.n:
        raise click.BadParameter(f"k must be at most {G.n}", param_hint="--k")
    deadline = time.monotonic() + o["budget"]
    try:
        out = _solve(G, rep, param, k, S, o["workers"], deadline)
    except BudgetExceeded:
        out = {"param": param, "status": "skipped", "reason": f"budget of {o['budget']} s exhausted"}
    except GraphError as exc:
        raise InputError(str(exc))
    if o["as_json"] or param == "trace":
        click.echo(json.dumps(out, indent=2, sort_keys=True))
    else:
        click.echo(_format_solve(out))


def _solve(G, rep, param, k, S, workers, deadline) -> dict:
    if param == "trace":
        if S is None:
            raise click.UsageError("solve trace needs --set")
        return propagate(G, S).to_dict()
    if param == "greedy":
        if rep is None:
            raise click.UsageError("solve greedy needs --intervals")
        from .unit_interval import greedy_domination

        D = greedy_domination(rep)
        return {"param": "greedy", "value": len(D), "witness": D.sorted()}
    if S is not None:
        t = propagate(G, S).propagation_time
        vals = {"pt": t, "thpdx": len(S) * t, "thpd": len(S) + t}
        if param not in vals:
            raise click.UsageError(f"--set applies to pt, thpdx, thpd and trace, not {param}")
        return {"param": param, "value": _num(vals[param]), "witness": S, "time": _num(t)}
    if param in ("gamma", "gammap"):
        if k is not None:
            raise click.UsageError("--k does not apply to gamma or gammap")
        fn = domination_number if param == "gamma" else power_domination_number
        v, W = fn(G, deadline)
        return {"param": param, "value": v, "witness": W.sorted()}
    if param == "pt" or k is not None:
        if k is None:
            k = power_domination_number(G, deadline)[0]
        t, W = pt_pd_k(G, k, deadline)
        value = {"pt": t, "thpdx": k * t, "thpd": k + t}[param]
        return {"param": param, "k": k, "value": _num(value), "time": _num(t),
                "witness": W.sorted() if W is not None else None}
    fn = product_throttling if param == "thpdx" else sum_throttling
    res = fn(G, workers=workers, deadline=deadline)
    return {"param": param, **res.to_dict()}


def _format_solve(out: dict) -> str:
    if out.get("status") == "skipped":
        return f"{out['param']}: skipped ({out['reason']})"
    parts = [f"{out['param']} = {out['value']}"]
    if out.get("k") is not None:
        parts.append(f"k = {out['k']}")
    if "witness_time" in out:
        parts.append(f"time = {out['witness_time']}")
    elif "time" in out:
        parts.append(f"time = {out['time']}")
    if out.get("witness") is not None:
        parts.append("witness = {" + ", ".join(map(str, out["witness"])) + "}")
    return "  ".join(parts)


# -- verify -------------------------------------------------------------------

def _parse_params(items) -> dict:
    params = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise click.BadParameter(f"expected key=value, got {item!r}", param_hint="--param")
        try:
            params[key.strip().replace("-", "_")] = int(val)
        except ValueError:
            raise click.BadParameter(f"{key} needs an integer", param_hint="--param")
    return params


@cli.command()
@click.argument("suite")
@click.option("--param", "-p", "param_items", multiple=True,
              help="Suite parameter key=value, e.g. max_n=6 (repeatable).")
@click.option("--json", "as_json", is_flag=True)
@click.option("--no-timing", is_flag=True, help="Omit wall times from JSON.")
@click.option("--workers", type=click.IntRange(1), default=None)
@click.option("--budget", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("--cache", "cache_dir", type=click.Path(file_okay=False), default=None)
@click.option("--seed", type=int, default=None)
@click.pass_context
def verify(ctx, suite, param_items, as_json, no_timing, workers, budget, cache_dir, seed):
    """Run a verification suite (or "all"); exit 1 on any fail or mismatch."""
    o = _opts(ctx, as_json=as_json, workers=workers, budget=budget, cache_dir=cache_dir, seed=seed)
    params = _parse_params(param_items)
    params.setdefault("seed", o["seed"])
    names = list(SUITES) if suite == "all" else [suite]
    reports = []
    for name in names:
        try:
            report = run_verify(name, params, workers=o["workers"], budget=o["budget"],
                                cache_dir=o["cache_dir"])
        except UnknownSuite as exc:
            raise click.UsageError(str(exc))
        except KeyError as exc:
            raise click.UsageError(str(exc.args[0]))
        reports.append(report)
        if not o["as_json"]:
            click.echo(report.format_text())
    if o["as_json"]:
        docs = [r.to_dict(timing=not no_timing) for r in reports]
        click.echo(json.dumps(docs if suite == "all" else docs[0], indent=2, sort_keys=True))
    ctx.exit(0 if all(r.ok for r in reports) else 1)


# -- table --------------------------------------------------------------------

@cli.command()
@click.argument("specs", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--csv", "as_csv", is_flag=True)
@click.option("--budget", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("--cache", "cache_dir", type=click.Path(file_okay=False), default=None)
@click.pass_context
def table(ctx, specs, as_json, as_csv, budget, cache_dir):
    """Parameter table for range specs such as path:1-12, grid:2-5 or family-a.

    Results are cached on disk by graph hash and parameter.
    """
    o = _opts(ctx, as_json=as_json, as_csv=as_csv, budget=budget, cache_dir=cache_dir)
    try:
        res = run_table(list(specs), cache_dir=o["cache_dir"] or str(default_cache_dir()),
                        budget=o["budget"])
    except GraphError as exc:
        raise click.UsageError(str(exc))
    click.echo(res.to_json() if o["as_json"] else res.to_csv(), nl=False)
    if o["as_json"]:
        click.echo()
    click.echo(f"solver calls: {res.solver_calls}, cache hits: {res.cache_hits}", err=True)


def main(argv=None) -> None:
    try:
        cli.main(args=argv, prog_name="pdthrottle")
    except KeyboardInterrupt:
        sys.exit(130)


if __name__ == "__main__":
    main()
