"""Command-line front end: generation, derived graphs, treewidth,
decomposition lifting, certificate checking, and experiment sweeps.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 size refusal.
"""

from __future__ import annotations

import concurrent.futures
import csv
import math
import os
import sys
import time

import click

from . import decomposition as dec
from . import embedding as emb
from . import graph as gr
from . import minors
from .errors import ConstructionError, FormatError, SizeLimitError
from .generators import (grid, partially_triangulated_grid, random_graph,
                         random_canonical_map, random_planar_triangulation,
                         wheel_map)

EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_SIZE = 3

CSV_SCHEMA = "gridlab-sweep-1"
CSV_COLUMNS = ["schema", "family", "r", "rows", "cols", "nations", "n", "k",
               "seed", "tw_M", "tw_R", "tw_D", "tw_union", "tw_G", "tw_Gk",
               "tw_dual", "delta_G", "delta_Gk", "grid_r", "verdict",
               "error", "runtime_s"]


def _fail(message, code):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_emb(path):
    try:
        e, fl = emb.emb_load(path)
    except FormatError as exc:
        _fail(f"{path}: {exc}", EXIT_USAGE)
    if fl is None:
        _fail(f"{path}: no nation labeling in file", EXIT_USAGE)
    return e, fl


def _load_gr(path):
    try:
        return gr.gr_load(path)
    except FormatError as exc:
        _fail(f"{path}: {exc}", EXIT_USAGE)


@click.group()
def main():
    """Treewidth and grid-minor constructions for maps, powers and duals."""


# ---------------------------------------------------------------------------
# gen

@main.command()
@click.argument("family", type=click.Choice(
    ["wheel-map", "grid", "ptgrid", "random-map", "triangulation",
     "nation-grid"]))
@click.option("--r", type=int, help="wheel parameter (r^2 spokes)")
@click.option("--rows", type=int)
@click.option("--cols", type=int)
@click.option("--nations", type=int)
@click.option("--n", type=int, help="triangulation vertex count")
@click.option("--size", type=int, help="nation grid side")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", required=True, type=click.Path())
@click.option("--seq-output", type=click.Path(),
              help="with nation-grid: also write the grid-producing "
                   "contraction sequence as JSON")
def gen(family, r, rows, cols, nations, n, size, seed, output, seq_output):
    """Generate an instance and write it as .emb or .gr."""
    try:
        if family == "wheel-map":
            if r is None:
                raise click.UsageError("wheel-map needs --r")
            e, fl = wheel_map(r)
            emb.emb_dump(e, fl, output)
        elif family == "grid":
            if rows is None or cols is None:
                raise click.UsageError("grid needs --rows and --cols")
            gr.gr_dump(grid(rows, cols), output)
        elif family == "ptgrid":
            if rows is None or cols is None:
                raise click.UsageError("ptgrid needs --rows and --cols")
            gr.gr_dump(partially_triangulated_grid(rows, cols, seed), output)
        elif family == "random-map":
            if nations is None:
                raise click.UsageError("random-map needs --nations")
            e, fl = random_canonical_map(nations, seed)
            emb.emb_dump(e, fl, output)
        elif family == "triangulation":
            if n is None:
                raise click.UsageError("triangulation needs --n")
            e = random_planar_triangulation(n, seed)
            emb.emb_dump(e, emb.all_nations(e), output)
        else:
            if size is None:
                raise click.UsageError("nation-grid needs --size")
            e, fl, seq = minors.nation_grid_transfer_instance(size)
            emb.emb_dump(e, fl, output)
            if seq_output:
                with open(seq_output, "w") as f:
                    f.write(minors.sequence_dumps(seq))
    except ValueError as exc:
        _fail(str(exc), EXIT_USAGE)
    click.echo(f"wrote {output}")


# ---------------------------------------------------------------------------
# derive

@main.command()
@click.argument("input_path", type=click.Path(exists=True))
@click.option("--map", "kind", flag_value="map")
@click.option("--dual", "kind", flag_value="dual")
@click.option("--radial", "kind", flag_value="radial")
@click.option("--union", "kind", flag_value="union")
@click.option("--canonicalize", "kind", flag_value="canonicalize")
@click.option("-o", "--output", required=True, type=click.Path())
def derive(input_path, kind, output):
    """Derived graph of an .emb map: map/dual/radial/union as .gr,
    or the canonical form as .emb."""
    if kind is None:
        raise click.UsageError("pick one of --map/--dual/--radial/--union/"
                               "--canonicalize")
    e, fl = _load_emb(input_path)
    if kind == "canonicalize":
        try:
            e2, fl2 = emb.canonicalize(e, fl)
        except Exception as exc:
            _fail(str(exc), EXIT_VERIFY)
        emb.emb_dump(e2, fl2, output)
    else:
        if kind == "map":
            g = emb.map_graph(e, fl)
        elif kind == "dual":
            g = emb.dual_graph(e, fl)
        elif kind == "radial":
            g, _ = emb.radial_graph(e, fl)
        else:
            g = emb.union_radial_dual(e, fl)
        gr.gr_dump(g, output)
    click.echo(f"wrote {output}")


# ---------------------------------------------------------------------------
# tw

@main.command()
@click.argument("input_path", type=click.Path(exists=True))
@click.option("--exact/--upper", default=True)
@click.option("-o", "--output", type=click.Path())
def tw(input_path, exact, output):
    """Treewidth of a .gr graph; optionally write the decomposition."""
    g = _load_gr(input_path)
    try:
        width, td = (dec.treewidth_exact(g) if exact
                     else dec.treewidth_upper(g))
    except SizeLimitError as exc:
        _fail(str(exc), EXIT_SIZE)
    if output:
        dec.td_dump(td, g.n, output)
    click.echo(f"width {width}")


# ---------------------------------------------------------------------------
# lift

@main.command()
@click.option("--radial-to-map", "emb_path", type=click.Path(exists=True),
              help=".emb map whose radial decomposition is lifted")
@click.option("--power", "k", type=int,
              help="lift a decomposition of G to one of G^k")
@click.option("--gr", "gr_path", type=click.Path(exists=True),
              help="base graph for --power")
@click.argument("td_path", type=click.Path(exists=True))
@click.option("-o", "--output", required=True, type=click.Path())
def lift(emb_path, k, gr_path, td_path, output):
    """Lift a tree decomposition (radial to map, or G to G^k)."""
    try:
        td, _ = dec.td_load(td_path)
    except FormatError as exc:
        _fail(f"{td_path}: {exc}", EXIT_USAGE)
    try:
        if emb_path:
            e, fl = _load_emb(emb_path)
            td2 = dec.lift_radial_to_map(td, e, fl)
            n = len(fl.nations)
        elif k:
            if not gr_path:
                raise click.UsageError("--power needs --gr")
            g = _load_gr(gr_path)
            td2 = dec.lift_power(td, g, k)
            n = g.n
        else:
            raise click.UsageError("pick --radial-to-map or --power")
    except ValueError as exc:
        _fail(str(exc), EXIT_VERIFY)
    dec.td_dump(td2, n, output)
    click.echo(f"width {td2.width}")


# ---------------------------------------------------------------------------
# check

@main.command()
@click.option("--td", "td_path", type=click.Path(exists=True))
@click.option("--gr", "gr_path", type=click.Path(exists=True))
@click.option("--model", "model_path", type=click.Path(exists=True))
def check(td_path, gr_path, model_path):
    """Verify a decomposition against a graph, or a minor model."""
    if model_path:
        try:
            with open(model_path) as f:
                model = minors.model_loads(f.read())
        except (ValueError, KeyError) as exc:
            _fail(f"{model_path}: {exc}", EXIT_USAGE)
        violation = minors.verify_model(model)
        if violation is not None:
            _fail(str(violation), EXIT_VERIFY)
        click.echo("ok")
        return
    if not (td_path and gr_path):
        raise click.UsageError("pass --model, or both --td and --gr")
    g = _load_gr(gr_path)
    try:
        td, n = dec.td_load(td_path)
    except FormatError as exc:
        _fail(f"{td_path}: {exc}", EXIT_USAGE)
    if n != g.n:
        _fail(f"decomposition is over {n} vertices, graph has {g.n}",
              EXIT_VERIFY)
    violation = td.validate(g)
    if violation is not None:
        _fail(str(violation), EXIT_VERIFY)
    click.echo("ok")


# ---------------------------------------------------------------------------
# power

@main.command()
@click.argument("input_path", type=click.Path(exists=True))
@click.option("--k", type=int, required=True)
@click.option("-o", "--output", type=click.Path())
@click.option("--witness-r", type=int,
              help="run the clique-or-degree-bound case analysis for r")
def power(input_path, k, output, witness_r):
    """k-th power of a .gr graph; optional clique/bound case analysis."""
    g = _load_gr(input_path)
    try:
        gk = gr.power_graph(g, k)
    except ValueError as exc:
        _fail(str(exc), EXIT_USAGE)
    if output:
        gr.gr_dump(gk, output)
    click.echo(f"power graph: n={gk.n} m={len(gk.edges)} "
               f"max_degree={gk.max_degree()}")
    if witness_r:
        try:
            result = gr.power_clique_or_bound(g, k, witness_r)
        except ValueError as exc:
            _fail(str(exc), EXIT_VERIFY)
        if isinstance(result, gr.CliqueWitness):
            bad = result.verify(g)
            if bad is not None:
                _fail(f"witness pair {bad} too far apart", EXIT_VERIFY)
            click.echo(f"clique witness of size {len(result.vertices)}")
        else:
            click.echo(f"degree bound: max_degree(G^k) = "
                       f"{gk.max_degree()} < {result.degree_bound} "
                       f"({result.parity} case)")


# ---------------------------------------------------------------------------
# grid-minor

@main.command("grid-minor")
@click.argument("input_path", type=click.Path(exists=True))
@click.option("-o", "--output", type=click.Path())
def grid_minor(input_path, output):
    """Largest r x r grid minor of a .gr graph (desk scale)."""
    g = _load_gr(input_path)
    try:
        r, model = minors.largest_grid_minor(g)
    except SizeLimitError as exc:
        _fail(str(exc), EXIT_SIZE)
    if output:
        with open(output, "w") as f:
            f.write(minors.model_dumps(model))
    click.echo(f"grid minor {r}x{r}")


# ---------------------------------------------------------------------------
# transfer

@main.command()
@click.option("--emb", "emb_path", required=True,
              type=click.Path(exists=True))
@click.option("--seq", "seq_path", required=True,
              type=click.Path(exists=True))
@click.option("-o", "--output", type=click.Path())
def transfer(emb_path, seq_path, output):
    """Convert a grid minor of the radial-dual union into a grid minor
    of the dual."""
    e, fl = _load_emb(emb_path)
    try:
        with open(seq_path) as f:
            seq = minors.sequence_loads(f.read())
    except (ValueError, KeyError) as exc:
        _fail(f"{seq_path}: {exc}", EXIT_USAGE)
    try:
        model = minors.radial_grid_to_dual_grid(seq, e, fl)
    except ConstructionError as exc:
        _fail(str(exc), EXIT_VERIFY)
    if output:
        with open(output, "w") as f:
            f.write(minors.model_dumps(model))
    side = math.isqrt(len(model.branch_sets))
    click.echo(f"dual grid minor {side}x{side}")


# ---------------------------------------------------------------------------
# sweep

def _blank_row():
    return {c: "" for c in CSV_COLUMNS} | {"schema": CSV_SCHEMA}


def _wheel_row(r, seed):
    row = _blank_row() | {"family": "wheel", "r": r, "seed": seed}
    e, fl = wheel_map(r)
    m = emb.map_graph(e, fl)
    d = emb.dual_graph(e, fl)
    tw_m, _ = dec.treewidth_exact(m)
    tw_d, _ = dec.treewidth_exact(d)
    gr_r, _ = minors.largest_grid_minor(m)
    row |= {"tw_M": tw_m, "tw_D": tw_d, "grid_r": gr_r,
            "verdict": "ok" if tw_m == r * r - 1 and gr_r == r
            else "fail"}
    return row


def _map_row(nations, seed):
    row = _blank_row() | {"family": "map", "nations": nations, "seed": seed}
    e, fl = random_canonical_map(nations, seed)
    r_graph, _ = emb.radial_graph(e, fl)
    m = emb.map_graph(e, fl)
    tw_r, td_r = dec.treewidth_exact(r_graph)
    tw_m, _ = dec.treewidth_exact(m)
    delta = e.max_degree()
    td_m = dec.lift_radial_to_map(td_r, e, fl)
    lifted_ok = td_m.validate(m) is None
    row |= {"tw_M": tw_m, "tw_R": tw_r, "delta_G": delta,
            "verdict": "ok" if lifted_ok
            and tw_m + 1 <= delta * (tw_r + 1) else "fail"}
    return row


def _power_row(n, k, seed):
    row = _blank_row() | {"family": "power", "n": n, "k": k, "seed": seed}
    g = random_graph(n, seed)
    gk = gr.power_graph(g, k)
    tw_g, td_g = dec.treewidth_exact(g)
    tw_gk, _ = dec.treewidth_exact(gk)
    td_k = dec.lift_power(td_g, g, k)
    lifted_ok = td_k.validate(gk) is None
    row |= {"tw_G": tw_g, "tw_Gk": tw_gk, "delta_G": g.max_degree(),
            "delta_Gk": gk.max_degree(),
            "verdict": "ok" if lifted_ok
            and tw_gk + 1 <= gk.max_degree() * (tw_g + 1) else "fail"}
    return row


def _primal_dual_row(n, seed):
    row = _blank_row() | {"family": "primal-dual", "n": n, "seed": seed}
    e = random_planar_triangulation(n, seed)
    report = minors.primal_dual_width_report(e)
    row |= {"tw_G": report["tw_primal"], "tw_dual": report["tw_dual"],
            "verdict": "ok" if abs(report["tw_primal"]
                                   - report["tw_dual"]) <= 1 else "fail"}
    return row


_SWEEP_FAMILIES = {
    "wheel": (_wheel_row, "r"),
    "map": (_map_row, "nations"),
    "power": (_power_row, "n"),
    "primal-dual": (_primal_dual_row, "n"),
}


@main.command()
@click.option("--family", required=True,
              type=click.Choice(sorted(_SWEEP_FAMILIES)))
@click.option("--values", default="",
              help="comma-separated main parameter values (r, nations, n)")
@click.option("--seeds", default="0", show_default=True,
              help="comma-separated seeds")
@click.option("--k", type=int, default=2, show_default=True,
              help="power exponent (family power only)")
@click.option("-o", "--output", required=True, type=click.Path())
def sweep(family, values, seeds, k, output):
    """Run a parameter sweep and write one CSV row per instance."""
    try:
        value_list = [int(x) for x in values.split(",") if x.strip()]
        seed_list = [int(x) for x in seeds.split(",") if x.strip()]
    except ValueError:
        raise click.UsageError("--values/--seeds must be integers")
    row_fn, _ = _SWEEP_FAMILIES[family]
    jobs = [(v, s) for v in value_list for s in seed_list]

    def run(job):
        v, s = job
        started = time.monotonic()
        try:
            if family == "power":
                row = row_fn(v, k, s)
            else:
                row = row_fn(v, s)
        except Exception as exc:  # per-row failures never abort the sweep
            row = _blank_row() | {"family": family, "seed": s,
                                  "error": f"{type(exc).__name__}: {exc}"}
            key = _SWEEP_FAMILIES[family][1]
            row[key] = v
        row["runtime_s"] = f"{time.monotonic() - started:.3f}"
        return row

    threads = max(1, int(os.environ.get("GRIDLAB_THREADS", "1")))
    if threads > 1 and jobs:
        with concurrent.futures.ThreadPoolExecutor(threads) as pool:
            rows = list(pool.map(run, jobs))
    else:
        rows = [run(job) for job in jobs]
    rows.sort(key=lambda row: (row["family"],
                               *(str(row[c]) for c in CSV_COLUMNS)))
    with open(output, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    bad = [row for row in rows if row["verdict"] == "fail" or row["error"]]
    click.echo(f"{len(rows)} rows, {len(bad)} problem(s)")
    if bad:
        sys.exit(EXIT_VERIFY)


if __name__ == "__main__":
    main()
