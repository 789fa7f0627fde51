import csv
import json

from click.testing import CliRunner

from gridlab.cli import main
from gridlab.graph import gr_load, gr_loads


def run(runner, args):
    return runner.invoke(main, args, catch_exceptions=False)


def test_gen_tw_check_pipeline(tmp_path):
    runner = CliRunner()
    emb = tmp_path / "w2.emb"
    grf = tmp_path / "w2.gr"
    td = tmp_path / "w2.td"
    assert run(runner, ["gen", "wheel-map", "--r", "2",
                        "-o", str(emb)]).exit_code == 0
    assert run(runner, ["derive", str(emb), "--map",
                        "-o", str(grf)]).exit_code == 0
    res = run(runner, ["tw", str(grf), "--exact", "-o", str(td)])
    assert res.exit_code == 0
    assert "width 3" in res.output  # the map graph of wheel r=2 is K4
    assert run(runner, ["check", "--td", str(td),
                        "--gr", str(grf)]).exit_code == 0


def test_derive_union_is_radial_plus_dual(tmp_path):
    runner = CliRunner()
    emb = tmp_path / "m.emb"
    run(runner, ["gen", "random-map", "--nations", "5", "--seed", "3",
                 "-o", str(emb)])
    paths = {}
    for kind in ("radial", "dual", "union"):
        paths[kind] = tmp_path / f"{kind}.gr"
        assert run(runner, ["derive", str(emb), f"--{kind}",
                            "-o", str(paths[kind])]).exit_code == 0
    radial = gr_load(paths["radial"])
    dual = gr_load(paths["dual"])
    union = gr_load(paths["union"])
    n = union.n - dual.n
    shifted = {(n + a, n + b) for a, b in dual.edges}
    assert union.edges == radial.edges | shifted


def test_lift_radial_to_map(tmp_path):
    runner = CliRunner()
    emb = tmp_path / "m.emb"
    rad = tmp_path / "rad.gr"
    td_r = tmp_path / "rad.td"
    td_m = tmp_path / "map.td"
    mapg = tmp_path / "map.gr"
    run(runner, ["gen", "random-map", "--nations", "4", "-o", str(emb)])
    run(runner, ["derive", str(emb), "--radial", "-o", str(rad)])
    run(runner, ["derive", str(emb), "--map", "-o", str(mapg)])
    assert run(runner, ["tw", str(rad), "-o", str(td_r)]).exit_code == 0
    assert run(runner, ["lift", "--radial-to-map", str(emb), str(td_r),
                        "-o", str(td_m)]).exit_code == 0
    assert run(runner, ["check", "--td", str(td_m),
                        "--gr", str(mapg)]).exit_code == 0


def test_power_witness(tmp_path):
    runner = CliRunner()
    grf = tmp_path / "star.gr"
    lines = ["p tw 10 9"] + [f"1 {i}" for i in range(2, 11)]
    grf.write_text("\n".join(lines) + "\n")
    res = run(runner, ["power", str(grf), "--k", "2", "--witness-r", "3"])
    assert res.exit_code == 0
    assert "clique witness" in res.output


def test_grid_minor_and_transfer(tmp_path):
    runner = CliRunner()
    emb = tmp_path / "ng.emb"
    seq = tmp_path / "ng.json"
    model = tmp_path / "model.json"
    assert run(runner, ["gen", "nation-grid", "--size", "12",
                        "-o", str(emb),
                        "--seq-output", str(seq)]).exit_code == 0
    res = run(runner, ["transfer", "--emb", str(emb), "--seq", str(seq),
                       "-o", str(model)])
    assert res.exit_code == 0
    assert "1x1" in res.output
    assert run(runner, ["check", "--model", str(model)]).exit_code == 0


def test_check_flags_broken_model(tmp_path):
    runner = CliRunner()
    model = tmp_path / "bad.json"
    grf = tmp_path / "k4.gr"
    run(runner, ["gen", "grid", "--rows", "2", "--cols", "2",
                 "-o", str(grf)])
    res = run(runner, ["grid-minor", str(grf), "-o", str(model)])
    assert res.exit_code == 0
    obj = json.loads(model.read_text())
    obj["edge_witness"] = []
    model.write_text(json.dumps(obj))
    res = run(runner, ["check", "--model", str(model)])
    assert res.exit_code == 1


def test_malformed_gr_is_usage_error(tmp_path):
    runner = CliRunner()
    bad = tmp_path / "bad.gr"
    bad.write_text("p cnf 3 1\n1 2\n")
    res = run(runner, ["tw", str(bad)])
    assert res.exit_code == 2


def test_tw_size_refusal(tmp_path):
    runner = CliRunner()
    grf = tmp_path / "big.gr"
    run(runner, ["gen", "grid", "--rows", "3", "--cols", "7",
                 "-o", str(grf)])
    res = run(runner, ["tw", str(grf), "--exact"])
    assert res.exit_code == 3
    assert run(runner, ["tw", str(grf), "--upper"]).exit_code == 0


def test_sweep_wheel(tmp_path):
    runner = CliRunner()
    out = tmp_path / "sweep.csv"
    res = run(runner, ["sweep", "--family", "wheel",
                       "--values", "1,2", "-o", str(out)])
    assert res.exit_code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 2
    widths = sorted(int(r["tw_M"]) for r in rows)
    assert widths == [0, 3]
    assert all(r["verdict"] == "ok" for r in rows)


def test_sweep_empty_values_gives_header_only(tmp_path):
    runner = CliRunner()
    out = tmp_path / "empty.csv"
    res = run(runner, ["sweep", "--family", "map", "--values", "",
                       "-o", str(out)])
    assert res.exit_code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1


def test_gen_missing_param_is_usage_error(tmp_path):
    runner = CliRunner()
    res = run(runner, ["gen", "wheel-map", "-o", str(tmp_path / "x.emb")])
    assert res.exit_code == 2
