import json
from fractions import Fraction

import pytest

from udgx import cli
from udgx.cycle import build_instance
from udgx.errors import TooLargeForOracle
from udgx.geom import float_mode, validate_convex_ccw
from udgx.harness import io
from udgx.harness.generate import gen_cloud, gen_convex
from udgx.harness.oracles import oracle_dominating, oracle_mwis, oracle_triple
from udgx.harness.verify import PROBLEMS, bench, verify

from conftest import SQUARE


def test_gen_convex_triangle():
    inst = gen_convex(3, 11)
    assert inst.n == 3 and validate_convex_ccw(inst.points)


def test_gen_convex_deterministic():
    a, b = gen_convex(25, 4, scale=3), gen_convex(25, 4, scale=3)
    assert a.points == b.points and a.weights == b.weights
    assert gen_convex(25, 5, scale=3).points != a.points


def test_gen_convex_large_is_convex():
    inst = gen_convex(10_000, 1)
    assert validate_convex_ccw(inst.points)


def test_gen_cloud_distinct_and_deterministic():
    a = gen_cloud(300, 2)
    assert len(set(a.points)) == 300
    assert a.points == gen_cloud(300, 2).points


@pytest.mark.parametrize("make", [
    lambda: gen_convex(12, 3),
    lambda: gen_convex(12, 3, mode=float_mode(0.0)),
    lambda: gen_cloud(20, 3),
    lambda: build_instance(SQUARE, [Fraction(1, 3), 2, 3, 4], r=Fraction(7, 5)),
])
def test_io_round_trip(make, tmp_path):
    inst = make()
    path = tmp_path / "inst.json"
    io.save(inst, path)
    back = io.load(path)
    assert back.points == inst.points and back.weights == inst.weights
    assert back.r2 == inst.r2 and back.mode == inst.mode
    assert io.dumps(back) == io.dumps(inst)


def test_io_reads_rational_strings():
    doc = {"mode": "exact", "r": "3/2", "convex": True, "points": [[0, 0, 1], ["5/2", 0, 1], [0, 3, "1/2"]]}
    inst = io.from_json(doc)
    assert inst.r2 == Fraction(9, 4) and inst.weights[2] == Fraction(1, 2)


def test_oracle_examples():
    assert oracle_dominating(SQUARE, [5, 1, 1, 9], 1, 2)[0] == 2
    h = Fraction(1732050807568877, 10 ** 15)
    assert oracle_mwis([(0, 0), (2, 0), (1, h)], [1, 2, 3], 1)[0] == 6
    four = [(0, 0), (2, 0), (0, 2), (Fraction(1, 2), 0)]
    assert oracle_triple(four, [3, 5, 7, 100], 1)[0] == 112


def test_oracle_size_limit():
    with pytest.raises(TooLargeForOracle):
        oracle_mwis([(t, t * t) for t in range(30)], None, 1)


@pytest.mark.parametrize("name", sorted(PROBLEMS))
def test_verify_every_problem(name):
    report = verify(name, trials=4, n_max=9, seed=1)
    assert report.ok, report.mismatches
    assert report.checks == 4


def test_verify_float_grid():
    assert verify("mwis", trials=5, n_max=12, seed=2, mode=float_mode(0.0)).ok


def test_bench_rows():
    rows = bench("dominating", [50, 100])
    assert [n for n, _ in rows] == [50, 100] and all(t >= 0 for _, t in rows)


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.json"
    io.save(build_instance(SQUARE, [5, 1, 1, 9], r=1), path)
    return str(path)


def test_cli_solve_json(square_file, capsys):
    assert cli.main(["solve", "dominating-weighted", square_file, "--k", "2", "--json"]) == cli.OK
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == 2 and out["witness"] == [1, 2]


def test_cli_oracle_agrees(square_file, capsys):
    assert cli.main(["oracle", "mwis", square_file, "--json"]) == cli.OK
    assert json.loads(capsys.readouterr().out)["value"] == 10


def test_cli_none_exit(square_file, capsys):
    assert cli.main(["solve", "triple-far", square_file, "--r", "6/5"]) == cli.NONE
    assert capsys.readouterr().out.strip() == "none"


def test_cli_infeasible_exit(square_file):
    assert cli.main(["solve", "dominating-weighted", square_file, "--k", "1", "--r", "1/2"]) == cli.NONE


def test_cli_invalid_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"mode": "exact", "r": 1, "convex": True,
                                "points": [[0, 0, 1], [0, 1, 1], [1, 0, 1]]}))
    assert cli.main(["solve", "mwis", str(path)]) == cli.INVALID
    assert "error" in capsys.readouterr().err


def test_cli_missing_k(square_file):
    assert cli.main(["solve", "kcenter", square_file]) == cli.INVALID


def test_cli_generate_and_verify(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert cli.main(["generate", "cloud", "--n", "30", "--seed", "3", "--out", str(out)]) == cli.OK
    assert cli.main(["solve", "mwis3", str(out), "--json"]) in (cli.OK, cli.NONE)
    assert cli.main(["verify", "--problem", "kcenter", "--trials", "3", "--n-max", "8"]) == cli.OK
    assert "0 mismatches" in capsys.readouterr().out


def test_cli_complement(square_file, capsys):
    assert cli.main(["solve", "mwis", square_file, "--complement", "--json"]) == cli.OK
    assert json.loads(capsys.readouterr().out)["witness"] == [0, 2]
