import io
import json
import os
from fractions import Fraction

import pytest

from toricdeg import cli
from toricdeg.lattice import SurfaceModel, make_surface
from toricdeg.okounkov import okounkov_polygon


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert(capsys):
    code, out, _ = run(["hilbert", "S6", "--divisor", "4,-1,-1,-1,-1,-1,-1"], capsys)
    assert code == 0 and out.strip() == "5t^2+3t+1"
    code, out, _ = run(["hilbert", "--surface", "L3", "--divisor", "4,-1,-1,-1,-1", "--format", "json"], capsys)
    assert json.loads(out) == {"a2": "6", "a1": "4", "a0": "1"}


def test_zariski(capsys):
    code, out, _ = run(["zariski", "X5", "--divisor", "0,1,0,0,0,0", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["positive"] == ["0"] * 6
    assert data["negative"] == [{"curve": [0, 1, 0, 0, 0, 0], "coefficient": "1"}]


def test_optimize_csv(capsys):
    code, out, _ = run(["optimize", "X5", "--divisor", "6,-1,-1,-2,-3,-4", "--format", "csv"], capsys)
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "divisor,optimal nef curves,optimal negative curves,min S,P.(-K)"
    assert row.endswith(",6,6")


def test_body_json_round_trip(capsys):
    code, out, _ = run(["body", "S6", "--divisor", "4,-1,-1,-1,-1,-1,-1", "--curve", "2,-1,-1,-1,-1,-1,-1",
                        "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    S = make_surface("S6")
    poly = okounkov_polygon(S, (4,) + (-1,) * 6, (2,) + (-1,) * 6)
    assert [(Fraction(x), Fraction(y)) for x, y in data["vertices"]] == poly.vertices
    assert Fraction(data["nu"]) == poly.nu and Fraction(data["mu"]) == poly.mu


def test_rational_divisor(capsys):
    code, out, _ = run(["body", "X5", "--divisor", "3/2,-1/2,-1/2,-1/2,-1/2,-1/2", "--curve", "0,1,0,0,0,0",
                        "--format", "json"], capsys)
    assert code == 0
    assert any("/" in x for v in json.loads(out)["vertices"] for x in v)


def test_svg(capsys, tmp_path):
    target = tmp_path / "body.svg"
    code, _, _ = run(["body", "L3", "--divisor", "4,-1,-1,-1,-1", "--curve", "1,-1,-1,-1,0", "--format", "svg",
                      "--out", str(target)], capsys)
    assert code == 0
    text = target.read_text()
    assert text.startswith("<svg") and "<polygon" in text


def test_defect_and_ehrhart(capsys):
    code, out, _ = run(["defect", "L3", "--divisor", "4,-1,-1,-1,-1", "--curve", "1,-1,-1,-1,0"], capsys)
    assert code == 0 and "normal: yes" in out
    code, out, _ = run(["ehrhart", "--polygon", "0,0;2,0;0,2"], capsys)
    assert code == 0 and out.strip().endswith("2t^2+3t+1")
    code, out, _ = run(["ehrhart", "S6", "--divisor", "4,-1,-1,-1,-1,-1,-1", "--curve", "2,-1,-1,-1,-1,-1,-1"],
                       capsys)
    assert "5t^2+3t+1" in out


def test_info_and_global(capsys):
    code, out, _ = run(["info", "X5"], capsys)
    assert code == 0 and "16 negative curves" in out
    code, out, _ = run(["global", "L3", "--curve", "1,-1,-1,-1,0", "--format", "json"], capsys)
    data = json.loads(out)
    assert len(data["rays"]) == 9 and len(data["facets"]) == 11
    assert data["hilbert"]["verified"]
    assert len(data["cox_generators"]) == 9


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["optimize", "X7", "--divisor", "3,-1,-1,-1,-1,-1,-1,-1"], 2),
        (["zariski", "X5", "--divisor=-1,0,0,0,0,0"], 2),
        (["body", "X5", "--divisor", "1,-1,0,0,0,0", "--curve", "0,1,0,0,0,0"], 2),
        (["hilbert", "X5", "--divisor", "1,2"], 1),
        (["hilbert", "X5", "--divisor", "a,b,c,d,e,f"], 1),
        (["hilbert", "X9", "--divisor", "1"], 1),
        (["hilbert"], 1),
        (["body", "X5", "--divisor", "3,-1,-1,-1,-1,-1"], 1),
        (["nonsense"], 1),
        (["zariski", "X5", "--divisor", "3,-1,-1,-1,-1,-1", "--format", "svg"], 1),
    ],
)
def test_exit_codes(argv, expected, capsys):
    code, _, err = run(argv, capsys)
    assert code == expected
    assert err


def test_run_job_directly():
    out, err = io.StringIO(), io.StringIO()
    job = cli.JobSpec("X5", "hilbert", divisor=(3, -1, -1, -1, -1, -1))
    assert cli.run(job, stdout=out, stderr=err) == 0
    assert out.getvalue().strip() == "2t^2+2t+1"


def test_reproduce(tmp_path, capsys):
    code, out, _ = run(["reproduce", "--out", str(tmp_path / "repro")], capsys)
    assert code == 0
    assert out.count("PASS") == 11 and "FAIL" not in out
    files = set(os.listdir(tmp_path / "repro"))
    assert {"report.json", "x5_optimizer_table.csv", "s6_polygon.svg", "l3_global_body.json"} <= files
    report = json.loads((tmp_path / "repro" / "report.json").read_text())
    assert report["passed"] and report["first_failure"] is None


def test_reproduce_is_deterministic(tmp_path):
    a = cli.reproduce_paper(str(tmp_path / "a"))
    b = cli.reproduce_paper(str(tmp_path / "b"))
    assert a == b
    for name in ("x5_optimizer_table.csv", "x5_global_body.json"):
        assert (tmp_path / "a" / name).read_text() == (tmp_path / "b" / name).read_text()


def test_reproduce_fault_injection(tmp_path):
    def corrupted(kind):
        S = make_surface(kind)
        if S.name != "X5":
            return S
        curves = tuple(c for c in S.negative_curves if c != (1, 0, 0, 0, -1, -1))
        return SurfaceModel(S.name, S.r, S.gram, curves, S.canonical, curves)

    report = cli.reproduce_paper(str(tmp_path), surface_factory=corrupted)
    assert not report["passed"]
    assert report["first_failure"].startswith("X5 optimizer table row 1")


def test_reproduce_empty_outdir(capsys):
    code, _, err = run(["reproduce", "--out", ""], capsys)
    assert code == 1 and "error" in err


def test_reproduce_unwritable_outdir(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, _ = run(["reproduce", "--out", str(blocker / "sub")], capsys)
    assert code == 1
