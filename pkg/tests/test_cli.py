import json
import subprocess
import sys
from fractions import Fraction

import pytest

from wrtwist.cli import main
from wrtwist.field import QuadInt, new_field
from wrtwist.ideals import ideal_from_canonical, unit_ideal
from wrtwist.twists import BasisPair, f4_value


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_twists_201(capsys):
    code, out, _ = run(capsys, "twists", "201", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 5
    assert [t["abs_cos"] for t in data["twists"]] == ["7/15", "1/3", "2/13", "1/9", "1/11"]


def test_twists_5(capsys):
    code, out, _ = run(capsys, "twists", "5")
    lines = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
    assert code == 0 and len(lines) == 2 and "Orthogonal" in lines[1]


def test_not_square_free(capsys):
    code, _, err = run(capsys, "twists", "12")
    assert code == 2 and "D must be square-free" in err


def test_bad_ideal(capsys):
    code, _, err = run(capsys, "twists", "5", "--ideal", "2,1,1")
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["twists"])
    assert e.value.code == 2


@pytest.mark.parametrize("D,ideal", [(201, None), (17, None), (201, "2,1,1"), (221, "5,4,1"), (94, None)])
def test_json_round_trip(capsys, D, ideal):
    argv = ["twists", str(D), "--json"] + (["--ideal", ideal] if ideal else [])
    _, out, _ = run(capsys, *argv)
    data = json.loads(out)
    ctx = new_field(D)
    I = unit_ideal(ctx) if ideal is None else ideal_from_canonical(ctx, *map(int, ideal.split(",")))
    for t in data["twists"]:
        w = BasisPair(I, QuadInt(*t["witness"]["x"]), QuadInt(*t["witness"]["y"]))
        assert f4_value(w) == t["f4"]
        assert t["f4"] in t["f4_values"]
        assert abs(Fraction(t["cos_theta"])) == Fraction(t["abs_cos"])


def test_deterministic_output(capsys):
    outs = [run(capsys, "twists", "201", "--json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "survey", "--max-D", "60")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_extend(capsys):
    code, out, _ = run(capsys, "extend", "201", "--x", "129,-17", "--json")
    data = json.loads(out)
    assert code == 0 and {tuple(b["y"]) for b in data["bases"]} == {(38, -5), (941, -124)}
    code, out, _ = run(capsys, "extend", "201", "--x", "6,1")
    assert "no good basis" in out


def test_field(capsys):
    code, out, _ = run(capsys, "field", "17", "--json")
    data = json.loads(out)
    assert data["fund_unit"] == [3, 2] and data["fund_unit_norm"] == -1


def test_geodesic_out(capsys, tmp_path):
    path = tmp_path / "g.csv"
    code, out, _ = run(capsys, "geodesic", "57", "--samples", "50", "--out", str(path))
    assert code == 0 and "crossing classes 3" in out
    assert path.read_text().splitlines()[0] == "alpha,x,y,dist_to_arc"


def test_geodesic_bad_samples(capsys):
    code, _, err = run(capsys, "geodesic", "5", "--samples", "1")
    assert code == 2


def test_markoff(capsys):
    code, out, _ = run(capsys, "markoff", "--max", "200", "--json")
    rows = json.loads(out)
    r5 = [r for r in rows if r["triple"] == [1, 2, 5]][0]
    assert r5["ideal"] == [5, 4, 1] and Fraction(r5["cos1"]) == 0
    assert r5["cos2"] == "-2/9"
    code, out, _ = run(capsys, "markoff", "--family", "pell", "--count", "2", "--json")
    assert [r["triple"] for r in json.loads(out)] == [[2, 5, 29], [2, 29, 169]]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--max-D", "200", "--json")
    data = json.loads(out)
    assert code == 0 and data["equivalence_disagree"] == [] and data["orthogonal_vs_unit_norm_disagree"] == 0
    assert 5 in data["unique_orthogonal"] and 17 not in data["unique_orthogonal"]


def test_survey_formats(capsys):
    _, out, _ = run(capsys, "survey", "--min-D", "2", "--max-D", "20")
    lines = out.splitlines()
    assert lines[0].startswith("D,disc,regulator")
    assert len(lines) == 1 + 12
    _, out, _ = run(capsys, "survey", "--min-D", "2", "--max-D", "20", "--format", "json")
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert [r["D"] for r in rows][:3] == [2, 3, 5]
    code, _, _ = run(capsys, "survey", "--min-D", "30", "--max-D", "20")
    assert code == 2


def test_mpd(capsys):
    _, out, _ = run(capsys, "mpd", "221", "--ideal", "5,4,1", "--json")
    data = json.loads(out)
    assert data["min_abs_norm"] == 25 and data["mpd_squared"] == "25/221"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "wrtwist", "twists", "17"], capture_output=True, text=True)
    assert r.returncode == 0 and "1/3" in r.stdout
