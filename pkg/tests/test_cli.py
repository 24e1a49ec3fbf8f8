import csv
import io
import json

import jsonschema
import pytest

from partring.cli import main
from partring.schemas import SCHEMAS
from partring.viz import render_svg


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "1+1") == (0, "[1,1]\n", "")
    assert run(capsys, "eval", "[3,4]*[1,1,2]")[1] == "[3,3,4,4,6,8]\n"
    assert run(capsys, "eval", "[2]^3")[1] == "[8]\n"
    code, out, _ = run(capsys, "eval", "[1,2]", "--format", "json")
    assert json.loads(out) == {"expression": "[1,2]", "value": [1, 2]}


def test_eval_parse_error(capsys):
    code, out, err = run(capsys, "eval", "[2]^2^3")
    assert code == 1 and "offset 5" in err and out == ""


def test_usage_error_exits_one(capsys):
    assert run(capsys, "pcount")[0] == 1
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "pcount", "5", "--engine", "nope")[0] == 1


def test_pcount_all(capsys):
    code, out, err = run(capsys, "pcount", "20", "--engine", "all")
    assert code == 0 and err.strip() == "OK"
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 21 and rows[-1] == {"n": "20", "p": "627"}


def test_pcount_small(capsys):
    rows = list(csv.DictReader(io.StringIO(run(capsys, "pcount", "0")[1])))
    assert rows == [{"n": "0", "p": "1"}]
    rows = list(csv.DictReader(io.StringIO(run(capsys, "pcount", "4")[1])))
    assert rows[-1]["p"] == "5"


def test_pcount_disagreement_exits_two(capsys, monkeypatch):
    from partring import partition_count

    def broken(n_max):
        t = partition_count.p_pentagonal(n_max)
        return partition_count.PartitionTable(t.values[:-1] + (t.values[-1] + 1,), "prod")

    monkeypatch.setitem(partition_count.ENGINES, "prod", broken)
    code, _, err = run(capsys, "pcount", "9", "--engine", "all")
    assert code == 2 and "n=9" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("pcount", "30", "--engine", "all"),
        ("pcount", "10", "--engine", "conv"),
        ("sigma", "30"),
        ("census", "8"),
        ("asymptotics", "100", "1000"),
        ("modring", "5", "7", "rho", "--trials", "10", "--seed", "3"),
    ],
)
def test_json_schema(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS[doc["command"]])


def test_prime_and_factor(capsys):
    assert run(capsys, "prime", "[1,2,3,4]")[1] == "prime (not covered by sufficient condition)\n"
    assert run(capsys, "prime", "[1,1,1,1]")[1] == "composite: [1,1]*[1,1]\n"
    assert run(capsys, "prime", "[2,3]")[1] == "prime (sufficient condition)\n"
    assert run(capsys, "factor", "[2,4]")[1] == "[2]*[1,2]\n"
    assert run(capsys, "factor", "[2,3,4,5]")[1] == "irreducible\n"
    assert run(capsys, "prime", "[1]")[0] == 1
    assert run(capsys, "prime", "[]")[0] == 1
    info = json.loads(run(capsys, "prime", "[1,1,1,1]", "--format", "json")[1])
    assert info["witness"] == [[1, 1], [1, 1]] and info["prime"] is False


def test_gcd(capsys):
    code, out, _ = run(capsys, "gcd", "[4]", "[6]")
    assert code == 0 and out.splitlines()[0] == "[2]"
    doc = json.loads(run(capsys, "gcd", "[1,2]", "[3,4]", "--format", "json")[1])
    assert doc["representative"] == [1]


def test_census(capsys):
    code, out, err = run(capsys, "census", "6")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["total"] for r in rows] == ["1", "2", "3", "5", "7", "11"]
    assert "[2,2] = [2]*[1,1]" in err


def test_graphcheck(capsys):
    assert run(capsys, "graphcheck", "50", "--seed", "7")[:2] == (0, "50/50 OK\n")


def test_asymptotics(capsys):
    rows = list(csv.DictReader(io.StringIO(run(capsys, "asymptotics", "100")[1])))
    assert rows[0]["p"] == "190569292"
    assert 0.94 < float(rows[0]["ratio"]) < 0.98


def test_modring(capsys):
    assert run(capsys, "modring", "3", "5", "project", "[3,4,5,2]")[1] == "{0:1, 1:1, 2:2}\n"
    assert run(capsys, "modring", "3", "5", "mul", "[1]", "[2,2]")[1] == "{2:2}\n"
    assert run(capsys, "modring", "3", "5", "add", "[1]", "[2,2]")[1] == "{1:1, 2:2}\n"
    assert run(capsys, "modring", "3", "5", "pow", "[2]", "3")[1] == "{2:1}\n"
    assert run(capsys, "modring", "1", "5", "project", "[2]")[0] == 1
    assert run(capsys, "modring", "3", "5", "project")[0] == 1
    a = run(capsys, "modring", "5", "7", "rho", "--trials", "5", "--seed", "9", "--format", "json")[1]
    b = run(capsys, "modring", "5", "7", "rho", "--trials", "5", "--seed", "9", "--format", "json")[1]
    assert a == b


def test_viz(capsys, tmp_path):
    target = tmp_path / "six.svg"
    assert run(capsys, "viz", "6", "--out", str(target))[0] == 0
    assert target.read_text(encoding="utf-8") == render_svg(6)
    assert run(capsys, "viz", "31")[0] == 1


def test_sigma(capsys):
    rows = list(csv.DictReader(io.StringIO(run(capsys, "sigma", "12")[1])))
    assert rows[-1] == {"n": "12", "sigma": "28", "sigma_pentagonal": "28"}
