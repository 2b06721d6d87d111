import io
import json

import pytest

from cyclic_census.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_text():
    code, text = run("classify", "8541")
    assert code == 0
    assert text.strip() == "Category III, Graph 6, {9<->73->13}, ranks (2,2,2,2), rule: <81,7>^4"


def test_classify_json():
    code, text = run("classify", "4977", "--format", "json")
    d = json.loads(text)
    assert (d["category"], d["graph"], d["primes"]) == ("I", 1, [7, 9, 79])


def test_classify_inadmissible(capsys):
    code, _ = run("classify", "12")
    assert code == 2
    assert "admissible" in capsys.readouterr().err


def test_census_quintic_json():
    code, text = run("census", "--ell", "5", "--max", "100000", "--format", "json")
    d = json.loads(text)
    assert code == 0
    assert (d["multiplets"]["total"]["conductors"], d["multiplets"]["total"]["fields"]) == (3282, 6552)


def test_census_jobs_do_not_change_bytes():
    a = run("census", "--max", "100000", "--by-category", "--format", "json")[1]
    b = run("census", "--max", "100000", "--by-category", "--format", "json", "--jobs", "2")[1]
    assert a == b
    assert json.dumps(json.loads(a), indent=2, sort_keys=True) + "\n" == a


def test_census_doublets_text():
    code, text = run("census", "--max", "100000", "--doublets")
    assert code == 0 and "1740" in text and "408" in text


def test_sieve_csv():
    code, text = run("sieve", "--max", "100", "--format", "csv")
    lines = text.strip().splitlines()
    assert lines[0] == "c,t,m" and len(lines) == 15


def test_symbol():
    code, text = run("symbol", "3", "7", "13", "--format", "json")
    assert json.loads(text)["coarse"] == 1


def test_sigma():
    code, text = run("sigma", "--group", "Q8", "--format", "json")
    d = json.loads(text)
    assert (d["aut_order"], d["order_d"], d["weak"], d["strong"]) == (24, 8, 8, 2)
    assert run("sigma", "--group", "<16,3>")[0] == 2
    code, text = run("sigma", "--elementary", "5,2")
    assert "w=20" in text


def test_geometry():
    code, text = run("geometry", "--format", "json")
    d = json.loads(text)
    assert code == 0 and len(d["lines"]) == 13


def test_fixtures_cmd():
    code, text = run("fixtures", "--format", "json")
    d = json.loads(text)
    assert code == 0 and d["summary"]["passed"] == d["summary"]["rows"]


def test_fixtures_failure_exit(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("conductor,category,graph,symbol\n819,III,3,{13->7->9}\n")
    assert run("fixtures", str(p))[0] == 1


def test_usage_error():
    with pytest.raises(SystemExit):
        run("nonsense")
