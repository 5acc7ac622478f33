import io
import json
import os
import subprocess
import sys

import pytest

from qhcurve.cli import expand_ranges, main, parse_ranges, parse_value

SEPTIC = "x0^7+x0^3*x1^4+x1^6*x2"


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_analyze_text():
    code, out = run("analyze", SEPTIC)
    assert code == 0
    assert "Free(3,3)" in out and "tau       27" in out


def test_analyze_json_keys():
    code, out = run("analyze", SEPTIC, "--json")
    rep = json.loads(out)
    assert code == 0
    assert {"input", "degree", "mdr", "classification", "betti", "tjurina", "dpwall", "qh",
            "points", "identities", "warnings"} <= set(rep)
    assert rep["points"][0]["mu"] == 30 and rep["points"][0]["tau"] == 27


def test_analyze_family_option_forms():
    code1, out1 = run("analyze", "--family", "ploski_even", "--m", "3", "--json", "--no-timing")
    code2, out2 = run("analyze", "--family", "ploski_even", "--params", "m=3", "--json", "--no-timing")
    assert code1 == code2 == 0 and out1 == out2
    rep = json.loads(out1)
    assert rep["qh"]["verdict"] == "ExistsNonQH"
    assert rep["qh"]["non_qh_points"] == [["0/1", "0/1", "1/1"]]


def test_analyze_file(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("# septic\n" + SEPTIC + "\n", encoding="utf-8")
    code, out = run("analyze", str(path), "--no-oracle")
    assert code == 0 and "Free(3,3)" in out


def test_check_point():
    f = "x0*(x0^3*x2 + x1^4)"
    code, out = run("check-point", f, "0:0:1", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["mu"] == rec["tau"] == 13 and rec["agree"]


@pytest.mark.parametrize("argv, code, err", [
    (("analyze", "x0^2+x1", "--json"), 2, "not-homogeneous"),
    (("analyze", "x0^2*x1", "--json"), 2, "non-isolated"),
    (("analyze", "x0*x1*(x0+x1)", "--json"), 2, "cone"),
    (("analyze", "x0^2 +", "--json"), 2, "parse"),
    (("analyze", "--family", "nope", "--json"), 2, "bad-family-parameters"),
    (("check-point", SEPTIC, "1:1:1", "--json"), 2, "not-singular"),
    (("check-point", SEPTIC, "1:1", "--json"), 2, "invalid-input"),
    (("analyze", SEPTIC, "--json", "--step-cap", "1"), 1, "resource-limit"),
])
def test_error_codes(argv, code, err):
    got, out = run(*argv)
    assert got == code
    assert json.loads(out)["error"]["code"] == err


def test_usage_errors_exit_2():
    assert run("frobnicate")[0] == 2
    assert run("check-point", SEPTIC, "0:0:1", "--bogus", "1")[0] == 2
    assert run("analyze", "--family", "septic", "--n")[0] == 2


def test_range_expansion():
    combos = expand_ranges(parse_ranges(["d=6..8", "r=2..(d-1)//2"]), {})
    assert combos == [{"d": 6, "r": 2}, {"d": 7, "r": 2}, {"d": 7, "r": 3},
                      {"d": 8, "r": 2}, {"d": 8, "r": 3}]
    with pytest.raises(ValueError):
        expand_ranges(parse_ranges(["d=1..__import__('os')"]), {})


def test_parse_value():
    assert parse_value("3") == 3
    assert str(parse_value("1/2")) == "1/2"
    assert parse_value("1,2,3") == (1, 2, 3)
    assert parse_value("0:1,1:1") == ((0, 1), (1, 1))


def test_sweep_ploski_even():
    code, out = run("sweep", "--family", "ploski_even", "--range", "m=3..5", "--json")
    data = json.loads(out)
    assert code == 0
    assert [r["verdict"] for r in data["rows"]] == ["ExistsNonQH"] * 3
    assert all(r["q"] == 1 == r["r2"] for r in data["rows"])
    assert data["summary"]["q_within_r2"] and data["summary"]["agreement_rate"] == "3/3"


def test_sweep_continues_after_errors():
    code, out = run("sweep", "--family", "three_syzygy", "--range", "k=1..3", "--json")
    data = json.loads(out)
    assert code == 0
    assert "error" in data["rows"][0]
    assert data["summary"]["errors"] == 1 and data["summary"]["agreement_rate"] == "2/2"


def test_sweep_cuspidal_rank_zero():
    code, out = run("sweep", "--family", "cuspidal_free", "--range", "d=6..9", "r=2..(d-1)//2",
                    "--json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 8
    assert all(r["classification"].startswith("Free") for r in rows)
    assert all(r["rank_zero_points"] == [["0/1", "0/1", "1/1"]] for r in rows)


def test_sweep_parallel_order_is_deterministic():
    a = run("sweep", "--family", "septic", "--range", "n=1..3", "--json", "--jobs", "1")[1]
    b = run("sweep", "--family", "septic", "--range", "n=1..3", "--json", "--jobs", "2")[1]
    assert a == b


def test_console_entry_point():
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "qhcurve", "analyze", "x0^2+x1"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 2 and "not homogeneous" in proc.stderr


def test_config_file_flag(tmp_path):
    path = tmp_path / "qh.conf"
    path.write_text("step_cap = 1\n", encoding="utf-8")
    code, out = run("--config", str(path), "analyze", SEPTIC, "--json")
    assert code == 1 and json.loads(out)["error"]["code"] == "resource-limit"
    path.write_text("step_cap = zero\n", encoding="utf-8")
    assert run("--config", str(path), "analyze", SEPTIC)[0] == 2
