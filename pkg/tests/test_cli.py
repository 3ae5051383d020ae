import io
import json
import subprocess
import sys
from pathlib import Path


from zipstrata.cli import main
from zipstrata.rootdata import build_root_datum
from zipstrata.serialize import strata_from_json, strata_to_json
from zipstrata.zipdata import make_zip_datum, strata_table

SPECS = Path(__file__).resolve().parent.parent / "specs"
C2 = str(SPECS / "siegel_c2.json")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_strata_json():
    code, text = run("strata", "--spec", C2, "--json")
    assert code == 0
    rows = json.loads(text)
    assert [r["length"] for r in rows] == [0, 1, 2, 3]
    rd = build_root_datum("C", 2, True)
    table = strata_table(make_zip_datum(rd, (1, 1, 1)))
    assert strata_from_json(rd, rows) == table
    assert strata_to_json(table) == rows


def test_output_is_deterministic():
    assert run("strata", "--spec", C2) == run("strata", "--spec", C2)
    assert run("hasse", "--spec", C2, "--p", "3", "--box", "1") == run(
        "hasse", "--spec", C2, "--p", "3", "--box", "1")


def test_predicates_zero():
    code, text = run("predicates", "--spec", C2, "--p", "3", "--chi", "0", "--json")
    assert code == 0
    data = json.loads(text)
    assert data["quasi_constant"] is True and data["ample"] is False


def test_hasse_single_character():
    code, text = run("hasse", "--spec", C2, "--p", "3", "--chi", "-1,-1", "--json")
    assert code == 0
    assert [c["verdict"] for c in json.loads(text)] == ["exists"] * 4


def test_hasse_sampled_sweep():
    code, text = run("hasse", "--spec", C2, "--p", "3", "--box", "2", "--sample", "2", "--seed", "1")
    assert code == 0
    assert "characters 2" in text and "certificates 8" in text


def test_bad_spec_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"series": "C", "rank": 2, "bogus": 1}')
    assert run("strata", "--spec", str(bad))[0] == 2
    assert "$.bogus" in capsys.readouterr().err


def test_bad_prime_exits_2():
    assert run("hasse", "--spec", C2, "--p", "4", "--chi", "-1,-1")[0] == 2


def test_cones_verify_bench():
    assert run("cones", "--spec", C2, "--p", "5", "--box", "2")[0] == 0
    code, text = run("cones", "--spec", C2, "--p", "5", "--chi", "-1,-2")
    assert code == 0 and "true" in text
    assert run("verify-omega", "--max-rank", "3")[0] == 0
    code, text = run("bench", "--spec", str(SPECS / "siegel_c3.json"))
    assert code == 0 and "48" in text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zipstrata", "strata", "--spec", C2],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "s2.1.2" in proc.stdout
