import io
import json
import subprocess
import sys
from argparse import Namespace

import pytest

from edvtrees.cli import CliConfig, UsageError, load_config, run

from conftest import FIXTURES, GOLDEN


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_edv_and_compare():
    assert cli("edv", "S(5)") == (0, "(4,0)\n", "")
    assert cli("compare", "S(5)", "P(5)")[1] == "StrictlyLess (witness k=2)\n"
    assert cli("compare", "P(5)", "S(5)")[1] == "StrictlyGreater (witness k=2)\n"
    code, out, _ = cli("compare", "P(5)", "P(5)", "--format", "json")
    assert code == 0 and json.loads(out)["relation"] == "Equivalent"


def test_edv_formats():
    assert json.loads(cli("edv", "P(6)", "--format", "json")[1]) == {"n": 6, "vector": [2, 2, 1]}
    assert cli("edv", "P(6)", "--format", "csv")[1] == "n,r1,r2,r3\n6,2,2,1\n"


def test_mu_table():
    code, out, _ = cli("mu", "P(4)")
    assert code == 0 and out == "0 1 1\n1 2 2\n2 3 1\n"
    assert cli("mu", "P(3)", "--format", "csv")[1].startswith("u,v,mu\n")


def test_index():
    assert cli("index", "wiener", "CP(7,4)^2")[1] == "40\n"
    assert cli("index", "hyperwiener-edge", "P(4)")[1] == "22\n"
    assert cli("index", "hyperwiener-pairwise", "P(4)")[1] == "15\n"
    assert json.loads(cli("index", "gutman", "P(3)", "--format", "json")[1])["value"] == "6"


def test_construct_and_file_input(tmp_path):
    code, out, _ = cli("construct", "DSP(6; 1,2)")
    assert code == 0
    f = tmp_path / "t.edges"
    f.write_text(out)
    assert cli("edv", f"@{f}")[1] == cli("edv", "DSP(6; 1,2)")[1]
    assert cli("edv", f"@{FIXTURES / 'equal_vector_t1.edges'}")[1] == "(4,3,2,1,0)\n"


def test_enumerate():
    code, out, _ = cli("enumerate", "all:6")
    assert code == 0 and len(out.splitlines()) == 6
    rows = json.loads(cli("enumerate", "maxdeg:5:4", "--format", "json")[1])
    assert len(rows) == 1 and rows[0]["vector"] == "(4,0)"
    assert cli("enumerate", "cat:7:3", "--format", "csv")[1].startswith("level_sequence,vector\n")


def test_verify_exit_codes():
    code, out, _ = cli("verify", "Thm-6.2", "--n-max", "9", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = cli("verify", "Thm-8.1", "--n-max", "7", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 5
    code, out, _ = cli("verify", "HW-divergence", "--n-max", "6")
    assert code == 0 and "DIVERGENCE" in out


def test_table4_golden():
    code, out, _ = cli("table4", "--format", "csv")
    assert code == 0
    assert out.encode() == (GOLDEN / "table4.csv").read_bytes()


def test_equiv_pairs():
    code, out, _ = cli("equiv-pairs", "11")
    assert code == 0 and "(4,3,2,1,0)" in out
    assert len(cli("equiv-pairs", "8")[1].splitlines()) == 3


@pytest.mark.parametrize("argv, fragment", [
    (["edv", "Q(5)"], "unrecognised family expression"),
    (["index", "nope", "P(4)"], "unknown index"),
    (["enumerate", "all:17"], "cap"),
    (["verify", "Thm-4.1", "--n-max", "17"], "cap"),
    (["verify", "Thm-99"], "unknown claim"),
    (["compare", "P(4)", "P(5)"], "orders differ"),
    (["edge-move"], ""),
    (["edv", "@/nonexistent/file"], "cannot read"),
    (["edv", "P(4)", "--cap", "2"], "cap"),
])
def test_usage_errors(argv, fragment):
    code, _, err = cli(*argv)
    assert code == 2
    assert fragment in err


def test_malformed_edge_file_reports_position(tmp_path):
    f = tmp_path / "bad.edges"
    f.write_text("0 1\n1 2\n2 x\n")
    code, _, err = cli("edv", f"@{f}")
    assert code == 2 and "line 3" in err


def _ns(**kw):
    base = dict(config=None, cap=None, workers=None, tolerance=None, format=None)
    base.update(kw)
    return Namespace(**base)


def test_config_precedence(tmp_path):
    cfg_file = tmp_path / "edv.cfg"
    cfg_file.write_text("# settings\ncap = 12\nworkers=3\nformat=csv\n")
    assert load_config(_ns(), {}) == CliConfig()
    c = load_config(_ns(config=str(cfg_file)), {})
    assert (c.enumeration_cap, c.workers, c.output_format) == (12, 3, "csv")
    c = load_config(_ns(config=str(cfg_file)), {"EDV_CAP": "14", "EDV_FORMAT": "json"})
    assert (c.enumeration_cap, c.workers, c.output_format) == (14, 3, "json")
    c = load_config(_ns(config=str(cfg_file), cap=10, format="text"), {"EDV_CAP": "14"})
    assert (c.enumeration_cap, c.output_format) == (10, "text")


@pytest.mark.parametrize("text", ["cap=abc\n", "colour=red\n", "just words\n"])
def test_bad_config_file(tmp_path, text):
    f = tmp_path / "edv.cfg"
    f.write_text(text)
    with pytest.raises(UsageError):
        load_config(_ns(config=str(f)), {})


def test_env_cap_applies_to_run(monkeypatch):
    monkeypatch.setenv("EDV_CAP", "6")
    code, _, err = cli("enumerate", "all:7")
    assert code == 2 and "cap 6" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "edvtrees", "edv", "P(5)"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "(2,2)\n"
