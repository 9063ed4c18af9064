import json
import subprocess
import sys

import pytest

from tourpaths.cli import run
from tourpaths.core import from_trn, to_trn
from tourpaths.catalog import figure
from tourpaths.enumeration import all_tournaments
from tourpaths.verify import VerificationReport


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_embed_cycle_none(capsys):
    code, out, _ = call(capsys, "embed", "--trn", to_trn(figure("3A")), "--path", "+(1,1)")
    assert code == 0 and out.strip() == "NONE"


def test_embed_witness_labels(capsys):
    code, out, _ = call(capsys, "embed", "--trn", "4A", "--path", "+(1,2)")
    assert out.split() == ["1", "2", "4", "3"]
    _, out0, _ = call(capsys, "embed", "--trn", "4A", "--path", "+(1,2)", "--zero-based")
    assert out0.split() == ["0", "1", "3", "2"]


def test_embed_with_deletion(capsys):
    code, out, _ = call(capsys, "embed", "--trn", "trn 8 fffffff0", "--delete", "1,8", "--path", "+(7)")
    assert code == 0 and out.strip() != "NONE"


def test_origins_4A(capsys):
    code, out, _ = call(capsys, "origins", "--trn", "4A", "--path", "+(1,2)")
    assert code == 0 and out.strip() == "1 2"


def test_enumerate_lines_reparse(capsys):
    code, out, _ = call(capsys, "enumerate", "--order", "5")
    lines = out.strip().splitlines()
    assert code == 0 and [from_trn(line) for line in lines] == all_tournaments(5)
    _, a, _ = call(capsys, "enumerate", "--order", "5", "--shard", "0/2")
    _, b, _ = call(capsys, "enumerate", "--order", "5", "--shard", "1/2")
    assert (a + b).splitlines() == lines


def test_verify_redei_exit_zero(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = call(capsys, "verify", "--suite", "redei", "--order", "6", "--json", str(target))
    assert code == 0 and "PASS" in out
    rep = VerificationReport.from_dict(json.loads(target.read_text()))
    assert rep.passed and rep.suite == "redei"


def test_verify_violation_exit_one(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "ht", "--order", "6")
    assert code == 1 and "VIOLATION" in out


def test_catalog_validate(capsys):
    code, out, _ = call(capsys, "catalog", "--validate")
    assert code == 0
    assert "52 finite records, 0 failed" in out and "reconciled" in out


def test_catalog_export(capsys):
    code, out, _ = call(capsys, "catalog", "--export", "json", "--max-order", "5")
    doc = json.loads(out)
    assert code == 0 and doc["version"].startswith("tourpaths-catalog")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["embed", "--trn", "trn 3 zz", "--path", "+(1,1)"],
        ["embed", "--trn", "4A", "--path", "+(1,x)"],
        ["origins", "--trn", "4A", "--path", "+(1,1)"],
        ["enumerate", "--order", "12"],
        ["enumerate", "--order", "4", "--shard", "3/2"],
        ["embed", "--trn", "4A", "--delete", "1", "--path", "+(1,2)"],
        ["verify", "--suite", "main", "--order", "2"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = call(capsys, *argv)
    assert code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tourpaths.cli", "origins", "--trn", "5E", "--path", "+(2,2)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3 4 5"
