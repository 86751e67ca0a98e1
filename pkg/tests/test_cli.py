import json
import subprocess
import sys

import pytest

from tiltcat.charring import GradedCharacter
from tiltcat.cli import run_command


def test_tilt_prints_highest_line():
    code, out, _ = run_command(["tilt", "--algebra", "A1", "--J", "0:1", "--anchor", "2,1"])
    assert code == 0
    assert "T[1]_{2w1} = 1" in out.splitlines()


def test_char_total_dimension():
    code, out, _ = run_command(["char", "--algebra", "A1", "--object", "delta", "--weight", "2",
                                "--grade", "0", "--J", "0:0"])
    assert code == 0 and "total dimension 3" in out


def test_order_covering():
    code, out, _ = run_command(["order", "--kind", "covering", "--from", "0,0", "--to", "2,1", "--algebra", "A1"])
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run_command(["order", "--kind", "psi", "--psi", "2", "--from", "0,0", "--to", "2,2"])
    assert (code, out.strip()) == (0, "false")


def test_char_json_roundtrip():
    argv = ["char", "--object", "global-weyl", "--weight", "2", "--J", "0:1", "--json"]
    code, out, _ = run_command(argv)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"config", "results"}
    rec = doc["results"][0]["character"]
    ch = GradedCharacter.from_record(rec)
    assert ch.dimension() == 7
    assert GradedCharacter.from_record(ch.to_record()) == ch


@pytest.mark.parametrize("argv", [
    ["sset", "--anchor", "2,0", "--J=-inf:0", "--json"],
    ["ext", "--left", "0,0", "--right", "2,1"],
    ["bgg", "--cap", "2"],
])
def test_determinism(argv):
    first = run_command(argv)
    assert first[0] == 0
    assert run_command(argv) == first


def test_json_and_table_agree_on_ext():
    _, table, _ = run_command(["ext", "--left", "0,0", "--right", "2,1"])
    _, js, _ = run_command(["ext", "--left", "0,0", "--right", "2,1", "--json"])
    assert table.strip().endswith("= 1")
    assert json.loads(js)["results"][0]["ext1"] == 1


def test_exit_codes():
    assert run_command([])[0] == 2
    assert run_command(["tilt"])[0] == 2
    assert run_command(["char", "--weight", "x,y"])[0] == 2
    # anchor grade outside J is a domain error
    code, _, err = run_command(["tilt", "--J", "0:1", "--anchor", "1,5"])
    assert code == 1 and err
    code, _, err = run_command(["char", "--object", "nabla", "--weight", "1", "--J=-inf:0"])
    assert code == 1 and "cutoff" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tiltcat", "order", "--from", "0,0", "--to", "2,1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "true"
