import csv
import io
import json
import subprocess
import sys

import pytest

from qlorentz.cli import run
from qlorentz.coordalg import normal_order
from qlorentz.identities import IdentityId
from qlorentz.parsing import parse_expression


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_identities_all_exact():
    code, out, _ = call("identities", "--all", "--exact", "--q", "3/2")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 23 and all(l.endswith(" PASS") for l in lines)
    assert sorted(l.split()[0] for l in lines) == sorted(i.value for i in IdentityId)


def test_identities_needs_a_selection():
    assert call("identities")[0] == 2


def test_identities_single_id():
    code, out, _ = call("identities", "--id", "SPHERE_CLOSE", "--id", "TERMINATION", "--q", "2")
    assert code == 0 and out.split("\n")[:2] == ["SPHERE_CLOSE PASS", "TERMINATION PASS"]


def test_spectrum_csv_rows():
    code, out, _ = call("spectrum", "--q", "2", "--t", "1", "--l-max", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert [float(r["l"]) for r in rows] == [0, 0.5, 0.5, 1, 1, 1]
    assert float(rows[2]["x3"]) == pytest.approx(3 / 34)
    assert all("," not in v and "/" not in v for r in rows for v in r.values())


def test_spectrum_csv_exact():
    code, out, _ = call("spectrum", "--q", "2", "--l-max", "1/2", "--format", "csv", "--exact")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[2]["x3"] == "3/34" and rows[2]["gamma"] == "17/10"


def test_json_strings_in_exact_mode():
    code, out, _ = call("spectrum", "--q", "2", "--l-max", "1/2", "--format", "json", "--exact")
    data = json.loads(out)
    assert data[1]["gamma"] == "17/10"
    code, out, _ = call("spectrum", "--q", "2.0", "--l-max", "1/2", "--format", "json")
    assert json.loads(out)[1]["gamma"] == pytest.approx(1.7)


def test_normal_order_example():
    code, out, _ = call("normal-order", "Z*Zb - Zb*Z")
    assert code == 0
    expected = parse_expression("(q^2 - q^-2)*X3^2 + q^-1*(q^2 - q^-2)*X0*X3")
    assert normal_order(parse_expression(out.strip())) == normal_order(expected)


def test_normal_order_casimir():
    code, out, _ = call("normal-order", "--casimir", "tau2*Z - Z*tau2")
    assert code == 0 and out.strip() == "0"


@pytest.mark.parametrize(
    "argv",
    [
        ("normal-order", "X5"),
        ("normal-order", "Z*("),
        ("spectrum", "--format", "xml"),
        ("spectrum", "--q", "2.5", "--exact"),
        ("boost", "--l", "1/3", "--m", "0"),
        ("nonsense",),
        (),
    ],
)
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2 and err


@pytest.mark.parametrize(
    "argv",
    [
        ("spectrum", "--q", "0"),
        ("spectrum", "--q", "-1"),
        ("spectrum", "--t", "-1"),
        ("boost", "--l", "1", "--m", "2"),
        ("lifetime", "--v", "1.2"),
        ("lightcone", "--n-max", "-1"),
    ],
)
def test_domain_errors(argv):
    assert call(*argv)[0] == 3


def test_rmatrix_lines():
    code, out, _ = call("rmatrix", "--sign", "-")
    assert code == 0 and len(out.splitlines()) == 256


def test_metric_text_and_json():
    code, out, _ = call("metric")
    assert code == 0 and len(out.splitlines()) == 32
    code, out, _ = call("metric", "--format", "json")
    assert set(json.loads(out)) == {"upper", "lower"}


def test_boost_lifetime_lightcone_so3_sphere():
    assert "t_prime = 17/10" in call("boost", "--q", "2", "--l", "1/2", "--m", "1/2")[1]
    code, out, _ = call("lifetime", "--v", "0.6", "--kappa", "0.01")
    assert code == 0 and "first_order = 0.005625" in out
    code, out, _ = call("lightcone", "--q", "1/2", "--n-max", "2")
    assert code == 0 and out.rstrip().endswith("PASS")
    code, out, _ = call("so3")
    assert code == 0 and "FAIL" not in out
    code, out, _ = call("sphere", "--q", "2", "--t", "1")
    assert code == 0 and "lambda = 3/2" in out and "FAIL" not in out


def test_deterministic():
    argv = ("spectrum", "--q", "3/2", "--l-max", "2", "--format", "json", "--exact")
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qlorentz", "spectrum", "--q", "2", "--l-max", "1", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and len(proc.stdout.splitlines()) == 7
