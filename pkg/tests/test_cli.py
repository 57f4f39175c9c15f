import json
import subprocess
import sys
from io import StringIO
from pathlib import Path

import pytest

from gamma_torsion.cli import run
from gamma_torsion.cyclotomic import cyclotomic
from gamma_torsion.io import complex_from_json, complex_to_json, matrix_from_json, matrix_to_json
from gamma_torsion.laurent import T
from gamma_torsion.linalg import Matrix
from gamma_torsion.parser import parse_poly, parse_poly_or_ratfn

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parents[1] / "src" / "gamma_torsion" / "data"


def cli(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def no_color(monkeypatch):
    monkeypatch.setenv("GAMMA_TORSION_COLOR", "never")


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_charpoly_text():
    code, out, _ = cli("charpoly", "3", "4")
    assert code == 0
    assert out.strip() == "Φ12 * Φ6 = t^6 - t^5 + t^3 - t + 1"


def test_charpoly_bad_exponent():
    assert cli("charpoly", "1", "4")[0] == 2


def test_factor_success_and_failure():
    code, out, _ = cli("--json", "factor", "t^4 - 1")
    assert code == 0
    assert json.loads(out)["factors"] == {"1": 1, "2": 1, "4": 1}
    code, out, _ = cli("factor", "t^2 - 2")
    assert code == 1 and "residual: t^2 - 2" in out


def test_parse_error_exit_code():
    code, out, err = cli("factor", "t^^2")
    assert code == 2 and "PARSE_ERROR" in err
    code, out, _ = cli("--json", "factor", "t^^2")
    assert json.loads(out)["error"]["code"] == "PARSE_ERROR"


def test_missing_file_is_io_error():
    code, _, err = cli("torsion", "missing.json")
    assert code == 2 and "IO_ERROR" in err


def test_snf(tmp_path):
    path = write(tmp_path, "m.json", [["t - 1", "t - 1"], ["0", "t^2 - 1"]])
    code, out, _ = cli("snf", path, "--json")
    data = json.loads(out)
    assert code == 0 and data["invariant_factors"] == ["t - 1", "t^2 - 1"]
    U, V, D = (matrix_from_json(data[k]) for k in "UVD")
    A = matrix_from_json([["t - 1", "t - 1"], ["0", "t^2 - 1"]])
    assert U @ A @ V == D


def test_homology_and_torsion(tmp_path):
    path = write(tmp_path, "circle.json", {"lengths": [1, 1], "boundaries": [[["t - 1"]]]})
    code, out, _ = cli("homology", path)
    assert code == 0 and "H_0 = Γ/(t - 1)" in out
    code, out, _ = cli("torsion", path)
    assert code == 0 and out.startswith("tau = 1/(t - 1)")


def test_torsion_needs_hbasis(tmp_path):
    path = write(tmp_path, "zero.json", {"boundaries": [[["0"]]]})
    code, _, err = cli("torsion", path)
    assert code == 2 and "MISSING_HOMOLOGY_BASIS" in err
    hb = write(tmp_path, "h.json", {"0": [["2*t"]], "1": [["1"]]})
    code, out, _ = cli("--json", "torsion", path, "--hbasis", hb)
    assert code == 0 and json.loads(out)["torsion"] == "1/2"
    code, out, _ = cli("--json", "--mode", "c", "torsion", path, "--hbasis", hb)
    assert json.loads(out)["torsion"] == "1"


def test_not_a_complex(tmp_path):
    path = write(tmp_path, "bad.json", {"boundaries": [[["1"]], [["1"]]]})
    code, _, err = cli("homology", path)
    assert code == 2 and "NOT_A_COMPLEX" in err


def test_hypersurface_verify_matches_golden():
    code, out, _ = cli("--json", "hypersurface", "verify", str(DATA / "quartic_curve.json"))
    assert code == 0
    assert out == (GOLDEN / "quartic_verify.json").read_text()
    code, out, _ = cli("hypersurface", "verify", str(DATA / "quartic_curve.json"))
    assert out == (GOLDEN / "quartic_verify.txt").read_text()


def test_golden_det_phi_is_the_expected_product():
    data = json.loads((GOLDEN / "quartic_verify.json").read_text())
    expected = (T - 1) ** 4 * (T**4 - 1) ** 2 * (T**4 - T**2 + 1) * (T**2 - T + 1)
    assert parse_poly(data["values"]["det_phi"]) == expected


def test_hypersurface_fault_injection(tmp_path):
    obj = json.loads((DATA / "quartic_curve.json").read_text())
    obj["det_phi"] = obj["det_phi"] + "*(t^2 + t + 1)"
    code, out, _ = cli("hypersurface", "verify", write(tmp_path, "tampered.json", obj))
    assert code == 1
    assert "[FAIL] identity: residual Φ3^-1" in out


def test_hypersurface_builtin_and_solve():
    code, out, _ = cli("--json", "hypersurface", "solve", "builtin:homogeneous_n2_d3")
    assert code == 0 and json.loads(out)["det_phi"] == "1"
    code, out, _ = cli("hypersurface", "verify", "builtin:cubic_surface_3A2")
    assert code == 0 and "delta_n_lower_bound = 2" in out
    assert cli("hypersurface", "verify", "builtin:nope")[0] == 2


def test_dataset_schema_errors(tmp_path):
    assert cli("hypersurface", "verify", write(tmp_path, "a.json", {"n": 1}))[0] == 2
    assert cli("hypersurface", "verify", write(tmp_path, "b.json", {"n": 1, "d": 4, "singularities": [{}]}))[0] == 2
    bad = tmp_path / "c.json"
    bad.write_text("{not json")
    assert cli("hypersurface", "verify", str(bad))[0] == 2


def test_json_output_is_deterministic():
    a = cli("--json", "hypersurface", "verify", "builtin:smooth_n1_d4")[1]
    b = cli("hypersurface", "verify", "builtin:smooth_n1_d4", "--json")[1]
    assert a == b


def test_emitted_polynomials_reparse():
    out = json.loads(cli("--json", "hypersurface", "verify", "builtin:quartic_curve")[1])
    for key in ("h_n", "psi_n", "r_n", "phi", "phi_1", "phi_2", "det_phi", "delta_n"):
        value = out["values"][key]
        assert str(parse_poly_or_ratfn(value)) == value, key


def test_matrix_and_complex_json_roundtrip():
    M = Matrix.from_rows([[T - 1, cyclotomic(3)], [T**-2, 0]])
    assert matrix_from_json(matrix_to_json(M)) == M
    C = complex_from_json({"boundaries": [[["t - 1", "t^2 - t"]]]})
    assert complex_from_json(complex_to_json(C)).boundaries == C.boundaries


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gamma_torsion", "charpoly", "2", "2", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "Φ3 = t^2 + t + 1"
