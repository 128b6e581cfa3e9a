import json

import pytest

from padicwave.cli import main
from padicwave.io import save_function
from padicwave.schwartz import unit_ball_indicator


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def omega(tmp_path):
    path = tmp_path / "omega.json"
    save_function(unit_ball_indicator(2), path)
    return path


def test_classify_exact_output(capsys):
    code, out, _ = run(capsys, "classify", "--a", "2", "--b", "1/2")
    assert code == 0
    assert out == '{"gamma":-1,"n":"1/4","j":1,"phase_num":0,"phase_den":1}\n'


def test_classify_unit_dilation(capsys):
    code, out, _ = run(capsys, "classify", "--p", "3", "--a", "1", "--b", "0")
    assert code == 0
    assert json.loads(out) == {"gamma": 0, "n": "0", "j": 1, "phase_num": 0, "phase_den": 1}


@pytest.mark.parametrize("argv", [
    ["classify", "--a", "0", "--b", "1"],
    ["classify", "--p", "4", "--a", "1", "--b", "0"],
    ["classify", "--precision", "4", "--a", "1", "--b", "0"],
    ["classify", "--a", "1", "--b", "0", "--format", "csv"],
    ["monna", "--x", "-1"],
    ["monna"],
    ["wavelet", "--x", "0"],
])
def test_usage_errors_exit_2_without_output(capsys, tmp_path, argv):
    out_path = tmp_path / "out.json"
    code, out, err = run(capsys, *argv, "--out", str(out_path))
    assert code == 2 and out == "" and "error" in err
    assert not out_path.exists()


def test_wavelet_points(capsys):
    code, out, _ = run(capsys, "wavelet", "--index", "0,0,1", "--x", "0", "--x", "1", "--x", "1/2")
    assert code == 0
    values = [v["value"] for v in json.loads(out)["values"]]
    assert values == [[1.0, 0.0], [-1.0, 0.0], [0.0, 0.0]]


def test_coeffs_omega_csv(capsys, omega, tmp_path):
    out_path = tmp_path / "c.csv"
    code, _, _ = run(capsys, "coeffs", str(omega), "--gamma-min", "1", "--gamma-max", "3",
                     "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "gamma,n_literal,j,coeff_re,coeff_im" and len(lines) == 4
    side = json.loads((tmp_path / "c.csv.json").read_text())
    assert side["partial_parseval"] == pytest.approx(1 - 2**-3, abs=1e-15)
    assert side["rows"] == 3


def test_coeffs_empty_window(capsys, omega):
    code, out, _ = run(capsys, "coeffs", str(omega), "--gamma-min", "2", "--gamma-max", "1")
    assert code == 0 and out == "gamma,n_literal,j,coeff_re,coeff_im\n"


def test_coeffs_prime_mismatch(capsys, omega):
    code, out, err = run(capsys, "coeffs", str(omega), "--p", "3")
    assert code == 2 and out == "" and "p=2" in err


def test_monna(capsys):
    assert json.loads(run(capsys, "monna", "--x", "3")[1]) == {"x": "3", "rho": "3/4"}
    got = json.loads(run(capsys, "monna", "--ball", "1/2,0")[1])
    assert (got["left"], got["right"]) == ("1", "2")


def test_project(capsys, omega):
    code, out, _ = run(capsys, "project", str(omega), "--gamma", "1")
    data = json.loads(out)
    assert code == 0 and data["membership_scale"] == 1
    assert data["cells"] == [{"center": "0", "value": [0.5, 0.0]}]


def test_spectrum_small(capsys):
    code, out, _ = run(capsys, "spectrum", "--p", "3", "--gamma-min", "0", "--gamma-max", "0",
                       "--cosets", "1", "--samples", "5")
    assert code == 0
    cases = json.loads(out)["cases"]
    assert len(cases) == 2 and all(c["max_rel_err"] <= 1e-10 for c in cases)


def test_verify_admissibility(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "admissibility", "--p", "5")
    assert code == 0 and json.loads(out)["passed"] is True


def test_deterministic(capsys):
    argv = ["spectrum", "--gamma-min", "-1", "--gamma-max", "1", "--cosets", "2", "--seed", "7"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
