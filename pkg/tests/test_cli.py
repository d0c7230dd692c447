import json
import math

import numpy as np
import pytest

from specmat import io
from specmat.cli import main, parse_spectrum_arg

A_TRI = np.array([[2, 0, 1], [0, 2, 0], [0, 0, 3]], dtype=complex)


def write_matrix(tmp_path, A, name="matrix.json"):
    path = tmp_path / name
    path.write_text(io.dump_document(io.matrix_to_document(A)), encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrumArg:
    def test_real_with_mult(self):
        spec = parse_spectrum_arg("2:2,3:1")
        assert spec.entries == ((2, 2), (3, 1))

    def test_complex(self):
        spec = parse_spectrum_arg("-1+2i:1,0.5-0.25i:1")
        assert spec.alphas == [-1 + 2j, 0.5 - 0.25j]


class TestCommands:
    def test_exp_golden(self, tmp_path, capsys):
        path = write_matrix(tmp_path, A_TRI)
        code, out, _ = run_cli(capsys, "exp", "-t", "1.0", path)
        assert code == 0
        doc = json.loads(out)
        assert doc["operation"] == "exp"
        result = io.parse_matrix_document(json.dumps(doc["result"]))
        assert result[0, 2].real == pytest.approx(math.exp(3) - math.exp(2),
                                                  abs=1e-8)
        assert doc["diagnostics"]["validation_residual"] <= 1e-8

    def test_exp_zero_matrix(self, tmp_path, capsys):
        path = write_matrix(tmp_path, np.zeros((3, 3)))
        code, out, _ = run_cli(capsys, "exp", "-t", "2.5", path)
        assert code == 0
        result = io.parse_matrix_document(json.dumps(json.loads(out)["result"]))
        assert np.allclose(result, np.eye(3))

    def test_power_identity_cases(self, tmp_path, capsys):
        path = write_matrix(tmp_path, A_TRI)
        code, out, _ = run_cli(capsys, "power", "-n", "0", path)
        result = io.parse_matrix_document(json.dumps(json.loads(out)["result"]))
        assert code == 0 and np.allclose(result, np.eye(3), atol=1e-9)
        code, out, _ = run_cli(capsys, "power", "-n", "1", path)
        result = io.parse_matrix_document(json.dumps(json.loads(out)["result"]))
        assert code == 0 and np.allclose(result, A_TRI, atol=1e-9)

    def test_drazin_trivial(self, tmp_path, capsys):
        path = write_matrix(tmp_path, np.array([[2.0]]))
        code, out, _ = run_cli(capsys, "drazin", path)
        result = io.parse_matrix_document(json.dumps(json.loads(out)["result"]))
        assert code == 0 and result[0, 0] == pytest.approx(0.5)

    def test_log_diag(self, tmp_path, capsys):
        path = write_matrix(tmp_path, np.diag([2.0, 5.0]))
        code, out, _ = run_cli(capsys, "log", path)
        doc = json.loads(out)
        result = io.parse_matrix_document(json.dumps(doc["result"]))
        assert code == 0
        assert doc["diagnostics"]["principal"] is True
        # matches the order-2 distinct-eigenvalue closed form
        a1, a2 = 2.0, 5.0
        slope = (math.log(a1) - math.log(a2)) / (a1 - a2)
        shift = (a1 * math.log(a2) - a2 * math.log(a1)) / (a1 - a2)
        want = slope * np.diag([a1, a2]) + shift * np.eye(2)
        assert np.allclose(result, want, atol=1e-10)

    def test_log_singular_exit5(self, tmp_path, capsys):
        path = write_matrix(tmp_path, np.array([[0.0, 1.0], [0.0, 0.0]]))
        code, _, err = run_cli(capsys, "log", path)
        assert code == 5
        assert "eigenvalue" in err

    def test_decompose(self, tmp_path, capsys):
        path = write_matrix(tmp_path, np.array([[0.0, 1.0], [0.0, 0.0]]))
        code, out, _ = run_cli(capsys, "decompose", path)
        doc = json.loads(out)
        assert code == 0
        assert doc["extras"]["diagonalizable"] is False
        assert doc["input"]["spectrum"][0]["index"] == 2


class TestContracts:
    def test_roundtrip_bit_identical(self, tmp_path, capsys):
        rng = np.random.default_rng(7)
        A = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        path = write_matrix(tmp_path, A)
        reread = io.parse_matrix_document((tmp_path / "matrix.json").read_text())
        assert np.array_equal(reread, A)

    def test_deterministic(self, tmp_path, capsys):
        path = write_matrix(tmp_path, A_TRI)
        _, out1, _ = run_cli(capsys, "exp", "-t", "0.5", path)
        _, out2, _ = run_cli(capsys, "exp", "-t", "0.5", path)
        assert out1 == out2

    def test_parse_error_exit2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        code, out, err = run_cli(capsys, "exp", str(bad))
        assert code == 2 and out == "" and err

    def test_wrong_spectrum_exit3(self, tmp_path, capsys):
        path = write_matrix(tmp_path, A_TRI)
        code, _, err = run_cli(capsys, "exp", "--spectrum", "5:3", path)
        assert code == 3 and "spectrum" in err

    def test_strict_guardrail_exit4(self, tmp_path, capsys):
        path = write_matrix(tmp_path, np.diag([20.0, 30.0]))
        code, _, _ = run_cli(capsys, "exp", path)
        assert code == 0
        code, _, err = run_cli(capsys, "exp", "--strict", path)
        assert code == 4 and "warning" in err

    def test_output_file(self, tmp_path, capsys):
        path = write_matrix(tmp_path, A_TRI)
        out_path = tmp_path / "result.json"
        code, out, _ = run_cli(capsys, "exp", "--output", str(out_path), path)
        assert code == 0 and out == ""
        doc = json.loads(out_path.read_text())
        assert doc["operation"] == "exp"

    def test_env_tol(self, tmp_path, capsys, monkeypatch):
        path = write_matrix(tmp_path, A_TRI)
        monkeypatch.setenv("SPECMAT_TOL", "1e-30")
        spectrum = "2.00000001:2,3:1"  # tiny nonzero residual
        code, _, _ = run_cli(capsys, "exp", "--spectrum", spectrum, path)
        assert code == 3  # impossible residual threshold from the env
        code, _, _ = run_cli(capsys, "exp", "--spectrum", spectrum,
                             "--tol", "1e-6", path)
        assert code == 0  # flag wins over env

    def test_promoted_bare_numbers(self, tmp_path, capsys):
        path = tmp_path / "bare.json"
        path.write_text(json.dumps({"order": 2, "data": [1, 2, 3, 4]}),
                        encoding="utf-8")
        code, out, _ = run_cli(capsys, "power", "-n", "2", str(path))
        result = io.parse_matrix_document(json.dumps(json.loads(out)["result"]))
        want = np.array([[1, 2], [3, 4]], dtype=complex)
        assert code == 0 and np.allclose(result, want @ want, atol=1e-8)
