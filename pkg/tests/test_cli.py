import json
import subprocess
import sys

PARAMS = ["--eta", "23", "--omega", "34", "--rho", "547"]


def run(*args, **kw):
    return subprocess.run([sys.executable, "-m", "sos3.cli", *args],
                          capture_output=True, text=True, **kw)


def test_prove_proved_exit_zero():
    r = run("prove", *PARAMS)
    assert r.returncode == 0, r.stderr
    assert "verdict: PROVED" in r.stdout


def test_prove_json_and_out(tmp_path):
    out = tmp_path / "cert.json"
    r = run("prove", *PARAMS, "--json", "--out", str(out))
    assert r.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["verdict"] == "PROVED"
    assert len(doc["checks"]) == 93
    assert doc == json.loads(r.stdout)


def test_prove_inconclusive_exit_two():
    r = run("prove", "--eta", "0", "--omega", "2", "--rho", "1")
    assert r.returncode == 2
    assert "INCONCLUSIVE" in r.stdout


def test_bad_input_exit_one():
    assert run("prove", "--eta", "x", "--omega", "2", "--rho", "1").returncode == 1
    assert run("prove", "--eta", "1").returncode == 1
    assert run("nonsense").returncode == 1
    # degenerate parameters are an input error for `check`
    assert run("check", "positivity", "--eta", "1", "--omega", "1",
               "--rho", "1").returncode == 1


def test_check_groups():
    for group in ("positivity", "nonvanishing", "nonsquares"):
        r = run("check", group, *PARAMS)
        assert r.returncode == 0, (group, r.stdout, r.stderr)
        assert "[PASS]" in r.stdout and "[FAIL]" not in r.stdout
    r = run("check", "positivity", "--eta", "0", "--omega", "2", "--rho", "1")
    assert r.returncode == 2
    assert "[FAIL]" in r.stdout


def test_check_json():
    r = run("check", "positivity", *PARAMS, "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert all(item["status"] == "pass" for item in doc)


def test_jac_named_points():
    r = run("jac", "mul", "4", "T", *PARAMS)
    assert r.returncode == 0, r.stderr
    assert "(= g1g2)" in r.stdout
    r = run("jac", "add", "g1", "g2", *PARAMS)
    assert r.returncode == 0
    assert "(= g1g2)" in r.stdout
    r = run("jac", "neg", "g1", *PARAMS)
    assert "(= g1)" in r.stdout
    r = run("jac", "mul", "8", "T", *PARAMS)
    assert "(= id)" in r.stdout


def test_jac_literal_divisor_and_errors(tmp_path):
    cf = tmp_path / "curve.txt"
    cf.write_text("s^5 - 4*s\n")
    r = run("jac", "add", "<s ; 0>", "<s ; 0>", "--eta", "1", "--omega", "2",
            "--rho", "3", "--curve-file", str(cf))
    assert r.returncode == 0, r.stderr
    assert "(= id)" in r.stdout
    r = run("jac", "add", "<s - 1 ; 0>", "id", "--eta", "1", "--omega", "2",
            "--rho", "3", "--curve-file", str(cf))
    assert r.returncode == 1  # point not on the curve
    r = run("jac", "mul", "2", *PARAMS)
    assert r.returncode == 1  # missing divisor operand


def test_xi_command():
    r = run("xi", "--factor", "s", "--factor", "s^2 - 2",
            "--factor", "s^4 - 3", "<s ; 0>")
    assert r.returncode == 0, r.stderr
    assert r.stdout.strip()
    r = run("xi", "--factor", "s", "--factor", "s^2 - 2",
            "--factor", "s^4 - 3", "id", "--json")
    assert r.returncode == 0
    comps = json.loads(r.stdout)
    assert len(comps) == 3
    r = run("xi", "--factor", "s", "--factor", "s", "<s ; 0>")
    assert r.returncode == 1


def test_richelot_command():
    r = run("richelot", "s", "s^2 - 1", "s^2 - 4", "--json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["Delta"] == "-3"
    r = run("richelot", "s", "s", "s")
    assert r.returncode == 1


def test_identity_command():
    assert run("identity", "--symbolic").returncode == 0
    r = run("identity", "--", "1/2", "-3", "7/5")
    assert r.returncode == 0
    assert "IDENTITY HOLDS" in r.stdout
    assert run("identity", "0", "1", "1").returncode == 1
    assert run("identity", "1", "2").returncode == 1


def test_psd_command():
    r = run("psd", "x^2 + 1 / x^2 + 2")
    assert r.returncode == 0
    assert r.stdout.strip() == "PSD"
    r = run("psd", "x", "--json")
    assert json.loads(r.stdout) == {"psd": False}
    assert run("psd", "x /").returncode == 1
