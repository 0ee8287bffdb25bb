import json
import subprocess


def run(cli, *args, cwd=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, cwd=cwd)


def test_compute_harmonic(cli):
    out = run(cli, "compute", "diag(harmonic)", "--spectra", "gD,gDM")
    assert out.returncode == 0, out.stderr
    data = json.loads(out.stdout)
    assert data["spectra"]["gDM"] == []
    assert data["spectra"]["gD"] == [{"kind": "points", "points": [{"re": "0", "im": "0"}]}]


def test_outputs_byte_identical(cli, tmp_path):
    blobs = []
    for run_id in range(2):
        j, s = tmp_path / f"o{run_id}.json", tmp_path / f"o{run_id}.svg"
        out = run(cli, "compute", "shift(const(1)) (+) adj(shift(const(1)))", "--spectra", "all",
                  "--json", str(j), "--svg", str(s))
        assert out.returncode == 0, out.stderr
        blobs.append((j.read_bytes(), s.read_bytes()))
    assert blobs[0] == blobs[1]
    c = [tmp_path / f"c{i}.json" for i in range(2)]
    for path in c:
        assert run(cli, "cline", "--k", "2", "--family", "mixed", "--seed", "3", "--trials", "5",
                   "--json", str(path)).returncode == 0
    assert c[0].read_bytes() == c[1].read_bytes()


def test_cline_fifty_trials(cli):
    out = run(cli, "cline", "--k", "2", "--family", "mixed", "--seed", "7", "--trials", "50")
    assert out.returncode == 0
    assert out.stdout.count("\npass") + out.stdout.startswith("pass") == 50


def test_check_all_library(cli):
    out = run(cli, "check", "all", "--library")
    assert out.returncode == 0
    assert out.stdout.strip().endswith("0 inconsistent")


def test_audit_and_instances(cli):
    assert run(cli, "audit", "--library").returncode == 0
    names = [line.split("\t")[0] for line in run(cli, "instances").stdout.splitlines()]
    assert "shift" in names and "diag_harmonic" in names


def test_exit_codes(cli, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rows": 2, "cols": 2, "entries": [[1]]')
    assert run(cli, "drazin", "--matrix", str(bad)).returncode == 2
    assert run(cli, "compute", "jordan(0,").returncode == 2
    assert run(cli, "check", "no_such_theorem").returncode == 2
    assert run(cli, "compute", "diag(harmonic)", "--spectra", "kato").returncode == 2
    assert run(cli).returncode == 2
    good = tmp_path / "m.json"
    good.write_text('{"rows": 2, "cols": 2, "entries": [["0", "1"], ["0", "0"]]}')
    out = run(cli, "drazin", "--matrix", str(good))
    assert out.returncode == 0
    assert json.loads(out.stdout)["index"] == 2


def test_mutant_exit_code(mutant):
    # The mutant build corrupts the Drazin inverse fed to the forward construction.
    assert run(mutant, "cline", "--k", "2", "--family", "mixed", "--seed", "1").returncode == 1
