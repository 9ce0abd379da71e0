import json
import re
import subprocess
import sys

import pytest

from nilsum.cli import main
from nilsum.config import ConfigError, load_config


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_word(capsys):
    assert run_cli(capsys, "gen-word", "kolotov", "-n", "13") == (0, "xyxxyxyxyxxyx\n", "")
    code, out, _ = run_cli(capsys, "gen-word", "example-8ii", "-n", "10")
    assert code == 0 and out.strip() == "cbbbabbbac"


def test_gen_word_rejects_non_word(capsys):
    code, _, err = run_cli(capsys, "gen-word", "kelarev", "-n", "5")
    assert code == 2 and "does not define an infinite word" in err


def test_complexity_csv(capsys):
    code, out, _ = run_cli(capsys, "complexity", "sturmian-sqrt3", "--n-max", "4")
    assert code == 0
    assert out.splitlines() == ["n,count,stabilized", "1,2,true", "2,3,true", "3,4,true", "4,5,true"]


def test_growth_csv(capsys):
    code, out, _ = run_cli(capsys, "growth", "kolotov", "--n-max", "3")
    assert out.splitlines() == ["n,count_n,g_n,expected_sturmian,match", "1,2,2,2,true", "2,3,5,5,true", "3,4,9,9,true"]


def test_verify_kolotov_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "kolotov", "--max-len", "12")
    assert code == 0
    report = json.loads(out)
    names = [c["name"] for c in report["suites"]["kolotov"]]
    assert names == ["identity-w^5", "complexity-n+1"]
    assert report["summary"]["failed"] == []


def test_verify_theorem7_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "theorem7", "--preset", "example-8i", "--format", "text")
    assert code == 0
    assert out.strip().splitlines()[-1] == "PASS: 6 checks"


def test_verify_theorem7_details(capsys):
    code, out, _ = run_cli(capsys, "verify", "theorem7", "--preset", "example-8i", "--no-timing")
    solve = json.loads(out)["suites"]["theorem7"][0]["details"]
    assert solve["determinant"] == "1"
    assert solve["characteristic_polynomial_text"] == "t^2 - 2t - 1"


def test_report_is_deterministic(capsys):
    _, a, _ = run_cli(capsys, "verify", "prop2", "--seed", "11", "--no-timing", "--max-len", "8")
    _, b, _ = run_cli(capsys, "verify", "prop2", "--seed", "11", "--no-timing", "--max-len", "8")
    assert a == b
    assert "elapsed_s" not in a


def test_config_file_run(tmp_path, capsys):
    cfg = {
        "construction": {"kind": "theorem3", "minpoly": [-3, 0, 1], "interval": [1, 2], "degrees": [1, [0, -1]], "a": 1, "b": 2},
        "suites": ["nonnil"],
        "n_max": 50,
        "format": "csv",
    }
    path = tmp_path / "run.json"
    path.write_text(json.dumps(cfg))
    code, out, _ = run_cli(capsys, "verify", "--config", str(path), "--no-timing")
    assert code == 0
    assert out.splitlines()[1].startswith("nonnil,non-nil,pass")


def test_output_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run_cli(capsys, "verify", "nonnil", "--preset", "kolotov", "--output", str(out))[0] == 0
    assert json.loads(out.read_text())["summary"]["checks"] == 1


def test_failing_check_sets_exit_code(capsys):
    # the three-letter word has more than n + 1 factors of length n
    code, _, _ = run_cli(capsys, "verify", "kolotov", "--preset", "example-8ii", "--n-max", "3")
    assert code == 1


@pytest.mark.parametrize(
    "cfg, fragment",
    [
        ({}, "missing required field 'construction'"),
        ({"construction": {"kind": "nope"}}, "unknown construction kind"),
        ({"construction": "kolotov", "suites": ["bogus"]}, "unknown suite"),
        ({"construction": "kolotov", "format": "xml"}, "format must be one of"),
        ({"construction": "kolotov", "seed": -1}, "seed must be an integer"),
        ({"construction": {"kind": "kelarev", "alpha_minpoly": [-4, 0, 1], "alpha_interval": [1, 3], "a": 1, "b": 2}}, "reducible"),
        ({"construction": {"kind": "theorem3", "minpoly": [-2, 0, 1], "interval": [1, 2], "degrees": [1, 2], "a": 1, "b": 2}}, "d(y0)"),
        ({"construction": {"kind": "salwa", "minpoly": [-2, 0, 1], "interval": [1, 2], "a": 1, "b": -2, "lo": 0, "hi": 3}}, "rational"),
        ({"construction": {"kind": "theorem7", "seeds": ["x"], "rho": "yxy"}}, "at least two"),
    ],
)
def test_config_errors_name_the_constraint(cfg, fragment):
    with pytest.raises(ConfigError, match=re.escape(fragment)):
        load_config(cfg)


def test_config_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"construction": {"kind": "sturmian"}}')
    code, _, err = run_cli(capsys, "verify", "growth", "--config", str(path))
    assert code == 2 and "missing required field 'alpha'" in err


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "nilsum.cli", "verify", "nosuchsuite"], capture_output=True)
    assert proc.returncode == 2
