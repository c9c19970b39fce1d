import json
import subprocess
import sys

import pytest

from immaculate.cli import main, parse_basis_index, parse_composition


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("text,expected", [
    ("2,4", (2, 4)),
    ("0", ()),
    ("", ()),
    ("[]", ()),
])
def test_parse_composition(text, expected):
    assert parse_composition(text) == expected


def test_parse_basis_index():
    assert parse_basis_index("S:2,4") == ("S", (2, 4))
    assert parse_basis_index("H:0") == ("H", ())


def test_product_three_methods_agree(capsys):
    outs = []
    for method in ("oracle", "tableau", "closed-form"):
        code, out, _ = run(
            capsys, "product", "--left", "S:2", "--right", "S:2,4",
            "--method", method,
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]
    assert outs[0].strip() == (
        "S[2,2,4] + S[3,1,4] + S[3,2,3] - S[4,3,1] - S[5,3]"
    )


def test_product_json_round_trips(capsys):
    code, out, _ = run(
        capsys, "product", "--left", "S:1", "--right", "S:1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "S"
    assert {tuple(t["index"]): t["coefficient"] for t in data["terms"]} == {
        (1, 1): 1, (2,): 1
    }


def test_convert(capsys):
    code, out, _ = run(capsys, "convert", "H:1,2", "--to", "S")
    assert code == 0
    assert out.strip() == "S[1,2] + S[2,1] + S[3]"
    code, out, _ = run(capsys, "convert", "S:1,1", "--to", "H")
    assert code == 0
    assert out.strip() == "H[1,1] - H[2]"
    code, out, _ = run(capsys, "convert", "H:1,2", "--to", "h")
    assert code == 0
    assert out.strip() == "h[2,1]"


def test_coeff_methods(capsys):
    args = ("coeff", "-a", "1,1", "-b", "3,2,2", "-g", "3,3,1,1,1")
    code, out, _ = run(capsys, *args)
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run(capsys, *args, "--method", "tableau")
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run(
        capsys, "coeff", "-a", "2", "-b", "2,4", "-g", "5,3",
        "--method", "closed-form",
    )
    assert (code, out.strip()) == (0, "-1")


def test_pieri_subcommands(capsys):
    code, out, _ = run(capsys, "right-pieri", "--alpha", "2", "--s", "2")
    assert code == 0
    assert out.strip() == "S[2,2] + S[3,1] + S[4]"
    code, out, _ = run(capsys, "left-pieri", "--s", "2", "--beta", "2,4")
    assert code == 0
    assert out.strip() == "S[2,2,4] + S[3,1,4] + S[3,2,3] - S[4,3,1] - S[5,3]"


def test_tableaux_content_mode(capsys):
    code, out, _ = run(
        capsys, "tableaux", "--inner", "1", "--content", "3,2,3",
        "--shape", "2,3,2,2",
    )
    assert code == 0
    assert out.strip().endswith("# 4 tableaux")
    assert ". 1" in out  # inner cells render as dots


def test_tableaux_beta_mode_reports_sigma(capsys):
    code, out, _ = run(
        capsys, "tableaux", "--inner", "1", "--beta", "3,1,4",
        "--shape", "2,3,2,2", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert all(entry["outer"] == [2, 3, 2, 2] for entry in data)
    # signed count over the family equals the structure constant
    assert sum(entry["sign"] for entry in data) == -1
    assert [entry["sigma"] for entry in data if entry["rows"] ==
            [[1], [1, 1, 3], [2, 2], [3, 3]]] == [[1, 3, 2]]


def test_tableaux_needs_exactly_one_mode(capsys):
    code, _, err = run(capsys, "tableaux", "--inner", "1")
    assert code == 2
    code, _, err = run(
        capsys, "tableaux", "--inner", "1", "--content", "1", "--beta", "1"
    )
    assert code == 2


def test_tableaux_latex(capsys):
    code, out, _ = run(
        capsys, "tableaux", "--inner", "1", "--content", "1,1",
        "--shape", "1,1,1", "--format", "latex",
    )
    assert code == 0
    assert "\\begin{ytableau}" in out
    assert "\\none" in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "product", "--left", "S:x", "--right", "S:1")
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "coeff", "-a", "1,2", "-b", "1", "-g", "1",
                       "--method", "closed-form")
    assert code == 2


def test_resource_limit_exit_3(capsys):
    long_beta = ",".join(["1"] * 11)
    code, _, err = run(
        capsys, "product", "--left", "S:1", "--right", f"S:{long_beta}",
        "--method", "tableau",
    )
    assert code == 3
    assert "resource limit" in err


def test_verify_suite_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "roundtrip", "--max-size", "4")
    assert code == 0
    assert "pass" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_saturation_counterexample_witness(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "saturation-nsym")
    assert code == 0
    assert "witness" in out
    assert "(3, 2, 2)" in out


def test_verify_max_size_env_override(capsys, monkeypatch):
    monkeypatch.setenv("NSYM_MAX_DEGREE", "3")
    code, out, _ = run(capsys, "verify", "--suite", "roundtrip")
    assert code == 0
    assert "max-size 3" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "product", "--left", "H:2,1", "--right", "S:1,2")
    second = run(capsys, "product", "--left", "H:2,1", "--right", "S:1,2")
    assert first == second


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "immaculate.cli", "coeff",
         "-a", "2", "-b", "2,4", "-g", "3,1,4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"
