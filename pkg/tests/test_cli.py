import json
import subprocess
import sys

import pytest

from affsym.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# covers


def test_covers_with_residue_split(capsys):
    code, out, _ = run_cli(capsys, "covers", "-n", "4", "[-1,1,4,6]", "-r", "2")
    assert code == 0
    assert out.splitlines() == [
        "psi+ [-1,4,1,6] t(2,3)",
        "psi+ [-3,3,4,6] t(2,5)",
        "psi- [1,-1,4,6] t(1,2)",
        "psi- [-1,0,5,6] t(3,6)",
    ]


def test_covers_of_identity(capsys):
    code, out, _ = run_cli(capsys, "covers", "-n", "4", "[1,2,3,4]")
    assert code == 0
    assert len(out.splitlines()) == 4  # the length-one elements


def test_covers_json(capsys):
    code, out, _ = run_cli(capsys, "covers", "-n", "4", "--json", "[-1,1,4,6]", "-r", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["plus"] == [{"window": [1, -1, 4, 6], "reflection": [1, 2]}]
    assert {tuple(item["window"]) for item in payload["minus"]} == {
        (-3, 3, 4, 6),
        (-2, 1, 4, 7),
    }


def test_covers_malformed_window_exits_2(capsys):
    code, _, err = run_cli(capsys, "covers", "-n", "4", "[1,2,bogus,4]")
    assert code == 2 and err
    code, _, err = run_cli(capsys, "covers", "-n", "4", "[1,2,3,5]")
    assert code == 2 and err


# ---------------------------------------------------------------------------
# reduced words


def test_reduced_words_output(capsys):
    code, out, _ = run_cli(capsys, "reduced-words", "-n", "3", "[3,2,1]")
    assert code == 0
    assert out.splitlines() == ["121", "212"]


# ---------------------------------------------------------------------------
# little trace


def test_little_trace_figure(capsys):
    code, out, _ = run_cli(
        capsys, "little", "-n", "5", "-v", "3410321042", "-a", "34102321042", "-i", "5"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0] == "34102321042@5  p=2  q=5"
    assert lines[-1].startswith("34041321041@4")


def test_little_single_step(capsys):
    code, out, _ = run_cli(capsys, "little", "-n", "5", "-v", "", "-a", "0", "-i", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[-1].startswith("4@1")


def test_little_not_marked_exits_3(capsys):
    code, _, err = run_cli(
        capsys, "little", "-n", "5", "-v", "3410321042", "-a", "34102321042", "-i", "3"
    )
    assert code == 3 and err


def test_little_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "little", "-n", "5", "--json",
        "-v", "3410321042", "-a", "34102321042", "-i", "5",
    )
    assert code == 0
    payload = json.loads(out)
    assert [row["word"] for row in payload["rows"]] == [
        "34102321042",
        "34101321042",
        "34101321041",
        "34001321041",
        "34041321041",
    ]
    assert [row["mark"] for row in payload["rows"]] == [5, 11, 3, 4, 4]
    assert payload["rows"][0]["p"] == 2 and payload["rows"][0]["q"] == 5


# ---------------------------------------------------------------------------
# generalized little


def test_generalized_little_command(capsys):
    # single factor {2,3} over v = w({3}) = s_3; the cover reflection is t(2,3)
    code, out, _ = run_cli(
        capsys, "generalized-little", "-n", "5", "-v", "[1,2,4,3,5]", "-r", "2",
        "-d", "23",
    )
    assert code == 0
    assert out == "13 [2,1,4,3,5]\n"


def test_generalized_little_bad_cover_exits_3(capsys):
    code, _, err = run_cli(
        capsys, "generalized-little", "-n", "5", "-v", "[1,2,3,4,5]", "-r", "0",
        "-d", "23",
    )
    assert code == 3 and err


# ---------------------------------------------------------------------------
# tables and expansion


def test_stanley_table_command(capsys):
    code, out, _ = run_cli(capsys, "stanley-table", "-n", "3", "[3,2,1]")
    assert code == 0
    assert out.splitlines() == ["1,1,1: 2", "2,1: 1"]


def test_stanley_table_json(capsys):
    code, out, _ = run_cli(capsys, "stanley-table", "-n", "3", "--json", "[3,2,1]")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "n": 3,
        "degree": 3,
        "window": [3, 2, 1],
        "coefficients": {"1,1,1": 2, "2,1": 1},
    }


def test_expand_command(capsys):
    code, out, _ = run_cli(capsys, "expand", "-n", "4", "[-1,4,1,6]")
    assert code == 0
    assert out.splitlines() == ["2,1,1: 1", "2,2: 1"]


def test_expand_grassmannian_unit(capsys):
    code, out, _ = run_cli(capsys, "expand", "-n", "4", "[-2,1,4,7]")
    assert code == 0
    assert out.splitlines() == ["2,1,1: 1"]


def test_expand_json(capsys):
    code, out, _ = run_cli(capsys, "expand", "-n", "4", "--json", "[-1,4,1,6]")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == {"2,1,1": "1", "2,2": "1"}
    assert payload["degree"] == 4


# ---------------------------------------------------------------------------
# verify


def test_verify_all_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "-n", "2", "--max-length", "3", "all")
    assert code == 0
    assert "all checks passed" in out


def test_verify_garsia_little(capsys):
    code, out, _ = run_cli(capsys, "verify", "-n", "3", "--max-length", "2", "garsia-little")
    assert code == 0
    assert out.splitlines()[0].startswith("garsia-little:")


def test_verify_zero_length_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "-n", "4", "--max-length", "0", "all")
    assert code == 0
    assert "all checks passed" in out


def test_verify_negative_length_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "-n", "4", "--max-length", "-1", "all")
    assert code == 2 and err


def test_verify_json_deterministic(capsys):
    first = run_cli(capsys, "verify", "-n", "2", "--max-length", "2", "--json", "all")
    second = run_cli(capsys, "verify", "-n", "2", "--max-length", "2", "--json", "all")
    assert first == second
    assert first[0] == 0
    payload = json.loads(first[1])
    assert payload["passed"] is True
    assert set(payload["suites"]) == {
        "garsia-little",
        "chevalley",
        "bijection",
        "exchange-random",
    }


def test_outputs_are_byte_identical(capsys):
    runs = [
        run_cli(capsys, "covers", "-n", "4", "[-1,1,4,6]", "-r", "2") for _ in range(2)
    ]
    assert runs[0] == runs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "affsym", "stanley-table", "-n", "3", "[3,2,1]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["1,1,1: 2", "2,1: 1"]


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["covers"])
    assert excinfo.value.code == 2
