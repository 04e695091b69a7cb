"""CLI behaviour: golden outputs, exit codes and byte-stable output.

Regenerate the golden files with ``python tests/test_cli.py --regen`` after an
intentional output change, and review the diff.
"""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from constacyclic.cli import main

GOLDEN = Path(__file__).parent / "golden"

# name -> argv; the worked examples first, then one invocation per subcommand
CASES = {
    # F_16, x^3 + w^2, lengths 3 * 2^s
    "f16_build": "build --p 2 --a 4 --n 3 --s 2 --gamma g^2 --i 3",
    "f16_table_s3": "table --p 2 --s 3",
    "f16_verify_s2": "verify --p 2 --a 4 --n 3 --s 2 --gamma g^2",
    # F_13, x^3 - 2 and x^3 + 2, length 6 * 13^s
    "f13_factor": "factor --p 13 --n 3 --xi 2",
    "f13_distance": "distance --p 13 --s 1 --n 3 --xi 2 --i 7 --j 3 --certificate",
    "f13_table": "table --p 13 --s 1 --family two --output text",
    # cyclic codes of length 2 p^s
    "cyclic_f3_verify": "verify --p 3 --s 1 --family two",
    "cyclic_f3_table_s2": "table --p 3 --s 2 --family two",
    # negacyclic codes of length 2 p^s
    "nega_f5_factor": "factor --p 5 --negacyclic",
    "nega_f5_verify": "verify --p 5 --negacyclic --s 1 --max-dim 8 --output text",
    "nega_f7_verify": "verify --p 7 --negacyclic --s 1 --max-dim 6",
    "nega_f7_distance": "distance --p 7 --negacyclic --s 1 --i 5",
    # single subcommands
    "distance_beta": "distance --p 3 --s 2 --i 4",
    "distance_t3": "distance --p 3 --s 1 --i 2 --j 1",
    "distance_zero": "distance --p 3 --s 2 --i 9",
    "table_single": "table --p 3 --s 1",
    "verify_single": "verify --p 5 --s 1 --family single",
    "classify": "classify --p 3 --s 2 --i 8",
    "weight_2_6": "weight --p 2 --N 6",
    "weight_3_9": "weight --p 3 --N 9",
    "properties": "verify --p 3 --s 1 --i 1 --properties --seed 11",
}


def run(argv: str, capsys) -> tuple[int, str, str]:
    code = main(argv.split())
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    code, out, _ = run(CASES[name], capsys)
    assert code == 0
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_documented_fields(capsys):
    _, out, _ = run("distance --p 3 --s 2 --i 4", capsys)
    d = json.loads(out)
    assert d["distance"] == 3 and d["case"] == "Beta"
    _, out, _ = run("distance --p 3 --s 2 --i 9", capsys)
    d = json.loads(out)
    assert d["distance"] is None and d["case"] == "ZeroCode"
    _, out, _ = run("table --p 2 --s 3", capsys)
    assert json.loads(out)["distances"] == [1, 2, 2, 2, 2, 4, 4, 8, None]
    _, out, _ = run("table --p 3 --s 1", capsys)
    assert json.loads(out)["distances"] == [1, 2, 3, None]
    _, out, _ = run("table --p 3 --s 1 --family two", capsys)
    m = json.loads(out)["distances"]
    assert len(m) == 4 and all(len(r) == 4 for r in m)
    assert m[0][0] == 1 and m[3][3] is None


def test_verify_line_counts(capsys):
    _, out, _ = run("verify --p 3 --s 1 --family two", capsys)
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 16 and all(r["agree"] for r in rows)
    _, out, _ = run("verify --p 5 --s 1 --family single", capsys)
    assert len(out.splitlines()) == 6
    _, out, _ = run("verify --p 7 --negacyclic --s 1 --max-dim 6", capsys)
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["partial"] for r in rows] == [True] * 4 + [False] * 4


@pytest.mark.parametrize(
    "argv",
    [
        "classify --p 3 --s 2 --i 9",
        "distance --p 4 --s 1 --i 1",
        "distance --p 5 --negacyclic --s 1 --i 2",
        "distance --p 3 --s 1 --i 7",
        "build --p 5 --n 2 --s 1 --gamma 1 --i 1",
        "weight --p 2 --N -1",
        "distance --p 2 --s 1 --i 1 --j 1",
    ],
)
def test_validation_exit_code(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == "" and err.startswith("error:")


def test_argparse_rejects_negative_exponent(capsys):
    with pytest.raises(SystemExit) as exc:
        main("distance --p 3 --s 1 --i -1".split())
    assert exc.value.code == 2


def test_disagreement_exits_one(capsys):
    # a budget too small to pin the distance leaves the report undecided
    code, out, _ = run("verify --p 5 --s 1 --family two --i 4 --j 5 --max-dim 0 --budget 1000", capsys)
    assert code == 1
    assert json.loads(out)["method"] == "bounds"


def test_gamma_minus_one_is_normalised(capsys):
    _, a, _ = run("build --p 5 --s 1 --i 1 --gamma -1", capsys)
    _, b, _ = run("build --p 5 --s 1 --i 1 --gamma 4", capsys)
    assert a == b


def test_output_is_byte_stable():
    argv = [sys.executable, "-m", "constacyclic", "verify", "--p", "3", "--s", "1", "--family", "two", "--properties"]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]


def _regen() -> None:
    import contextlib
    import io

    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert main(argv.split()) == 0, name
        (GOLDEN / f"{name}.out").write_text(buf.getvalue())


if __name__ == "__main__":
    if "--regen" in sys.argv:
        _regen()
