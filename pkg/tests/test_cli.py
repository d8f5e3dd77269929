from __future__ import annotations

import io
import json

import pytest

from spminors.cli import main


def run(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


WORD = ("--rank", "3", "--cycles", "3", "--last", "2")


def test_minor_text_matches_example(capsys):
    code, text = run("minor", *WORD, "--k", "5")
    assert code == 0
    assert text.count(" + ") == 10


def test_all_methods_agree():
    code, _ = run("minor", *WORD, "--k", "5", "--method", "all")
    assert code == 0


def test_json_output_is_deterministic():
    a = run("minor", *WORD, "--k", "5", "--format", "json", "--torus", "1,-2,3")
    b = run("minor", *WORD, "--k", "5", "--format", "json", "--torus", "1,-2,3")
    assert a == b and a[0] == 0
    obj = json.loads(a[1])
    assert obj["params"] == {"r": 3, "m": 3, "last": 2, "k": 5, "m_prime": 2, "d": 2}
    assert obj["torus"] == [1, -2, 3]
    assert isinstance(obj["torus_exponent"], int)


@pytest.mark.parametrize("argv", [
    ("minor", *WORD, "--k", "99"),
    ("minor", *WORD, "--k", "0"),
    ("minor", "--rank", "3", "--cycles", "4", "--last", "1", "--k", "1"),
    ("minor", *WORD, "--k", "1", "--torus", "1,2"),
    ("minor", *WORD, "--k", "1", "--method", "bogus"),
    ("mutate", *WORD, "--seq=1,x"),
    ("mutate", *WORD, "--seq=6"),
    ("factor-check", *WORD, "--trials", "0"),
    ("verify", "--max-rank", "0"),
    (),
])
def test_usage_errors_exit_one(argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(list(argv), out=io.StringIO()))
    assert exc.value.code == 1


def test_paths_listing_and_dot():
    code, text = run("paths", *WORD, "--k", "5")
    assert code == 0 and len(text.splitlines()) == 12
    code, dot = run("paths", *WORD, "--k", "5", "--dot")
    assert code == 0 and dot.startswith("digraph")


def test_tableaux_table():
    code, text = run("tableaux", *WORD, "--k", "5")
    assert code == 0
    rows = text.splitlines()
    assert len(rows) == 12
    assert all(len(row.split("\t")) == 3 for row in rows)


def test_btilde_and_mutation():
    code, text = run("btilde", *WORD)
    obj = json.loads(text)
    assert code == 0 and obj["cols"] == [-1, -2, -3, 1, 2, 3, 4, 5]
    code, text = run("mutate", *WORD, "--seq=-1,2,2,-1")
    assert code == 0
    back = json.loads(text)
    assert back["entries"] == obj["entries"] and back["sequence"] == [-1, 2, 2, -1]


def test_factor_check():
    code, text = run("factor-check", *WORD, "--trials", "5", "--seed", "3")
    assert code == 0 and "failures=0" in text


def test_verify_small():
    code, text = run("verify", "--max-rank", "2")
    assert code == 0
    assert text.strip().endswith("mismatches=0")
