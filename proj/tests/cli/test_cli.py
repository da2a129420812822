"""End-to-end checks of the command-line tool: output shapes, the dual
counting routes, and the documented exit codes.

Usage: test_cli.py <path-to-cli> <path-to-data-dir>
"""

import json
import os
import subprocess
import sys

CLI = sys.argv[1]
DATA = sys.argv[2]


def run(*args, env=None, expect=0):
    full_env = dict(os.environ)
    full_env.pop("TREEAVOID_SUBSET_CAP", None)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=full_env, timeout=120
    )
    assert proc.returncode == expect, (
        f"{args}: expected exit {expect}, got {proc.returncode}\n"
        f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
    )
    return proc.stdout


ALPHABET = os.path.join(DATA, "alphabet_mixed.json")
PATTERNS = os.path.join(DATA, "patterns_mixed.json")
NALG = os.path.join(DATA, "nalg_catalan.json")


def test_catalog_list():
    lines = run("catalog", "list").splitlines()
    assert len(lines) == 15, lines
    ids = [line.split()[0] for line in lines]
    assert "dup" in ids and "motz" in ids and "fcat_3" in ids


def test_series_catalog():
    out = run("series", "--catalog", "dup", "--max-degree", "5", "--specialize", "arity")
    assert out == "1,2,5,14,42,132\n", out
    out = run(
        "series", "--catalog", "example_chains", "--max-degree", "5", "--specialize",
        "degree"
    )
    assert out == "1,2,3,4,5,6\n", out


def test_dual_routes_agree():
    solved = run(
        "series", "--alphabet", ALPHABET, "--patterns", PATTERNS, "--max-degree", "3"
    )
    census = run(
        "enumerate", "--alphabet", ALPHABET, "--patterns", PATTERNS, "--max-degree", "3"
    )
    assert solved == census
    assert solved.startswith("truncation_degree 3\n"), solved


def test_system():
    text = run("system", "--alphabet", ALPHABET, "--patterns", PATTERNS)
    lines = text.rstrip("\n").split("\n")
    assert len(lines) == 7, text
    assert lines[0].startswith("F{} = Leaf + "), text
    doc = json.loads(
        run("system", "--alphabet", ALPHABET, "--patterns", PATTERNS, "--format", "json")
    )
    assert doc["root"] == "" and len(doc["equations"]) == 7


def test_rewrite_check():
    out = run("rewrite-check", "--catalog", "fcat_1", "--max-degree", "3")
    assert "terminating yes" in out and "confluent yes" in out and "PASS" in out
    # example_mixed carries no orientation, so the probe is an input error.
    run("rewrite-check", "--catalog", "example_mixed", "--max-degree", "3", expect=2)


def test_nalg():
    out = run("nalg", "--spec", NALG, "--max-degree", "6")
    assert "series_by_arity: 1,1,2,5,14,42,132" in out, out
    assert "residual: PASS" in out, out


def test_verify():
    out = run("verify", "--catalog", "dup", "--max-degree", "3")
    assert "dup: dimensions PASS" in out, out
    assert "FAIL" not in out, out


def test_exit_codes():
    run(expect=1)  # no subcommand is a usage error
    run("series", "--max-degree", "3", expect=1)  # neither --catalog nor --alphabet
    run(
        "series", "--catalog", "dup", "--alphabet", ALPHABET, "--patterns", PATTERNS,
        "--max-degree", "3", expect=1
    )  # both sources
    run(
        "enumerate", "--alphabet", os.path.join(DATA, "missing.json"), "--patterns",
        PATTERNS, "--max-degree", "2", expect=2
    )
    run(
        "system", "--alphabet", ALPHABET, "--patterns", PATTERNS,
        env={"TREEAVOID_SUBSET_CAP": "1"}, expect=4
    )
    run(
        "system", "--alphabet", ALPHABET, "--patterns", PATTERNS,
        env={"TREEAVOID_SUBSET_CAP": "bogus"}, expect=2
    )
    assert run("--help").strip() != ""  # help prints usage and exits 0


def main():
    tests = [
        test_catalog_list,
        test_series_catalog,
        test_dual_routes_agree,
        test_system,
        test_rewrite_check,
        test_nalg,
        test_verify,
        test_exit_codes,
    ]
    for test in tests:
        test()
        print(f"{test.__name__} ok")
    print(f"cli: {len(tests)} tests passed")


if __name__ == "__main__":
    main()
