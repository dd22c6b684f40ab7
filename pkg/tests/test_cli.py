import json
import random
import re
import subprocess
import sys
from io import StringIO

import pytest

from diagrank.cli import main, run_selftest
from diagrank.rank_codec import psi


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("k, coords, expected", [("2", ["0", "0"], "0\n"), ("2", ["2", "0"], "5\n"), ("1", ["42"], "42\n")])
def test_encode(capsys, k, coords, expected):
    assert run(capsys, "encode", "-k", k, *coords)[:2] == (0, expected)


@pytest.mark.parametrize("k, x, expected", [("2", "5", "2 0\n"), ("3", "0", "0 0 0\n"), ("2", "1", "0 1\n")])
def test_decode(capsys, k, x, expected):
    assert run(capsys, "decode", "-k", k, x)[:2] == (0, expected)


@pytest.mark.parametrize("argv", [
    ["encode", "-k", "2", "1"],
    ["encode", "-k", "2", "1", "x"],
    ["encode", "-k", "1", "007"],
    ["encode", "-k", "1", "+7"],
    ["decode", "-k", "2", "-5"],
    ["decode", "-k", "0", "5"],
    ["decode", "-k", "2", "1.5"],
    ["enumerate", "-k", "2", "--count", "3", "--format", "xml"],
    ["enumerate", "-k", "2", "--count", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_enumerate_plain(capsys):
    assert run(capsys, "enumerate", "-k", "2", "--count", "3")[1] == "0: 0 0\n1: 0 1\n2: 1 0\n"
    assert run(capsys, "enumerate", "-k", "1", "--count", "2")[1] == "0: 0\n1: 1\n"
    assert run(capsys, "enumerate", "-k", "2", "--count", "1", "--space", "cone")[1] == "0: 0 0\n"


def test_enumerate_cone_differs_from_full(capsys):
    out = run(capsys, "enumerate", "-k", "2", "--count", "3", "--space", "cone")[1]
    assert out == "0: 0 0\n1: 1 0\n2: 1 1\n"


def test_enumerate_csv(capsys):
    out = run(capsys, "enumerate", "-k", "3", "--count", "4", "--format", "csv")[1]
    lines = out.split("\n")
    assert lines[0] == "rank,n1,n2,n3"
    assert "\r" not in out and not any(l.endswith(",") for l in lines)
    assert [l.split(",")[0] for l in lines[1:-1]] == ["0", "1", "2", "3"]


def test_enumerate_jsonl(capsys):
    out = run(capsys, "enumerate", "-k", "2", "--count", "200", "--format", "jsonl")[1]
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["rank"] for r in records] == [str(x) for x in range(200)]
    for r in records:
        assert r["k"] == 2 and all(isinstance(v, str) for v in r["tuple"])
        assert psi([int(v) for v in r["tuple"]]) == int(r["rank"])
    assert records[5] == {"rank": "5", "k": 2, "tuple": ["2", "0"]}


def test_grid_table(capsys):
    assert run(capsys, "grid", "--rows", "1", "--cols", "1")[1] == "0\n"
    out = run(capsys, "grid", "--rows", "3", "--cols", "3")[1]
    cells = [line.split() for line in out.splitlines()]
    assert cells[0][1] == "1" and cells[1][0] == "2"


def test_grid_follows_antidiagonals(capsys):
    out = run(capsys, "grid", "--rows", "6", "--cols", "6")[1]
    cells = {int(v): (r, c) for r, line in enumerate(out.splitlines()) for c, v in enumerate(line.split())}
    # ranks 0..20 cover the full antidiagonals of sum 0..5
    sums = [sum(cells[x]) for x in range(21)]
    assert sums == sorted(sums)


def test_grid_svg(capsys, tmp_path):
    path = tmp_path / "grid.svg"
    code, _, _ = run(capsys, "grid", "--rows", "2", "--cols", "2", "--svg", str(path))
    assert code == 0
    svg = path.read_text()
    assert svg.count("<text") == 4 and svg.count("<line") == 3
    assert 'version="1.1"' in svg and "marker-end" in svg
    assert sorted(re.findall(r">(\d+)</text>", svg)) == ["0", "1", "2", "4"]


def test_grid_unwritable_path(capsys, tmp_path):
    code, _, err = run(capsys, "grid", "--rows", "2", "--cols", "2", "--svg", str(tmp_path / "no" / "x.svg"))
    assert code == 2 and "cannot write" in err


@pytest.mark.parametrize("k_max, count", [(3, 1000), (1, 10)])
def test_selftest_passes(capsys, k_max, count):
    code, out, _ = run(capsys, "selftest", "--k-max", str(k_max), "--count", str(count))
    assert code == 0
    assert out.count("PASS") == 4 * k_max and "FAIL" not in out


def test_selftest_fault_injection(capsys):
    code, out, _ = run(capsys, "selftest", "--k-max", "1", "--count", "10", "--inject-fault")
    assert code == 1 and "FAIL" in out


def test_selftest_catches_each_property():
    from diagrank.monotone_order import successor

    def sticky(m):
        # repeats an element: breaks coherence and the prefix check
        return m if m == (3, 0) else successor(m)

    out = StringIO()
    assert run_selftest(2, 50, out, sticky) == 1
    assert "FAIL" in out.getvalue()


def test_module_entry_point_round_trip():
    rng = random.Random(7)
    x = str(rng.randrange(10**30))
    dec = subprocess.run([sys.executable, "-m", "diagrank", "decode", "-k", "6", x],
                         capture_output=True, text=True, check=True).stdout.split()
    enc = subprocess.run([sys.executable, "-m", "diagrank", "encode", "-k", "6", *dec],
                         capture_output=True, text=True, check=True).stdout
    assert enc == x + "\n"
