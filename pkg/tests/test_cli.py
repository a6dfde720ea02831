import io
import json
from pathlib import Path

import pytest

from bredux.cli import emit_report, exit_code, main
from bredux.graph import Graph, are_isomorphic, disjoint_union, complete_graph
from bredux.io import parse_any, parse_graph
from bredux.reductions import verify_sweep

DATA = Path(__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def fixture(name):
    return parse_any((DATA / name).read_text())


class TestDrawnFixtures:
    def test_line_of_spider_is_net(self):
        code, text = run("transform", "l", DATA / "spider_222.txt")
        assert code == 0
        assert are_isomorphic(parse_graph(text), fixture("net.txt"))

    def test_r_of_claw_is_net(self):
        code, text = run("transform", "r", DATA / "claw.txt")
        assert code == 0
        assert are_isomorphic(parse_graph(text), fixture("net.txt"))

    def test_co_of_claw(self):
        code, text = run("transform", "co", DATA / "claw.txt")
        assert code == 0
        assert parse_graph(text) == fixture("triangle_plus_vertex.txt")
        assert are_isomorphic(parse_graph(text), disjoint_union(complete_graph(3), Graph(1)))

    def test_k_of_c5(self):
        code, text = run("transform", "k", DATA / "c5_pentagram.txt")
        assert code == 0
        assert parse_any(text) == fixture("k_c5.txt")


class TestRecognize:
    def test_claw_in_t(self):
        assert run("recognize", "t", DATA / "claw.txt") == (0, "true\n")

    def test_net_not_in_t(self):
        assert run("recognize", "t", DATA / "net.txt") == (0, "false\n")

    def test_weighted(self):
        assert run("recognize", "kq", DATA / "k_c5.txt") == (0, "false\n")

    def test_mismatch_is_exit_2(self):
        code, _ = run("recognize", "t", DATA / "k_c5.txt")
        assert code == 2


class TestSolve:
    def test_independent_set(self):
        code, text = run("solve", "is", DATA / "claw.txt", "--k", 3)
        assert code == 0
        lines = text.splitlines()
        assert lines[0] == "decision: true"
        assert lines[1] == "optimum: 3"
        assert json.loads(lines[2].split(": ", 1)[1]) == [1, 2, 3]

    def test_tsp(self):
        code, text = run("solve", "tsp", DATA / "k_c5.txt", "--k", 0)
        assert code == 0 and text.startswith("decision: true\noptimum: 0\n")

    def test_subgraph_pattern(self):
        code, text = run("solve", "si", DATA / "net.txt", "--pattern", DATA / "p3.txt")
        assert code == 0 and text.startswith("decision: true")

    def test_hamiltonian_path_on_claw(self):
        code, text = run("solve", "hamiltonian-path", DATA / "claw.txt")
        assert code == 0 and text.splitlines() == ["decision: false", "optimum: none", "certificate: null"]

    @pytest.mark.parametrize(
        "argv",
        [
            ("solve", "clique", DATA / "claw.txt"),
            ("solve", "si", DATA / "claw.txt"),
            ("solve", "nope", DATA / "claw.txt"),
            ("solve", "tsp", DATA / "claw.txt"),
            ("solve", "is", DATA / "claw.txt", "--k", "x"),
        ],
    )
    def test_usage_errors(self, argv):
        assert run(*argv)[0] == 2


class TestGenerateEnumerate:
    def test_spider(self):
        code, text = run("generate", "spider", 1, 1, 1)
        assert code == 0 and parse_graph(text) == fixture("claw.txt")

    def test_spider_arity(self):
        assert run("generate", "spider", 1, 1)[0] == 2

    def test_caterpillar(self):
        code, text = run("generate", "caterpillar", 0, 0, 0, 0)
        assert code == 0 and text == "4 3\n0 1\n1 2\n2 3\n"

    def test_enumerate(self):
        code, text = run("enumerate", "--n", 4, "--dedup")
        assert code == 0
        assert len(text.strip().split("\n\n")) == 11

    def test_enumerate_cap(self):
        assert run("enumerate", "--n", 7)[0] == 2


class TestErrors:
    def test_unknown_subcommand(self):
        assert run("frobnicate")[0] == 2

    def test_unknown_flag(self):
        assert run("enumerate", "--n", 3, "--bogus")[0] == 2

    def test_parse_error(self, capsys):
        assert run("recognize", "t", DATA / "bad_selfloop.txt")[0] == 2
        assert "line 3" in capsys.readouterr().err

    def test_missing_file(self):
        assert run("recognize", "t", DATA / "missing.txt")[0] == 2

    def test_unwritable_report(self, tmp_path):
        target = tmp_path / "no" / "such" / "dir" / "r.json"
        assert run("verify", "is2vc", "--max-n", 2, "--samples", 0, "--report", target)[0] == 2


class TestReports:
    def test_verify_writes_json(self, tmp_path):
        path = tmp_path / "r.json"
        code, text = run("verify", "hp2bdst", "--samples", 20, "--report", path)
        data = json.loads(path.read_text())
        assert code == 0
        assert data["reduction"] == "hp2bdst" and data["seed"] == 42
        assert data["violations"] == []
        assert data["elapsed_ms"] is None
        assert {c["class"] for c in data["closure"]} == {"q"}
        assert "hp2bdst" in text

    def test_timing_flag(self, tmp_path):
        path = tmp_path / "r.json"
        run("verify", "is2vc", "--max-n", 3, "--samples", 0, "--timing", "--report", path)
        assert isinstance(json.loads(path.read_text())["elapsed_ms"], int)

    def test_same_seed_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run("verify", "vcol2cc", "--samples", 40, "--seed", 9, "--report", a)
        run("verify", "vcol2cc", "--samples", 40, "--seed", 9, "--report", b)
        assert a.read_bytes() == b.read_bytes()

    def test_fake_violation(self, tmp_path):
        rep = verify_sweep("is2vc", max_n=3, samples=0)
        fake = {"instance": {"graph": "2 1\n0 1", "k": 1}, "source_decision": True, "target_decision": False}
        rep.violations.append(fake)
        path = tmp_path / "r.json"
        emit_report([rep], str(path), io.StringIO())
        assert exit_code([rep]) == 1
        assert json.loads(path.read_text())["violations"] == [fake]

    def test_empty_sweep(self, tmp_path):
        path = tmp_path / "r.json"
        code, _ = run("verify", "is2vc", "--max-n", 0, "--report", path)
        data = json.loads(path.read_text())
        assert code == 0
        assert data["exhaustive_count"] == 0 and data["sampled_count"] == 0 and data["violations"] == []

    def test_verify_all(self, tmp_path, monkeypatch):
        monkeypatch.setenv("BREDUX_JOBS", "2")
        path = tmp_path / "all.json"
        code, text = run("verify-all", "--seed", 42, "--report", path)
        data = json.loads(path.read_text())
        assert [d["reduction"] for d in data] == ["is2vc", "is2clique", "clique2si", "hc2tsp", "vcol2cc", "hp2bdst"]
        assert all(d["violations"] == [] and d["bijectivity_failures"] == [] for d in data)
        assert all(c["failures"] == 0 for d in data for c in d["containment"])
        # the only closure failures are the triangle-expansion classes (see README)
        failing = {c["class"] for d in data for c in d["closure"] if c["violations"]}
        assert failing == {"rq", "krq"}
        assert code == 1
        assert len(text.strip().splitlines()) == 7
