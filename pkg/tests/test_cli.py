import io
import json
from pathlib import Path

from cliquecover.cli import run

GOLDEN = Path(__file__).parent / "golden"

FLAGSHIP_G6 = "K~rKCEB_C?oB"          # construct --n 12 --k 4 --shape star
BOWTIE_G6 = "DxK"                      # two triangles sharing vertex 2


def _run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def _golden_check(name, got_line, mask=()):
    got = json.loads(got_line)
    for key in mask:
        assert key in got
        got[key] = None
    want = json.loads((GOLDEN / name).read_text())
    assert got == want


class TestExitCodes:
    def test_bound_ok(self, capsys):
        code, out, _ = _run(capsys, ["bound", "--n", "12", "--k", "4"])
        assert code == 0
        assert out.strip() == "23"

    def test_cover_true(self, capsys, monkeypatch):
        code, out, _ = _run(capsys, ["cover", "check", "-k", "3", "-l", "2"],
                            stdin="C~\n", monkeypatch=monkeypatch)
        assert code == 0

    def test_cover_false_exit_one(self, capsys, monkeypatch):
        # diamond: every edge in only one triangle
        code, _, _ = _run(capsys, ["cover", "check", "-k", "3", "-l", "2"],
                          stdin="C}\n", monkeypatch=monkeypatch)
        assert code == 1

    def test_usage_error_exit_two(self, capsys):
        code, _, err = _run(capsys, ["bound", "--n", "2", "--k", "4"])
        assert code == 2
        assert "error" in err

    def test_parse_error_exit_two(self, capsys, monkeypatch):
        code, _, err = _run(capsys, ["cover", "check", "-k", "3"],
                            stdin="C" + chr(30) + "\n", monkeypatch=monkeypatch)
        assert code == 2
        assert "offset" in err

    def test_search_cap_exit_two(self, capsys):
        code, _, err = _run(capsys, ["search", "--n", "9", "--k", "3"])
        assert code == 2
        assert "capped" in err

    def test_recognize_false_exit_one(self, capsys, monkeypatch):
        code, out, _ = _run(capsys, ["recognize", "-k", "4"],
                            stdin="D~{\n", monkeypatch=monkeypatch)  # K_5
        assert code == 1
        assert "edge_count" in out

    def test_theorem_violation_exit_three(self, capsys, monkeypatch):
        # no real input can trigger this, so fake the pipeline blowing up
        from cliquecover.errors import TheoremViolationError

        def boom(g):
            raise TheoremViolationError("synthetic")

        monkeypatch.setattr("cliquecover.cli.reduce_to_k4_covered", boom)
        code, _, err = _run(capsys, ["reduce"], stdin="E]~o\n",
                            monkeypatch=monkeypatch)
        assert code == 3
        assert "theorem violation" in err


class TestPipelines:
    def test_construct_then_recognize(self, capsys, monkeypatch):
        code, out, _ = _run(capsys, ["construct", "--n", "12", "--k", "4",
                                     "--shape", "star"])
        assert code == 0
        g6 = out.strip()
        assert g6 == FLAGSHIP_G6
        code, out, _ = _run(capsys, ["recognize", "-k", "4"], stdin=g6 + "\n",
                            monkeypatch=monkeypatch)
        assert code == 0
        assert out.strip() == "extremal"

    def test_multi_graph_input(self, capsys, monkeypatch):
        code, out, _ = _run(capsys, ["cover", "check", "-k", "3"],
                            stdin="Bw\nC~\n", monkeypatch=monkeypatch)
        assert code == 0
        assert out.count("holds") == 2

    def test_edgelist_input(self, capsys, tmp_path, monkeypatch):
        p = tmp_path / "tri.el"
        p.write_text("n 3\n0 1\n1 2\n0 2\n")
        code, out, _ = _run(capsys, ["truss", "-l", "1", str(p)])
        assert code == 0
        assert "1 truss(es)" in out

    def test_dot_export(self, capsys, tmp_path):
        dot = tmp_path / "g.dot"
        code, _, _ = _run(capsys, ["construct", "--n", "5", "--k", "3",
                                   "--dot", str(dot)])
        assert code == 0
        assert dot.read_text().startswith("graph g {")

    def test_reduce_json_lines(self, capsys, monkeypatch):
        # octahedron in graph6
        code, out, _ = _run(capsys, ["reduce", "--json"],
                            stdin="E]~o\n", monkeypatch=monkeypatch)
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert len(lines) == 2
        assert lines[0]["edge_drop"] >= 3
        assert lines[1]["final"]["n"] == 5

    def test_contract(self, capsys, monkeypatch):
        code, out, _ = _run(capsys, ["contract", "-e", "1,3"],
                            stdin="C~\n", monkeypatch=monkeypatch)
        assert code == 0
        assert out.strip() == "Bw"

    def test_verify_list(self, capsys):
        code, out, _ = _run(capsys, ["verify-paper", "--list"])
        assert code == 0
        assert "formula-vs-search" in out

    def test_verify_single_criterion(self, capsys):
        code, out, _ = _run(capsys, ["verify-paper", "--only",
                                     "flagship-construction"])
        assert code == 0
        assert "[PASS]" in out


class TestGoldenJson:
    def test_bound(self, capsys):
        _, out, _ = _run(capsys, ["bound", "--n", "12", "--k", "4", "--json"])
        _golden_check("bound_12_4.json", out)

    def test_counterexample(self, capsys):
        _, out, _ = _run(capsys, ["counterexample", "--l-half", "3", "--json"])
        _golden_check("counterexample_3.json", out)

    def test_cover_check(self, capsys, monkeypatch):
        _, out, _ = _run(capsys, ["cover", "check", "-k", "3", "-l", "2",
                                  "--json"],
                         stdin="C~\n", monkeypatch=monkeypatch)
        _golden_check("cover_k3_l2_K4.json", out)

    def test_shrink(self, capsys, monkeypatch):
        _, out, _ = _run(capsys, ["shrink", "-k", "3", "--json"],
                         stdin=BOWTIE_G6 + "\n", monkeypatch=monkeypatch)
        _golden_check("shrink_bowtie.json", out)

    def test_recognize(self, capsys, monkeypatch):
        _, out, _ = _run(capsys, ["recognize", "-k", "4", "--json"],
                         stdin=FLAGSHIP_G6 + "\n", monkeypatch=monkeypatch)
        _golden_check("recognize_flagship.json", out)

    def test_truss(self, capsys, monkeypatch):
        _, out, _ = _run(capsys, ["truss", "-l", "1", "--json"],
                         stdin=BOWTIE_G6 + "\n", monkeypatch=monkeypatch)
        _golden_check("truss_bowtie.json", out)

    def test_search(self, capsys):
        _, out, _ = _run(capsys, ["search", "--n", "5", "--k", "3", "--l", "1",
                                  "--all", "--json"])
        _golden_check("search_5_3.json", out, mask=("wall_time",))
