import re

import pytest
from click.testing import CliRunner

from app import cli

C5 = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(C5, encoding="utf-8")
    return str(path)


class TestGenerate:
    def test_to_stdout(self, runner):
        result = runner.invoke(cli, ["generate", "cycle:5"])
        assert result.exit_code == 0
        assert result.stdout == C5

    def test_to_file(self, runner, tmp_path):
        out = tmp_path / "g.txt"
        result = runner.invoke(cli, ["generate", "conjoined:p=1,cycles=3+3+3", str(out)])
        assert result.exit_code == 0
        assert out.read_text(encoding="utf-8").splitlines()[0] == "5 7"

    def test_invalid_spec(self, runner):
        result = runner.invoke(cli, ["generate", "conjoined:p=3,cycles=3+5"])
        assert result.exit_code == 2
        assert "error:" in result.output


class TestCompute:
    def test_summary(self, runner, c5_file):
        result = runner.invoke(cli, ["compute", c5_file])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "sparing_number: 1"
        assert "method: exhaustive" in lines
        assert "mono_vertices: 1 3 4" in lines
        assert "nonmono_vertices: 0 2" in lines
        assert "mono_edges: (3,4)" in lines

    def test_labeling_round_trip(self, runner, c5_file, tmp_path):
        result = runner.invoke(cli, ["compute", "--labeling", c5_file])
        assert result.exit_code == 0
        assert "0: 1,2" in result.stdout.splitlines()
        labeling = tmp_path / "c5.lab"
        labeling.write_text(result.stdout, encoding="utf-8")

        verified = runner.invoke(cli, ["verify", c5_file, str(labeling)])
        assert verified.exit_code == 0
        assert "is_weak: true" in verified.stdout
        assert "mono_edge_count: 1" in verified.stdout

    def test_generated_family(self, runner, tmp_path):
        out = tmp_path / "fan.txt"
        runner.invoke(cli, ["generate", "entwined:cycles=3+3+3+3+3,shared=1+1+1+1", str(out)])
        result = runner.invoke(cli, ["--method", "bnb", "compute", str(out)])
        assert result.exit_code == 0
        assert "sparing_number: 3" in result.stdout
        assert "method: branch_and_bound" in result.stdout

    def test_cap_exceeded(self, runner, c5_file):
        result = runner.invoke(cli, ["--method", "exhaustive", "--cap", "4", "compute", c5_file])
        assert result.exit_code == 3

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["compute", str(tmp_path / "absent.txt")])
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "text, line",
        [("3 3\n0 1\n1 2\n2 2\n", 4), ("3 3\n0 1\n1 0\n1 2\n", 3), ("4 2\n0 1\n1 2\n", 1)],
    )
    def test_malformed_graph(self, runner, tmp_path, text, line):
        path = tmp_path / "bad.txt"
        path.write_text(text, encoding="utf-8")
        result = runner.invoke(cli, ["compute", str(path)])
        assert result.exit_code == 2
        assert f"[Line {line}]" in result.output

    def test_bad_workers(self, runner, c5_file):
        result = runner.invoke(cli, ["--workers", "0", "compute", c5_file])
        assert result.exit_code == 2


class TestVerify:
    def test_not_weak(self, runner, tmp_path):
        graph = tmp_path / "k2.txt"
        graph.write_text("2 1\n0 1\n", encoding="utf-8")
        labeling = tmp_path / "k2.lab"
        labeling.write_text("0: 0,1\n1: 2,3\n", encoding="utf-8")
        result = runner.invoke(cli, ["verify", str(graph), str(labeling)])
        assert result.exit_code == 1
        assert "is_iasi: true" in result.stdout
        assert "is_weak: false" in result.stdout

    def test_labeling_for_another_graph(self, runner, c5_file, tmp_path):
        labeling = tmp_path / "short.lab"
        labeling.write_text("0: 1\n1: 4\n", encoding="utf-8")
        result = runner.invoke(cli, ["verify", c5_file, str(labeling)])
        assert result.exit_code == 2


class TestAudit:
    def test_cycles(self, runner):
        result = runner.invoke(cli, ["audit", "cycle:3..9"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1] == "rows: 7  match: 7  mismatch: 0  inapplicable: 0"

    def test_complete_graphs_mismatch(self, runner):
        result = runner.invoke(cli, ["audit", "complete:3..7"])
        assert result.exit_code == 1
        assert re.search(r"complete:5\s+eulerian-odd-cycles\s+2\s+6\s+mismatch", result.stdout)

    def test_csv(self, runner):
        result = runner.invoke(cli, ["audit", "--csv", "cycle:3..4"])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "instance,theorem,formula,oracle,status",
            "cycle:3,odd-cycle,1,1,match",
            "cycle:4,bipartite-zero,0,0,match",
        ]

    def test_corpus_file(self, runner, tmp_path, monkeypatch):
        corpus = tmp_path / "corpus.json"
        corpus.write_text('{"specs": ["cycle:3..4"]}', encoding="utf-8")
        monkeypatch.setenv("SPARING_CORPUS_PATH", str(corpus))
        result = runner.invoke(cli, ["audit"])
        assert result.exit_code == 0
        assert "rows: 2" in result.stdout

    def test_bad_range(self, runner):
        result = runner.invoke(cli, ["audit", "cycle:9..3"])
        assert result.exit_code == 2


class TestExportDot:
    def test_plain(self, runner, tmp_path):
        graph = tmp_path / "c3.txt"
        graph.write_text("3 3\n0 1\n1 2\n0 2\n", encoding="utf-8")
        result = runner.invoke(cli, ["export-dot", str(graph)])
        assert result.exit_code == 0
        assert " ".join(result.stdout.split()) == "graph { 0 -- 1; 0 -- 2; 1 -- 2; }"

    def test_mono_vertices_are_boxed(self, runner, c5_file, tmp_path):
        labeling = tmp_path / "c5.lab"
        labeling.write_text(runner.invoke(cli, ["compute", "--labeling", c5_file]).stdout, encoding="utf-8")
        result = runner.invoke(cli, ["export-dot", c5_file, str(labeling)])
        assert result.exit_code == 0
        assert result.stdout.count("shape=box") == 3
        assert '0 [label="0: {1,2}"];' in result.stdout


class TestExamples:
    def test_output_is_deterministic(self, runner, c5_file):
        floral = "floral:k=5,petals=(0,1,3)+(1,1,3)+(2,1,3),mode=attached"
        for args in (
            ["compute", "--labeling", c5_file],
            ["generate", floral],
            ["audit", "conjoined:p=1,cycles=3+3+3"],
        ):
            first = runner.invoke(cli, args)
            second = runner.invoke(cli, args)
            assert first.stdout == second.stdout

    def test_triangle_without_singletons(self, runner, tmp_path):
        graph = tmp_path / "k3.txt"
        graph.write_text("3 3\n0 1\n1 2\n0 2\n", encoding="utf-8")
        labeling = tmp_path / "k3.lab"
        labeling.write_text("0: 0,1\n1: 2,3\n2: 8,9\n", encoding="utf-8")
        result = runner.invoke(cli, ["verify", str(graph), str(labeling)])
        assert result.exit_code == 1
        assert "violations: 3" in result.stdout
        assert result.stdout.count("not weak") == 3

    def test_path_labeling(self, runner, tmp_path):
        graph = tmp_path / "p3.txt"
        graph.write_text("3 2\n0 1\n1 2\n", encoding="utf-8")
        result = runner.invoke(cli, ["compute", "--labeling", str(graph)])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "# sparing_number: 0",
            "# method: exhaustive",
            "# vertices: 3",
            "# edges: 2",
            "# mono_vertices: 0 2",
            "# nonmono_vertices: 1",
            "# mono_edges:",
            "0: 1",
            "1: 4,5",
            "2: 16",
        ]

    def test_generate_floral(self, runner):
        result = runner.invoke(cli, ["generate", "floral:k=3,petals=(0,1,4)+(1,1,4)+(2,1,4),mode=detached"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "9 12"

    def test_export_dot_needs_every_vertex_labeled(self, runner, c5_file, tmp_path):
        labeling = tmp_path / "short.lab"
        labeling.write_text("0: 1\n1: 4\n", encoding="utf-8")
        result = runner.invoke(cli, ["export-dot", c5_file, str(labeling)])
        assert result.exit_code == 2
        assert "Vertex 2 has no label" in result.output
