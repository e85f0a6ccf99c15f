"""Command-line interface: parsing, subcommands, exit codes, JSON reports."""

import json

import numpy as np
import pytest

import speclap as sp
from speclap import cli
from speclap.errors import DuplicateEdge, IndexOutOfRange, ParseError

from conftest import G1_BIPARTITION, W1_EDGES, W4, g1_signed, g2_signed


def write_graph(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def graph_file(tmp_path, name, g):
    return write_graph(tmp_path, name, cli.serialize_graph(g))


def ring_text(n):
    lines = [str(n)] + [f"{i} {i % n + 1} 1.0" for i in range(1, n + 1)]
    return "\n".join(lines) + "\n"


def w1_text():
    return "9\n" + "".join(f"{i} {j} 1.0\n" for i, j in W1_EDGES)


def run(capsys, argv):
    code = cli.main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


class TestParseGraph:
    def test_path_three(self, tmp_path):
        g = cli.parse_graph(write_graph(tmp_path, "p3.txt", "3\n1 2 1.0\n2 3 1.0\n"))
        assert g.m == 3
        assert g.W[0, 1] == 1.0 and g.W[1, 2] == 1.0 and g.W[0, 2] == 0.0
        assert np.array_equal(g.W, g.W.T)

    def test_self_loop_rejected(self, tmp_path):
        with pytest.raises(ParseError):
            cli.parse_graph(write_graph(tmp_path, "loop.txt", "2\n1 1 1.0\n"))

    def test_four_node_reference(self, tmp_path):
        text = "4\n1 2 3\n1 3 6\n1 4 3\n2 4 3\n3 4 3\n"
        g = cli.parse_graph(write_graph(tmp_path, "w4.txt", text))
        assert np.array_equal(g.W, W4)

    def test_duplicate_pair_rejected(self, tmp_path):
        text = "3\n1 2 1.0\n2 1 2.0\n"
        with pytest.raises(DuplicateEdge):
            cli.parse_graph(write_graph(tmp_path, "dup.txt", text))

    def test_out_of_range_rejected(self, tmp_path):
        with pytest.raises(IndexOutOfRange):
            cli.parse_graph(write_graph(tmp_path, "oor.txt", "2\n1 3 1.0\n"))

    def test_empty_file_rejected(self, tmp_path):
        with pytest.raises(ParseError):
            cli.parse_graph(write_graph(tmp_path, "empty.txt", "\n# nothing\n"))

    def test_comments_and_blank_lines_ignored(self, tmp_path):
        text = "# a graph\n\n2\n# edge\n1 2 -2.5\n\n"
        g = cli.parse_graph(write_graph(tmp_path, "c.txt", text))
        assert g.W[0, 1] == -2.5

    def test_round_trip(self, tmp_path, rng):
        from conftest import random_connected
        for k in range(5):
            g = random_connected(rng, 6, signed=bool(k % 2))
            path = write_graph(tmp_path, f"rt{k}.txt", cli.serialize_graph(g))
            g2 = cli.parse_graph(path)
            assert np.array_equal(g.W, g2.W)


class TestDraw:
    def test_ring_energy(self, tmp_path, capsys):
        path = write_graph(tmp_path, "ring.txt", ring_text(12))
        code, out, _ = run(capsys, ["draw", path, "--dim", "2"])
        assert code == 0
        report = json.loads(out)
        assert report["energy"] == pytest.approx(0.5359, abs=5e-4)
        assert report["dim"] == 2
        assert report["eigenvalues"][0] == pytest.approx(0.0, abs=1e-9)

    def test_disconnected_exit_2(self, tmp_path, capsys):
        path = write_graph(tmp_path, "disc.txt", "4\n1 2 1.0\n3 4 1.0\n")
        code, out, err = run(capsys, ["draw", path])
        assert code == 2
        assert out == ""
        payload = json.loads(err)
        assert payload["error"] in ("Disconnected", "NotConnected")
        assert "\n" not in err.strip()

    def test_dim_too_large_exit_2(self, tmp_path, capsys):
        path = write_graph(tmp_path, "p3.txt", "3\n1 2 1.0\n2 3 1.0\n")
        code, _, err = run(capsys, ["draw", path, "--dim", "3"])
        assert code == 2
        assert "DimensionTooLarge" in json.loads(err)["error"]

    def test_svg_and_csv_outputs(self, tmp_path, capsys):
        path = write_graph(tmp_path, "ring.txt", ring_text(8))
        svg = str(tmp_path / "ring.svg")
        csv = str(tmp_path / "ring.csv")
        code, out, _ = run(capsys, ["draw", path, "--svg", svg, "--csv", csv])
        assert code == 0
        report = json.loads(out)
        assert report["svg"] == [svg]
        assert (tmp_path / "ring.svg").read_text().count("<circle") == 8
        assert (tmp_path / "ring.csv").read_text().startswith("node,x1,x2")

    def test_signed_drawing(self, tmp_path, capsys):
        path = graph_file(tmp_path, "g2.txt", g2_signed())
        code, out, _ = run(capsys, ["draw", path, "--signed"])
        assert code == 0
        report = json.loads(out)
        assert report["energy"] == pytest.approx(0.5175 + 1.5016, abs=5e-3)


class TestCluster:
    def test_w1_four_way(self, tmp_path, capsys):
        path = write_graph(tmp_path, "w1.txt", w1_text())
        code, out, _ = run(capsys, ["cluster", path, "--k", "4"])
        assert code == 0
        report = json.loads(out)
        asg = report["assignments"]
        blocks = {}
        for node, b in enumerate(asg, start=1):
            blocks.setdefault(b, set()).add(node)
        assert set(map(frozenset, blocks.values())) == {
            frozenset({7, 8}), frozenset({5, 9}),
            frozenset({1, 2, 4}), frozenset({3, 6})}
        assert set(asg) == {1, 2, 3, 4}
        assert report["relaxation_value"] <= report["objective"] + 1e-9
        assert report["iterations"] >= 1

    def test_sncut_bipartition(self, tmp_path, capsys):
        path = graph_file(tmp_path, "g1.txt", g1_signed())
        code, out, _ = run(capsys, ["cluster", path, "--k", "2", "--mode", "sncut"])
        assert code == 0
        report = json.loads(out)
        blocks = {}
        for node, b in enumerate(report["assignments"], start=1):
            blocks.setdefault(b, set()).add(node)
        assert set(map(frozenset, blocks.values())) == {
            frozenset(G1_BIPARTITION[0]), frozenset(G1_BIPARTITION[1])}

    def test_rcut_objective_recomputed(self, tmp_path, capsys):
        path = write_graph(tmp_path, "w1.txt", w1_text())
        code, out, _ = run(capsys, ["cluster", path, "--k", "4", "--mode", "rcut"])
        assert code == 0
        report = json.loads(out)
        g = cli.parse_graph(path)
        blocks = {}
        for node, b in enumerate(report["assignments"], start=1):
            blocks.setdefault(b, []).append(node)
        total = sum(sp.cut(g, sp.NodeSubset(mem, m=9)) / len(mem)
                    for mem in blocks.values())
        assert report["objective"] == pytest.approx(total, abs=1e-9)

    def test_negative_weights_rejected_in_unsigned_mode(self, tmp_path, capsys):
        path = graph_file(tmp_path, "g1.txt", g1_signed())
        code, _, err = run(capsys, ["cluster", path, "--k", "2", "--mode", "ncut"])
        assert code == 2
        assert "NegativeWeightInUnsignedMode" in json.loads(err)["message"]

    def test_two_way_report_included(self, tmp_path, capsys):
        path = write_graph(tmp_path, "w1.txt", w1_text())
        code, out, _ = run(capsys, ["cluster", path, "--k", "2"])
        assert code == 0
        report = json.loads(out)
        two = report["two_way"]
        assert {frozenset(two["partition"][0]), frozenset(two["partition"][1])} == {
            frozenset({1, 2, 4, 5}), frozenset({3, 6, 7, 8, 9})}
        assert two["ncut"] == pytest.approx(2.0 / 9.0, abs=1e-9)

    def test_json_output_file(self, tmp_path, capsys):
        path = write_graph(tmp_path, "w1.txt", w1_text())
        out_json = str(tmp_path / "report.json")
        code, out, _ = run(capsys, ["cluster", path, "--k", "3", "--json", out_json])
        assert code == 0
        assert json.loads((tmp_path / "report.json").read_text()) == json.loads(out)

    def test_deterministic(self, tmp_path, capsys):
        path = write_graph(tmp_path, "w1.txt", w1_text())
        _, out1, _ = run(capsys, ["cluster", path, "--k", "4"])
        _, out2, _ = run(capsys, ["cluster", path, "--k", "4"])
        assert out1 == out2


class TestBalance:
    def test_balanced_g1(self, tmp_path, capsys):
        path = graph_file(tmp_path, "g1.txt", g1_signed())
        code, out, _ = run(capsys, ["balance", path])
        assert code == 0
        report = json.loads(out)
        assert report["balanced"] is True
        assert report["smallest_signed_laplacian_eigenvalue"] == pytest.approx(0.0, abs=1e-8)
        pos = {i + 1 for i, s in enumerate(report["bipartition"]) if s > 0}
        assert pos in (G1_BIPARTITION[0], G1_BIPARTITION[1])

    def test_unbalanced_g2(self, tmp_path, capsys):
        path = graph_file(tmp_path, "g2.txt", g2_signed())
        code, out, _ = run(capsys, ["balance", path])
        assert code == 0
        report = json.loads(out)
        assert report["balanced"] is False
        assert "bipartition" not in report
        assert report["smallest_signed_laplacian_eigenvalue"] == pytest.approx(
            0.5175, abs=5e-4)

    def test_positive_triangle(self, tmp_path, capsys):
        path = write_graph(tmp_path, "tri.txt", "3\n1 2 1\n2 3 1\n1 3 1\n")
        code, out, _ = run(capsys, ["balance", path])
        assert code == 0
        assert json.loads(out)["balanced"] is True

    def test_disconnected_exit_2(self, tmp_path, capsys):
        path = write_graph(tmp_path, "disc.txt", "4\n1 2 1.0\n3 4 -1.0\n")
        code, _, err = run(capsys, ["balance", path])
        assert code == 2
        json.loads(err)


class TestExitCodes:
    def test_usage_error_is_1(self, capsys):
        assert run(capsys, ["cluster"])[0] == 1

    def test_missing_file_is_2(self, capsys):
        code, _, err = run(capsys, ["balance", "/nonexistent/graph.txt"])
        assert code == 2
        json.loads(err)

    def test_parse_error_is_2(self, tmp_path, capsys):
        path = write_graph(tmp_path, "bad.txt", "2\n1 2\n")
        code, _, err = run(capsys, ["cluster", path, "--k", "2"])
        assert code == 2
        assert json.loads(err)["error"] == "ParseError"


class TestTolEnv:
    def test_tol_override_used(self, tmp_path, capsys, monkeypatch):
        path = write_graph(tmp_path, "ring.txt", ring_text(10))
        monkeypatch.setenv("SPECLAP_TOL", "1e-10")
        code, out, _ = run(capsys, ["draw", path])
        assert code == 0
        assert json.loads(out)["energy"] == pytest.approx(
            2 * (2 - 2 * np.cos(2 * np.pi / 10)), abs=1e-6)

    def test_bad_tol_is_error(self, tmp_path, capsys, monkeypatch):
        path = write_graph(tmp_path, "ring.txt", ring_text(6))
        monkeypatch.setenv("SPECLAP_TOL", "not-a-number")
        code, _, err = run(capsys, ["draw", path])
        assert code == 2
        json.loads(err)
