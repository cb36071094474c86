import math
from pathlib import Path

import pytest

from spatialph.cli import main
from spatialph.graphs import SpatialGraph, read_graph, write_graph
from spatialph.levelset import GrayImage, write_pgm
from spatialph.persistence import read_diagram

DATA = Path(__file__).resolve().parent.parent / "src" / "spatialph" / "data"


def run(*args):
    return main([str(a) for a in args])


class TestGen:
    def test_rgg(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        assert run("gen", "rgg", "--n", 100, "--radius", 0.1, "--seed", 7, "--out", out) == 0
        assert "nodes=100" in capsys.readouterr().out
        assert len(read_graph(out)) == 100

    def test_lattice(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        assert run("gen", "lattice", "--side", 10, "--out", out) == 0
        assert "nodes=100 edges=180" in capsys.readouterr().out

    def test_ws(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        assert run("gen", "ws", "--n", 100, "--k", 2, "--p", 0.1, "--seed", 7, "--out", out) == 0
        assert "edges=200" in capsys.readouterr().out

    def test_bad_params_exit_nonzero(self, tmp_path, capsys):
        assert run("gen", "rgg", "--n", 0, "--radius", 0.1, "--seed", 1,
                   "--out", tmp_path / "g.txt") == 1
        assert "error:" in capsys.readouterr().err


class TestWtm:
    def test_defaults_give_five_seeds(self, tmp_path):
        g = tmp_path / "g.txt"
        t = tmp_path / "t.csv"
        run("gen", "lattice", "--side", 10, "--out", g)
        assert run("wtm", "--graph", g, "--seed", 3, "--out", t) == 0
        zeros = sum(1 for line in t.read_text().splitlines()[1:] if line.endswith(",0"))
        assert zeros == 5

    def test_zero_threshold_infects_connected_graph(self, tmp_path):
        g, t = tmp_path / "g.txt", tmp_path / "t.csv"
        run("gen", "lattice", "--side", 5, "--out", g)
        run("wtm", "--graph", g, "--threshold", 0, "--seed", 1, "--out", t)
        times = [int(line.split(",")[1]) for line in t.read_text().splitlines()[1:]]
        assert max(times) < 25  # nobody left at the never-infected sentinel

    def test_rho_one_all_seeds(self, tmp_path):
        g, t = tmp_path / "g.txt", tmp_path / "t.csv"
        run("gen", "lattice", "--side", 4, "--out", g)
        run("wtm", "--graph", g, "--rho0", 1.0, "--seed", 1, "--out", t)
        times = {int(line.split(",")[1]) for line in t.read_text().splitlines()[1:]}
        assert times == {0}


class TestPh:
    def test_lattice_wtm_has_81_loops(self, tmp_path):
        g, t, d = tmp_path / "g.txt", tmp_path / "t.csv", tmp_path / "d.csv"
        run("gen", "lattice", "--side", 10, "--out", g)
        run("wtm", "--graph", g, "--seed", 3, "--out", t)
        assert run("ph", "--graph", g, "--times", t, "--out", d) == 0
        rows = [line for line in d.read_text().splitlines()[1:] if line.startswith("1,")]
        assert len(rows) == 81

    def test_node_values_from_graph_file(self, tmp_path):
        g, d = tmp_path / "g.txt", tmp_path / "d.csv"
        write_graph(
            SpatialGraph([(0, 0.0, 0.0)], set(), node_values={0: 0.0}), g
        )
        assert run("ph", "--graph", g, "--node-values", "--out", d) == 0
        assert d.read_text() == "dim,birth,death\n0,0.0,inf\n"

    def test_edge_values_from_graph_file(self, tmp_path):
        g, d = tmp_path / "g.txt", tmp_path / "d.csv"
        graph = SpatialGraph(
            [(0, 0.0, 0.0), (1, 1.0, 0.0)], {(0, 1)}, edge_values={(0, 1): 5.0}
        )
        write_graph(graph, g)
        assert run("ph", "--graph", g, "--edge-values", "--out", d) == 0
        diagram = read_diagram(d)
        assert [(f.dimension, f.birth) for f in diagram.features] == [(0, 5.0)]

    def test_ring_image_one_loop(self, tmp_path):
        img, d = tmp_path / "ring.pgm", tmp_path / "d.csv"
        size = 12
        px = [255] * size * size
        for i in range(2, 10):
            for x, y in ((i, 2), (i, 9), (2, i), (9, i)):
                px[y * size + x] = 0
        write_pgm(GrayImage(size, size, tuple(px)), img)
        assert run("ph", "--image", img, "--out", d) == 0
        h1 = [line for line in d.read_text().splitlines()[1:] if line.startswith("1,")]
        assert len(h1) == 1

    def test_requires_exactly_one_source(self, tmp_path, capsys):
        g, t, d = tmp_path / "g.txt", tmp_path / "t.csv", tmp_path / "d.csv"
        run("gen", "lattice", "--side", 3, "--out", g)
        run("wtm", "--graph", g, "--seed", 1, "--out", t)
        assert run("ph", "--graph", g, "--times", t, "--node-values", "--out", d) == 1
        assert "exactly one source" in capsys.readouterr().err


def test_table1_reports_stats(capsys):
    assert run("table1", "lattice", "--runs", 3, "--seed", 1) == 0
    out = capsys.readouterr().out
    assert "H1 mean=81.0000 std=0.0000" in out


class TestCompareAndCluster:
    def test_identical_diagrams_zero_matrix(self, tmp_path):
        g, t, d, m = (tmp_path / n for n in ("g.txt", "t.csv", "d.csv", "m.csv"))
        run("gen", "lattice", "--side", 5, "--out", g)
        run("wtm", "--graph", g, "--seed", 2, "--out", t)
        run("ph", "--graph", g, "--times", t, "--out", d)
        d2 = tmp_path / "d2.csv"
        d2.write_text(d.read_text())
        assert run("compare", d, d2, "--out", m) == 0
        row = m.read_text().splitlines()[1].split(",")
        assert float(row[2]) == 0.0

    def test_dims_flag_and_cluster(self, tmp_path):
        paths = {}
        for name, side, seed in (("a", 5, 1), ("b", 5, 1), ("c", 7, 9)):
            g = tmp_path / f"g{name}.txt"
            t = tmp_path / f"t{name}.csv"
            d = tmp_path / f"d{name}.csv"
            run("gen", "lattice", "--side", side, "--out", g)
            run("wtm", "--graph", g, "--seed", seed, "--out", t)
            run("ph", "--graph", g, "--times", t, "--out", d)
            paths[name] = d
        m = tmp_path / "m.csv"
        assert run("compare", paths["a"], paths["b"], paths["c"],
                   "--dims", 1, "--out", m) == 0
        dend, assign = tmp_path / "dend.csv", tmp_path / "assign.csv"
        assert run("cluster", "--matrix", m, "--k", 2,
                   "--dendrogram", dend, "--assignment", assign) == 0
        lines = assign.read_text().splitlines()[1:]
        clusters = {line.rsplit(",", 1)[0]: line.rsplit(",", 1)[1] for line in lines}
        assert clusters[str(paths["a"])] == clusters[str(paths["b"])]
        assert clusters[str(paths["a"])] != clusters[str(paths["c"])]

    def test_unreadable_diagram_reported(self, tmp_path, capsys):
        assert run("compare", tmp_path / "nope.csv", tmp_path / "nope2.csv",
                   "--out", tmp_path / "m.csv") == 1
        assert "nope.csv" in capsys.readouterr().err


class TestRenderAndThreshold:
    def test_render_diagram_and_dendrogram(self, tmp_path):
        g, t, d = tmp_path / "g.txt", tmp_path / "t.csv", tmp_path / "d.csv"
        run("gen", "lattice", "--side", 5, "--out", g)
        run("wtm", "--graph", g, "--seed", 2, "--out", t)
        run("ph", "--graph", g, "--times", t, "--out", d)
        svg = tmp_path / "d.svg"
        assert run("render", d, "--out", svg) == 0
        assert svg.read_text().startswith("<?xml")
        dend = tmp_path / "dend.csv"
        dend.write_text("a,b,height,size\n0,1,2.0,2\n")
        svg2 = tmp_path / "dend.svg"
        assert run("render", dend, "--out", svg2) == 0
        assert 'class="merge"' in svg2.read_text()

    def test_render_rejects_unknown_file(self, tmp_path, capsys):
        bad = tmp_path / "x.csv"
        bad.write_text("what,is,this\n")
        assert run("render", bad, "--out", tmp_path / "x.svg") == 1

    def test_threshold_command(self, tmp_path):
        img = tmp_path / "g.pgm"
        out = tmp_path / "g.pbm"
        write_pgm(GrayImage(2, 2, (0, 204, 205, 255)), img)
        assert run("threshold", img, "--out", out) == 0
        assert out.read_text() == "P1\n2 2\n1 1\n0 0\n"

    def test_threshold_rejects_bitmap_input(self, tmp_path, capsys):
        img = tmp_path / "b.pbm"
        img.write_text("P1\n1 1\n1\n")
        assert run("threshold", img, "--out", tmp_path / "o.pbm") == 1


def test_commands_are_byte_deterministic(tmp_path):
    outputs = []
    for tag in ("one", "two"):
        g = tmp_path / f"g_{tag}.txt"
        t = tmp_path / f"t_{tag}.csv"
        d = tmp_path / f"d_{tag}.csv"
        run("gen", "rgg", "--n", 40, "--radius", 0.15, "--seed", 9, "--out", g)
        run("wtm", "--graph", g, "--seed", 4, "--out", t)
        run("ph", "--graph", g, "--times", t, "--out", d)
        outputs.append((g.read_bytes(), t.read_bytes(), d.read_bytes()))
    assert outputs[0] == outputs[1]


def test_full_pipeline_composes(tmp_path):
    # gen -> wtm -> ph -> compare -> cluster, no manual file editing
    diagrams = []
    for i, seed in enumerate((5, 6)):
        g = tmp_path / f"g{i}.txt"
        t = tmp_path / f"t{i}.csv"
        d = tmp_path / f"d{i}.csv"
        assert run("gen", "ws", "--n", 30, "--k", 2, "--p", 0.1, "--seed", seed,
                   "--out", g) == 0
        assert run("wtm", "--graph", g, "--seed", seed, "--out", t) == 0
        assert run("ph", "--graph", g, "--times", t, "--out", d) == 0
        diagrams.append(d)
    m = tmp_path / "m.csv"
    assert run("compare", *diagrams, "--out", m) == 0
    assert run("cluster", "--matrix", m, "--k", 2,
               "--dendrogram", tmp_path / "dd.csv",
               "--assignment", tmp_path / "aa.csv") == 0
    assert (tmp_path / "aa.csv").exists()
