from __future__ import annotations

from pathlib import Path

import pytest

from trirep import cli, fixtures
from trirep.faa import enumerate_faas
from trirep.formats import document_from_graph, serialize_graph


def fixture_path(name: str) -> str:
    suffix = ".arr" if name in fixtures.ARRANGEMENTS else ".graph"
    return str(Path(fixtures.fixtures_directory()) / (name + suffix))


@pytest.fixture()
def prism_with_assignment(tmp_path):
    sg = fixtures.load_graph("prism3")
    a = next(iter(enumerate_faas(sg)))
    path = tmp_path / "prism3_faa.graph"
    path.write_text(serialize_graph(document_from_graph(sg, a)))
    return str(path)


def run(args):
    return cli.main(args)


def test_sltr_emits_svg_and_report(prism_with_assignment, tmp_path, capsys):
    svg = tmp_path / "out.svg"
    code = run(["sltr", prism_with_assignment, "--svg", str(svg)])
    out = capsys.readouterr().out
    assert code == 0
    assert "verified true" in out
    assert f"svg {svg}" in out
    assert svg.exists() and svg.read_text().startswith("<?xml")


def test_sltr_negative_without_valid_assignment(tmp_path, capsys):
    code = run(["sltr", fixture_path("prism3")])  # empty assignment fails cf
    out = capsys.readouterr().out
    assert code == 1
    assert "violation" in out


def test_search_cube_no_valid_faa(capsys):
    code = run(["search", fixture_path("cube")])
    out = capsys.readouterr().out
    assert code == 1
    assert "result no-valid-faa" in out


def test_search_twisted_quad_reports_good_and_bad(capsys):
    code = run(["search", fixture_path("twisted_quad")])
    out = capsys.readouterr().out
    assert code == 0
    assert "good-count 2" in out
    assert out.count(" bad ") == 2


def test_check_passes_on_good_assignment(prism_with_assignment, capsys):
    code = run(["check", prism_with_assignment, "--mode", "full"])
    out = capsys.readouterr().out
    assert code == 0
    assert "internally-3-connected true" in out
    assert "outline-convexity pass" in out


def test_check_reports_witness_on_bad_assignment(tmp_path, capsys):
    from trirep.faa import check_outline_convexity

    sg = fixtures.load_graph("twisted_quad")
    bad = next(
        a
        for a in enumerate_faas(sg)
        if not check_outline_convexity(a, mode="simple-cycles").ok
    )
    path = tmp_path / "bad.graph"
    path.write_text(serialize_graph(document_from_graph(sg, bad)))
    code = run(["check", str(path)])
    out = capsys.readouterr().out
    assert code == 1
    assert "witness-edge" in out


def test_segments_output(prism_with_assignment, capsys):
    code = run(["segments", prism_with_assignment])
    out = capsys.readouterr().out
    assert code == 0
    assert sum(1 for line in out.splitlines() if line.startswith("segment ")) == 6


def test_schnyder_subcommand(capsys):
    code = run(["schnyder", fixture_path("cube")])
    out = capsys.readouterr().out
    assert code == 0
    assert "ok true" in out
    assert sum(1 for line in out.splitlines() if line.startswith("arc ")) >= 12


def test_primal_dual_subcommand(tmp_path, capsys):
    svg = tmp_path / "pd.svg"
    fig = tmp_path / "pd.png"
    code = run([
        "primal-dual", fixture_path("k4"), "--svg", str(svg), "--figure", str(fig)
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("triangle ") == 7
    assert svg.exists() and fig.exists()


def test_stretch_subcommands(capsys):
    code = run(["stretch", fixture_path("chain")])
    out = capsys.readouterr().out
    assert code == 0
    assert "stretchable true" in out

    code = run(["stretch", fixture_path("pinwheel")])
    out = capsys.readouterr().out
    assert code == 1
    assert "stretchable false" in out
    assert "witness-subset" in out


def test_oracle_subcommand(capsys):
    code = run(["oracle"])
    out = capsys.readouterr().out
    assert code == 0
    assert "total-disagreements 0" in out


def test_error_exit_code(tmp_path, capsys):
    missing = str(tmp_path / "nope.graph")
    assert run(["check", missing]) == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("format graph 99\n")
    assert run(["check", str(bad)]) == 2


def test_sltr_with_separate_faa_file(tmp_path, capsys):
    from trirep.formats import serialize_faa

    sg = fixtures.load_graph("prism3")
    a = next(iter(enumerate_faas(sg)))
    faa_file = tmp_path / "prism3.faa"
    faa_file.write_text(serialize_faa(a))
    assert faa_file.read_text().startswith("format faa 1\n")
    code = run(["sltr", fixture_path("prism3"), "--faa", str(faa_file)])
    out = capsys.readouterr().out
    assert code == 0
    assert "verified true" in out
