import io
import json

import pytest

from hgtw.cli import main
from hgtw.core import build_hypergraph
from hgtw.decomp import SupertreeDecomposition
from hgtw.derive import make_graph, two_section
from hgtw.errors import ParseError
from hgtw.fileio import (
    read_decomposition,
    read_graph,
    read_hypergraph,
    sniff_format,
    write_decomposition,
    write_graph,
    write_hypergraph,
)
from hgtw.solve import exact_treewidth, supertree_width


def roundtrip(write, read, obj, **kw):
    buf = io.StringIO()
    write(obj, buf, **kw)
    buf.seek(0)
    return read(buf)


def test_graph_roundtrip():
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert roundtrip(write_graph, read_graph, g).edges == g.edges


def test_hypergraph_roundtrip():
    h = build_hypergraph(3, [[0, 1, 2]])
    back = roundtrip(write_hypergraph, read_hypergraph, h)
    assert back.edges == h.edges


def test_decomposition_roundtrips():
    h = build_hypergraph(4, [[0, 1, 2], [2, 3], [0, 3]])
    td = exact_treewidth(two_section(h)).certificate
    back = roundtrip(write_decomposition, read_decomposition, td, n=h.n)
    assert {frozenset(b) for b in back.bags.values()} == \
        {frozenset(b) for b in td.bags.values()}

    std = supertree_width(h).certificate
    back = roundtrip(write_decomposition, read_decomposition, std, n=h.n)
    assert isinstance(back, SupertreeDecomposition)
    assert back.width() == std.width()


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        read_hypergraph(io.StringIO("p htw 3 1\ne 1 2 9\n"))
    assert err.value.line == 2
    with pytest.raises(ParseError):
        read_graph(io.StringIO("1 2\n"))
    with pytest.raises(ParseError):
        read_hypergraph(io.StringIO("c only a comment\n"))


def test_comments_ignored():
    h = read_hypergraph(io.StringIO("c hi\np htw 3 1\nc mid\ne 1 2 3\n"))
    assert h.m == 1


def test_sniff_format():
    assert sniff_format(["p tw 3 2"]) == "graph"
    assert sniff_format(["c x", "p htw 3 1"]) == "hypergraph"
    assert sniff_format(["s td 1 2 3"]) == "decomposition"
    assert sniff_format(["what"]) == "unknown"


def test_cli_stats_and_widths(tmp_path, capsys):
    hg = tmp_path / "t.hg"
    hg.write_text("p htw 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert main(["stats", str(hg)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["n"] == 3 and out["linear"]

    gr = tmp_path / "t.gr"
    gr.write_text("p tw 1 0\n")
    assert main(["tw", str(gr)]) == 0
    assert json.loads(capsys.readouterr().out)["tw"] == 0

    assert main(["stw", str(hg)]) == 0
    assert json.loads(capsys.readouterr().out)["stw"] == 3


def test_cli_bounds_exact(tmp_path, capsys):
    hg = tmp_path / "t.hg"
    hg.write_text("p htw 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert main(["bounds", str(hg), "--exact"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["exact_tw"] == 2 and out["exact_stw"] == 3


def test_cli_gen_and_convert(tmp_path, capsys):
    assert main(["gen", "cycle-power-dual", "--n", "8", "--k", "2"]) == 0
    hg_text = capsys.readouterr().out
    hg = tmp_path / "c.hg"
    hg.write_text(hg_text)
    h = read_hypergraph(io.StringIO(hg_text))

    td_path = tmp_path / "c.td"
    with td_path.open("w") as fh:
        write_decomposition(exact_treewidth(two_section(h)).certificate,
                            fh, n=h.n)
    assert main(["convert", "td2std", str(hg), str(td_path)]) == 0
    std_text = capsys.readouterr().out
    std_path = tmp_path / "c.std"
    std_path.write_text(std_text)
    assert main(["convert", "std2td", str(hg), str(std_path)]) == 0
    td2 = read_decomposition(io.StringIO(capsys.readouterr().out))
    from hgtw.decomp import validate_td
    assert validate_td(two_section(h), td2) == []


def test_cli_error_paths(tmp_path, capsys):
    bad = tmp_path / "bad.hg"
    bad.write_text("p htw 2 1\ne 1 7\n")
    assert main(["stats", str(bad)]) == 1
    assert main(["nonsense"]) == 2
    capsys.readouterr()
