import random
import subprocess
import sys

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from geodex import families
from geodex.cli import census as census_mod
from geodex.cli import formats
from geodex.cli.main import main, render_report
from geodex.cli.verify import run_suite
from geodex.graph import from_edges


# ---------------------------------------------------------------------------
# formats

def test_graph6_k3():
    assert formats.write_graph6(families.complete(3)) == "Bw"


def test_edge_list_c4():
    assert formats.write_edge_list(families.cycle(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


@st.composite
def graphs(draw, max_n=30):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_format_round_trips(g):
    assert formats.read_graph6(formats.write_graph6(g)) == g
    assert formats.read_edge_list(formats.write_edge_list(g)) == g


@settings(max_examples=30, deadline=None)
@given(graphs())
def test_graph6_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    theirs = nx.to_graph6_bytes(nxg, header=False).decode().strip()
    assert formats.write_graph6(g) == theirs
    back = nx.from_graph6_bytes(theirs.encode())
    assert formats.read_graph6(theirs) == g
    assert set(map(frozenset, back.edges())) == set(map(frozenset, g.edges()))


def test_graph6_large_n_prefix():
    g = families.cycle(70)
    assert formats.read_graph6(formats.write_graph6(g)) == g


def test_corpus_round_trip():
    for spec in ("cycle:9", "complete:27", "hamming:3,3", "ep3B:3", "schlafli",
                 "kmb:9,3", "kbb:4", "ep3B:5"):
        g = families.from_spec(spec)
        assert formats.read_graph6(formats.write_graph6(g)) == g
        assert formats.read_edge_list(formats.write_edge_list(g)) == g


def test_format_errors():
    with pytest.raises(ValueError):
        formats.read_edge_list("3 2\n0 1")
    with pytest.raises(ValueError):
        formats.read_edge_list("2 1\n0 0")
    with pytest.raises(ValueError):
        formats.read_edge_list("2 1\n0 5")
    with pytest.raises(ValueError):
        formats.read_graph6("B" + chr(190))


# ---------------------------------------------------------------------------
# commands

def test_build_graph6_line(capsys):
    assert main(["build", "ep3B:3", "--format", "graph6"]) == 0
    line = capsys.readouterr().out.strip()
    assert formats.read_graph6(line).n == 27


def test_build_edges_hamming(capsys):
    assert main(["build", "hamming:2,3"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "9 18"
    assert len(out.splitlines()) == 19


def test_build_schlafli_edge_count(capsys):
    assert main(["build", "schlafli"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "27 216"


def test_build_bad_spec_exit_2(capsys):
    assert main(["build", "nope:1"]) == 2


def test_analyze_ep3b(capsys):
    assert main(["analyze", "ep3B:3"]) == 0
    out = capsys.readouterr().out
    assert "aut_order: 1296" in out
    assert "normal_cayley: True" in out
    assert "two_arc_transitive: False" in out
    assert "distance_distribution: 1,8,16,2" in out


def test_analyze_ep3a_kv(capsys):
    assert main(["analyze", "ep3A:3", "--format", "kv"]) == 0
    out = capsys.readouterr().out
    assert "aut_order=216" in out


def test_analyze_kmb_not_primitive(capsys):
    assert main(["analyze", "kmb:3,3"]) == 0
    out = capsys.readouterr().out
    assert "primitive: False" in out
    assert "two_geodesic_transitive: True" in out


def test_analyze_file_round_trip(tmp_path, capsys):
    path = tmp_path / "g.g6"
    assert main(["build", "hamming:2,3", "--format", "graph6",
                 "--out", str(path)]) == 0
    assert main(["analyze", "--in", str(path)]) == 0
    out = capsys.readouterr().out
    assert "aut_order: 72" in out
    path2 = tmp_path / "g.edges"
    assert main(["build", "cycle:9", "--out", str(path2)]) == 0
    assert main(["analyze", "--in", str(path2)]) == 0
    assert "aut_order: 18" in capsys.readouterr().out


def test_analyze_disconnected_exit_2(tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("4 2\n0 1\n2 3\n")
    assert main(["analyze", "--in", str(path)]) == 2


def test_report_determinism():
    from geodex import analyze
    rep1 = analyze.transitivity_report(families.ep3_family_B(3))
    rep2 = analyze.transitivity_report(families.ep3_family_B(3))
    assert render_report(rep1) == render_report(rep2)


def test_console_script_entrypoint():
    proc = subprocess.run([sys.executable, "-m", "geodex.cli.main",
                           "build", "cycle:4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("4 4")


# ---------------------------------------------------------------------------
# census

def test_census_order9(census9):
    two, non = census9.family_tags()
    assert two == {"cycle:9", "complete:9"}
    assert non == {"hamming:2,3", "kmb:3,3"}


def test_census_raw_equals_reduced_small_orders(census4, census8, census9):
    for result, order in ((census4, 4), (census8, 8), (census9, 9)):
        raw = census_mod.run_census(order, reduce_by_aut=False, mu_filter=False)
        assert [(r.canonical_key, r.family) for r in result.records] == \
               [(r.canonical_key, r.family) for r in raw.records]


def test_census_order9_completeness_oracle(census9):
    # brute-force: every inverse-closed subset of both order-9 groups,
    # no reductions, full analysis, no class outside the expected list
    raw = census_mod.run_census(9, reduce_by_aut=False, mu_filter=False)
    assert raw.candidates == 30
    tags = {rec.family for rec in raw.records}
    assert tags == {"cycle:9", "complete:9", "hamming:2,3", "kmb:3,3"}


def test_census_determinism(census9):
    again = census_mod.run_census(9)
    assert census_mod.render(again) == census_mod.render(census9)


def test_census_parallel_jobs_match(census9):
    parallel = census_mod.run_census(9, jobs=2)
    assert census_mod.render(parallel) == census_mod.render(census9)


def test_census_records_carry_realizing_groups(census9):
    by_family = {rec.family: rec for rec in census9.records}
    assert by_family["hamming:2,3"].groups == ("Z3^2",)
    assert set(by_family["complete:9"].groups) == {"Z9", "Z3^2"}


def test_census_cli_and_unsupported_order(capsys, tmp_path):
    assert main(["census", "--order", "9"]) == 0
    out = capsys.readouterr().out
    assert "classes=4" in out
    with pytest.raises(SystemExit):
        main(["census", "--order", "10"])


# ---------------------------------------------------------------------------
# verify suites (smoke here; full runs live in the acceptance module)

def test_verify_cli_green(capsys):
    assert main(["verify", "thm4.3", "--p", "3"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "claims passed" in out


def test_verify_thm43_m_option():
    outs = run_suite("thm4.3", 5, 2)
    lengths_claim = [o for o in outs if o.claim == "index-2 orbit lengths"]
    assert len(lengths_claim) == 1 and lengths_claim[0].passed
    assert lengths_claim[0].computed == repr(sorted([1, 24, 2, 2, 48, 48]))


def test_verify_rejects_bad_prime():
    with pytest.raises(ValueError):
        run_suite("thm4.3", 11)
    with pytest.raises(ValueError):
        run_suite("ex3.4", 7)
    with pytest.raises(ValueError):
        run_suite("nope", 3)


def test_verify_outcome_lines():
    outs = run_suite("ex3.4", 3)
    for o in outs:
        assert o.passed
        assert o.line().startswith("PASS")
        assert o.suite == "ex3.4"
