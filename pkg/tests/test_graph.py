import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from acrkit import (
    Relabel,
    Translate,
    deficiency,
    generalized_sf,
    linkage_report,
    network,
)
from acrkit.errors import OperationError
from acrkit.graph import build_reaction_graph, reaction_graph_dot

from strategies import networks


def _closure(n, edges):
    # Warshall on a boolean matrix; independent of the networkx route
    reach = [[i == j for j in range(n)] for i in range(n)]
    for a, b in edges:
        reach[a][b] = True
    for k, i, j in itertools.product(range(n), repeat=3):
        if reach[i][k] and reach[k][j]:
            reach[i][j] = True
    return reach


def _brute_force(net):
    g = build_reaction_graph(net)
    n = len(g.vertices)
    reach = _closure(n, g.edges)
    undirected = _closure(n, list(g.edges) + [(b, a) for a, b in g.edges])
    linkage = {frozenset(j for j in range(n) if undirected[i][j]) for i in range(n)}
    scc = {frozenset(j for j in range(n) if reach[i][j] and reach[j][i]) for i in range(n)}
    terminal = {c for c in scc if all(j in c for i in c for j in range(n) if reach[i][j])}
    nonterminal = {g.vertices[i] for i in range(n) if not any(i in c for c in terminal)}
    as_cx = lambda groups: {frozenset(g.vertices[i] for i in c) for c in groups}  # noqa: E731
    return as_cx(linkage), as_cx(scc), as_cx(terminal), nonterminal


def test_generalized_sf_report():
    rep = linkage_report(generalized_sf(3))
    assert (rep.p, rep.l, rep.dim, rep.delta) == (4, 2, 1, 1)
    assert len(rep.nonterminal_complexes) == 2


def test_cycle_is_terminal():
    rep = linkage_report(network("0 -> A; A -> B; B -> 0"))
    assert rep.terminal_sccs and not rep.nonterminal_complexes
    assert deficiency(network("0 -> A; A -> B; B -> 0")) == 0


def test_dot_output_lists_every_reaction():
    dot = reaction_graph_dot(network("B -> A; A + B -> 2B"))
    assert dot.startswith("digraph reactions {")
    assert dot.count("->") == 2
    assert 'label="A + B"' in dot or 'label="B + A"' in dot


@settings(max_examples=150, deadline=None)
@given(networks(max_reactions=5))
def test_networkx_route_matches_closure_route(net):
    rep = linkage_report(net)
    linkage, scc, terminal, nonterminal = _brute_force(net)
    assert {frozenset(c) for c in rep.linkage_classes} == linkage
    assert {frozenset(c) for c in rep.strong_components} == scc
    assert {frozenset(c) for c in rep.terminal_sccs} == terminal
    assert set(rep.nonterminal_complexes) == nonterminal


@settings(max_examples=150, deadline=None)
@given(networks(max_reactions=5))
def test_counts_and_nonnegative_deficiency(net):
    rep = linkage_report(net)
    assert rep.p >= rep.l >= 1
    assert rep.delta >= 0  # strict networks only


def _numbers(rep):
    return (rep.p, rep.l, rep.dim, rep.delta, len(rep.strong_components), len(rep.terminal_sccs),
            len(rep.nonterminal_complexes))


@settings(max_examples=150, deadline=None)
@given(networks(), st.randoms(use_true_random=False))
def test_relabel_and_translate_keep_report(net, rng):
    perm = list(range(net.n_species))
    rng.shuffle(perm)
    assert _numbers(linkage_report(Relabel(tuple(perm)).apply(net))) == _numbers(linkage_report(net))
    try:
        shifted = Translate(tuple(rng.randint(-1, 2) for _ in range(net.n_species))).apply(net)
    except OperationError:
        return
    assert _numbers(linkage_report(shifted)) == _numbers(linkage_report(net))
