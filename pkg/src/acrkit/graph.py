"""Reaction graph, linkage classes, terminal strong components and deficiency."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .network import Complex, Network, render_complex, stoichiometric_dimension


@dataclass(frozen=True)
class ReactionGraph:
    vertices: tuple[Complex, ...]
    edges: tuple[tuple[int, int], ...]  # edge k belongs to reaction k

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        for k, (a, b) in enumerate(self.edges):
            g.add_edge(a, b, reaction=k)
        return g


@dataclass(frozen=True)
class LinkageReport:
    p: int
    l: int  # noqa: E741 - number of linkage classes
    dim: int
    linkage_classes: tuple[tuple[Complex, ...], ...]
    strong_components: tuple[tuple[Complex, ...], ...]
    terminal_sccs: tuple[tuple[Complex, ...], ...]
    nonterminal_complexes: tuple[Complex, ...]

    @property
    def delta(self) -> int:
        return self.p - self.l - self.dim

    def as_dict(self, species) -> dict:
        def names(group):
            return [render_complex(species, c) for c in group]
        return {
            "complexes": self.p,
            "linkage_classes": [names(g) for g in self.linkage_classes],
            "terminal_strong_linkage_classes": [names(g) for g in self.terminal_sccs],
            "nonterminal_complexes": names(self.nonterminal_complexes),
            "dimension": self.dim,
            "deficiency": self.delta,
        }


def build_reaction_graph(net: Network) -> ReactionGraph:
    vertices = net.complexes()
    index = {c: i for i, c in enumerate(vertices)}
    edges = tuple((index[r.reactant], index[r.product]) for r in net.reactions)
    return ReactionGraph(tuple(vertices), edges)


def _ordered(groups, vertices) -> tuple:
    groups = [sorted(g) for g in groups]
    groups.sort(key=lambda g: g[0])
    return tuple(tuple(vertices[i] for i in g) for g in groups)


def linkage_report(net: Network) -> LinkageReport:
    graph = build_reaction_graph(net)
    g = nx.DiGraph()
    g.add_nodes_from(range(len(graph.vertices)))
    g.add_edges_from(graph.edges)
    linkage = list(nx.weakly_connected_components(g))
    sccs = list(nx.strongly_connected_components(g))
    owner = {v: k for k, comp in enumerate(sccs) for v in comp}
    terminal = [
        comp for k, comp in enumerate(sccs)
        if all(owner[b] == k for v in comp for b in g.successors(v))
    ]
    term_vertices = set().union(*terminal) if terminal else set()
    nonterminal = tuple(graph.vertices[i] for i in range(len(graph.vertices)) if i not in term_vertices)
    return LinkageReport(
        p=len(graph.vertices),
        l=len(linkage),
        dim=stoichiometric_dimension(net),
        linkage_classes=_ordered(linkage, graph.vertices),
        strong_components=_ordered(sccs, graph.vertices),
        terminal_sccs=_ordered(terminal, graph.vertices),
        nonterminal_complexes=nonterminal,
    )


def deficiency(net: Network) -> int:
    return linkage_report(net).delta


def reaction_graph_dot(net: Network) -> str:
    graph = build_reaction_graph(net)
    lines = ["digraph reactions {", "  rankdir=LR;"]
    for i, c in enumerate(graph.vertices):
        lines.append(f'  c{i} [label="{render_complex(net.species, c)}"];')
    for (a, b), lab in zip(graph.edges, net.rate_labels()):
        lines.append(f'  c{a} -> c{b} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
