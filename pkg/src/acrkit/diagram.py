"""Text figures of a network: DOT graphs and arrows in species-coordinate space."""

from __future__ import annotations

from fractions import Fraction

from .errors import TooManySpeciesForCoordinatePlotError
from .graph import reaction_graph_dot
from .network import Network

FORMATS = ("dot", "svg", "tikz-coords")


def _num(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{float(v):.6g}"


def reaction_arrows(net: Network) -> list[tuple[tuple, tuple]]:
    """Reactant and product points of every reaction, in reaction order.

    One-species networks are drawn on the horizontal axis, so their points
    get a zero second coordinate.
    """
    if net.n_species > 3:
        raise TooManySpeciesForCoordinatePlotError(
            f"coordinate figures need at most 3 species, got {net.n_species}")
    pad = (0,) if net.n_species == 1 else ()
    return [(tuple(r.reactant) + pad, tuple(r.product) + pad) for r in net.reactions]


def tikz_coords(net: Network) -> str:
    lines = [f"% species: {' '.join(net.species)}"]
    for y, z in reaction_arrows(net):
        a = ",".join(_num(v) for v in y)
        b = ",".join(_num(v) for v in z)
        lines.append(f"\\draw[->] ({a}) -- ({b});")
    return "\n".join(lines) + "\n"


def _planar(p) -> tuple[Fraction, Fraction]:
    if len(p) == 2:
        return Fraction(p[0]), Fraction(p[1])
    # cabinet projection for the third axis
    x, y, z = (Fraction(v) for v in p)
    return x + z / 2, y + z / 2


def svg(net: Network, unit: int = 40, margin: int = 20) -> str:
    arrows = [(_planar(a), _planar(b)) for a, b in reaction_arrows(net)]
    pts = [p for ab in arrows for p in ab] or [(Fraction(0), Fraction(0))]
    xmax = max(max(p[0] for p in pts), 1)
    ymax = max(max(p[1] for p in pts), 1)
    w = int(xmax * unit) + 2 * margin
    h = int(ymax * unit) + 2 * margin

    def sx(v):
        return _num(margin + v * unit)

    def sy(v):
        return _num(h - margin - v * unit)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"6\" refX=\"8\" refY=\"3\" orient=\"auto\">"
        "<path d=\"M0,0 L8,3 L0,6 z\"/></marker></defs>",
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(xmax)}" y2="{sy(0)}" stroke="#bbb"/>',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(ymax)}" stroke="#bbb"/>',
    ]
    for (a, b), lab in zip(arrows, net.rate_labels()):
        out.append(
            f'<line x1="{sx(a[0])}" y1="{sy(a[1])}" x2="{sx(b[0])}" y2="{sy(b[1])}" '
            f'stroke="black" marker-end="url(#head)"><title>{lab}</title></line>')
        out.append(f'<circle cx="{sx(a[0])}" cy="{sy(a[1])}" r="3"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_diagram(net: Network, fmt: str) -> str:
    if fmt == "dot":
        return reaction_graph_dot(net)
    if fmt == "svg":
        return svg(net)
    if fmt == "tikz-coords":
        return tikz_coords(net)
    raise ValueError(f"unknown figure format {fmt!r}; expected one of {', '.join(FORMATS)}")
