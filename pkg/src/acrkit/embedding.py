"""Embedded networks, single-species projections and arrow diagrams."""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass

from .errors import NoReactionsError, NotOneSpeciesError
from .network import Network, Reaction, is_one_species


class Arrow(enum.Enum):
    RIGHT = "R"
    LEFT = "L"
    BOTH = "B"

    @property
    def ascii(self) -> str:
        return {"R": "->", "L": "<-", "B": "<->."}[self.value]

    @property
    def unicode(self) -> str:
        return {"R": "→", "L": "←", "B": "⇆̇"}[self.value]


@dataclass(frozen=True)
class ArrowDiagram:
    reactant_coeffs: tuple
    arrows: tuple[Arrow, ...]

    def __len__(self):
        return len(self.arrows)

    @property
    def tags(self) -> str:
        return "".join(a.value for a in self.arrows)

    def ascii(self) -> str:
        return "(" + ", ".join(a.ascii for a in self.arrows) + ")"

    def unicode(self) -> str:
        return "(" + ", ".join(a.unicode for a in self.arrows) + ")"

    def to_json(self) -> list[str]:
        return [a.value for a in self.arrows]

    @classmethod
    def from_tags(cls, tags: str, coeffs=None) -> "ArrowDiagram":
        arrows = tuple(Arrow(t) for t in tags)
        return cls(tuple(coeffs) if coeffs is not None else tuple(range(len(arrows))), arrows)


@dataclass(frozen=True)
class EmbeddedNetwork:
    base: Network
    kept_species: frozenset[int]
    dropped_reactions: frozenset[int]
    result: Network
    projection_multiplicity: dict  # result reaction key -> number of base reactions mapped onto it
    sources: dict  # result reaction key -> base reaction indices

    @property
    def multiset(self) -> list[tuple[int, Reaction]]:
        """Base reactions that survive restriction, as (base index, restricted reaction) pairs."""
        pos = {r.key(): r for r in self.result.reactions}
        return [(k, pos[key]) for key, ks in self.sources.items() for k in ks]


def embed(net: Network, keep, drop_reactions=()) -> EmbeddedNetwork:
    """Restrict ``net`` to the species in ``keep`` after deleting ``drop_reactions``.

    Removed species lose their coefficients, reactions that become trivial are
    discarded and reactions that coincide are merged; the merge counts are
    kept because mass-action sums over the original reactions.
    """
    keep = frozenset(keep)
    if not keep:
        raise ValueError("at least one species must be kept")
    drop = frozenset(drop_reactions)
    cols = sorted(keep)
    merged: dict = {}
    for k, r in enumerate(net.reactions):
        if k in drop:
            continue
        y = tuple(r.reactant[i] for i in cols)
        yp = tuple(r.product[i] for i in cols)
        if y == yp:
            continue
        merged.setdefault((y, yp), []).append(k)
    present = [
        j for j in range(len(cols))
        if any(key[0][j] != 0 or key[1][j] != 0 for key in merged)
    ]
    species = tuple(net.species[cols[j]] for j in present)
    rxns, sources, mult = [], {}, {}
    for (y, yp), ks in merged.items():
        rr = Reaction(tuple(y[j] for j in present), tuple(yp[j] for j in present))
        rxns.append(rr)
        sources[rr.key()] = tuple(ks)
        mult[rr.key()] = len(ks)
    result = Network(species, tuple(rxns))
    return EmbeddedNetwork(net, frozenset(cols[j] for j in present), drop, result, mult, sources)


def project(net: Network, i: int) -> EmbeddedNetwork:
    """Embedded network on the single species ``i``."""
    return embed(net, {i})


def _one_species_axis(net: Network) -> int:
    if net.n_reactions == 0:
        raise NoReactionsError("arrow diagrams need at least one reaction")
    axis = is_one_species(net)
    if axis is None:
        raise NotOneSpeciesError(
            "more than one species changes coefficient across the complexes; expected exactly one")
    return axis


def arrow_diagram(net: Network) -> ArrowDiagram:
    axis = _one_species_axis(net)
    ups: dict = {}
    for r in net.reactions:
        a = r.reactant[axis]
        ups.setdefault(a, set()).add(r.product[axis] > a)
    coeffs = tuple(sorted(ups))
    arrows = []
    for a in coeffs:
        dirs = ups[a]
        if dirs == {True}:
            arrows.append(Arrow.RIGHT)
        elif dirs == {False}:
            arrows.append(Arrow.LEFT)
        else:
            arrows.append(Arrow.BOTH)
    return ArrowDiagram(coeffs, tuple(arrows))


def two_alternating_witness(net: Network) -> tuple[int, int, int] | None:
    """Indices of a 3-reaction subnetwork with diagram (R, L, R) or (L, R, L), or ``None``.

    Reactions are scanned in order of reactant coefficient; the first triple
    found in that order is returned.
    """
    axis = _one_species_axis(net)
    order = sorted(range(net.n_reactions), key=lambda k: (net.reactions[k].reactant[axis], k))
    info = [(net.reactions[k].reactant[axis], net.reactions[k].product[axis] > net.reactions[k].reactant[axis])
            for k in order]
    n = len(order)
    for a in range(n):
        ya, ua = info[a]
        for b in range(a + 1, n):
            yb, ub = info[b]
            if yb == ya or ub == ua:
                continue
            for c in range(b + 1, n):
                yc, uc = info[c]
                if yc != yb and uc == ua:
                    return (order[a], order[b], order[c])
    return None


def has_two_alternating_subnetwork(net: Network) -> bool:
    return two_alternating_witness(net) is not None


def sign_pattern_alternates(signs) -> bool:
    """True when the sequence of signs (+1/-1, with 0 meaning both) contains +,-,+ or -,+,- as a subsequence."""
    seq = []
    for s in signs:
        seq.append({1} if s > 0 else {-1} if s < 0 else {1, -1})
    for first in (1, -1):
        want = [first, -first, first]
        j = 0
        for opts in seq:
            if j < 3 and want[j] in opts:
                j += 1
        if j == 3:
            return True
    return False


class ArrowPattern(enum.Enum):
    ALL_BOTH = "AllBoth"
    STABLE_FORM_1 = "StableForm1"
    STABLE_FORM_2 = "StableForm2"
    STABLE_FORM_3 = "StableForm3"
    STABLE_FORM_4 = "StableForm4"
    UNSTABLE_FORM_I = "UnstableForm(i)"
    UNSTABLE_FORM_II = "UnstableForm(ii)"
    UNSTABLE_FORM_III = "UnstableForm(iii)"
    UNSTABLE_FORM_IV = "UnstableForm(iv)"
    UNSTABLE_FORM_V = "UnstableForm(v)"
    UNSTABLE_FORM_VI = "UnstableForm(vi)"
    OTHER = "Other"

    @property
    def is_stable_form(self) -> bool:
        return self.name.startswith("STABLE")

    @property
    def has_acr(self) -> bool:
        return self not in (ArrowPattern.ALL_BOTH, ArrowPattern.OTHER)

    @property
    def admits_positive_steady_state(self) -> bool:
        return self not in (ArrowPattern.UNSTABLE_FORM_I, ArrowPattern.UNSTABLE_FORM_II)


_PATTERNS = [
    (ArrowPattern.ALL_BOTH, r"B+"),
    (ArrowPattern.STABLE_FORM_1, r"BL+"),
    (ArrowPattern.STABLE_FORM_2, r"R+B"),
    (ArrowPattern.STABLE_FORM_3, r"R+BL+"),
    (ArrowPattern.STABLE_FORM_4, r"R+L+"),
    (ArrowPattern.UNSTABLE_FORM_I, r"R+"),
    (ArrowPattern.UNSTABLE_FORM_II, r"L+"),
    (ArrowPattern.UNSTABLE_FORM_III, r"L+R+"),
    (ArrowPattern.UNSTABLE_FORM_IV, r"BR+"),
    (ArrowPattern.UNSTABLE_FORM_V, r"L+B"),
    (ArrowPattern.UNSTABLE_FORM_VI, r"L+BR+"),
]


def classify_arrow_pattern(d: ArrowDiagram) -> ArrowPattern:
    tags = d.tags
    for pattern, rx in _PATTERNS:
        if re.fullmatch(rx, tags):
            return pattern
    return ArrowPattern.OTHER


def brute_force_two_alternating(net: Network) -> bool:
    """Reference check over every 3-reaction subnetwork."""
    for trio in itertools.combinations(net.reactions, 3):
        sub = net.with_reactions(trio)
        if arrow_diagram(sub).tags in ("RLR", "LRL"):
            return True
    return False
