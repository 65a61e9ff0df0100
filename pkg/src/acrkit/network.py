"""Reaction networks, their stoichiometry and the text format used to store them."""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InvalidNetworkError, NetworkSyntaxError
from .linalg import RationalMatrix, left_kernel_rref, rank, to_rational

LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TERM_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)\s*)?([A-Za-z][A-Za-z0-9_]*)\s*\Z")
_PRAGMA_RE = re.compile(r"#\s*species\s*:(.*)\Z")

Complex = tuple  # dense coefficient vector, one entry per species


@dataclass(frozen=True)
class Species:
    id: int
    label: str


@dataclass(frozen=True)
class Reaction:
    """A reaction ``reactant -> product`` between dense coefficient vectors.

    The optional ``label`` names the rate constant and does not take part in
    equality, so two reactions with the same complexes are the same reaction.
    """

    reactant: Complex
    product: Complex
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "reactant", tuple(to_rational(v) for v in self.reactant))
        object.__setattr__(self, "product", tuple(to_rational(v) for v in self.product))

    @property
    def vector(self) -> tuple:
        return tuple(to_rational(b - a) for a, b in zip(self.reactant, self.product))

    def key(self) -> tuple:
        return (self.reactant, self.product)


@dataclass(frozen=True, eq=False)
class Network:
    """A finite set of reactions over an ordered list of species.

    Species may be declared without appearing in any complex. Reactions keep
    their insertion order (it fixes the column order of the stoichiometric
    matrix and the default rate labels ``k1, k2, ...``), but equality treats
    the reactions as a set.
    """

    species: tuple[str, ...]
    reactions: tuple[Reaction, ...]

    def __post_init__(self):
        object.__setattr__(self, "species", tuple(self.species))
        object.__setattr__(self, "reactions", tuple(self.reactions))
        if len(set(self.species)) != len(self.species):
            raise InvalidNetworkError("species labels must be unique")
        for lab in self.species:
            if not isinstance(lab, str) or not LABEL_RE.match(lab):
                raise InvalidNetworkError(f"invalid species label {lab!r}")
        s = len(self.species)
        seen = set()
        for k, rxn in enumerate(self.reactions):
            if len(rxn.reactant) != s or len(rxn.product) != s:
                raise InvalidNetworkError(f"reaction {k} has the wrong number of coefficients")
            if any(v < 0 for v in rxn.reactant + rxn.product):
                raise InvalidNetworkError(f"reaction {k} has a negative coefficient")
            if rxn.reactant == rxn.product:
                raise InvalidNetworkError(f"reaction {k} is trivial")
            if rxn.key() in seen:
                raise InvalidNetworkError(f"reaction {k} is a duplicate")
            seen.add(rxn.key())

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return self.species == other.species and self.reaction_set() == other.reaction_set()

    def __hash__(self):
        return hash((self.species, self.reaction_set()))

    def __repr__(self):
        body = "; ".join(render_reaction(self, r) for r in self.reactions)
        return f"Network({{{body}}})"

    @classmethod
    def from_pairs(cls, species: Sequence[str], pairs: Iterable) -> "Network":
        return cls(tuple(species), tuple(Reaction(tuple(a), tuple(b)) for a, b in pairs))

    @property
    def n_species(self) -> int:
        return len(self.species)

    @property
    def n_reactions(self) -> int:
        return len(self.reactions)

    @property
    def is_strict(self) -> bool:
        """True when every coefficient is a nonnegative integer."""
        return all(isinstance(v, int) for r in self.reactions for v in r.reactant + r.product)

    def reaction_set(self) -> frozenset:
        return frozenset(r.key() for r in self.reactions)

    def species_objects(self) -> list[Species]:
        return [Species(i, lab) for i, lab in enumerate(self.species)]

    def index(self, label: str) -> int:
        try:
            return self.species.index(label)
        except ValueError:
            raise KeyError(f"unknown species {label!r}") from None

    def rate_labels(self) -> list[str]:
        return [r.label or f"k{k + 1}" for k, r in enumerate(self.reactions)]

    def complexes(self) -> list[Complex]:
        """Distinct complexes in order of first appearance (reactant before product)."""
        out: dict = {}
        for r in self.reactions:
            out.setdefault(r.reactant, None)
            out.setdefault(r.product, None)
        return list(out)

    def reactant_complexes(self) -> list[Complex]:
        return list(dict.fromkeys(r.reactant for r in self.reactions))

    def with_reactions(self, reactions: Iterable[Reaction]) -> "Network":
        return Network(self.species, tuple(reactions))


def reaction_vectors(net: Network) -> list[tuple]:
    return [r.vector for r in net.reactions]


def stoichiometric_matrix(net: Network) -> RationalMatrix:
    """Species-by-reaction matrix whose columns are the reaction vectors."""
    s, r = net.n_species, net.n_reactions
    vecs = reaction_vectors(net)
    return RationalMatrix(s, r, tuple(tuple(vecs[k][i] for k in range(r)) for i in range(s)))


def stoichiometric_dimension(net: Network) -> int:
    vecs = reaction_vectors(net)
    return rank(vecs, net.n_species) if vecs else 0


@dataclass(frozen=True)
class ConservationBasis:
    W: RationalMatrix

    @property
    def d(self) -> int:
        return self.W.nrows


def conservation_basis(net: Network) -> ConservationBasis:
    """Row-reduced basis of the conservation laws (left kernel of the stoichiometric matrix)."""
    return ConservationBasis(left_kernel_rref(stoichiometric_matrix(net)))


def is_one_dimensional(net: Network) -> bool:
    return stoichiometric_dimension(net) == 1


def participating_species(net: Network) -> list[int]:
    """Species with a nonzero coefficient in at least one complex."""
    return [
        i for i in range(net.n_species)
        if any(r.reactant[i] != 0 or r.product[i] != 0 for r in net.reactions)
    ]


def is_one_species(net: Network) -> int | None:
    """Index of the only species whose coefficient varies across complexes, or ``None``.

    Every other species then has one fixed coefficient in all complexes, so
    the network is a translate of a one-species network and its vector field
    is that of the one-species network times a constant monomial. ``{B <=> A + B}``
    counts as one-species in ``A``.
    """
    cxs = [c for r in net.reactions for c in (r.reactant, r.product)]
    varying = [i for i in range(net.n_species) if len({c[i] for c in cxs}) > 1]
    return varying[0] if len(varying) == 1 else None


def catalyst_only_species(net: Network) -> frozenset[int]:
    """Species whose coefficient never changes across any reaction."""
    return frozenset(
        i for i in range(net.n_species)
        if all(r.reactant[i] == r.product[i] for r in net.reactions)
    )


def prune_inert(net: Network) -> Network:
    """Drop species that appear in no complex."""
    keep = participating_species(net)
    return Network(
        tuple(net.species[i] for i in keep),
        tuple(
            Reaction(tuple(r.reactant[i] for i in keep), tuple(r.product[i] for i in keep), r.label)
            for r in net.reactions
        ),
    )


def union(a: Network, b: Network) -> Network:
    """Merge two networks by species label.

    ACR is not preserved by this operation: ``{0 <=> A}`` and ``{2A <=> 3A}``
    both have ACR while their union does not.
    """
    warnings.warn("the union of two ACR networks need not have ACR", stacklevel=2)
    species = list(a.species) + [x for x in b.species if x not in a.species]
    idx = {lab: i for i, lab in enumerate(species)}

    def lift(net, vec):
        out = [0] * len(species)
        for lab, v in zip(net.species, vec):
            out[idx[lab]] = v
        return tuple(out)

    rxns, seen = [], set()
    for net in (a, b):
        for r in net.reactions:
            new = Reaction(lift(net, r.reactant), lift(net, r.product), r.label)
            if new.key() not in seen:
                seen.add(new.key())
                rxns.append(new)
    return Network(tuple(species), tuple(rxns))


# ---------------------------------------------------------------- text format

def _format_coeff(v) -> str:
    v = to_rational(v)
    return str(v)


def render_complex(species: Sequence[str], c: Complex) -> str:
    terms = []
    for lab, v in zip(species, c):
        if v == 0:
            continue
        terms.append(lab if v == 1 else f"{_format_coeff(v)}{lab}")
    return " + ".join(terms) if terms else "0"


def render_reaction(net: Network, r: Reaction) -> str:
    return f"{render_complex(net.species, r.reactant)} -> {render_complex(net.species, r.product)}"


def render_network(net: Network) -> str:
    """Canonical text: one reaction per line, species order pinned by a pragma when needed."""
    lines = []
    appearance = []
    for r in net.reactions:
        for c in (r.reactant, r.product):
            for i, v in enumerate(c):
                if v != 0 and net.species[i] not in appearance:
                    appearance.append(net.species[i])
    if appearance != list(net.species):
        lines.append("# species: " + " ".join(net.species))
    lines.extend(render_reaction(net, r) for r in net.reactions)
    return "\n".join(lines) + "\n"


def _parse_complex(text: str, line: int, col0: int, strict: bool, order: list[str]):
    stripped = text.strip()
    if not stripped:
        raise NetworkSyntaxError("missing complex", line, col0 + 1)
    if stripped == "0":
        return {}
    coeffs: dict[str, Fraction] = {}
    pos = 0
    for part in text.split("+"):
        col = col0 + pos + (len(part) - len(part.lstrip())) + 1
        pos += len(part) + 1
        if not part.strip():
            raise NetworkSyntaxError("empty term", line, col)
        if part.strip().startswith("-"):
            raise NetworkSyntaxError("negative coefficient", line, col)
        m = _TERM_RE.match(part)
        if not m:
            raise NetworkSyntaxError(f"cannot parse term {part.strip()!r}", line, col)
        raw, lab = m.group(1), m.group(2)
        if raw is None:
            v = Fraction(1)
        else:
            if "/" in raw and strict:
                raise NetworkSyntaxError(
                    f"fractional coefficient {raw!r} requires generalized mode", line, col)
            v = Fraction(raw)
            if v == 0:
                raise NetworkSyntaxError("zero coefficient", line, col)
        if lab not in order:
            order.append(lab)
        coeffs[lab] = coeffs.get(lab, Fraction(0)) + v
    return coeffs


def parse_network(text: str, strict: bool = True) -> Network:
    """Parse the line-oriented network format.

    Each non-blank line holds one reaction ``complex -> complex`` or a
    reversible pair ``complex <=> complex``. ``0`` is the zero complex and
    ``#`` starts a comment. A comment of the form ``# species: A B C``
    declares the species order, including species that never appear. With
    ``strict=False`` coefficients may be fractions such as ``1/2``.
    """
    order: list[str] = []
    declared: list[str] | None = None
    raw_rxns = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        hash_at = line.find("#")
        if hash_at >= 0:
            m = _PRAGMA_RE.match(line[hash_at:].strip())
            if m:
                labs = m.group(1).split()
                for lab in labs:
                    if not LABEL_RE.match(lab):
                        raise NetworkSyntaxError(f"invalid species label {lab!r}", lineno, hash_at + 1)
                if declared is not None:
                    raise NetworkSyntaxError("species declared twice", lineno, hash_at + 1)
                declared = labs
            line = line[:hash_at]
        if not line.strip():
            continue
        if "<=>" in line:
            arrow, rev = "<=>", True
        elif "->" in line:
            arrow, rev = "->", False
        else:
            col = len(line) - len(line.lstrip()) + 1
            raise NetworkSyntaxError("expected '->' or '<=>'", lineno, col)
        at = line.index(arrow)
        lhs, rhs = line[:at], line[at + len(arrow):]
        if "->" in rhs or "<=>" in rhs:
            raise NetworkSyntaxError("more than one arrow", lineno, at + len(arrow) + rhs.find("-") + 1)
        left = _parse_complex(lhs, lineno, 0, strict, order)
        right = _parse_complex(rhs, lineno, at + len(arrow), strict, order)
        raw_rxns.append((lineno, left, right))
        if rev:
            raw_rxns.append((lineno, right, left))
    if not raw_rxns:
        raise NetworkSyntaxError("empty network", 1, 1)
    if declared is not None:
        missing = [lab for lab in order if lab not in declared]
        if missing:
            raise NetworkSyntaxError(f"species {missing[0]!r} not declared", 1, 1)
        if len(set(declared)) != len(declared):
            raise NetworkSyntaxError("species declared twice", 1, 1)
        species = declared
    else:
        species = order
    rxns, seen = [], set()
    for lineno, left, right in raw_rxns:
        y = tuple(to_rational(left.get(lab, 0)) for lab in species)
        yp = tuple(to_rational(right.get(lab, 0)) for lab in species)
        if y == yp:
            raise NetworkSyntaxError("trivial reaction", lineno, 1)
        if (y, yp) in seen:
            raise NetworkSyntaxError("duplicate reaction", lineno, 1)
        seen.add((y, yp))
        rxns.append(Reaction(y, yp))
    return Network(tuple(species), tuple(rxns))


def network(text: str, strict: bool = True) -> Network:
    """Parse a network given inline, with ``;`` or ``,`` allowed as reaction separators."""
    return parse_network(re.sub(r"[;,]", "\n", text), strict=strict)


# ---------------------------------------------------------------- enumeration

def all_complexes(n_species: int, max_coeff: int) -> list[Complex]:
    return [tuple(c) for c in itertools.product(range(max_coeff + 1), repeat=n_species)]


def enumerate_networks(n_species: int, n_reactions: int, max_coeff: int,
                       labels: Sequence[str] | None = None) -> Iterator[Network]:
    """Every strict network with the given shape, one per unordered reaction set."""
    if labels is None:
        labels = ["A", "B", "C", "D", "E"][:n_species] if n_species <= 5 else [f"A{i + 1}" for i in range(n_species)]
    cx = all_complexes(n_species, max_coeff)
    rxns = [Reaction(a, b) for a in cx for b in cx if a != b]
    species = tuple(labels)
    for combo in itertools.combinations(rxns, n_reactions):
        yield Network(species, combo)
