"""Network operations that preserve ACR, and reduction of small networks to canonical form.

Five operations act on a network over a fixed species list: relabeling the
species coordinates, translating every complex by a vector, stretching one
reaction along its own direction, duplicating a reaction into two parallel
ones, and partially scaling one coordinate of every reaction vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .embedding import arrow_diagram, project
from .errors import (
    CreatesDuplicateReactionError,
    CreatesTrivialReactionError,
    InvariantViolation,
    LeavesOrthantError,
    NoACRError,
    NonInvertibleError,
    NoPositiveSteadyStateError,
    NotOneDimensionalError,
    OperationError,
    UnclassifiedError,
    ZeroScaleFactorError,
)
from .linalg import to_rational
from .network import (
    Network,
    Reaction,
    catalyst_only_species,
    parse_network,
    render_network,
    stoichiometric_dimension,
)


def _q(x) -> Fraction | int:
    return to_rational(x)


def _fmt(x) -> str:
    return str(_q(x))


def _check_reactions(net: Network, reactions: list[Reaction]) -> Network:
    seen = set()
    for k, r in enumerate(reactions):
        if any(v < 0 for v in r.reactant + r.product):
            raise LeavesOrthantError(f"reaction {k} leaves the nonnegative orthant")
        if r.reactant == r.product:
            raise CreatesTrivialReactionError(f"reaction {k} becomes trivial")
        if r.key() in seen:
            raise CreatesDuplicateReactionError(f"reaction {k} duplicates another reaction")
        seen.add(r.key())
    return Network(net.species, tuple(reactions))


def _check_reaction_index(net: Network, k: int) -> None:
    if not 0 <= k < net.n_reactions:
        raise OperationError(f"reaction index {k} out of range for {net.n_reactions} reactions")


@dataclass(frozen=True)
class Relabel:
    """Permute species coordinates: the new coefficient of species ``i`` is the old one of ``perm[i]``.

    Species labels stay in place, so ``Relabel((1, 0))`` on ``{B -> A}``
    gives ``{A -> B}``.
    """

    perm: tuple

    name = "Relabel"

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise OperationError(f"{self.perm} is not a permutation")

    def apply(self, net: Network) -> Network:
        if len(self.perm) != net.n_species:
            raise OperationError("permutation length does not match the species count")
        p = self.perm
        rx = [Reaction(tuple(r.reactant[p[i]] for i in range(len(p))),
                       tuple(r.product[p[i]] for i in range(len(p))), r.label)
              for r in net.reactions]
        return _check_reactions(net, rx)

    def inverse(self) -> "Relabel":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return Relabel(tuple(inv))

    def params(self) -> dict:
        return {"perm": list(self.perm)}


@dataclass(frozen=True)
class Translate:
    """Add the vector ``z`` to every reactant and product."""

    z: tuple

    name = "Translate"

    def __post_init__(self):
        object.__setattr__(self, "z", tuple(_q(v) for v in self.z))

    def apply(self, net: Network) -> Network:
        if len(self.z) != net.n_species:
            raise OperationError("translation vector length does not match the species count")
        rx = [Reaction(tuple(_q(a + b) for a, b in zip(r.reactant, self.z)),
                       tuple(_q(a + b) for a, b in zip(r.product, self.z)), r.label)
              for r in net.reactions]
        return _check_reactions(net, rx)

    def inverse(self) -> "Translate":
        return Translate(tuple(-v for v in self.z))

    def params(self) -> dict:
        return {"z": [_fmt(v) for v in self.z]}


@dataclass(frozen=True)
class Stretch:
    """Replace reaction ``y -> y'`` by ``y -> y + factor * (y' - y)``."""

    reaction: int
    factor: Fraction

    name = "Stretch"

    def __post_init__(self):
        object.__setattr__(self, "factor", _q(self.factor))
        if self.factor == 0:
            raise ZeroScaleFactorError("stretch factor must be nonzero")
        if self.factor < 0:
            raise OperationError("stretch factor must be positive")

    def apply(self, net: Network) -> Network:
        _check_reaction_index(net, self.reaction)
        rx = list(net.reactions)
        r = rx[self.reaction]
        rx[self.reaction] = Reaction(
            r.reactant, tuple(_q(y + self.factor * v) for y, v in zip(r.reactant, r.vector)), r.label)
        return _check_reactions(net, rx)

    def inverse(self) -> "Stretch":
        return Stretch(self.reaction, 1 / Fraction(self.factor))

    def params(self) -> dict:
        return {"reaction": self.reaction, "factor": _fmt(self.factor)}


@dataclass(frozen=True)
class Duplicate:
    """Replace reaction ``k`` by two parallel reactions stretched by ``alpha`` and ``beta``.

    The new reactions take positions ``k`` and ``k + 1``.
    """

    reaction: int
    alpha: Fraction
    beta: Fraction

    name = "Duplicate"

    def __post_init__(self):
        object.__setattr__(self, "alpha", _q(self.alpha))
        object.__setattr__(self, "beta", _q(self.beta))
        if self.alpha == 0 or self.beta == 0:
            raise ZeroScaleFactorError("duplication factors must be nonzero")
        if self.alpha < 0 or self.beta < 0:
            raise OperationError("duplication factors must be positive")
        if self.alpha == self.beta:
            raise CreatesDuplicateReactionError("duplication factors must differ")

    def apply(self, net: Network) -> Network:
        _check_reaction_index(net, self.reaction)
        rx = list(net.reactions)
        r = rx[self.reaction]
        new = [Reaction(r.reactant, tuple(_q(y + f * v) for y, v in zip(r.reactant, r.vector)))
               for f in (self.alpha, self.beta)]
        rest = set(x.key() for i, x in enumerate(rx) if i != self.reaction)
        if any(n.key() in rest for n in new):
            raise CreatesDuplicateReactionError("a duplicated reaction is already present")
        rx[self.reaction:self.reaction + 1] = new
        return _check_reactions(net, rx)

    def inverse(self):
        raise NonInvertibleError("duplicating a reaction cannot be undone by an operation")

    def params(self) -> dict:
        return {"reaction": self.reaction, "alpha": _fmt(self.alpha), "beta": _fmt(self.beta)}


@dataclass(frozen=True)
class PartialScale:
    """Scale coordinate ``species`` of every reaction vector by ``factor``.

    Each product ``y'`` becomes ``y'`` with entry ``i`` replaced by
    ``y_i + factor * (y'_i - y_i)``; reactants are unchanged.
    """

    species: int
    factor: Fraction

    name = "PartialScale"

    def __post_init__(self):
        object.__setattr__(self, "factor", _q(self.factor))
        if self.factor == 0:
            raise ZeroScaleFactorError("partial scaling by zero is not allowed")

    def apply(self, net: Network) -> Network:
        i = self.species
        if not 0 <= i < net.n_species:
            raise OperationError(f"species index {i} out of range")
        rx = []
        for r in net.reactions:
            prod = list(r.product)
            prod[i] = _q(r.reactant[i] + self.factor * (r.product[i] - r.reactant[i]))
            rx.append(Reaction(r.reactant, tuple(prod), r.label))
        return _check_reactions(net, rx)

    def inverse(self) -> "PartialScale":
        return PartialScale(self.species, 1 / Fraction(self.factor))

    def params(self) -> dict:
        return {"species": self.species, "factor": _fmt(self.factor)}


NetworkOperation = Relabel | Translate | Stretch | Duplicate | PartialScale

_OPS = {cls.name: cls for cls in (Relabel, Translate, Stretch, Duplicate, PartialScale)}


def op_to_json(op) -> dict:
    return {"op": op.name, "params": op.params()}


def op_from_json(d: dict):
    name = d.get("op")
    p = d.get("params", {})
    if name == "Relabel":
        return Relabel(tuple(p["perm"]))
    if name == "Translate":
        return Translate(tuple(Fraction(str(v)) for v in p["z"]))
    if name == "Stretch":
        return Stretch(int(p["reaction"]), Fraction(str(p["factor"])))
    if name == "Duplicate":
        return Duplicate(int(p["reaction"]), Fraction(str(p["alpha"])), Fraction(str(p["beta"])))
    if name == "PartialScale":
        return PartialScale(int(p["species"]), Fraction(str(p["factor"])))
    raise OperationError(f"unknown operation {name!r}")


def apply(net: Network, op) -> Network:
    return op.apply(net)


def apply_steps(net: Network, steps: Iterable) -> Network:
    for i, op in enumerate(steps):
        try:
            net = op.apply(net)
        except OperationError as e:
            raise e.at_step(i) from e
    return net


@dataclass(frozen=True)
class OperationTrace:
    steps: tuple
    source: Network
    target: Network

    @classmethod
    def build(cls, source: Network, steps: Sequence) -> "OperationTrace":
        return cls(tuple(steps), source, apply_steps(source, steps))

    def replay(self, net: Network | None = None) -> Network:
        return apply_steps(self.source if net is None else net, self.steps)

    def inverse_steps(self) -> tuple:
        return tuple(op.inverse() for op in reversed(self.steps))

    def to_json(self) -> dict:
        return {
            "steps": [op_to_json(op) for op in self.steps],
            "source": render_network(self.source),
            "target": render_network(self.target),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, data, source: Network | None = None) -> "OperationTrace":
        if isinstance(data, list):
            steps = [op_from_json(d) for d in data]
            if source is None:
                raise OperationError("a bare step list needs a source network")
            return cls.build(source, steps)
        steps = [op_from_json(d) for d in data["steps"]]
        if source is None:
            source = parse_network(data["source"], strict=False)
        trace = cls.build(source, steps)
        if "target" in data and data["target"] is not None:
            expected = parse_network(data["target"], strict=False)
            if expected != trace.target:
                raise InvariantViolation("replaying the steps does not reproduce the recorded target")
        return trace


def apply_trace(net: Network, trace) -> Network:
    steps = trace.steps if isinstance(trace, OperationTrace) else trace
    return apply_steps(net, steps)


def invert_trace(trace: OperationTrace) -> OperationTrace:
    for i, op in enumerate(trace.steps):
        if isinstance(op, Duplicate):
            raise NonInvertibleError("trace contains a duplication", step=i)
    return OperationTrace.build(trace.target, trace.inverse_steps())


# ---------------------------------------------------------------- ODE effects

@dataclass(frozen=True)
class RateConstantMap:
    """How the mass-action right-hand side changes under one operation.

    With ``kappa_new`` the rates of the transformed network, the old rates
    ``kappa_old[k] = sum(c * kappa_new[j] for j, c in rate_exprs[k])`` make
    the new vector field equal to the old one after three adjustments:
    coordinates are permuted by ``permutation`` (new species ``i`` is old
    species ``perm[i]``), row ``row_scale[0]`` is multiplied by
    ``row_scale[1]``, and everything is multiplied by the monomial
    ``x ** monomial``.
    """

    operation: str
    rate_exprs: tuple
    row_scale: tuple | None = None
    monomial: tuple | None = None
    permutation: tuple | None = None
    notes: tuple = field(default=())

    def pullback(self, kappa_new: Sequence) -> tuple:
        return tuple(
            sum((Fraction(c) * kappa_new[j] for j, c in expr), Fraction(0)) for expr in self.rate_exprs
        )

    def forward(self, kappa_old: Sequence) -> tuple:
        """A choice of new rates whose pullback is ``kappa_old``."""
        n_new = 1 + max((j for expr in self.rate_exprs for j, _ in expr), default=-1)
        out = [Fraction(0)] * n_new
        for k, expr in enumerate(self.rate_exprs):
            total = sum((Fraction(c) for _, c in expr), Fraction(0))
            for j, _ in expr:
                out[j] = Fraction(kappa_old[k]) / total
        return tuple(out)

    def is_identity(self) -> bool:
        ident = all(expr == ((k, 1),) for k, expr in enumerate(self.rate_exprs))
        rs = self.row_scale is None or self.row_scale[1] == 1
        mono = self.monomial is None or all(v == 0 for v in self.monomial)
        perm = self.permutation is None or list(self.permutation) == list(range(len(self.permutation)))
        return ident and rs and mono and perm

    def to_json(self, labels_old=None, labels_new=None) -> dict:
        def lab(seq, j, default):
            return seq[j] if seq is not None else f"{default}{j + 1}"
        exprs = {}
        for k, expr in enumerate(self.rate_exprs):
            exprs[lab(labels_old, k, "k")] = " + ".join(
                f"{_fmt(c)}*{lab(labels_new, j, 'k')}'" if c != 1 else f"{lab(labels_new, j, 'k')}'"
                for j, c in expr)
        return {
            "operation": self.operation,
            "rates": exprs,
            "row_scale": None if self.row_scale is None else [self.row_scale[0], _fmt(self.row_scale[1])],
            "monomial": None if self.monomial is None else [_fmt(v) for v in self.monomial],
            "permutation": None if self.permutation is None else list(self.permutation),
        }


def ode_effect(net: Network, op) -> RateConstantMap:
    r = net.n_reactions
    ident = tuple(((k, 1),) for k in range(r))
    if isinstance(op, Stretch):
        exprs = list(ident)
        exprs[op.reaction] = ((op.reaction, op.factor),)
        return RateConstantMap("Stretch", tuple(exprs))
    if isinstance(op, Duplicate):
        exprs = []
        for k in range(r):
            if k < op.reaction:
                exprs.append(((k, 1),))
            elif k == op.reaction:
                exprs.append(((k, op.alpha), (k + 1, op.beta)))
            else:
                exprs.append(((k + 1, 1),))
        return RateConstantMap("Duplicate", tuple(exprs))
    if isinstance(op, PartialScale):
        return RateConstantMap("PartialScale", ident, row_scale=(op.species, op.factor))
    if isinstance(op, Translate):
        return RateConstantMap("Translate", ident, monomial=op.z)
    if isinstance(op, Relabel):
        return RateConstantMap("Relabel", ident, permutation=op.perm)
    raise OperationError(f"unknown operation {op!r}")


def compose_rate_maps(net: Network, steps: Sequence) -> list[list[tuple[int, Fraction]]]:
    """Source rates as linear combinations of the final network's rates after all steps."""
    current = [{k: Fraction(1)} for k in range(net.n_reactions)]
    for op in steps:
        m = ode_effect(net, op)
        nxt = []
        for expr in current:
            acc: dict = {}
            for j, c in expr.items():
                for jj, cc in m.rate_exprs[j]:
                    acc[jj] = acc.get(jj, Fraction(0)) + c * Fraction(cc)
            nxt.append(acc)
        current = nxt
        net = op.apply(net)
    return [sorted(expr.items()) for expr in current]


@dataclass(frozen=True)
class RotationMetrics:
    lambda_sq: tuple
    cos_sq: tuple

    @property
    def common_angle(self) -> bool:
        return len(set(self.cos_sq)) <= 1


def rotation_metrics(net: Network, species: int, alpha) -> RotationMetrics:
    """Squared stretch factors and squared cosines of the rotation for partial scaling by ``alpha``.

    For each reaction vector ``v``, partial scaling of coordinate ``species``
    gives a vector of squared length ``lambda_sq * |v|^2`` at angle ``theta``
    with ``cos(theta)^2 = cos_sq``.
    """
    if stoichiometric_dimension(net) != 1:
        raise NotOneDimensionalError("rotation metrics need a one-dimensional network")
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise OperationError("rotation metrics need a positive factor")
    lam, cos = [], []
    for r in net.reactions:
        v = [Fraction(x) for x in r.vector]
        norm = sum(x * x for x in v)
        vi = v[species]
        lam.append(_q(1 + (alpha * alpha - 1) * vi * vi / norm))
        w = list(v)
        w[species] = alpha * vi
        dot = sum(a * b for a, b in zip(v, w))
        cos.append(_q(dot * dot / (norm * sum(x * x for x in w))))
    return RotationMetrics(tuple(lam), tuple(cos))


# ---------------------------------------------------------------- canonical families

@dataclass(frozen=True)
class Family:
    kind: str  # "ZeroToMA" | "GeneralizedSF" | "DegenerateACR"
    n: int

    def __str__(self):
        return f"{self.kind}({self.n})"

    def network(self, species: Sequence[str] = ("A", "B")) -> Network:
        s = len(species)

        def vec(a, b=0):
            out = [0] * s
            out[0] = a
            if s > 1:
                out[1] = b
            return tuple(out)

        n = self.n
        if self.kind == "ZeroToMA":
            pairs = [(vec(0), vec(n)), (vec(n), vec(0))]
        elif self.kind == "GeneralizedSF":
            pairs = [(vec(0, 1), vec(1, 0)), (vec(n, 1), vec(n - 1, 2))]
        elif self.kind == "DegenerateACR":
            pairs = [(vec(1, 0), vec(2, 0)), (vec(1, n), vec(0, n))]
        else:
            raise ValueError(f"unknown family {self.kind}")
        return Network.from_pairs(species, pairs)

    @classmethod
    def parse(cls, text: str) -> "Family":
        kind, _, rest = text.partition("(")
        return cls(kind, int(rest.rstrip(")")))


def zero_to_ma(m: int, species=("A",)) -> Network:
    return Family("ZeroToMA", m).network(species)


def generalized_sf(n: int, species=("A", "B")) -> Network:
    return Family("GeneralizedSF", n).network(species)


def degenerate_acr(n: int, species=("A", "B")) -> Network:
    return Family("DegenerateACR", n).network(species)


def _finish(source: Network, steps: list, family: Family) -> tuple[Family, OperationTrace]:
    trace = OperationTrace.build(source, steps)
    if trace.target != family.network(source.species):
        raise InvariantViolation(f"canonical reduction did not land on {family}: got {trace.target!r}")
    back = invert_trace(trace)
    if back.target != source:
        raise InvariantViolation("inverse trace does not reproduce the source")
    return family, trace


def _swap(s: int, i: int, j: int) -> Relabel:
    perm = list(range(s))
    perm[i], perm[j] = perm[j], perm[i]
    return Relabel(tuple(perm))


def _varying_species(net: Network) -> list[int]:
    cx = net.complexes()
    return [i for i in range(net.n_species) if len({c[i] for c in cx}) > 1]


def _one_species_steps(net: Network) -> tuple[list, Family]:
    """Steps taking a translated one-species, two-reaction network to ``{0 <=> mA}``."""
    s = net.n_species
    active = _varying_species(net)
    if len(active) != 1:
        raise UnclassifiedError("network is not a translate of a one-species network")
    j = active[0]
    steps: list = []
    z = tuple(0 if i == j else -net.reactions[0].reactant[i] for i in range(s))
    if any(z):
        steps.append(Translate(z))
    if j != 0:
        steps.append(_swap(s, 0, j))
    cur = apply_steps(net, steps)
    d = arrow_diagram(cur)
    tags = d.tags
    if tags in ("RR", "LL", "R", "L"):
        raise NoPositiveSteadyStateError(f"arrow diagram {d.ascii()} admits no positive steady state")
    if tags not in ("RL", "LR"):
        raise NoACRError(f"arrow diagram {d.ascii()} is not (->, <-) or (<-, ->)")
    if tags == "LR":
        lo, hi = d.reactant_coeffs
        up = next(r for r in cur.reactions if r.reactant[0] == hi)
        c, dd = hi, up.product[0]
        if 2 * c < dd:
            shift = [0] * s
            shift[0] = _q(dd - 2 * c)
            steps.append(Translate(tuple(shift)))
        steps.append(PartialScale(0, -1))
        cur = apply_steps(net, steps)
        d = arrow_diagram(cur)
        if d.tags != "RL":
            raise InvariantViolation("partial scaling by -1 did not produce (->, <-)")
    a, dd = d.reactant_coeffs
    n = _q(dd - a)
    for k, r in enumerate(cur.reactions):
        length = abs(r.vector[0])
        if length != n:
            steps.append(Stretch(k, _q(Fraction(n) / length)))
    if a != 0:
        shift = [0] * s
        shift[0] = _q(-a)
        steps.append(Translate(tuple(shift)))
    if not isinstance(n, int):
        raise UnclassifiedError(f"reactant gap {n} is not an integer; no canonical member")
    return steps, Family("ZeroToMA", n)


def canonicalize_one_species_two_reactions(net: Network) -> tuple[Family, OperationTrace]:
    if net.n_reactions != 2:
        raise UnclassifiedError("expected exactly two reactions")
    steps, fam = _one_species_steps(net)
    return _finish(net, steps, fam)


def _sq(v) -> Fraction:
    return sum(Fraction(x) * x for x in v)


def _sf_steps(net: Network) -> tuple[list, Family]:
    s = net.n_species
    tags = [arrow_diagram(project(net, i).result).tags for i in range(s)]
    both = [i for i in range(s) if tags[i] == "B"]
    two = [i for i in range(s) if tags[i] in ("RL", "LR")]
    if not (len(both) == 1 and len(two) == 1):
        if any(t in ("R", "L") for t in tags):
            raise NoPositiveSteadyStateError("a projection points one way only")
        raise NoACRError(
            "no projection is (<->.) with the other (->, <-) or (<-, ->): "
            + ", ".join(f"{net.species[i]}: {tags[i]}" for i in range(s)))
    steps: list = []
    if both[0] != 1:
        steps.append(_swap(s, 0, 1))
    cur = apply_steps(net, steps)
    v0, v1 = cur.reactions[0].vector, cur.reactions[1].vector
    n0, n1 = _sq(v0), _sq(v1)
    if n0 != n1:
        k, short, long_ = (0, v1, v0) if n0 > n1 else (1, v0, v1)
        ratio = next(Fraction(a) / b for a, b in zip(short, long_) if b != 0)
        steps.append(Stretch(k, abs(ratio)))
        cur = apply_steps(net, steps)
    y_idx = 0 if cur.reactions[0].reactant[0] < cur.reactions[1].reactant[0] else 1
    ry = cur.reactions[y_idx]
    f1 = 1 / Fraction(ry.vector[0])
    if f1 != 1:
        steps.append(PartialScale(0, f1))
        cur = apply_steps(net, steps)
        ry = cur.reactions[y_idx]
    f2 = -1 / Fraction(ry.vector[1])
    if f2 != 1:
        steps.append(PartialScale(1, f2))
        cur = apply_steps(net, steps)
        ry = cur.reactions[y_idx]
    rz = cur.reactions[1 - y_idx]
    n = _q(rz.reactant[0] - ry.reactant[0])
    z = (_q(-ry.reactant[0]), _q(-(ry.reactant[1] - 1)))
    if any(z):
        steps.append(Translate(z))
    if not isinstance(n, int):
        raise UnclassifiedError(f"reactant gap {n} is not an integer; no canonical member")
    return steps, Family("GeneralizedSF", n)


def _catalyst_steps(net: Network, cat: int) -> tuple[list, Family]:
    steps: list = []
    if cat != 1:
        steps.append(_swap(2, 0, 1))
    cur = apply_steps(net, steps)
    y, z = cur.reactions
    if y.reactant[0] == z.reactant[0]:
        d = arrow_diagram(project(cur, 0).result)
        if d.tags != "B":
            raise NoPositiveSteadyStateError(f"projection {d.ascii()} admits no positive steady state")
        if y.reactant[1] == z.reactant[1]:
            raise NoACRError("rates can be tuned so every positive point is a steady state")
        y_idx = 0 if y.reactant[1] < z.reactant[1] else 1
        for k, r in enumerate(cur.reactions):
            length = abs(r.vector[0])
            if length != 1:
                steps.append(Stretch(k, 1 / Fraction(length)))
        cur = apply_steps(net, steps)
        ry, rz = cur.reactions[y_idx], cur.reactions[1 - y_idx]
        if ry.vector[0] < 0:
            steps.append(PartialScale(0, -1))
        n = _q(rz.reactant[1] - ry.reactant[1])
        t = (_q(-(ry.reactant[0] - 1)), _q(-ry.reactant[1]))
        if any(t):
            steps.append(Translate(t))
        if not isinstance(n, int):
            raise UnclassifiedError(f"reactant gap {n} is not an integer; no canonical member")
        return steps, Family("DegenerateACR", n)
    if y.reactant[1] != z.reactant[1]:
        raise NoACRError("reactant complexes differ in both species")
    if y.reactant[1]:
        steps.append(Translate((0, _q(-y.reactant[1]))))
    cur = apply_steps(net, steps)
    more, fam = _one_species_steps(cur)
    return steps + more, fam


def canonicalize_two_species_two_reactions(net: Network) -> tuple[Family, OperationTrace]:
    """Reduce a two-species, two-reaction network with ACR to its canonical family member."""
    if net.n_species != 2 or net.n_reactions != 2:
        raise UnclassifiedError("expected exactly two species and two reactions")
    from .decide import positive_steady_state_exists  # local import avoids a cycle

    if not positive_steady_state_exists(net):
        raise NoPositiveSteadyStateError("network admits no positive steady state")
    if len(_varying_species(net)) == 1:
        steps, fam = _one_species_steps(net)
        return _finish(net, steps, fam)
    cats = sorted(catalyst_only_species(net))
    if cats:
        steps, fam = _catalyst_steps(net, cats[0])
    else:
        steps, fam = _sf_steps(net)
    return _finish(net, steps, fam)


def canonicalize(net: Network) -> tuple[Family, OperationTrace]:
    if net.n_reactions != 2:
        raise UnclassifiedError("canonical families are defined for two-reaction networks")
    if len(_varying_species(net)) == 1:
        return canonicalize_one_species_two_reactions(net)
    if net.n_species == 2:
        return canonicalize_two_species_two_reactions(net)
    raise UnclassifiedError("canonical reduction needs one or two species")


__all__ = [
    "Duplicate",
    "Family",
    "NetworkOperation",
    "OperationTrace",
    "PartialScale",
    "RateConstantMap",
    "Relabel",
    "RotationMetrics",
    "Stretch",
    "Translate",
    "apply",
    "apply_steps",
    "apply_trace",
    "canonicalize",
    "canonicalize_one_species_two_reactions",
    "canonicalize_two_species_two_reactions",
    "compose_rate_maps",
    "degenerate_acr",
    "generalized_sf",
    "invert_trace",
    "ode_effect",
    "op_from_json",
    "op_to_json",
    "rotation_metrics",
    "zero_to_ma",
]
