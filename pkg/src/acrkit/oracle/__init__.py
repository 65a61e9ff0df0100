"""Exact steady-state oracle for mass-action systems of one-dimensional networks.

The positive steady states of a one-dimensional network whose reactant
complexes differ only in one species are the positive roots of a univariate
sum of monomials in that species. Everything here is computed with
``fractions.Fraction``; no floating point is used to reach a verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import (
    AcrkitError,
    NotOneDimensionalError,
    ReactantsDifferInOtherSpeciesError,
    ZeroPolynomialError,
)
from ..linalg import to_rational
from ..network import Network, stoichiometric_dimension
from .isolate import Root, RootReport, positive_roots, same_positive_roots, sign_at
from .poly import evaluate, exponent_lcm, from_terms, poly_gcd, sturm_count

KAPPA_GRID = tuple(Fraction(i, 8) for i in range(1, 65))


class MassActionSystem:
    """A network together with positive rational rate constants, keyed by rate label."""

    def __init__(self, net: Network, kappa):
        labels = net.rate_labels()
        if isinstance(kappa, Mapping):
            missing = [lab for lab in labels if lab not in kappa]
            if missing:
                raise ValueError(f"no rate constant for {missing[0]}")
            values = [Fraction(kappa[lab]) for lab in labels]
        else:
            values = [Fraction(v) for v in kappa]
            if len(values) != len(labels):
                raise ValueError(f"expected {len(labels)} rate constants, got {len(values)}")
        if any(v <= 0 for v in values):
            raise ValueError("rate constants must be positive")
        self.net = net
        self.values = tuple(values)
        self.kappa = dict(zip(labels, values))

    def __repr__(self):
        return f"MassActionSystem({self.net!r}, {self.kappa})"


def mass_action_odes(sys: MassActionSystem) -> list[dict]:
    """Right-hand sides as ``{exponent vector: coefficient}`` maps, one per species."""
    net = sys.net
    out = [dict() for _ in range(net.n_species)]
    for kap, r in zip(sys.values, net.reactions):
        for i, v in enumerate(r.vector):
            if v:
                rhs = out[i]
                rhs[r.reactant] = rhs.get(r.reactant, Fraction(0)) + kap * v
    return [{m: c for m, c in rhs.items() if c != 0} for rhs in out]


def _direction(net: Network, species: int):
    """Reference species and the scalar multiples of the unit direction of S."""
    vecs = [r.vector for r in net.reactions]
    ref = species if any(v[species] for v in vecs) else next(
        (i for i in range(net.n_species) if any(v[i] for v in vecs)), None)
    if ref is None:
        raise NotOneDimensionalError("network has no nonzero reaction vector")
    pivot = next(v for v in vecs if v[ref])
    unit = tuple(Fraction(x) / pivot[ref] for x in pivot)
    scalars = [Fraction(v[ref]) for v in vecs]
    return ref, unit, scalars


def differing_species(net: Network) -> list[int]:
    """Species in which at least two reactant complexes differ."""
    ys = [r.reactant for r in net.reactions]
    return [i for i in range(net.n_species) if len({y[i] for y in ys}) > 1]


def choose_variable(net: Network) -> int:
    diff = differing_species(net)
    if len(diff) > 1:
        raise ReactantsDifferInOtherSpeciesError(
            "reactant complexes differ in " + ", ".join(net.species[i] for i in diff))
    if diff:
        return diff[0]
    return _direction(net, 0)[0]


@dataclass(frozen=True)
class ReducedForm:
    """Symbolic steady-state polynomial before rate constants are fixed.

    ``terms`` maps each reactant exponent of the variable to the list of
    ``(reaction index, multiplier)`` pairs contributing ``kappa * multiplier``
    to that coefficient.
    """

    variable: int
    reference: int
    unit: tuple
    terms: dict
    prefactor: tuple

    def signs(self) -> list[int]:
        """Achievable sign per exponent in increasing order: +1, -1, or 0 for either."""
        out = []
        for e in sorted(self.terms):
            ss = {1 if c > 0 else -1 for _, c in self.terms[e]}
            out.append(ss.pop() if len(ss) == 1 else 0)
        return out

    def exponents(self) -> list:
        return sorted(self.terms)


def reduced_terms(net: Network, species: int | None = None) -> ReducedForm:
    if stoichiometric_dimension(net) != 1:
        raise NotOneDimensionalError("network is not one-dimensional")
    if species is None:
        species = choose_variable(net)
    others = [i for i in differing_species(net) if i != species]
    if others:
        raise ReactantsDifferInOtherSpeciesError(
            "reactant complexes differ in " + ", ".join(net.species[i] for i in others))
    ref, unit, scalars = _direction(net, species)
    terms: dict = {}
    for k, (r, c) in enumerate(zip(net.reactions, scalars)):
        terms.setdefault(r.reactant[species], []).append((k, c))
    y0 = net.reactions[0].reactant
    prefactor = tuple(0 if i == species else y0[i] for i in range(net.n_species))
    return ReducedForm(species, ref, unit, terms, prefactor)


@dataclass(frozen=True)
class SteadyStatePolynomial:
    """``sum_e coeff_e * x**e`` in the concentration of ``variable``.

    The full right-hand side equals this polynomial times the monomial
    ``prod_i x_i**prefactor_i`` in the other species, times the direction
    ``unit`` of the stoichiometric line (normalized so its ``reference``
    entry is 1).
    """

    variable: int
    terms: dict
    prefactor: tuple
    reference: int
    unit: tuple

    def evaluate_sign(self, x) -> int:
        return sign_at(self.terms, x)

    def is_zero(self) -> bool:
        return not self.terms

    def describe(self, net: Network | None = None) -> str:
        name = net.species[self.variable] if net is not None else "x"
        out = ""
        for e in sorted(self.terms):
            c = Fraction(self.terms[e])
            mono = "" if e == 0 else (name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            term = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not out:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" + {term}" if c > 0 else f" - {term}"
        return out or "0"


def specialize(form: ReducedForm, values: Sequence) -> SteadyStatePolynomial:
    terms = {}
    for e, contribs in form.terms.items():
        c = sum((values[k] * m for k, m in contribs), Fraction(0))
        if c != 0:
            terms[e] = c
    return SteadyStatePolynomial(form.variable, terms, form.prefactor, form.reference, form.unit)


def reduce_one_dimensional(sys: MassActionSystem, species: int | None = None) -> SteadyStatePolynomial:
    return specialize(reduced_terms(sys.net, species), sys.values)


def sample_kappa(net: Network, rng: random.Random) -> tuple:
    return tuple(rng.choice(KAPPA_GRID) for _ in net.reactions)


# ---------------------------------------------------------------- degeneracy

def _directional_terms(net: Network, form: ReducedForm, values) -> dict:
    """Derivative of the reduced right-hand side along the stoichiometric line.

    Evaluated with every other species at concentration 1, as a function of
    the chosen variable.
    """
    j = form.variable
    out: dict = {}
    for k, r in enumerate(net.reactions):
        _, mult = next(t for t in form.terms[r.reactant[j]] if t[0] == k)
        w = values[k] * mult
        side = sum((r.reactant[i] * form.unit[i] for i in range(net.n_species) if i != j), Fraction(0))
        if side:
            e = r.reactant[j]
            out[e] = out.get(e, Fraction(0)) + w * side
        if form.unit[j] and r.reactant[j]:
            e = to_rational(Fraction(r.reactant[j]) - 1)
            out[e] = out.get(e, Fraction(0)) + w * form.unit[j] * r.reactant[j]
    return {e: c for e, c in out.items() if c != 0}


def _shift_nonnegative(*maps) -> list[dict]:
    low = min((e for m in maps for e in m), default=0)
    if low >= 0:
        return [dict(m) for m in maps]
    return [{to_rational(Fraction(e) - low): c for e, c in m.items()} for m in maps]


def check_degeneracy(sys: MassActionSystem, species: int | None = None) -> list[bool]:
    """Per positive root of the reduced polynomial (in increasing order): is it degenerate?

    A steady state on the one-dimensional stoichiometric line is degenerate
    when the derivative of the vector field along that line vanishes there.
    The test looks for a common root of the reduced polynomial and that
    directional derivative, working in ``u`` with ``x = u**q``.
    """
    form = reduced_terms(sys.net, species)
    poly = specialize(form, sys.values)
    g_terms, d_terms = _shift_nonnegative(poly.terms, _directional_terms(sys.net, form, sys.values))
    q = exponent_lcm(g_terms, d_terms)
    gu, _ = from_terms(g_terms, q)
    if not gu:
        raise ZeroPolynomialError("the polynomial is identically zero")
    g_roots = positive_roots(gu).roots
    du, _ = from_terms(d_terms, q)
    if not du:
        return [True] * len(g_roots)
    common = poly_gcd(gu, du)
    out = []
    for r in g_roots:
        if len(common) <= 1:
            out.append(False)
        elif r.exact is not None:
            out.append(evaluate(common, r.exact) == 0)
        else:
            out.append(sturm_count(common, r.lo, r.hi) > 0)
    return out


def is_simple_stable(poly: SteadyStatePolynomial, report: RootReport) -> bool:
    """Unique simple positive root that attracts along the stoichiometric line."""
    if report.positive_root_count != 1 or report.roots[0].multiplicity != 1:
        return False
    if poly.reference != poly.variable:
        return False
    return report.roots[0].derivative_sign < 0


# ---------------------------------------------------------------- sampling

@dataclass
class SampleResult:
    kappa: tuple
    continuum: bool
    roots: RootReport | None
    stable: bool
    degenerate: list = field(default_factory=list)

    @property
    def root_count(self) -> int | None:
        return None if self.continuum else self.roots.positive_root_count

    @property
    def acr(self) -> bool:
        return not self.continuum and self.roots.positive_root_count <= 1

    def to_json(self) -> dict:
        return {
            "kappa": [str(v) for v in self.kappa],
            "root_count": self.root_count,
            "continuum": self.continuum,
            "roots": [] if self.roots is None else self.roots.to_json(),
            "stable": self.stable,
            "degenerate": self.degenerate,
        }


@dataclass
class EmpiricalReport:
    species: int
    seed: int
    samples: list

    @property
    def all_acr(self) -> bool:
        return all(s.acr for s in self.samples)

    @property
    def counterexample(self) -> SampleResult | None:
        return next((s for s in self.samples if not s.acr), None)

    @property
    def vacuous_samples(self) -> int:
        return sum(1 for s in self.samples if not s.continuum and s.roots.positive_root_count == 0)

    @property
    def acr_values(self) -> list:
        return [s.roots.roots[0] for s in self.samples if s.acr and s.roots.positive_root_count == 1]

    def to_json(self, net: Network) -> dict:
        ce = self.counterexample
        return {
            "species": net.species[self.species],
            "seed": self.seed,
            "samples": [s.to_json() for s in self.samples],
            "all_samples_acr": self.all_acr,
            "counterexample_kappa": None if ce is None else [str(v) for v in ce.kappa],
            "vacuous_samples": self.vacuous_samples,
            "note": "evidence, not proof",
        }


def evaluate_sample(net: Network, form: ReducedForm, values) -> SampleResult:
    sys = MassActionSystem(net, values)
    poly = specialize(form, sys.values)
    if poly.is_zero():
        return SampleResult(sys.values, True, None, False)
    report = positive_roots(poly)
    degen = check_degeneracy(sys, form.variable) if report.positive_root_count else []
    return SampleResult(sys.values, False, report, is_simple_stable(poly, report), degen)


def empirical_acr_check(net: Network, species: int | None = None, samples: int = 50, seed: int = 0) -> EmpiricalReport:
    form = reduced_terms(net, species)
    rng = random.Random(seed)
    results = [evaluate_sample(net, form, sample_kappa(net, rng)) for _ in range(samples)]
    return EmpiricalReport(form.variable, seed, results)


# ---------------------------------------------------------------- witnesses

def _alternating_triple(signs: list[int]):
    """Positions a < b < c whose achievable signs can be made +,-,+ (or -,+,-)."""
    n = len(signs)
    for first in (1, -1):
        for a in range(n):
            if signs[a] not in (0, first):
                continue
            for b in range(a + 1, n):
                if signs[b] not in (0, -first):
                    continue
                for c in range(b + 1, n):
                    if signs[c] in (0, first):
                        return first, (a, b, c)
    return None


def find_multistationary_kappa(net: Network, species: int | None = None):
    """Rate constants giving at least two positive steady states, or ``None``.

    When every exponent admits both signs the returned rates make the reduced
    polynomial vanish identically; otherwise a three-term polynomial with
    roots ``1`` and ``2**q`` is planted and all other rates are shrunk until
    both roots survive.
    """
    form = reduced_terms(net, species)
    exps = form.exponents()
    signs = form.signs()
    r = net.n_reactions
    if all(s == 0 for s in signs):
        values = [Fraction(0)] * r
        for e in exps:
            pos = sum(c for _, c in form.terms[e] if c > 0)
            neg = -sum(c for _, c in form.terms[e] if c < 0)
            for k, c in form.terms[e]:
                values[k] = 1 / pos if c > 0 else 1 / neg
        return tuple(values)
    hit = _alternating_triple(signs)
    if hit is None:
        return None
    first, (ia, ib, ic) = hit
    a, b, c = (Fraction(exps[i]) for i in (ia, ib, ic))
    q = exponent_lcm({a: 1, b: 1, c: 1})
    rho = Fraction(2) ** q
    pa, pb, pc = rho ** a, rho ** b, rho ** c
    target = {
        exps[ia]: first * (pc - pb) / (pb - pa),
        exps[ib]: -first * (pc - pa) / (pb - pa),
        exps[ic]: Fraction(first),
    }
    chosen = {}
    for e, t in target.items():
        k, m = next((k, m) for k, m in form.terms[e] if (m > 0) == (t > 0))
        chosen[k] = t / m
    eps = Fraction(1, 8)
    for _ in range(200):
        values = tuple(chosen.get(k, eps) for k in range(r))
        poly = specialize(form, values)
        try:
            if positive_roots(poly).positive_root_count >= 2:
                return values
        except ZeroPolynomialError:
            return values
        eps /= 2
    raise AcrkitError("failed to separate planted roots")


__all__ = [
    "EmpiricalReport",
    "MassActionSystem",
    "ReducedForm",
    "Root",
    "RootReport",
    "SampleResult",
    "SteadyStatePolynomial",
    "check_degeneracy",
    "choose_variable",
    "differing_species",
    "empirical_acr_check",
    "evaluate_sample",
    "find_multistationary_kappa",
    "is_simple_stable",
    "mass_action_odes",
    "positive_roots",
    "reduce_one_dimensional",
    "reduced_terms",
    "same_positive_roots",
    "sample_kappa",
    "specialize",
    "sturm_count",
]
