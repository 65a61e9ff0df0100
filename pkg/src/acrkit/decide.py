"""Decision procedures for absolute concentration robustness."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import (
    ArrowPattern,
    arrow_diagram,
    classify_arrow_pattern,
    project,
    sign_pattern_alternates,
    two_alternating_witness,
)
from .errors import (
    AcrkitError,
    InvariantViolation,
    NotOneDimensionalError,
    UnclassifiedError,
    WrongReactionCountError,
)
from .graph import linkage_report
from .network import (
    Network,
    catalyst_only_species,
    is_one_species,
    render_complex,
    stoichiometric_dimension,
)
from .oracle import ReducedForm, differing_species, reduced_terms


class Status(enum.Enum):
    STABLE_ACR = "StableACR"
    ACR_DEGENERATE_ONLY = "ACR_DegenerateOnly"
    ACR = "ACR"
    NO_ACR = "NoACR"
    VACUOUS = "VacuousACR_NoPositiveSteadyState"
    UNCLASSIFIED = "Unclassified"

    @property
    def has_acr(self) -> bool:
        """ACR in the plain sense, including the vacuous case."""
        return self in (Status.STABLE_ACR, Status.ACR_DEGENERATE_ONLY, Status.ACR, Status.VACUOUS)

    @property
    def substantive_acr(self) -> bool:
        return self in (Status.STABLE_ACR, Status.ACR_DEGENERATE_ONLY, Status.ACR)


@dataclass(frozen=True)
class SFCriterionReport:
    deficiency: int
    nonterminal_pair: tuple | None  # (complex, complex, species index)
    satisfied: bool

    def to_json(self, net: Network) -> dict:
        pair = None
        if self.nonterminal_pair is not None:
            a, b, i = self.nonterminal_pair
            pair = {
                "complexes": [render_complex(net.species, a), render_complex(net.species, b)],
                "species": net.species[i],
            }
        return {"deficiency": self.deficiency, "nonterminal_pair": pair, "satisfied": self.satisfied}


def shinar_feinberg_criterion(net: Network) -> SFCriterionReport:
    """Deficiency one plus two nonterminal complexes that differ in exactly one species.

    The first qualifying pair in lexicographic order of coefficient vectors
    is reported.
    """
    rep = linkage_report(net)
    pair = None
    if rep.delta == 1:
        cx = sorted(rep.nonterminal_complexes)
        for a, b in itertools.combinations(cx, 2):
            diff = [i for i in range(net.n_species) if a[i] != b[i]]
            if len(diff) == 1:
                pair = (a, b, diff[0])
                break
    return SFCriterionReport(rep.delta, pair, pair is not None)


@dataclass
class AcrVerdict:
    status: Status
    witness: int | None = None
    witnesses: tuple = ()
    acr_value: str | None = None
    polynomial: str | None = None
    family: object | None = None
    trace: object | None = None
    evidence: dict = field(default_factory=dict)

    def to_json(self, net: Network) -> dict:
        ev = dict(self.evidence)
        if self.trace is not None:
            ev["trace"] = self.trace.to_json()
        out = {
            "status": self.status.value,
            "witness": None if self.witness is None else net.species[self.witness],
            "evidence": ev,
        }
        if self.acr_value is not None:
            out["acr_value"] = self.acr_value
        if self.polynomial is not None:
            out["polynomial"] = self.polynomial
        if self.family is not None:
            out["family"] = str(self.family)
        return out


def _label_sum(net: Network, contribs) -> str:
    labels = net.rate_labels()
    parts = []
    for k, c in contribs:
        c = abs(Fraction(c))
        parts.append(labels[k] if c == 1 else f"{c}*{labels[k]}")
    if len(parts) == 1 and "*" not in parts[0]:
        return parts[0]
    return "(" + " + ".join(parts) + ")"


def acr_value_expression(net: Network, form: ReducedForm) -> str | None:
    """Closed form of the ACR value when the reduced polynomial is a sign-definite binomial."""
    exps = form.exponents()
    if len(exps) != 2:
        return None
    lo, hi = exps
    s_lo = {c > 0 for _, c in form.terms[lo]}
    s_hi = {c > 0 for _, c in form.terms[hi]}
    if len(s_lo) != 1 or len(s_hi) != 1 or s_lo == s_hi:
        return None
    num = _label_sum(net, form.terms[lo])
    den = _label_sum(net, form.terms[hi])
    ratio = f"{num}/{den}"
    gap = Fraction(hi) - Fraction(lo)
    if gap == 1:
        return ratio
    return f"({ratio})^(1/{gap})" if gap.denominator == 1 else f"({ratio})^({1 / gap})"


def _polynomial_text(net: Network, form: ReducedForm) -> str:
    name = net.species[form.variable]
    labels = net.rate_labels()
    out = ""
    for e in form.exponents():
        mono = "" if e == 0 else (name if e == 1 else f"{name}^{e}")
        for k, m in form.terms[e]:
            m = Fraction(m)
            mag = labels[k] if abs(m) == 1 else f"{abs(m)}*{labels[k]}"
            term = f"{mag}*{mono}" if mono else mag
            if not out:
                out = term if m > 0 else f"-{term}"
            else:
                out += f" + {term}" if m > 0 else f" - {term}"
    return out


def _diagrams(net: Network) -> dict:
    out = {}
    for i, lab in enumerate(net.species):
        emb = project(net, i).result
        out[lab] = arrow_diagram(emb).ascii() if emb.n_reactions else None
    return out


def two_species_arrow_condition(net: Network) -> bool:
    """One projection is (<->.) and the other is (->, <-) or (<-, ->)."""
    tags = sorted(
        arrow_diagram(project(net, i).result).tags if project(net, i).result.n_reactions else ""
        for i in range(net.n_species))
    return net.n_species == 2 and tags in (["B", "LR"], ["B", "RL"])


# ---------------------------------------------------------------- positive steady states

def positive_steady_state_exists(net: Network) -> bool:
    """Whether some positive rate constants admit a positive steady state.

    For one-dimensional networks this holds exactly when two reaction vectors
    point in opposite directions.
    """
    if net.n_reactions == 0:
        return True
    dim = stoichiometric_dimension(net)
    if dim != 1:
        if net.n_reactions == 2:
            return False
        raise UnclassifiedError("existence of positive steady states is decided only for one-dimensional networks")
    vecs = [r.vector for r in net.reactions]
    ref = next(i for i in range(net.n_species) if any(v[i] for v in vecs))
    signs = {v[ref] > 0 for v in vecs if v[ref] != 0}
    return len(signs) == 2


# ---------------------------------------------------------------- one species

def decide_one_species(net: Network) -> AcrVerdict:
    d = arrow_diagram(net)  # raises for empty or multi-species networks
    axis = is_one_species(net)
    pattern = classify_arrow_pattern(d)
    trio = two_alternating_witness(net)
    evidence = {
        "theorem": "one-species arrow-diagram classification",
        "arrow_diagram": d.ascii(),
        "pattern": pattern.value,
    }
    if trio is not None:
        evidence["two_alternating_subnetwork"] = [
            f"{render_complex(net.species, net.reactions[k].reactant)} -> "
            f"{render_complex(net.species, net.reactions[k].product)}" for k in trio
        ]
    acr_by_pattern = pattern.has_acr
    acr_by_search = trio is None and pattern is not ArrowPattern.ALL_BOTH
    if acr_by_pattern != acr_by_search:
        raise InvariantViolation(f"pattern {pattern.value} disagrees with two-alternating search")
    if not acr_by_pattern:
        evidence["reason"] = ("all reactant complexes react in both directions"
                              if pattern is ArrowPattern.ALL_BOTH else "contains a two-alternating subnetwork")
        return AcrVerdict(Status.NO_ACR, evidence=evidence)
    if not pattern.admits_positive_steady_state:
        return AcrVerdict(Status.VACUOUS, evidence=evidence)
    form = reduced_terms(net, axis)
    value = acr_value_expression(net, form)
    status = Status.STABLE_ACR if pattern.is_stable_form else Status.ACR
    return AcrVerdict(status, axis, (axis,), value, _polynomial_text(net, form), evidence=evidence)


# ---------------------------------------------------------------- one-dimensional

def decide_one_dimensional(net: Network) -> AcrVerdict:
    """Complete ACR and stable-ACR decision for networks with a one-dimensional stoichiometric subspace."""
    if stoichiometric_dimension(net) != 1:
        raise NotOneDimensionalError("network is not one-dimensional")
    evidence: dict = {"theorem": "one-dimensional classification", "arrow_diagrams": _diagrams(net)}
    if not positive_steady_state_exists(net):
        evidence["reason"] = "all reaction vectors point the same way"
        return AcrVerdict(Status.VACUOUS, evidence=evidence)
    diff = differing_species(net)
    evidence["reactants_differ_in"] = [net.species[i] for i in diff]
    if len(diff) >= 2:
        evidence["reason"] = "reactant complexes differ in more than one species"
        return AcrVerdict(Status.NO_ACR, evidence=evidence)
    if not diff:
        evidence["reason"] = "all reactions share one reactant; rates can be balanced to make every positive point a steady state"
        return AcrVerdict(Status.NO_ACR, evidence=evidence)
    j = diff[0]
    form = reduced_terms(net, j)
    signs = form.signs()
    evidence["sign_pattern"] = "".join({1: "+", -1: "-", 0: "±"}[s] for s in signs)
    if all(s == 0 for s in signs) or sign_pattern_alternates(signs):
        evidence["reason"] = ("every coefficient can vanish" if all(s == 0 for s in signs)
                              else "coefficient signs can alternate twice")
        return AcrVerdict(Status.NO_ACR, evidence=evidence)
    value = acr_value_expression(net, form)
    poly = _polynomial_text(net, form)
    if j in catalyst_only_species(net):
        evidence["reason"] = "ACR species is catalyst-only; every positive steady state is degenerate"
        return AcrVerdict(Status.ACR_DEGENERATE_ONLY, j, (j,), value, poly, evidence=evidence)
    pattern = classify_arrow_pattern(arrow_diagram(project(net, j).result))
    evidence["pattern"] = pattern.value
    if not pattern.has_acr:
        raise InvariantViolation("projection pattern disagrees with the coefficient sign pattern")
    status = Status.STABLE_ACR if pattern.is_stable_form else Status.ACR
    return AcrVerdict(status, j, (j,), value, poly, evidence=evidence)


# ---------------------------------------------------------------- two reactions

def decide_two_reactions(net: Network) -> AcrVerdict:
    if net.n_reactions != 2:
        raise WrongReactionCountError(f"expected 2 reactions, got {net.n_reactions}")
    sf = shinar_feinberg_criterion(net)
    if not positive_steady_state_exists(net):
        v = AcrVerdict(Status.VACUOUS, evidence={
            "theorem": "two-reaction classification",
            "reason": "reaction vectors are not opposite multiples of each other",
        })
        v.evidence["sf_report"] = sf.to_json(net)
        return v
    if is_one_species(net) is not None:
        v = decide_one_species(net)
    else:
        v = decide_one_dimensional(net)
        v.evidence["theorem"] = "two-reaction classification"
    v.evidence["sf_report"] = sf.to_json(net)
    cats = catalyst_only_species(net)
    if not cats and net.n_species >= 2 and sf.satisfied != v.status.substantive_acr:
        raise InvariantViolation("two-reaction verdict disagrees with the deficiency-one criterion")
    if net.n_species == 2 and not cats:
        cond = two_species_arrow_condition(net)
        v.evidence["arrow_condition"] = cond
        if cond != v.status.substantive_acr:
            raise InvariantViolation("two-species verdict disagrees with the arrow-diagram condition")
    if v.status.substantive_acr:
        _attach_family(v, net)
    return v


def _attach_family(v: AcrVerdict, net: Network) -> None:
    from .operations import canonicalize

    try:
        v.family, v.trace = canonicalize(net)
    except UnclassifiedError as e:
        v.evidence["canonical_form"] = str(e)


# ---------------------------------------------------------------- dispatcher

def decide(net: Network) -> AcrVerdict:
    """Verdict from the most specific classified class the network belongs to."""
    if net.n_reactions == 0:
        return AcrVerdict(Status.NO_ACR, evidence={"reason": "no reactions: every positive point is a steady state"})
    if is_one_species(net) is not None:
        v = decide_one_species(net)
        if net.n_reactions == 2 and v.status.substantive_acr:
            _attach_family(v, net)
        return v
    if net.n_reactions == 2:
        return decide_two_reactions(net)
    if stoichiometric_dimension(net) == 1:
        return decide_one_dimensional(net)
    sf = shinar_feinberg_criterion(net)
    evidence = {
        "reason": "network lies outside the classified classes",
        "sf_report": sf.to_json(net),
    }
    if sf.satisfied:
        evidence["sufficient_condition"] = f"deficiency-one criterion implies ACR in {net.species[sf.nonterminal_pair[2]]}"
    return AcrVerdict(Status.UNCLASSIFIED, evidence=evidence)


__all__ = [
    "AcrVerdict",
    "AcrkitError",
    "SFCriterionReport",
    "Status",
    "acr_value_expression",
    "decide",
    "decide_one_dimensional",
    "decide_one_species",
    "decide_two_reactions",
    "positive_steady_state_exists",
    "shinar_feinberg_criterion",
    "two_species_arrow_condition",
]
