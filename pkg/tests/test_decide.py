import json

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from acrkit import network
from acrkit.decide import (
    Status,
    acr_value_expression,
    decide,
    positive_steady_state_exists,
    shinar_feinberg_criterion,
    two_species_arrow_condition,
)
from acrkit.errors import ReactantsDifferInOtherSpeciesError
from acrkit.oracle import (
    MassActionSystem,
    find_multistationary_kappa,
    reduce_one_dimensional,
    reduced_terms,
    sample_kappa,
)
from acrkit.oracle.isolate import positive_roots

from strategies import one_dimensional_networks, one_species_networks


@pytest.mark.parametrize("text, status, witness, value, family", [
    ("A -> 2A; 2A -> A", Status.STABLE_ACR, "A", "k1/k2", "ZeroToMA(1)"),
    ("2A -> 3A; A -> 0", Status.ACR, "A", "k2/k1", "ZeroToMA(1)"),
    ("A -> 2A; A -> 0", Status.NO_ACR, None, None, None),
    ("0 <=> A; 2A -> 3A", Status.NO_ACR, None, None, None),
    ("A -> 2A", Status.VACUOUS, None, None, None),
    ("A -> 2A; A + 2B -> 2B", Status.ACR_DEGENERATE_ONLY, "B", "(k1/k2)^(1/2)", "DegenerateACR(2)"),
    ("0 -> A; 2A -> 0; 0 -> 2A; 3A -> 2A", Status.STABLE_ACR, "A", None, None),
    ("B -> A; A + B -> 2B; 2B -> A + B", Status.NO_ACR, None, None, None),
    ("A -> B; B -> 0; 0 -> A", Status.UNCLASSIFIED, None, None, None),
])
def test_verdicts(text, status, witness, value, family):
    net = network(text)
    v = decide(net)
    assert v.status is status
    assert (None if v.witness is None else net.species[v.witness]) == witness
    assert v.acr_value == value
    assert (None if v.family is None else str(v.family)) == family


def test_empty_network_has_no_acr():
    from acrkit import Network
    assert decide(Network(("A",), ())).status is Status.NO_ACR


def test_status_predicates():
    assert Status.VACUOUS.has_acr and not Status.VACUOUS.substantive_acr
    assert Status.ACR_DEGENERATE_ONLY.substantive_acr
    assert not Status.NO_ACR.has_acr and not Status.UNCLASSIFIED.has_acr


def test_json_report_fields():
    net = network("# species: A B\nB -> A; A + B -> 2B")
    out = decide(net).to_json(net)
    assert out["status"] == "StableACR" and out["witness"] == "A"
    assert out["family"] == "GeneralizedSF(1)"
    assert out["polynomial"] == "k1 - k2*A"
    ev = out["evidence"]
    for key in ("arrow_diagrams", "arrow_condition", "trace", "sf_report"):
        assert key in ev
    assert ev["arrow_diagrams"] == {"A": "(->, <-)", "B": "(<->.)"}
    json.dumps(out)


def test_unclassified_carries_sufficient_condition():
    net = network("A + B -> 2B; B -> A; 0 -> C; C -> 0")
    v = decide(net)
    assert v.status is Status.UNCLASSIFIED
    assert "sf_report" in v.evidence


def test_sf_criterion_pair():
    net = network("# species: A B\nB -> A; A + B -> 2B")
    rep = shinar_feinberg_criterion(net)
    assert rep.satisfied and rep.deficiency == 1
    a, b, i = rep.nonterminal_pair
    assert net.species[i] == "A" and {a, b} == {(0, 1), (1, 1)}
    assert not shinar_feinberg_criterion(network("0 <=> A")).satisfied


def test_arrow_condition():
    assert two_species_arrow_condition(network("B -> A; A + B -> 2B"))
    assert not two_species_arrow_condition(network("3A + 5B -> A + 6B; A + 3B -> 3A + B"))


def test_acr_value_only_for_binomials():
    form = reduced_terms(network("0 -> A; 2A -> 0; 0 -> 2A; 3A -> 2A"))
    assert acr_value_expression(network("0 -> A; 2A -> 0; 0 -> 2A; 3A -> 2A"), form) is None
    net = network("0 -> A; 0 -> 2A; 2A -> 0")
    assert acr_value_expression(net, reduced_terms(net)) == "((k1 + 2*k2)/(2*k3))^(1/2)"


def test_steady_state_existence():
    assert positive_steady_state_exists(network("A -> 2A; 3A -> 2A"))
    assert not positive_steady_state_exists(network("A -> 2A; 3A -> 4A"))
    assert not positive_steady_state_exists(network("3A + 5B -> A + 6B; A + 3B -> 3A + B"))


@settings(max_examples=200, deadline=None)
@given(one_species_networks())
def test_one_species_always_classified(net):
    v = decide(net)
    assert v.status is not Status.UNCLASSIFIED
    if v.status.substantive_acr:
        assert v.witness == 0


@settings(max_examples=200, deadline=None)
@given(one_dimensional_networks())
def test_one_dimensional_always_classified(net):
    v = decide(net)
    assert v.status is not Status.UNCLASSIFIED
    assert (v.status is Status.VACUOUS) == (not positive_steady_state_exists(net))


@settings(max_examples=600, deadline=None)
@given(one_dimensional_networks(max_reactions=4), st.randoms(use_true_random=False))
def test_one_dimensional_verdict_matches_oracle(net, rng):
    try:
        form = reduced_terms(net)
    except ReactantsDifferInOtherSpeciesError:
        assume(False)
    v = decide(net)
    j = form.variable
    orient = 1 if form.unit[j] > 0 else -1 if form.unit[j] < 0 else 0
    if v.status is Status.NO_ACR:
        kappa = find_multistationary_kappa(net)
        assert kappa is not None
        poly = reduce_one_dimensional(MassActionSystem(net, tuple(k if k > 0 else 1 for k in kappa)))
        if any(k == 0 for k in kappa):
            # rates of zero mark a continuum; every coefficient cancels
            assert all(s == 0 for s in form.signs())
        else:
            assert not poly.terms or positive_roots(poly).positive_root_count >= 2
        return
    for _ in range(10):
        poly = reduce_one_dimensional(MassActionSystem(net, sample_kappa(net, rng)))
        if v.status is Status.VACUOUS:
            assert not poly.terms or positive_roots(poly).positive_root_count == 0
            continue
        assert poly.terms
        rep = positive_roots(poly)
        assert rep.positive_root_count <= 1
        if v.status is Status.STABLE_ACR and rep.positive_root_count == 1:
            assert orient * rep.derivative_signs[0] < 0
        if v.status is Status.ACR and rep.positive_root_count == 1:
            assert orient * rep.derivative_signs[0] >= 0
        if v.status is Status.ACR_DEGENERATE_ONLY:
            assert orient == 0
