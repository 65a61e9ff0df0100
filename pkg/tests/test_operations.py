import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from acrkit import network, stoichiometric_dimension
from acrkit.errors import (
    CreatesDuplicateReactionError,
    InvariantViolation,
    LeavesOrthantError,
    NonInvertibleError,
    OperationError,
    ZeroScaleFactorError,
)
from acrkit.operations import (
    Duplicate,
    Family,
    OperationTrace,
    PartialScale,
    Relabel,
    Stretch,
    Translate,
    apply_steps,
    canonicalize,
    compose_rate_maps,
    degenerate_acr,
    generalized_sf,
    invert_trace,
    ode_effect,
    op_from_json,
    op_to_json,
    rotation_metrics,
    zero_to_ma,
)
from acrkit.oracle import MassActionSystem, mass_action_odes

from strategies import networks

RATES = st.lists(st.fractions(min_value=Fraction(1, 8), max_value=8).filter(lambda v: v > 0),
                 min_size=8, max_size=8)


def test_translate_and_inverse():
    net = network("A + B -> 2B; 3A -> 2A + B")
    out = Translate((1, -1)).apply(Translate((1, 1)).apply(net))
    assert out == network("3A + B -> 2A + 2B; 5A -> 4A + B")
    assert Translate((-1, -1)).apply(Translate((1, 1)).apply(net)) == net


def test_relabel_moves_coordinates_not_labels():
    net = network("# species: A B\nB -> A")
    assert Relabel((1, 0)).apply(net) == network("# species: A B\nA -> B")


def test_stretch_and_partial_scale():
    net = network("A -> 2A; 3A -> A")
    assert Stretch(1, Fraction(1, 2)).apply(net) == network("A -> 2A; 3A -> 2A")
    two = network("# species: A B\nB -> A; A + B -> 2B")
    assert PartialScale(0, 3).apply(Translate((2, 0)).apply(two)) == network("2A + B -> 5A; 3A + B -> 2B")
    assert PartialScale(0, -1).apply(network("A -> 2A; 3A -> 2A")) == network("A -> 0; 3A -> 4A")


def test_duplicate_inserts_parallel_reactions():
    net = network("A -> 2A; 3A -> 2A")
    assert Duplicate(1, 1, 2).apply(net) == network("A -> 2A; 3A -> 2A; 3A -> A")


@pytest.mark.parametrize("op, text, err", [
    (Translate((-1,)), "A -> 2A; 0 -> A", LeavesOrthantError),
    (PartialScale(0, -2), "A -> 2A", LeavesOrthantError),
    (Translate((0, 0, 0)), "A -> B", OperationError),
    (Relabel((1, 0, 2)), "A -> B", OperationError),
    (Duplicate(0, 1, 2), "A -> 2A; A -> 3A", CreatesDuplicateReactionError),
    (Stretch(5, 2), "A -> 2A", OperationError),
])
def test_operation_errors(op, text, err):
    with pytest.raises(err):
        op.apply(network(text))


def test_constructor_errors():
    with pytest.raises(OperationError):
        Relabel((0, 0))
    with pytest.raises(ZeroScaleFactorError):
        Stretch(0, 0)
    with pytest.raises(ZeroScaleFactorError):
        PartialScale(0, 0)
    with pytest.raises(CreatesDuplicateReactionError):
        Duplicate(0, 2, 2)
    with pytest.raises(NonInvertibleError):
        Duplicate(0, 1, 2).inverse()


def test_stretch_onto_existing_reaction():
    with pytest.raises(CreatesDuplicateReactionError):
        Stretch(0, 2).apply(network("A -> 2A; A -> 3A"))


def test_error_reports_step_index():
    with pytest.raises(LeavesOrthantError, match="step 1"):
        apply_steps(network("A -> 2A; 3A -> A"), [Translate((1,)), Translate((-3,))])


@pytest.mark.parametrize("op", [
    Relabel((1, 0)), Translate((Fraction(1, 2), -1)), Stretch(1, Fraction(3, 2)),
    Duplicate(0, Fraction(1, 3), 4), PartialScale(1, -1),
])
def test_json_roundtrip(op):
    assert op_from_json(json.loads(json.dumps(op_to_json(op)))) == op


def test_unknown_operation():
    with pytest.raises(OperationError):
        op_from_json({"op": "Rotate", "params": {}})


def test_trace_recorded_target_is_checked():
    net = generalized_sf(1)
    trace = OperationTrace.build(net, [Translate((1, 1))])
    data = trace.to_json()
    assert OperationTrace.from_json(data).target == trace.target
    data["target"] = "A -> B"
    with pytest.raises(InvariantViolation):
        OperationTrace.from_json(data)


def test_invert_trace():
    net = network("2A -> A; 3A -> 5A")
    trace = OperationTrace.build(net, [PartialScale(0, -1), Stretch(1, Fraction(1, 2)), Translate((-1,))])
    back = invert_trace(trace)
    assert back.target == net
    with pytest.raises(NonInvertibleError, match="step 0"):
        invert_trace(OperationTrace.build(net, [Duplicate(1, 2, 3)]))


# ---------------------------------------------------------------- ODE effects

def _odes(net, kappa):
    return mass_action_odes(MassActionSystem(net, tuple(kappa[:net.n_reactions])))


def _clean(rows):
    return [{m: c for m, c in row.items() if c != 0} for row in rows]


@settings(max_examples=150, deadline=None)
@given(networks(min_species=2, max_species=3, max_reactions=3), st.data(), RATES)
def test_ode_effects_are_coherent(net, data, kappa):
    s, r = net.n_species, net.n_reactions
    op = data.draw(st.one_of(
        st.builds(Stretch, st.integers(0, r - 1), st.sampled_from([Fraction(1, 2), 2, 3])),
        st.builds(Duplicate, st.integers(0, r - 1), st.just(Fraction(1, 2)), st.sampled_from([2, 3])),
        st.builds(Translate, st.tuples(*[st.integers(0, 2)] * s)),
        st.builds(PartialScale, st.integers(0, s - 1), st.sampled_from([-1, 2, Fraction(1, 2)])),
        st.builds(Relabel, st.permutations(range(s)).map(tuple)),
    ))
    try:
        new = op.apply(net)
    except OperationError:
        assume(False)
    effect = ode_effect(net, op)
    k_new = kappa[:new.n_reactions]
    k_old = effect.pullback(k_new)
    assert all(v > 0 for v in k_old)
    old_f = _odes(net, list(k_old))
    new_f = _odes(new, k_new)
    if isinstance(op, Translate):
        z = op.z
        old_f = [{tuple(a + b for a, b in zip(m, z)): c for m, c in row.items()} for row in old_f]
    if isinstance(op, PartialScale):
        i, f = op.species, Fraction(op.factor)
        old_f[i] = {m: f * c for m, c in old_f[i].items()}
    if isinstance(op, Relabel):
        p = op.perm
        old_f = [{tuple(m[p[i]] for i in range(s)): c for m, c in old_f[p[j]].items()} for j in range(s)]
    assert _clean(old_f) == _clean(new_f)


def test_forward_is_a_section_of_pullback():
    net = network("A -> 2A; 3A -> 2A")
    eff = ode_effect(net, Duplicate(1, 1, 3))
    k_old = (Fraction(2), Fraction(5))
    assert eff.pullback(eff.forward(k_old)) == k_old


def test_composed_rate_maps():
    net = network("A -> 2A; 3A -> 2A")
    steps = [Stretch(1, 2), Duplicate(0, 2, 3)]
    assert compose_rate_maps(net, steps) == [[(0, 2), (1, 3)], [(2, 2)]]


def test_rotation_metrics_alignment():
    net = network("B -> A; A + B -> 2B")
    m = rotation_metrics(net, 0, 2)
    assert m.common_angle


@settings(max_examples=200, deadline=None)
@given(networks(), st.data())
def test_operations_preserve_dimension(net, data):
    s, r = net.n_species, net.n_reactions
    op = data.draw(st.one_of(
        st.builds(Stretch, st.integers(0, r - 1), st.sampled_from([Fraction(1, 2), 2])),
        st.builds(Duplicate, st.integers(0, r - 1), st.just(1), st.just(2)),
        st.builds(Translate, st.tuples(*[st.integers(-1, 2)] * s)),
        st.builds(PartialScale, st.integers(0, s - 1), st.sampled_from([-1, 2])),
        st.builds(Relabel, st.permutations(range(s)).map(tuple)),
    ))
    try:
        new = op.apply(net)
    except OperationError:
        assume(False)
    assert stoichiometric_dimension(new) == stoichiometric_dimension(net)


# ---------------------------------------------------------------- canonical forms

@pytest.mark.parametrize("text, family, n_steps", [
    ("0 <=> 3A", "ZeroToMA(3)", 0),
    ("2A <=> 5A", "ZeroToMA(3)", 1),
    ("2A -> A; 3A -> 5A", "ZeroToMA(1)", 3),
    ("A -> 2A; A + 2B -> 2B", "DegenerateACR(2)", 0),
    ("B -> A; A + B -> 2B", "GeneralizedSF(1)", 1),
])
def test_canonicalize(text, family, n_steps):
    net = network(text)
    fam, trace = canonicalize(net)
    assert str(fam) == family
    assert len(trace.steps) == n_steps
    assert trace.replay(net) == fam.network(net.species)


def test_family_networks():
    assert zero_to_ma(2) == network("0 <=> 2A")
    assert generalized_sf(3) == network("# species: A B\nB -> A; 3A + B -> 2A + 2B")
    assert degenerate_acr(1) == network("A -> 2A; A + B -> B")
    assert Family.parse("GeneralizedSF(4)") == Family("GeneralizedSF", 4)
