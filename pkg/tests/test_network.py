from fractions import Fraction

import pytest
from hypothesis import given, settings

from acrkit import (
    Network,
    Reaction,
    catalyst_only_species,
    conservation_basis,
    is_one_dimensional,
    is_one_species,
    network,
    parse_network,
    prune_inert,
    render_network,
    stoichiometric_dimension,
    stoichiometric_matrix,
    union,
)
from acrkit.errors import InvalidNetworkError, NetworkSyntaxError
from acrkit.linalg import RationalMatrix, null_space, rank, to_rational
from acrkit.network import enumerate_networks

from strategies import networks


def test_parse_basic_and_reversible():
    net = parse_network("0 <=> A\n2A -> 3A  # autocatalysis\n")
    assert net.species == ("A",)
    assert [(r.reactant, r.product) for r in net.reactions] == [((0,), (1,)), ((1,), (0,)), ((2,), (3,))]
    assert net.rate_labels() == ["k1", "k2", "k3"]


def test_species_pragma_order():
    net = parse_network("# species: A B C\nB -> A\n")
    assert net.species == ("A", "B", "C")
    assert net.reactions[0].reactant == (0, 1, 0)


@pytest.mark.parametrize("text, fragment", [
    ("", "empty"),
    ("# only a comment\n", "empty"),
    ("A -> A", "trivial"),
    ("A -> B\nA -> B", "duplicate"),
    ("A B", "expected"),
    ("A -> B -> C", "more than one arrow"),
    ("-1A -> B", ""),
    ("0A -> B", ""),
])
def test_parse_errors(text, fragment):
    with pytest.raises(NetworkSyntaxError) as info:
        parse_network(text)
    assert fragment in str(info.value)
    assert info.value.line >= 1


def test_rational_coefficients_need_generalized_mode():
    with pytest.raises(NetworkSyntaxError):
        parse_network("1/2A -> B")
    net = parse_network("1/2A -> B", strict=False)
    assert net.reactions[0].reactant == (Fraction(1, 2), 0)
    assert not net.is_strict


def test_network_validation():
    with pytest.raises(InvalidNetworkError):
        Network(("A",), (Reaction((1,), (1,)),))
    with pytest.raises(InvalidNetworkError):
        Network(("A",), (Reaction((-1,), (1,)),))
    with pytest.raises(InvalidNetworkError):
        Network(("A", "A"), (Reaction((1, 0), (0, 1)),))
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_equality_ignores_reaction_order():
    assert network("A -> B; 2A -> B") == network("2A -> B; A -> B")
    assert hash(network("A -> B; 2A -> B")) == hash(network("2A -> B; A -> B"))
    assert network("A -> B") != network("# species: A B\nB -> A")
    # species order is part of the identity
    assert network("A -> B; B -> A") != network("B -> A; A -> B")


def test_stoichiometric_matrix_and_conservation():
    net = network("B -> A; A + B -> 2B")
    gamma = stoichiometric_matrix(net)
    assert gamma.tolist() == [[-1, 1], [1, -1]]
    w = conservation_basis(net)
    assert w.d == 1
    assert (w.W @ gamma).is_zero()
    assert stoichiometric_dimension(net) == 1


def test_one_dimensional_and_one_species():
    assert is_one_dimensional(network("0 <=> A; 2A -> 3A"))
    assert is_one_species(network("0 <=> A")) == 0
    # a species fixed at one coefficient in every complex is only a translation
    assert network("B <=> A + B").species[is_one_species(network("B <=> A + B"))] == "A"
    assert is_one_species(network("B -> A + B; 2A + 3B -> A + 3B")) is None
    assert is_one_species(network("A -> B")) is None


def test_catalyst_only_and_prune():
    net = network("A + C -> 2A + C; A -> 0")
    assert catalyst_only_species(net) == frozenset({net.index("C")})
    assert prune_inert(net) == net
    padded = parse_network("# species: A B C\nA + C -> 2A + C\nA -> 0")
    assert catalyst_only_species(padded) == frozenset({1, 2})
    assert prune_inert(padded).species == ("A", "C")


def test_union_merges_by_label():
    with pytest.warns(UserWarning):
        u = union(network("0 <=> A"), network("2A <=> 3A"))
    assert u == network("0 <=> A; 2A <=> 3A")


def test_rref_rank_null_space():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(rows, 3) == 2
    ns = null_space(rows, 3)
    m = RationalMatrix.from_rows(rows)
    for v in ns:
        assert (m @ RationalMatrix.from_rows([[x] for x in v])).is_zero()


def test_enumeration_count():
    # 3 complexes {0, A, 2A}, 6 reactions, choose 2
    assert sum(1 for _ in enumerate_networks(1, 2, 2)) == 15


def test_render_uses_pragma_when_order_differs():
    net = Network.from_pairs(("A", "B"), [((0, 1), (1, 0))])
    text = render_network(net)
    assert text.startswith("# species: A B")
    assert parse_network(text) == net


# ---------------------------------------------------------------- properties

@settings(max_examples=200, deadline=None)
@given(networks())
def test_conservation_annihilates_stoichiometry(net):
    gamma = stoichiometric_matrix(net)
    w = conservation_basis(net)
    if w.d:
        assert (w.W @ gamma).is_zero()


@settings(max_examples=200, deadline=None)
@given(networks())
def test_rank_plus_conservation_is_species_count(net):
    assert stoichiometric_dimension(net) + conservation_basis(net).d == net.n_species


@settings(max_examples=200, deadline=None)
@given(networks())
def test_catalyst_only_is_zero_row(net):
    gamma = stoichiometric_matrix(net)
    zero_rows = frozenset(i for i in range(net.n_species) if not any(gamma.row(i)))
    assert catalyst_only_species(net) == zero_rows


@settings(max_examples=200, deadline=None)
@given(networks())
def test_render_parse_round_trip(net):
    assert parse_network(render_network(net)) == net
