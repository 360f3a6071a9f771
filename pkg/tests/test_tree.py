import random

import pytest

from edvtrees import FamilyParams, Tree, TreeFormatError, canonical_code, construct, is_isomorphic, parse_tree, profile
from edvtrees.tree import (
    canonical_level_sequence,
    parse_edge_list,
    parse_level_sequence,
    to_edge_list,
    to_level_sequence,
)


def P(n):
    return construct(FamilyParams.path(n))


def S(n):
    return construct(FamilyParams.star(n))


def relabel(t, seed=0):
    perm = list(range(t.n))
    random.Random(seed).shuffle(perm)
    return Tree(t.n, [(perm[u], perm[v]) for u, v in t.edges])


def test_edge_list_path():
    t = parse_tree("0 1\n1 2\n2 3", "edge-list")
    assert t.n == 4 and is_isomorphic(t, P(4))


def test_family_expression_cluster():
    t = parse_tree("CP(7,4)^2", "family-expression")
    assert t.n == 7
    assert sorted(t.degrees()) == [1, 1, 1, 1, 1, 2, 5]


def test_cycle_reported_with_position():
    with pytest.raises(TreeFormatError, match="cycle") as ei:
        parse_tree("0 1\n0 2\n1 2", "edge-list")
    assert ei.value.line == 3


@pytest.mark.parametrize("text, fragment", [
    ("0 1\n2 3", "disconnected|cycle|out of range"),
    ("0 x", "integer"),
    ("0 1\n1 5", "out of range"),
    ("0 0", "self-loop"),
    ("0 1 2", "tokens"),
    ("", "empty"),
])
def test_malformed_edge_lists(text, fragment):
    with pytest.raises(TreeFormatError, match=fragment):
        parse_edge_list(text)


def test_single_vertex_and_comments():
    assert parse_edge_list("0\n").n == 1
    assert parse_edge_list("# c\n0 1  # tail\n").n == 2


def test_tree_constructor_rejects_non_trees():
    with pytest.raises(TreeFormatError):
        Tree(3, [(0, 1), (0, 1)])
    with pytest.raises(TreeFormatError):
        Tree(4, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(TreeFormatError):
        Tree(0, [])


def test_level_sequence_parse_and_errors():
    t = parse_level_sequence("0 1 2 1")
    assert t.n == 4 and is_isomorphic(t, P(4))
    assert is_isomorphic(parse_level_sequence("1 2 2 2"), S(4))
    with pytest.raises(TreeFormatError):
        parse_level_sequence("0 2")


def test_canonical_code_relabel_invariance():
    t = P(4)
    t2 = Tree(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_code(t) == canonical_code(t2)


def test_canonical_code_distinguishes():
    assert canonical_code(S(5)) != canonical_code(P(5))


def test_equal_vector_fixtures_not_isomorphic(equal_vector_pair):
    a, b = equal_vector_pair
    assert canonical_code(a) != canonical_code(b)


@pytest.mark.parametrize("expr", ["P(9)", "S(7)", "SP(10,3)", "CP(9; 2,0,1,2)", "BROOM(9,4)", "DSP(8; 1,2; 5)"])
def test_round_trips(expr):
    t = relabel(parse_tree(expr, "family-expression"), seed=3)
    assert canonical_code(parse_edge_list(to_edge_list(t))) == canonical_code(t)
    assert canonical_code(parse_level_sequence(to_level_sequence(t))) == canonical_code(t)
    assert canonical_level_sequence(relabel(t, 7)) == canonical_level_sequence(t)


def test_profile_path():
    p = profile(P(5))
    assert (p.diameter, p.pendant_count, p.max_degree, p.is_caterpillar, p.core_size) == (4, 2, 2, True, 3)


def test_profile_star():
    p = profile(S(6))
    assert (p.diameter, p.pendant_count, p.max_degree, p.is_caterpillar, p.core_size) == (2, 5, 5, True, 1)


def test_profile_starlike():
    p = profile(construct(FamilyParams.starlike(7, 3)))
    assert (p.diameter, p.pendant_count, p.max_degree, p.is_caterpillar, p.core_size) == (4, 3, 3, False, 4)


def test_profile_tiny_core_convention():
    assert profile(P(2)).core_size == 0
    assert profile(P(1)).core_size == 0
    assert profile(S(3)).core_size == 1


def test_labelled_equality_vs_isomorphism():
    a = Tree(3, [(0, 1), (1, 2)])
    b = Tree(3, [(0, 2), (2, 1)])
    assert a != b and is_isomorphic(a, b)
    assert a == Tree(3, [(2, 1), (1, 0)])
