import pytest

from edvtrees import (
    FamilyError,
    FamilyKind,
    FamilyParams,
    Relation,
    TreeFormatError,
    canonical_code,
    compare_trees,
    construct,
    edge_division_vector,
    edge_move,
    edge_shift,
    branch_shift,
    is_isomorphic,
    parse_family,
)
from edvtrees.families import format_family, normalize, spine


def cat(n, *comp):
    return construct(FamilyParams.caterpillar(n, comp))


def dsp(n, a, b, k=None):
    return FamilyParams.double_star_path(n, a, b, k)


def test_caterpillar_vector():
    t = cat(7, 1, 0, 3)
    assert edge_division_vector(t).r == (4, 1, 1)


def test_caterpillar_composition_must_match_order():
    with pytest.raises(FamilyError, match="composition"):
        construct(FamilyParams.caterpillar(7, [1, 0, 2]))


def test_starlike_three_legs_of_two():
    t = construct(FamilyParams.starlike(7, 3))
    assert t.degree(0) == 3
    assert sorted(t.degrees()) == [1, 1, 1, 2, 2, 2, 3]


def test_starlike_legs_balanced():
    t = construct(FamilyParams.starlike(12, 4))  # 11 = 4*2 + 3
    assert t.degree(0) == 4
    # leaves sit at distances 2,3,3,3 from the hub
    from edvtrees.indices import distance_matrix
    d = distance_matrix(t)[0]
    assert sorted(d[v] for v in range(12) if t.degree(v) == 1) == [2, 3, 3, 3]


def test_cluster_caterpillar_is_path_plus_pendants():
    t = construct(FamilyParams.single_cluster(7, 4, 2))
    assert t.degree(1) == 5 and [t.degree(v) for v in (0, 2, 3)] == [1, 2, 1]


def test_cluster_position_canonicalised():
    assert FamilyParams.single_cluster(9, 5, 4).s == 2
    assert canonical_code(construct(FamilyParams.single_cluster(9, 5, 4))) == canonical_code(
        construct(FamilyParams.single_cluster(9, 5, 2)))


@pytest.mark.parametrize("params, fragment", [
    (FamilyParams.starlike(5, 5), "q"),
    (FamilyParams.broom(5, 2), "delta"),
    (FamilyParams.double_star_path(6, 2, 3, 2), "a \\+ b \\+ k"),
    (FamilyParams.caterpillar(3, []), "k >= 1"),
    (FamilyParams(FamilyKind.SingleClusterCaterpillar, 6, k=4, s=3), "s"),
])
def test_parameter_errors(params, fragment):
    with pytest.raises(FamilyError, match=fragment):
        construct(params)


def test_broom_shape():
    t = construct(FamilyParams.broom(9, 4))
    assert max(t.degrees()) == 4
    assert is_isomorphic(t, construct(dsp(9, 1, 3)))


def test_degenerate_families():
    assert is_isomorphic(construct(dsp(6, 2, 3, 1)), construct(FamilyParams.star(6)))
    assert is_isomorphic(construct(FamilyParams.single_cluster(8, 2, 1)), construct(FamilyParams.star(8)))
    assert normalize(FamilyParams.single_cluster(8, 3, 2)).kind is FamilyKind.Star
    assert normalize(dsp(6, 1, 1)).kind is FamilyKind.Path
    assert normalize(dsp(7, 1, 2)).kind is FamilyKind.DoubleStarPath


def test_construct_deterministic():
    p = FamilyParams.caterpillar(10, [2, 0, 1, 3])
    assert construct(p) == construct(p)
    assert spine(p) == [0, 1, 2, 3]


@pytest.mark.parametrize("text, expected", [
    ("P(5)", FamilyParams.path(5)),
    ("S(4)", FamilyParams.star(4)),
    ("CP(7,4)^2", FamilyParams.single_cluster(7, 4, 2)),
    ("CP(7,4)^{3}", FamilyParams.single_cluster(7, 4, 2)),
    ("CP(7; 1,0,3)", FamilyParams.caterpillar(7, [1, 0, 3])),
    ("DSP(9; 1,3; 5)", dsp(9, 1, 3, 5)),
    ("DSP(9; 1,3)", dsp(9, 1, 3, 5)),
    ("SP(10,3)", FamilyParams.starlike(10, 3)),
    ("BROOM(8,5)", FamilyParams.broom(8, 5)),
])
def test_parse_family(text, expected):
    assert parse_family(text) == expected
    assert parse_family(format_family(expected)) == expected


@pytest.mark.parametrize("text", ["Q(5)", "CP(5; a,b)", "SP(5,9)", "DSP(5;1)"])
def test_parse_family_errors(text):
    with pytest.raises(TreeFormatError):
        parse_family(text)


def test_branch_shift_caterpillar():
    t = cat(6, 1, 2, 0)
    out = branch_shift(t, [0, 1, 2], 2)
    assert is_isomorphic(out, cat(6, 1, 0, 2))


def test_branch_shift_keeps_branch_shapes():
    # spine 0-1-2-3; v2 holds a pendant plus a two-vertex branch; v4 holds two pendants
    from edvtrees import Tree
    t = Tree(9, [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (5, 6), (3, 7), (3, 8)])
    out = branch_shift(t, [0, 1, 2, 3], 2)
    expected = Tree(9, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (5, 6), (3, 7), (3, 8)])
    assert out == expected


def test_branch_shift_errors():
    t = cat(6, 1, 2, 0)
    with pytest.raises(FamilyError, match="need 1 <= t < k"):
        branch_shift(t, [0, 1, 2], 3)
    with pytest.raises(FamilyError, match="empty branch"):
        branch_shift(cat(6, 0, 2, 1), [0, 1, 2], 1)
    with pytest.raises(FamilyError, match="not an edge"):
        branch_shift(t, [0, 2, 1], 1)


def test_edge_shift_examples():
    assert is_isomorphic(edge_shift(dsp(9, 1, 3)), construct(dsp(9, 2, 2)))
    assert is_isomorphic(edge_shift(dsp(8, 2, 2)), construct(dsp(8, 3, 1)))
    with pytest.raises(FamilyError, match="b >= 1"):
        edge_shift(dsp(6, 2, 0))


def test_edge_shift_keeps_labels():
    p = dsp(9, 1, 3)
    before, after = construct(p), edge_shift(p)
    assert len(set(before.edges) ^ set(after.edges)) == 2


def test_edge_move_middle_of_p4_gives_star():
    t = construct(FamilyParams.path(4))
    out = edge_move(t, 1, 2)
    assert is_isomorphic(out, construct(FamilyParams.star(4)))
    assert edge_division_vector(out).r == (3, 0)


def test_edge_move_on_starlike_leg():
    t = construct(FamilyParams.starlike(7, 3))
    out = edge_move(t, 0, 1)  # hub to first vertex of a leg
    assert out.degree(0) == 4
    assert compare_trees(t, out).variant is Relation.StrictlyGreater


def test_edge_move_pendant_rejected():
    t = construct(FamilyParams.path(5))
    with pytest.raises(FamilyError, match="both sides >= 2"):
        edge_move(t, 0, 1)
    with pytest.raises(FamilyError, match="not an edge"):
        edge_move(t, 0, 2)


def test_transformations_do_not_mutate():
    t = cat(6, 1, 2, 0)
    snapshot = t.edges
    branch_shift(t, [0, 1, 2], 2)
    edge_move(construct(FamilyParams.path(6)), 2, 3)
    assert t.edges == snapshot


@pytest.mark.parametrize("n", range(4, 21))
def test_edge_shift_strictly_increases(n):
    for k in range(2, n):
        for a in range(n - k + 1):
            b = n - k - a
            if a + 2 <= b:
                p = dsp(n, a, b, k)
                assert compare_trees(construct(p), edge_shift(p)).variant is Relation.StrictlyLess


@pytest.mark.parametrize("n", range(4, 21))
def test_cluster_moves_towards_centre_decrease(n):
    for k in range(3, n):
        for s in range(1, k):
            if 2 * s < k:
                a = construct(FamilyParams.single_cluster(n, k, s))
                b = construct(FamilyParams.single_cluster(n, k, s + 1))
                assert compare_trees(a, b).variant is Relation.StrictlyGreater
