import math
from fractions import Fraction

import pytest

from edvtrees import FamilyParams, Tree, construct, free_trees
from edvtrees.indices import (
    ClosedFormError,
    IndexKind,
    IndexSpec,
    MonotoneClass,
    ValueKind,
    broom_case,
    closed_form_wiener,
    index_value,
    monotone_class,
    pairwise_index_oracle,
    parse_index,
    steiner_bruteforce,
    wiener_broom,
    wiener_bruteforce,
    wiener_max_by_pendants,
    wiener_max_caterpillar,
    wiener_min_caterpillar,
    wiener_starlike,
)

P3 = construct(FamilyParams.path(3))
P4 = construct(FamilyParams.path(4))
S4 = construct(FamilyParams.star(4))
W = IndexSpec(IndexKind.Wiener)


def test_small_values():
    assert index_value(P3, IndexSpec(IndexKind.Gutman)) == 6
    assert index_value(P3, IndexSpec(IndexKind.DegreeDistance)) == 10
    assert index_value(S4, IndexSpec(IndexKind.ABC2)) == pytest.approx(math.sqrt(6), rel=1e-9)
    assert index_value(construct(FamilyParams.star(6)), W) == 25
    assert index_value(construct(FamilyParams.starlike(7, 3)), W) == 48
    assert index_value(construct(FamilyParams.single_cluster(7, 4, 2)), W) == 40


def test_hyperwiener_forms_differ():
    assert index_value(P4, IndexSpec(IndexKind.HyperWienerEdgeForm)) == 22
    assert index_value(P4, IndexSpec(IndexKind.HyperWienerPairwise)) == 15
    assert pairwise_index_oracle(P4, "HyperWienerPairwise") == 15


def test_value_kinds():
    assert isinstance(index_value(P4, W), int)
    assert isinstance(index_value(P4, IndexSpec(IndexKind.HyperWienerEdgeForm)), (int, Fraction))
    assert isinstance(index_value(P4, IndexSpec(IndexKind.ModifiedWiener, lam=2.0)), float)
    assert IndexSpec(IndexKind.HyperWienerEdgeForm).value_kind is ValueKind.ExactRational
    assert IndexSpec(IndexKind.ABC2).value_kind is ValueKind.Floating


def test_degenerate_orders():
    single = Tree(1, [])
    for kind in (IndexKind.Wiener, IndexKind.Gutman, IndexKind.ABC2):
        assert index_value(single, IndexSpec(kind)) == 0
    assert index_value(construct(FamilyParams.path(2)), IndexSpec(IndexKind.ABC2)) == 0.0
    with pytest.raises(ValueError, match="exceeds"):
        index_value(P3, IndexSpec(IndexKind.SteinerKWiener, k=4))


@pytest.mark.parametrize("text, label", [
    ("wiener", "wiener"), ("mwiener:-0.5", "mwiener:-0.5"), ("steiner:3", "steiner:3"),
    ("VWIENER:2", "vwiener:2"), ("abc2", "abc2"),
])
def test_parse_index(text, label):
    assert parse_index(text).label == label


@pytest.mark.parametrize("text", ["nope", "mwiener", "steiner:1", "wiener:2", "mwiener:inf"])
def test_parse_index_errors(text):
    with pytest.raises(ValueError):
        parse_index(text)


@pytest.mark.parametrize("spec, expected", [
    (IndexSpec(IndexKind.Wiener), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.ModifiedWiener, lam=2.0), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.ModifiedWiener, lam=-1.0), MonotoneClass.Decreasing),
    (IndexSpec(IndexKind.ModifiedWiener, lam=0.0), MonotoneClass.Neither),
    (IndexSpec(IndexKind.VariableWiener, lam=2.0), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.VariableWiener, lam=0.5), MonotoneClass.Decreasing),
    # 1/x + 1/(n-x) falls on [1, n/2], so f = 1/n - that rises
    (IndexSpec(IndexKind.VariableWiener, lam=-1.0), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.VariableWiener, lam=1.0), MonotoneClass.Neither),
    (IndexSpec(IndexKind.SteinerKWiener, k=3), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.HyperWienerEdgeForm), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.WienerHosoya), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.DegreeDistance), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.Gutman), MonotoneClass.Increasing),
    (IndexSpec(IndexKind.ABC2), MonotoneClass.Decreasing),
    (IndexSpec(IndexKind.HyperWienerPairwise), MonotoneClass.Neither),
])
def test_monotone_classes(spec, expected):
    assert monotone_class(spec, 12) is expected


@pytest.mark.parametrize("n", range(2, 13))
def test_wiener_and_pairwise_identities(n):
    for t in free_trees(n):
        assert index_value(t, W) == wiener_bruteforce(t)
        assert index_value(t, IndexSpec(IndexKind.DegreeDistance)) == pairwise_index_oracle(t, "DegreeDistancePairwise")
        assert index_value(t, IndexSpec(IndexKind.Gutman)) == pairwise_index_oracle(t, "GutmanPairwise")


@pytest.mark.parametrize("n", range(2, 11))
def test_steiner_matches_bruteforce(n):
    for k in range(2, min(4, n) + 1):
        spec = IndexSpec(IndexKind.SteinerKWiener, k=k)
        for t in free_trees(n):
            assert index_value(t, spec) == steiner_bruteforce(t, k)


def test_steiner_two_is_wiener():
    for t in free_trees(9):
        assert index_value(t, IndexSpec(IndexKind.SteinerKWiener, k=2)) == index_value(t, W)


def test_hyperwiener_forms_agree_only_on_p2():
    disagree = agree = 0
    for n in range(2, 9):
        for t in free_trees(n):
            e = index_value(t, IndexSpec(IndexKind.HyperWienerEdgeForm))
            p = index_value(t, IndexSpec(IndexKind.HyperWienerPairwise))
            if e == p:
                agree += 1
            else:
                disagree += 1
    assert (agree, disagree) == (1, 46)


@pytest.mark.parametrize("n", range(4, 21))
def test_caterpillar_closed_forms(n):
    for k in range(2, n):
        lo = construct(FamilyParams.single_cluster(n, k, (k + 1) // 2))
        m = n - k
        hi = construct(FamilyParams.double_star_path(n, m // 2, m - m // 2, k))
        assert wiener_min_caterpillar(n, k) == wiener_bruteforce(lo)
        assert wiener_max_caterpillar(n, k) == wiener_bruteforce(hi)


@pytest.mark.parametrize("n", range(5, 21))
def test_pendant_and_broom_closed_forms(n):
    for q in range(3, n - 1):
        assert wiener_starlike(n, q) == wiener_bruteforce(construct(FamilyParams.starlike(n, q)))
        t = construct(FamilyParams.double_star_path(n, q // 2, q - q // 2, n - q))
        assert wiener_max_by_pendants(n, q) == wiener_bruteforce(t)
    for d in range(3, n):
        assert wiener_broom(n, d) == wiener_bruteforce(construct(FamilyParams.broom(n, d)))


def test_broom_cases():
    assert broom_case(10, 5) == "even-middle"
    assert broom_case(11, 5) == "odd-lower"
    assert broom_case(11, 6) == "odd-upper"
    assert broom_case(11, 3) == "outer"
    assert broom_case(11, 9) == "outer"


def test_closed_form_dispatch():
    assert closed_form_wiener(FamilyParams.single_cluster(7, 4, 2)) == 40
    assert closed_form_wiener(FamilyParams.starlike(7, 3)) == 48
    with pytest.raises(ClosedFormError, match="centre"):
        closed_form_wiener(FamilyParams.single_cluster(9, 5, 1))
    with pytest.raises(ClosedFormError, match="balanced"):
        closed_form_wiener(FamilyParams.double_star_path(9, 1, 3, 5))
    with pytest.raises(ClosedFormError):
        closed_form_wiener(FamilyParams.path(6))


@pytest.mark.parametrize("n", range(2, 13))
def test_degree_distance_and_gutman_from_wiener(n):
    for t in free_trees(n):
        w = index_value(t, W)
        assert pairwise_index_oracle(t, "DegreeDistancePairwise") == 4 * w - n * (n - 1)
        assert pairwise_index_oracle(t, "GutmanPairwise") == 4 * w - (2 * n - 1) * (n - 1)
        assert index_value(t, IndexSpec(IndexKind.ModifiedWiener, lam=1.0)) == w


@pytest.mark.parametrize("n", range(4, 51))
def test_monotone_classes_over_orders(n):
    for lam in (-2.0, -1.0, -0.5):
        assert monotone_class(IndexSpec(IndexKind.ModifiedWiener, lam=lam), n) is MonotoneClass.Decreasing
    for lam in (0.5, 2.0):
        assert monotone_class(IndexSpec(IndexKind.ModifiedWiener, lam=lam), n) is MonotoneClass.Increasing
    vw = {lam: monotone_class(IndexSpec(IndexKind.VariableWiener, lam=lam), n) for lam in (-1.0, 0.5, 2.0)}
    assert vw == {-1.0: MonotoneClass.Increasing, 0.5: MonotoneClass.Decreasing, 2.0: MonotoneClass.Increasing}
