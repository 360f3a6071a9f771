import json

import pytest

from edvtrees import FamilyParams, IndexKind, IndexSpec, canonical_code, edge_division_vector, is_isomorphic
from edvtrees.enumeration import ClassSpec, EnumerationError
from edvtrees.verify import (
    CHAIN_CLAIMS,
    CLAIM_IDS,
    EXTREMAL_CLAIMS,
    TABLE2_INDICES,
    ExtremalClaim,
    VerificationReport,
    find_equivalent_nonisomorphic,
    reproduce_table4,
    run_claim,
    search_open_cells,
    verify_chain,
    verify_closed_forms,
    verify_extremal,
    verify_hyperwiener_divergence,
    verify_index_transfer,
    verify_lemmas,
    verify_similarity_criterion,
    verify_structure,
)


@pytest.mark.parametrize("claim_id", sorted(EXTREMAL_CLAIMS))
def test_extremal_claims_hold(claim_id):
    rep = verify_extremal(claim_id, n_max=10)
    assert rep.status == "pass", rep.to_text()
    assert rep.checked > 0 and rep.passed == rep.checked


def test_harness_catches_a_false_claim(monkeypatch):
    # claim the path is the least caterpillar: must fail with replayable details
    bogus = ExtremalClaim("Bogus", "wrong on purpose", ClassSpec.caterpillars, lambda n: range(2, n),
                          lambda n, k: [("min", FamilyParams.double_star_path(n, 1, n - k - 1, k))],
                          universe="cat:n:k")
    monkeypatch.setitem(EXTREMAL_CLAIMS, "Bogus", bogus)
    rep = verify_extremal("Bogus", n_max=7)
    assert rep.status == "fail"
    assert rep.passed + len(rep.failures) == rep.checked
    f = rep.failures[0]
    assert {"canonical_code", "vector", "expected", "observed", "n"} <= set(f)


@pytest.mark.parametrize("chain_id", CHAIN_CLAIMS)
def test_chains_strictly_increase(chain_id):
    rep = verify_chain(chain_id, n_max=14)
    assert rep.status == "pass", rep.to_text()


@pytest.mark.parametrize("lemma", ["Lem-4.1", "Lem-4.2", "Lem-5.1"])
def test_transformation_lemmas(lemma):
    rep = verify_lemmas(lemma, n_max=12)
    assert rep.status == "pass", rep.to_text()


def test_structure_facts():
    assert verify_structure(10).status == "pass"


def test_similarity_criterion():
    rep = verify_similarity_criterion(8)
    assert rep.status == "pass", rep.to_text()


@pytest.mark.parametrize("spec", TABLE2_INDICES, ids=lambda s: s.label)
def test_index_transfer(spec):
    rep = verify_index_transfer(spec, 8)
    assert rep.status == "pass", rep.to_text()


def test_index_transfer_neither_is_not_applicable():
    rep = verify_index_transfer(IndexSpec(IndexKind.ModifiedWiener, lam=0.0), 7)
    assert rep.status == "not applicable" and rep.checked == 0


def test_table4_and_closed_forms():
    rep = reproduce_table4()
    assert rep.status == "pass" and rep.checked == 56
    cf = verify_closed_forms(n_max=20)
    assert cf.status == "pass"
    assert cf.data["broom_outer_matches"] == cf.data["broom_outer_cells"]
    assert any("reported, not asserted" in n for n in cf.notes)


@pytest.mark.parametrize("n, count", [(6, 0), (7, 1), (8, 3), (9, 18), (10, 53)])
def test_equal_vector_pair_counts(n, count):
    pairs = find_equivalent_nonisomorphic(n)
    assert len(pairs) == count
    for a, b in pairs:
        assert edge_division_vector(a) == edge_division_vector(b)
        assert not is_isomorphic(a, b)


def test_equal_vector_fixtures(equal_vector_pair):
    t1, t2 = equal_vector_pair
    assert str(edge_division_vector(t1)) == str(edge_division_vector(t2)) == "(4,3,2,1,0)"
    hits = [(a, b) for a, b in find_equivalent_nonisomorphic(11) if edge_division_vector(a).r == (4, 3, 2, 1, 0)]
    assert len(hits) == 1
    a, b = hits[0]
    assert {canonical_code(a), canonical_code(b)} == {canonical_code(t1), canonical_code(t2)}


def test_hyperwiener_divergence_is_flagged():
    rep = verify_hyperwiener_divergence(8)
    assert rep.status == "empirical"
    assert rep.data["P4"] == {"edge_form": "22", "pairwise": 15}
    assert rep.data["diverging_trees"] == 46
    assert any(n.startswith("DIVERGENCE") for n in rep.notes)


def test_open_cells_are_empirical():
    rep = search_open_cells(8)
    assert rep.status == "empirical" and rep.checked > 0


def test_report_schema_and_determinism():
    a = run_claim("Thm-6.2", n_max=9)[0].to_dict()
    b = run_claim("Thm-6.2", n_max=9)[0].to_dict()
    a.pop("runtime"), b.pop("runtime")
    assert a == b
    assert set(a) >= {"claim_id", "universe", "counts", "status", "failures", "notes"}
    assert set(a["counts"]) == {"checked", "passed", "failed"}
    json.loads(run_claim("Table-4")[0].to_json())


def test_report_status_rules():
    r = VerificationReport("x", "u")
    assert r.status == "not applicable"
    r.record(True)
    r.record(False, {"why": "test"})
    r.finalize()
    assert (r.status, r.checked, r.passed, r.ok) == ("fail", 2, 1, False)
    assert "failure: why=test" in r.to_text()


def test_parallel_matches_serial():
    serial = verify_extremal("Thm-4.1", n_max=9, workers=1)
    parallel = verify_extremal("Thm-4.1", n_max=9, workers=2)
    assert (serial.checked, serial.status) == (parallel.checked, parallel.status)


def test_run_claim_routes_everything():
    assert len(CLAIM_IDS) == len(set(CLAIM_IDS))
    with pytest.raises(KeyError):
        run_claim("Thm-99")
    with pytest.raises(EnumerationError, match="cap"):
        run_claim("Thm-4.1", n_max=12, cap=10)
