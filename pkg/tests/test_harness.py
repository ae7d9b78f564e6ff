import json

import pytest

from loopforge.core import cyclic_group, symmetric_group_3
from loopforge.errors import UnknownClaim
from loopforge.harness import CLAIMS, Scope, claim_ids, find_counterexample, get_claim, replay, sample, verify

# Claims whose literal form fails on small loops; each documents a reading.
EXPECTED_FAILURES = {"thm3.4-forall", "thm3.2-mech", "lem3.2-printed", "cor3.6-circ"}


def test_registry():
    ids = claim_ids()
    assert len(ids) == len(set(ids)) == len(CLAIMS)
    for cid in ("thm3.1a", "thm3.2", "lem3.4", "lem3.5", "thm3.4", "cor3.7"):
        assert cid in ids
    with pytest.raises(UnknownClaim):
        get_claim("thm9.9")


def test_suffix_selects_conclusions():
    c = get_claim("lem3.4c")
    assert c.conclusion_names and all(n.split(":")[0] == "c" for n in c.conclusion_names)
    assert c.hypothesis_names == get_claim("lem3.4").hypothesis_names
    with pytest.raises(UnknownClaim):
        get_claim("lem3.4z")


@pytest.mark.parametrize("cid", claim_ids())
def test_every_claim_at_order_5(cid):
    r = verify(cid, Scope.up_to(5))
    if cid in EXPECTED_FAILURES:
        assert r.status == "counterexample"
        for w in r.witnesses:
            assert replay(cid, w) == w["failed"]
    else:
        assert r.status == "confirmed-exhaustive", r.render()
    assert r.passed + r.vacuity == r.instances
    assert r.stages[-1][1] == r.passed


def test_vacuous_scope_is_flagged(caplog):
    r = verify("lem3.3", Scope.up_to(2))
    assert r.status == "vacuous"
    assert not r.ok
    assert "vacuous" in caplog.text


def test_thm31a_z3_witnesses():
    r = verify("thm3.1a", Scope(loops=(cyclic_group(3),)))
    assert r.passed == 3 and r.status == "confirmed-exhaustive"
    r = verify("thm3.1a", Scope(loops=(cyclic_group(3),), pairs=((1, 1),)))
    assert r.instances == 1 and r.passed == 1


def test_threads_do_not_change_reports():
    a = verify("lem3.2", Scope.up_to(5), threads=1).to_json()
    b = verify("lem3.2", Scope.up_to(5), threads=3).to_json()
    assert a == b


def test_report_serialization():
    r = verify("thm3.2-mech", Scope.up_to(4))
    data = json.loads(r.dumps())
    assert data["status"] == "counterexample"
    assert data["witnesses"][0]["table"] == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert "first witness" in r.render()
    assert set(data["per_order"]) == {"1", "2", "3", "4"}


def test_noncentral_translation_breaks_unconditional_claim():
    r = verify("thm3.3", Scope(loops=(symmetric_group_3(),)))
    assert r.status == "counterexample"


def test_sampling_is_deterministic():
    a = sample("thm3.1a", 300, seed=5).to_json()
    b = sample("thm3.1a", 300, seed=5).to_json()
    assert a == b
    assert a["status"] == "confirmed-sampled" and a["instances"] == 300


def test_find_counterexample():
    assert find_counterexample("lem2.2", 500, seed=1) is None
    assert find_counterexample("thm3.1a", 0, seed=1) is None
    w = find_counterexample("lem3.2-printed", 2000, seed=1)
    assert w is not None
    assert replay("lem3.2-printed", w) == w["failed"]
