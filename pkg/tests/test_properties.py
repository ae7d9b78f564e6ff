from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopforge.core import Permutation, cyclic_group, dihedral_group, direct_product, symmetric_group_3
from loopforge.errors import NotCommuting, NotWeakInverse
from loopforge.properties import (
    WIP_METHODS,
    centrum,
    element_traits,
    generated_group,
    has_aip,
    has_cip,
    has_cip_translational,
    has_ip,
    has_lip,
    has_rip,
    has_wip,
    is_weak_inverse_permutation,
    m_inverse_check,
    nuclei,
    recheck,
    weak_inverse_closure,
    weak_inverse_permutations,
    wip_report_method,
)

from conftest import relabeled_loop

ABELIAN = [cyclic_group(n) for n in range(1, 8)] + [direct_product(cyclic_group(2), cyclic_group(2))]
NONABELIAN = [symmetric_group_3(), dihedral_group(4)]


def test_groups():
    for G in ABELIAN + NONABELIAN:
        assert has_wip(G) and has_ip(G) and has_lip(G) and has_rip(G)
        assert all(nu == frozenset(range(G.n)) for nu in nuclei(G))
    for G in ABELIAN:
        assert has_cip(G) and has_aip(G)
        assert centrum(G) == frozenset(range(G.n))
    for G in NONABELIAN:
        assert not has_cip(G) and not has_aip(G)
    assert centrum(symmetric_group_3()) == {0}
    assert centrum(dihedral_group(4)) == {0, 2}


def test_z3_wip_report(z3):
    assert has_wip(z3).to_json() == {"property": "wip", "holds": True, "witness": None}


@given(relabeled_loop())
def test_wip_methods_agree(L):
    verdicts = {m: has_wip(L, m).holds for m in WIP_METHODS}
    assert len(set(verdicts.values())) == 1, verdicts


@given(relabeled_loop())
def test_witnesses_really_fail(L):
    reports = [wip_report_method(has_wip(L, m), m) for m in WIP_METHODS]
    reports += [has_cip(L), has_lip(L), has_rip(L), has_ip(L), has_aip(L)]
    reports += [m_inverse_check(L, m) for m in (-2, -1, 0, 1)]
    for r in reports:
        if not r.holds:
            assert recheck(L, r), r
        else:
            assert r.witness is None


def test_unknown_wip_method(z3):
    with pytest.raises(ValueError):
        has_wip(z3, "sideways")


@given(relabeled_loop())
def test_inverse_property_implications(L):
    # CIP, LIP + RIP and IP all force WIP
    if has_cip(L):
        assert has_wip(L)
    if has_ip(L):
        assert has_wip(L) and has_lip(L) and has_rip(L)
    assert has_cip(L).holds == has_cip_translational(L)


@given(relabeled_loop())
def test_m_inverse_special_cases(L):
    assert m_inverse_check(L, -1).holds == has_wip(L).holds
    assert m_inverse_check(L, 0).holds == has_cip(L).holds


@pytest.mark.parametrize("m", range(-4, 5))
def test_m_inverse_in_groups(m):
    # J is inversion: odd m gives (xy)^-1 x = y^-1, even m gives xy x^-1 = y
    for G in ABELIAN:
        assert m_inverse_check(G, m).holds
        assert m_inverse_check(G, m, side="left").holds
    for G in NONABELIAN:
        assert m_inverse_check(G, m).holds == (m % 2 == 1)


def test_element_traits_two_sided_only(small_loops):
    one_sided = [L for L in small_loops if L.j_rho != L.j_lambda]
    assert one_sided
    tr = element_traits(one_sided[0], 1)
    assert tr.rho_aipe is None and tr.lambda_aaipe is None
    S3 = symmetric_group_3()
    t1 = element_traits(S3, 1)
    assert t1.flexible and t1.left_alternative and t1.right_alternative
    assert not t1.centrum and not t1.rho_aipe and t1.rho_aaipe
    assert element_traits(S3, 0).rho_aipe


def test_weak_inverse_permutations_match_brute_force(small_loops):
    for L in small_loops:
        if L.n > 5:
            continue
        brute = [
            Permutation(p) for p in permutations(range(L.n))
            if is_weak_inverse_permutation(L, Permutation(p))[0]
        ]
        assert weak_inverse_permutations(L) == brute


@given(relabeled_loop(), st.data())
def test_weak_right_and_left_agree(L, data):
    alpha = Permutation(tuple(data.draw(st.permutations(range(L.n)))))
    right, left = is_weak_inverse_permutation(L, alpha)
    assert right == left


def test_weak_inverse_closure(z4):
    S = weak_inverse_permutations(z4)
    commuting = [(a, b) for a in S for b in S if a * b == b * a]
    for a, b in commuting:
        group = weak_inverse_closure(z4, [a, b])
        assert group.is_abelian()
        assert set(group.elements) <= set(S)
    bad = Permutation((1, 0, 2, 3))
    assert bad not in S
    with pytest.raises(NotWeakInverse):
        weak_inverse_closure(z4, [bad])


def test_weak_inverse_closure_rejects_noncommuting():
    for L in ABELIAN + NONABELIAN:
        S = weak_inverse_permutations(L)
        pair = next(((a, b) for a in S for b in S if a * b != b * a), None)
        if pair:
            with pytest.raises(NotCommuting):
                weak_inverse_closure(L, pair)
            return
    pytest.fail("no non-commuting weak inverse permutations found")


def test_generated_group():
    r = Permutation((1, 2, 3, 0))
    s = Permutation((0, 3, 2, 1))
    assert generated_group([r], 4).order == 4
    D = generated_group([r, s], 4)
    assert D.order == 8 and not D.is_abelian()
    table = D.cayley_table()
    assert sorted(table[0]) == list(range(8))
