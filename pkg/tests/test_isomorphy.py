from hypothesis import given
from hypothesis import strategies as st

from loopforge.core import Permutation, cyclic_group, direct_product, symmetric_group_3
from loopforge.isomorphy import are_isotopic, automorphisms, canonical_form, canonical_table, find_isomorphism
from loopforge.isotopy import is_isotopism, principal_isotope

from conftest import loop_with_elements, permutations_of, relabeled_loop
from oracles import brute_isomorphic, brute_min_relabel


@given(relabeled_loop(), st.data())
def test_relabeled_copies_are_found(L, data):
    p = data.draw(permutations_of(L.n))
    H = L.relabel(p)
    A = find_isomorphism(L, H)
    assert A is not None
    assert is_isotopism(L, H, (A, A, A))


def test_non_isomorphic_groups(z4, klein):
    assert find_isomorphism(z4, klein) is None
    assert find_isomorphism(z4, cyclic_group(5)) is None


def test_automorphism_counts(z4, klein, s3):
    assert len(automorphisms(cyclic_group(5))) == 4
    assert len(automorphisms(z4)) == 2
    assert len(automorphisms(klein)) == 6
    assert len(automorphisms(s3)) == 6


def test_canonical_form_against_brute_force(small_loops):
    for L in small_loops:
        assert canonical_table(L) == brute_min_relabel(L.table, L.identity)


@given(relabeled_loop())
def test_canonical_form_relabeling(L):
    cf = canonical_form(L)
    assert L.relabel(cf.relabeling).table == cf.loop.table
    assert cf.loop.identity == 0
    assert canonical_table(cf.loop) == cf.loop.table




def test_isomorphism_classes_at_order_6(loops6):
    classes = {canonical_table(L) for L in loops6}
    # 109 isomorphism classes of loops of order 6
    assert len(classes) == 109


def test_isomorphism_agrees_with_brute_force_on_order_4(small_loops):
    fours = [L for L in small_loops if L.n == 4]
    for a in fours:
        for b in fours:
            assert (find_isomorphism(a, b) is not None) == brute_isomorphic(a.table, b.table)


@given(loop_with_elements())
def test_principal_isotopes_are_isotopic(data):
    L, f, g = data
    H = principal_isotope(L, f, g)
    triple = are_isotopic(L, H)
    assert triple is not None and is_isotopism(L, H, triple)


def test_isotopy_classes(z4, klein, s3):
    assert are_isotopic(z4, klein) is None
    assert are_isotopic(s3, cyclic_group(6)) is None
    assert are_isotopic(s3, s3.relabel(Permutation((0, 2, 1, 3, 5, 4)))) is not None
    Z2xZ3 = direct_product(cyclic_group(2), cyclic_group(3))
    assert find_isomorphism(Z2xZ3, cyclic_group(6)) is not None
