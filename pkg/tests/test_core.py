import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopforge.core import (
    FiniteLoop,
    Permutation,
    Quasigroup,
    compose,
    cyclic_group,
    dihedral_group,
    direct_product,
    from_table,
    inverse_maps,
    left_translation,
    loop_from_table,
    right_translation,
    symmetric_group_3,
)
from loopforge.errors import DegreeMismatch, LatinViolation, NotALoop, ShapeError

from conftest import permutations_of, relabeled_loop, loop_with_elements


def test_composition_applies_left_factor_first():
    p = Permutation.from_cycles(3, [(0, 1)])
    q = Permutation.from_cycles(3, [(1, 2)])
    # 0 -p-> 1 -q-> 2
    assert (p * q)[0] == 2
    assert (q * p)[0] == 1
    assert compose(p, q) == p * q


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(permutations_of(n), permutations_of(n), permutations_of(n))))
def test_permutation_group_laws(ps):
    p, q, r = ps
    n = len(p)
    e = Permutation.identity(n)
    assert (p * q) * r == p * (q * r)
    assert p * e == p == e * p
    assert p * ~p == e == ~p * p
    assert p ** -1 == ~p
    assert p ** p.order() == e
    assert sum(p.cycle_type()) == n


def test_compose_rejects_mismatched_degrees():
    with pytest.raises(DegreeMismatch):
        Permutation.identity(2) * Permutation.identity(3)


def test_permutation_validation_and_cycles():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    p = Permutation.from_cycles(5, [(0, 2, 4)])
    assert p.cycles() == [(0, 2, 4), (1,), (3,)]
    assert p.cycle_type() == (1, 1, 3)
    assert p.fixed_points() == [1, 3]
    assert p.order() == 3
    assert "(0 2 4)" in repr(p)


def test_z3_table_and_inverses(z3):
    assert z3.table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert z3.j_rho.image == (0, 2, 1)
    assert z3.j_rho == z3.j_lambda


def test_inverse_maps_on_nonassociative_loop(small_loops):
    for L in small_loops:
        rho, lam = inverse_maps(L)
        t, e = L.table, L.identity
        for x in range(L.n):
            assert t[x][rho[x]] == e
            assert t[lam[x]][x] == e
        # J_lambda is the inverse of J_rho
        assert rho * lam == Permutation.identity(L.n)


def test_some_small_loop_has_one_sided_inverses(small_loops):
    assert any(L.j_rho != L.j_lambda for L in small_loops)


# x*y = -x-y mod 3: a quasigroup with no identity
NO_IDENTITY = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


def test_from_table_errors():
    with pytest.raises(ShapeError):
        from_table([[0, 1], [1]])
    with pytest.raises(ShapeError):
        from_table([[0, 5], [1, 0]])
    with pytest.raises(ShapeError):
        from_table([])
    with pytest.raises(LatinViolation) as info:
        from_table([[0, 1], [0, 1]])
    assert info.value.axis == "column"
    with pytest.raises(NotALoop):
        loop_from_table(NO_IDENTITY)
    with pytest.raises(NotALoop):
        FiniteLoop(((0, 1), (1, 0)), identity=1)


def test_from_table_promotes_only_with_identity():
    assert isinstance(from_table([[0, 1], [1, 0]]), FiniteLoop)
    q = from_table(NO_IDENTITY)
    assert type(q) is Quasigroup
    assert q.identity is None and q.as_loop() is None


def test_identity_need_not_be_zero():
    L = loop_from_table([[2, 0, 1], [0, 1, 2], [1, 2, 0]])
    assert L.identity == 1
    assert L.j_rho[1] == 1


def test_translations(z4):
    assert left_translation(z4, 1).image == (1, 2, 3, 0)
    assert right_translation(z4, 1) == left_translation(z4, 1)
    S3 = symmetric_group_3()
    assert any(left_translation(S3, x) != right_translation(S3, x) for x in range(6))


@given(loop_with_elements(count=3))
def test_translations_agree_with_table(data):
    L, x, y, z = data
    assert left_translation(L, x)[y] == L.table[x][y]
    assert right_translation(L, y)[x] == L.table[x][y]


@given(relabeled_loop())
def test_relabeling_preserves_loop_structure(L):
    assert isinstance(L, FiniteLoop)
    t, e = L.table, L.identity
    assert all(t[e][x] == x == t[x][e] for x in range(L.n))
    assert L.j_rho * L.j_lambda == Permutation.identity(L.n)


@given(relabeled_loop(), st.data())
def test_relabel_composes(L, data):
    p = data.draw(permutations_of(L.n))
    q = data.draw(permutations_of(L.n))
    assert L.relabel(p).relabel(q).table == L.relabel(p * q).table


def test_groups_are_associative():
    for G in (cyclic_group(5), direct_product(cyclic_group(2), cyclic_group(3)), symmetric_group_3(), dihedral_group(4)):
        t, n = G.table, G.n
        assert all(t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n))
    assert dihedral_group(3).table != direct_product(cyclic_group(2), cyclic_group(3)).table
