import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nichols.groups import (
    GroupError, centralizer, conjugacy_class, coset_decomposition, cyclic, dihedral,
    from_permutations, generated_subgroup, left_coset_reps, symmetric,
)

GROUPS = [symmetric(3), symmetric(4), dihedral(3), dihedral(4), dihedral(5), cyclic(6)]


def test_orders():
    assert [G.size for G in GROUPS] == [6, 24, 6, 8, 10, 6]


def test_symmetric_matches_itertools():
    G = symmetric(4)
    assert sorted(G.perms) == sorted(itertools.permutations(range(4)))


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"order{G.size}")
def test_axioms_and_orbit_stabilizer(G):
    assert G.check_associativity()
    for g in range(G.size):
        assert G.mul[g][G.inverse(g)] == G.identity
        assert len(conjugacy_class(G, g)) * centralizer(G, g).size == G.size


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"order{G.size}")
def test_cosets_partition(G):
    for g in range(G.size):
        H = centralizer(G, g)
        reps = left_coset_reps(G, H)
        dec = coset_decomposition(G, H, reps)
        assert len(reps) * H.size == G.size
        assert sorted(dec) == list(range(G.size))
        for y, (r, t) in dec.items():
            assert G.mul[r][t] == y and t in H


def test_permutation_product_convention():
    G = symmetric(3)
    x, y = G.element("(0 1)"), G.element("(1 2)")
    xy = G.perms[G.mul[x][y]]
    assert xy == tuple(G.perms[x][G.perms[y][i]] for i in range(3))
    assert G.element("(0 1)(1 2)") == G.mul[x][y]


def test_dihedral_classes():
    D5 = dihedral(5)
    s = D5.labels["sigma"]
    assert len(conjugacy_class(D5, s)) == 5
    assert centralizer(D5, s).size == 2
    D4 = dihedral(4)
    assert len(conjugacy_class(D4, D4.labels["sigma"])) == 2
    assert D4.element("rho^4") == D4.identity


def test_deterministic_numbering():
    a, b = dihedral(7), dihedral(7)
    assert a.perms == b.perms and a.mul == b.mul


def test_trivial_group():
    G = from_permutations(1, [])
    assert G.size == 1 and G.identity == 0


def test_generated_subgroup():
    G = symmetric(4)
    H = generated_subgroup(G, [G.element("(0 1 2 3)")])
    assert H.size == 4


def test_bad_elements():
    G = symmetric(3)
    with pytest.raises(GroupError):
        G.element("tau")
    with pytest.raises(GroupError):
        G.element([0, 0, 1])
    with pytest.raises(GroupError):
        from_permutations(6, [(1, 2, 3, 4, 5, 0), (1, 0, 2, 3, 4, 5)], max_size=100)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_from_permutations_closure(gens):
    G = from_permutations(5, [tuple(g) for g in gens])
    elems = set(G.perms)
    for a in G.perms:
        for b in G.perms:
            assert tuple(a[b[i]] for i in range(5)) in elems
    assert 120 % G.size == 0
