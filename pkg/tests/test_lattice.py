from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import boolean_lattice, n5
from mullat.errors import NoBounds, NotALattice, NotAPoset
from mullat.lattice import (
    build_from_leq,
    chain,
    is_modular,
    join_all,
    lattice_from_json,
    lattice_to_json,
    meet_all,
    product_lattice,
)
from mullat.ring_bridge import divisors, ideal_lattice_zn


def lcm(a, b):
    return a * b // gcd(a, b)


def test_chain_tables():
    L = chain(4)
    assert L.bottom == 0 and L.top == 3
    assert L.meet(1, 3) == 1 and L.join(1, 3) == 3
    assert L.up(2) == [2, 3]
    assert L.down(1) == [0, 1]


def test_diamond_m3():
    L = build_from_leq(["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    a, b, c = (L.index(x) for x in "abc")
    assert L.meet(a, b) == L.bottom and L.join(a, c) == L.top
    rep = is_modular(L)
    assert rep.passed


def test_n5_modularity_failure_is_first_lexicographic():
    L = n5()
    rep = is_modular(L)
    assert not rep.passed
    # first (a, b, c) in lexicographic index order with a <= c and a v (b ^ c) != (a v b) ^ c
    expected = next(
        (a, b, c)
        for a in L.elements
        for b in L.elements
        for c in L.elements
        if L.leq[a][c] and L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)
    )
    assert rep.counterexample == expected
    assert [L.labels[i] for i in rep.counterexample] == ["a", "b", "c"]


def test_not_a_poset():
    with pytest.raises(NotAPoset) as exc:
        build_from_leq(["x", "y"], [(0, 1), (1, 0)])
    assert set(exc.value.witness) == {0, 1}


def test_no_bounds():
    with pytest.raises(NoBounds):
        build_from_leq(["x", "y"], [])
    with pytest.raises(NoBounds):
        build_from_leq([], [])


def test_not_a_lattice_bowtie():
    # a, b both below c and d: no least upper bound for a, b
    with pytest.raises(NotALattice) as exc:
        build_from_leq(
            ["0", "a", "b", "c", "d", "1"],
            [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )
    assert exc.value.witness is not None


def test_pair_out_of_range():
    with pytest.raises(ValueError):
        build_from_leq(["x"], [(0, 3)])


def test_product_2x3_matches_componentwise_oracle():
    L1, L2 = chain(2), chain(3)
    P = product_lattice(L1, L2)
    assert P.size == 6
    pairs = [(i, j) for i in range(2) for j in range(3)]
    for x, (i, j) in enumerate(pairs):
        for y, (k, l) in enumerate(pairs):
            assert P.leq[x][y] == (i <= k and j <= l)
            assert pairs[P.meet(x, y)] == (min(i, k), min(j, l))
            assert pairs[P.join(x, y)] == (max(i, k), max(j, l))
    assert pairs[P.bottom] == (0, 0) and pairs[P.top] == (1, 2)


@pytest.mark.parametrize("n", [12, 30, 36, 60])
def test_zn_ideal_lattice_matches_gcd_lcm(n):
    Z = ideal_lattice_zn(n)
    ds = divisors(n)
    L = Z.M.lattice
    for i, a in enumerate(ds):
        for j, b in enumerate(ds):
            # (a) <= (b) iff b divides a; (a) ^ (b) = (lcm); (a) v (b) = (gcd)
            assert L.leq[i][j] == (a % b == 0)
            assert ds[L.meet(i, j)] == lcm(a, b)
            assert ds[L.join(i, j)] == gcd(a, b)


def test_zn12_labels():
    Z = ideal_lattice_zn(12)
    assert Z.M.labels == ("(1)", "(2)", "(3)", "(4)", "(6)", "(0)")
    assert Z.M.top == 0 and Z.M.bottom == 5


def test_empty_join_and_meet():
    L = chain(3)
    assert join_all(L, []) == L.bottom
    assert meet_all(L, []) == L.top


@given(st.integers(1, 4), st.data())
def test_boolean_join_meet_all_are_union_intersection(k, data):
    L = boolean_lattice(k)
    # index m is the subset with bitmask m
    xs = data.draw(st.lists(st.integers(0, 2**k - 1), max_size=5))
    union = 0
    inter = 2**k - 1
    for x in xs:
        union |= x
        inter &= x
    assert join_all(L, xs) == union
    assert meet_all(L, xs) == inter


@given(st.sampled_from([2, 6, 12, 30, 8, 27]), st.sampled_from([2, 3, 4]))
def test_json_roundtrip(n, k):
    L = product_lattice(ideal_lattice_zn(n).M.lattice, chain(k))
    back = lattice_from_json(lattice_to_json(L))
    assert back.leq == L.leq and back.meet_table == L.meet_table and back.labels == L.labels


def test_json_malformed():
    with pytest.raises(ValueError):
        lattice_from_json({"labels": ["a"]})


def test_check_rejects_foreign_index():
    with pytest.raises(ValueError):
        chain(2).check(5)
