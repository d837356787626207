import pytest
from hypothesis import given

import oracles
from conftest import lattice_with_s, n5, zn_instances
from mullat.errors import ContainsBottom, EmptySubset, MissingTop, NotAscending, NotClosed, WrongClass
from mullat.lattice import chain
from mullat.mult import AxiomClass, is_primary, is_prime, meet_mult, radical
from mullat.ring_bridge import ideal_lattice_zn
from mullat.s_theory import (
    NOT_IN_PREFIX,
    Certificate,
    check_s_stationary,
    classify_element,
    cohen_kaplansky_verify,
    is_s_compact,
    is_s_irreducible,
    is_s_noetherian,
    is_s_primary,
    is_s_prime,
    meeting_member,
    s_compact_closure_check,
    s_maximal_elements,
    saturation,
    top_set,
    validate_mclosed,
    verify_noetherian_equivalences,
)


@pytest.fixture
def z12_s(z12):
    i = z12.index
    return z12.M, i, validate_mclosed(z12.M, {i(1), i(3)})


# validation -----------------------------------------------------------------


def test_validate_examples(z12):
    M, i = z12.M, z12.index
    assert top_set(M).members == (M.top,)
    assert validate_mclosed(M, {i(1), i(3)}).labels() == ["(1)", "(3)"]
    with pytest.raises(NotClosed) as exc:
        validate_mclosed(M, {i(1), i(2)})
    assert exc.value.witness == (i(2), i(2))
    with pytest.raises(MissingTop):
        validate_mclosed(M, {i(3)})
    with pytest.raises(ContainsBottom):
        validate_mclosed(M, {i(1), i(0)})
    with pytest.raises(EmptySubset):
        validate_mclosed(M, set())


# worked examples on Id(Z_12) -----------------------------------------------


def test_s_prime_examples(z12_s):
    M, i, S = z12_s
    assert is_s_prime(M, S, i(4)) is None
    assert is_s_prime(M, S, i(2)).s == i(1)
    assert is_s_prime(M, S, i(3)) is None
    assert meeting_member(S, i(3)) == i(3)


def test_s_primary_examples(z12_s, z12):
    M, i, S = z12_s
    assert is_s_primary(M, S, i(4)) is not None
    assert is_s_primary(M, S, i(6)).s == i(3)
    assert not is_primary(M, i(6))
    S4 = validate_mclosed(M, {i(1), i(4)})
    assert is_primary(M, i(4))
    assert is_s_primary(M, S4, i(4)) is None
    assert meeting_member(S4, i(4)) == i(4)


def test_s_irreducible_examples(z12_s):
    M, i, S = z12_s
    assert is_s_irreducible(M, S, i(6))
    assert not is_s_irreducible(M, top_set(M), i(0))


def test_meet_irreducible_is_irreducible_at_top():
    M = meet_mult(chain(5))
    for q in range(M.size - 1):
        assert is_s_irreducible(M, top_set(M), q)


def test_s_compact_examples(z12_s):
    M, i, S = z12_s
    assert is_s_compact(M, S, i(2)) == (i(1), i(2))
    assert is_s_compact(M, S, M.bottom) == (M.top, M.bottom)


def test_saturation_examples(z12_s):
    M, i, S = z12_s
    assert saturation(M, S, i(6)) == i(2)
    assert saturation(M, S, i(4)) == i(4)


def test_s_maximal_examples(z12_s):
    M, i, S = z12_s
    T = {i(4), i(2), i(6)}
    got = s_maximal_elements(M, S, T)
    # oracle: m is S-maximal iff some s sends every a >= m in T below m
    expected = {m for m in T if any(all(M.le(M.mul(s, a), m) for a in T if M.le(m, a)) for s in S)}
    assert got == expected == {i(2), i(6)}
    assert s_maximal_elements(M, S, {M.top}) == {M.top}
    with pytest.raises(EmptySubset):
        s_maximal_elements(M, S, [])


def test_s_maximal_chain_is_maximum():
    M = meet_mult(chain(5))
    assert s_maximal_elements(M, top_set(M), [0, 2, 3]) == {3}


# S-stationary chains -------------------------------------------------------


def test_constant_chain_certified(z12):
    M = z12.M
    assert check_s_stationary(M, top_set(M), [3, 3]) == Certificate(M.top, 1)


def test_strict_prefix_not_in_prefix():
    M = meet_mult(chain(5))
    assert check_s_stationary(M, top_set(M), [0, 1, 2, 3, 4]) is None
    assert NOT_IN_PREFIX == "NOT_IN_PREFIX"


def test_repeating_chain_certified_at_stabilization():
    M = meet_mult(chain(5))
    cert = check_s_stationary(M, top_set(M), [0, 1, 3, 3])
    assert cert == Certificate(M.top, 3)


def test_non_ascending_rejected(z12):
    M, i = z12.M, z12.index
    with pytest.raises(NotAscending):
        check_s_stationary(M, top_set(M), [i(2), i(4)])


# S-Noetherian and Cohen-Kaplansky ---------------------------------------------


def test_noetherian_small_examples(z12_s):
    M, _, S = z12_s
    assert is_s_noetherian(M, S)
    assert is_s_noetherian(meet_mult(chain(2)), top_set(meet_mult(chain(2))))
    assert cohen_kaplansky_verify(M, S)
    assert verify_noetherian_equivalences(M, S)


def test_noetherian_requires_r_lattice():
    M = meet_mult(chain(3))
    with pytest.raises(WrongClass):
        is_s_noetherian(M, top_set(M))


def test_cohen_kaplansky_z30():
    Z = ideal_lattice_zn(30)
    rep = cohen_kaplansky_verify(Z.M, top_set(Z.M))
    assert rep.passed and rep.checked > 0


def test_cohen_kaplansky_product_with_induced_s():
    from mullat.mult import product_mult

    P = product_mult(ideal_lattice_zn(4).M, ideal_lattice_zn(9).M)
    assert P.axiom_class is AxiomClass.R_LATTICE
    # S induced by the multiplicative set {1, 2, 4, ...} on the first factor: powers of <(2),(1)>
    g = P.lattice.index("<(2),(1)>")
    S = validate_mclosed(P, {P.top, g, P.mul(g, g)})
    assert cohen_kaplansky_verify(P, S).passed
    assert verify_noetherian_equivalences(P, S).passed


def test_s_compact_closure_examples(z12_s):
    M, i, S = z12_s
    assert M.mul(i(2), i(3)) == i(6)
    assert s_compact_closure_check(M, S).passed
    Z = ideal_lattice_zn(30)
    assert s_compact_closure_check(Z.M, top_set(Z.M)).passed


# properties against the brute-force oracles --------------------------------


@given(lattice_with_s())
def test_classifiers_match_oracles(inst):
    M, S = inst
    for x in M.elements:
        w = is_s_prime(M, S, x) if x != M.top else None
        assert (None if w is None else w.s) == oracles.s_prime(M, S, x)
        w = is_s_primary(M, S, x) if x != M.top else None
        assert (None if w is None else w.s) == oracles.s_primary(M, S, x)
        if x != M.top:
            assert is_s_irreducible(M, S, x) == oracles.s_irreducible(M, S, x)
        assert saturation(M, S, x) == oracles.saturation(M, S, x)


@given(lattice_with_s())
def test_specialization_at_top(inst):
    M, _ = inst
    T = top_set(M)
    for x in M.elements:
        if x == M.top:
            continue
        assert (is_s_prime(M, T, x) is not None) == is_prime(M, x)
        assert (is_s_primary(M, T, x) is not None) == is_primary(M, x)


@given(lattice_with_s())
def test_primary_avoiding_s_is_s_primary(inst):
    M, S = inst
    for q in M.elements:
        if q != M.top and is_primary(M, q) and meeting_member(S, q) is None:
            assert is_s_primary(M, S, q) is not None
        if q != M.top and is_prime(M, q) and meeting_member(S, q) is None:
            assert is_s_prime(M, S, q) is not None


@given(lattice_with_s())
def test_saturation_is_closure(inst):
    M, S = inst
    for a in M.elements:
        sa = saturation(M, S, a)
        assert M.le(a, sa)
        assert saturation(M, S, sa) == sa
        for b in M.elements:
            if M.le(a, b):
                assert M.le(sa, saturation(M, S, b))


@given(lattice_with_s())
def test_s_prime_saturation_is_prime(inst):
    M, S = inst
    for p in M.elements:
        if p != M.top and is_s_prime(M, S, p) is not None:
            ps = saturation(M, S, p)
            assert ps != M.top and is_prime(M, ps)


@given(lattice_with_s())
def test_s_primary_radical_is_s_prime_when_witness_exists(inst):
    # radical of an S-primary element avoids S and its saturation is prime
    M, S = inst
    for q in M.elements:
        if q != M.top and is_s_primary(M, S, q) is not None:
            r = radical(M, q)
            assert meeting_member(S, r) is None
            assert is_prime(M, saturation(M, S, r))


@given(lattice_with_s())
def test_s_compact_witness_valid(inst):
    M, S = inst
    for a in M.elements:
        s, b = is_s_compact(M, S, a)
        assert s in S and M.le(M.mul(s, a), b) and M.le(b, a)


@given(zn_instances())
def test_every_finite_chain_extended_until_repeat_is_certified(inst):
    _, _, Z, S = inst
    M = Z.M
    # climb from the bottom along covers, then repeat the last value
    c = [M.bottom]
    while c[-1] != M.top:
        c.append(min(x for x in M.elements if M.lattice.lt(c[-1], x)))
    c.append(c[-1])
    cert = check_s_stationary(M, S, c)
    assert cert is not None
    assert all(M.le(M.mul(cert.s, c[m]), c[cert.n - 1]) for m in range(cert.n - 1, len(c)))


def test_classify_element_rows(z12_s):
    M, i, S = z12_s
    row = classify_element(M, S, i(4))
    assert row["s_primary"] == "(1)" and row["s_prime"] is None
    N = meet_mult(n5())
    assert "gated" in classify_element(N, top_set(N), 1)
