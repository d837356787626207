from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mullat.lattice import build_from_leq, chain, lattice_from_json
from mullat.mult import meet_mult, product_mult
from mullat.ring_bridge import ideal_lattice_zn, lift_mult_set, multiplicative_sets
from mullat.s_theory import validate_mclosed

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def z12():
    return ideal_lattice_zn(12)


def boolean_lattice(k: int):
    labels = ["{" + ",".join(str(i) for i in range(k) if m >> i & 1) + "}" for m in range(2**k)]
    pairs = [(a, a | 1 << i) for a in range(2**k) for i in range(k) if not a >> i & 1]
    return build_from_leq(labels, pairs)


def n5():
    return lattice_from_json(json.loads((FIXTURES / "n5.json").read_text()))


@st.composite
def zn_instances(draw, lo=2, hi=60, max_s=4):
    """(n, ring S, ZnLattice, lattice S)."""
    n = draw(st.integers(lo, hi))
    s_ring = draw(st.sampled_from(multiplicative_sets(n, max_s)))
    return n, s_ring, ideal_lattice_zn(n), lift_mult_set(n, s_ring)


@st.composite
def mult_lattices(draw):
    """Assorted small multiplicative lattices: Id(Z_n), products, chains and Boolean lattices with meet."""
    kind = draw(st.sampled_from(["zn", "product", "chain", "boolean"]))
    if kind == "zn":
        return ideal_lattice_zn(draw(st.integers(2, 72))).M
    if kind == "product":
        a = draw(st.sampled_from([2, 3, 4, 6, 8, 9]))
        b = draw(st.sampled_from([2, 3, 4, 5]))
        return product_mult(ideal_lattice_zn(a).M, ideal_lattice_zn(b).M)
    if kind == "chain":
        return meet_mult(chain(draw(st.integers(2, 6))))
    return meet_mult(boolean_lattice(draw(st.integers(1, 3))))


@st.composite
def mclosed_subsets(draw, M):
    """A multiplicatively closed S: top plus the product closure of a few random elements,
    retried until it avoids the bottom."""
    gens = draw(st.lists(st.sampled_from(list(M.elements)), max_size=3))
    S = {M.top, *gens}
    while True:
        new = {M.mul(a, b) for a in S for b in S} - S
        if not new:
            break
        S |= new
    if M.bottom in S:
        S = {M.top}
    return validate_mclosed(M, S)


@st.composite
def lattice_with_s(draw):
    M = draw(mult_lattices())
    return M, draw(mclosed_subsets(M))


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
