"""Minimal S-primary decompositions, the uniqueness set, and the decomposition theorems."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import MalformedDecomposition, NoDecomposition, SaturationIsTop, WrongClass
from .lattice import meet_all
from .mult import AxiomClass, MultiplicativeLattice, is_prime, radical, residual
from .reports import PropertyReport
from .s_theory import (
    MClosedSet,
    Witness,
    is_s_irreducible,
    is_s_prime,
    is_s_primary,
    meeting_member,
    saturation,
)


@dataclass(frozen=True)
class Decomposition:
    target: int
    components: tuple[int, ...]
    radicals: tuple[int, ...]
    saturated_radicals: tuple[int, ...]
    witnesses: tuple[Witness, ...]
    distinct_saturated_radicals: bool
    irredundant: bool

    @property
    def minimal(self) -> bool:
        return self.distinct_saturated_radicals and self.irredundant

    def to_dict(self, labels: Sequence[str]) -> dict:
        return {
            "target": labels[self.target],
            "components": [labels[q] for q in self.components],
            "radicals": [labels[p] for p in self.radicals],
            "saturated_radicals": [labels[p] for p in self.saturated_radicals],
            "witnesses": [labels[w.s] for w in self.witnesses],
            "minimal": self.minimal,
            "distinct_saturated_radicals": self.distinct_saturated_radicals,
            "irredundant": self.irredundant,
        }


def _eligible(M: MultiplicativeLattice, S: MClosedSet, a: int) -> None:
    M.lattice.check(a)
    if saturation(M, S, a) == M.top:
        raise SaturationIsTop(f"{M.labels[a]} has S-saturation equal to the top element", witness=(a,))


def enumerate_s_primary_above(M: MultiplicativeLattice, S: MClosedSet, a: int) -> list[int]:
    M.require(AxiomClass.C_LATTICE, "S-primary enumeration")
    le = M.lattice.leq
    return [q for q in M.elements if q != M.top and le[a][q] and is_s_primary(M, S, q) is not None]


def _minimality(M: MultiplicativeLattice, S: MClosedSet, comps: Sequence[int]) -> tuple[bool, bool, int | None]:
    """(distinct saturated radicals, irredundant, first failing index)."""
    sat_rads = [saturation(M, S, radical(M, q)) for q in comps]
    distinct = len(set(sat_rads)) == len(sat_rads)
    le = M.lattice.leq
    for i, q in enumerate(comps):
        rest = meet_all(M.lattice, (comps[j] for j in range(len(comps)) if j != i))
        if le[saturation(M, S, rest)][saturation(M, S, q)]:
            return distinct, False, i
    return distinct, True, None


def _witness_form_irredundant(M: MultiplicativeLattice, S: MClosedSet, comps: Sequence[int]) -> bool:
    """Element form of irredundancy: each i has x <= meet of the others with s * x !<= q_i for all s."""
    le = M.lattice.leq
    for i, q in enumerate(comps):
        rest = meet_all(M.lattice, (comps[j] for j in range(len(comps)) if j != i))
        if not any(
            le[x][rest] and all(not le[M.mul(s, x)][q] for s in S) for x in M.elements
        ):
            return False
    return True


def _build(M: MultiplicativeLattice, S: MClosedSet, a: int, comps: Sequence[int]) -> Decomposition:
    comps = tuple(comps)
    rads = tuple(radical(M, q) for q in comps)
    witnesses = tuple(is_s_primary(M, S, q) for q in comps)
    distinct, irredundant, _ = _minimality(M, S, comps)
    return Decomposition(
        a, comps, rads, tuple(saturation(M, S, p) for p in rads), witnesses, distinct, irredundant
    )


def _candidate_subsets(M: MultiplicativeLattice, a: int, cands: Sequence[int], max_size: int) -> Iterator[tuple[int, ...]]:
    """Subsets with meet equal to ``a``, by size then lexicographically.

    A component that leaves the running meet unchanged is pruned.
    """
    for k in range(1, max_size + 1):
        for combo in combinations(cands, k):
            cur = M.top
            ok = True
            for q in combo:
                nxt = M.meet(cur, q)
                if nxt == cur:
                    ok = False
                    break
                cur = nxt
            if ok and cur == a:
                yield combo


def _component_bound(M: MultiplicativeLattice, S: MClosedSet, cands: Sequence[int]) -> int:
    # minimal decompositions have pairwise distinct saturated radicals
    return len({saturation(M, S, radical(M, q)) for q in cands}) + 1


def find_minimal_decomposition(M: MultiplicativeLattice, S: MClosedSet, a: int) -> Decomposition | None:
    """First minimal S-primary decomposition of ``a`` by (size, lexicographic) order.

    If ``a`` is itself S-primary the one-component decomposition is returned.
    Falls back to the smallest non-minimal decomposition, and to None only when
    no S-primary decomposition exists at all.
    """
    if M.axiom_class < AxiomClass.R_LATTICE:
        raise WrongClass(f"decomposition search assumes an r-lattice; got {M.axiom_class.name}")
    _eligible(M, S, a)
    cands = enumerate_s_primary_above(M, S, a)
    fallback = None
    for combo in _candidate_subsets(M, a, cands, len(cands)):
        d = _build(M, S, a, combo)
        if d.minimal:
            return d
        if fallback is None:
            fallback = d
    return fallback


def all_minimal_decompositions(
    M: MultiplicativeLattice, S: MClosedSet, a: int, max_components: int | None = None
) -> list[Decomposition]:
    """Every minimal decomposition with at most ``max_components`` components.

    The default bound (distinct saturated radicals among candidates, plus one)
    is never binding, so the default enumeration is complete.
    """
    M.require(AxiomClass.C_LATTICE, "decomposition enumeration")
    _eligible(M, S, a)
    cands = enumerate_s_primary_above(M, S, a)
    bound = _component_bound(M, S, cands) if max_components is None else max_components
    out = []
    for combo in _candidate_subsets(M, a, cands, min(bound, len(cands))):
        d = _build(M, S, a, combo)
        if d.minimal:
            out.append(d)
    return out


def is_minimal(M: MultiplicativeLattice, S: MClosedSet, D: Decomposition) -> PropertyReport:
    if meet_all(M.lattice, D.components) != D.target:
        raise MalformedDecomposition("components do not meet to the target", witness=D.components)
    for q in D.components:
        if q == M.top or is_s_primary(M, S, q) is None:
            raise MalformedDecomposition(f"{M.labels[q]} is not S-primary", witness=(q,))
    comps = D.components
    sat_rads = [saturation(M, S, radical(M, q)) for q in comps]
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            if sat_rads[i] == sat_rads[j]:
                return PropertyReport("minimal", False, ("distinct_saturated_radicals", i, j))
    _, irredundant, bad = _minimality(M, S, comps)
    witness_form = _witness_form_irredundant(M, S, comps)
    if witness_form != irredundant:
        return PropertyReport(
            "minimal", False, ("irredundant_forms_diverge", bad), detail="saturation and element forms disagree"
        )
    if not irredundant:
        return PropertyReport("minimal", False, ("irredundant", bad))
    return PropertyReport("minimal", True)


def uniqueness_set(M: MultiplicativeLattice, S: MClosedSet, a: int) -> set[int]:
    """{ sat(radical(a : x)) : s * x !<= a for all s in S, and that element is prime }."""
    M.require(AxiomClass.C_LATTICE, "uniqueness set")
    _eligible(M, S, a)
    le = M.lattice.leq
    out = set()
    for x in M.elements:
        if any(le[M.mul(s, x)][a] for s in S):
            continue
        r = saturation(M, S, radical(M, residual(M, a, x)))
        if r != M.top and is_prime(M, r):
            out.add(r)
    return out


def verify_first_uniqueness(M: MultiplicativeLattice, S: MClosedSet, a: int) -> PropertyReport:
    decs = all_minimal_decompositions(M, S, a)
    if not decs:
        raise NoDecomposition(f"{M.labels[a]} has no minimal S-primary decomposition", witness=(a,))
    P = uniqueness_set(M, S, a)
    for d in decs:
        if set(d.saturated_radicals) != P:
            return PropertyReport(
                "first_uniqueness", False, (a, d.components), detail=f"saturated radicals differ from P={sorted(P)}"
            )
    return PropertyReport("first_uniqueness", True, checked=len(decs))


def verify_irreducible_implies_primary(M: MultiplicativeLattice, S: MClosedSet) -> PropertyReport:
    if M.axiom_class < AxiomClass.R_LATTICE:
        raise WrongClass("irreducible => primary assumes an r-lattice")
    n = 0
    for q in M.elements:
        if q == M.top or meeting_member(S, q) is not None:
            continue
        n += 1
        if is_s_irreducible(M, S, q) and is_s_primary(M, S, q) is None:
            return PropertyReport("irreducible_implies_primary", False, (q,), checked=n)
    return PropertyReport("irreducible_implies_primary", True, checked=n)


def radical_as_s_prime_meet(M: MultiplicativeLattice, S: MClosedSet, a: int) -> tuple[int, ...] | None:
    """Smallest set of S-prime elements meeting to ``a`` (lexicographically first), or None."""
    le = M.lattice.leq
    primes = [p for p in M.elements if p != M.top and le[a][p] and is_s_prime(M, S, p) is not None]
    for k in range(1, len(primes) + 1):
        for combo in combinations(primes, k):
            if meet_all(M.lattice, combo) == a:
                return combo
    return None


def verify_radical_corollary(M: MultiplicativeLattice, S: MClosedSet) -> PropertyReport:
    if M.axiom_class < AxiomClass.R_LATTICE:
        raise WrongClass("radical corollary assumes an r-lattice")
    n = 0
    for a in M.elements:
        if a == M.top or radical(M, a) != a or meeting_member(S, a) is not None:
            continue
        n += 1
        if radical_as_s_prime_meet(M, S, a) is None:
            return PropertyReport("radical_corollary", False, (a,), checked=n)
    return PropertyReport("radical_corollary", True, checked=n)


def verify_existence(M: MultiplicativeLattice, S: MClosedSet) -> PropertyReport:
    """Every a with a_S < top meets from S-primary elements (S-irreducibles above a suffice)."""
    if M.axiom_class < AxiomClass.R_LATTICE:
        raise WrongClass("existence assumes an r-lattice")
    le = M.lattice.leq
    n = 0
    for a in M.elements:
        if saturation(M, S, a) == M.top:
            continue
        n += 1
        irred = [q for q in M.elements if q != M.top and le[a][q] and is_s_irreducible(M, S, q)]
        if meet_all(M.lattice, irred) != a:
            return PropertyReport("existence", False, (a,), detail="S-irreducibles above a do not meet to a")
        if find_minimal_decomposition(M, S, a) is None:
            return PropertyReport("existence", False, (a,), detail="no S-primary decomposition")
    return PropertyReport("existence", True, checked=n)
