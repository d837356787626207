"""Classifiers relative to a multiplicatively closed set S.

All witness searches scan S in increasing element index, so every returned
witness is the least-index one.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    ContainsBottom,
    EmptySubset,
    MissingTop,
    NotAscending,
    NotClosed,
    WrongClass,
)
from .lattice import compact_elements
from .mult import AxiomClass, MultiplicativeLattice, is_primary, is_prime, radical
from .reports import PropertyReport

S_MEETS_ELEMENT = "SMeetsElement"
NOT_IN_PREFIX = "NOT_IN_PREFIX"


@dataclass(frozen=True)
class MClosedSet:
    members: tuple[int, ...]
    host: MultiplicativeLattice = field(compare=False, repr=False)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def labels(self) -> list[str]:
        return [self.host.labels[s] for s in self.members]


@dataclass(frozen=True)
class Witness:
    s: int
    extra: int | None = None


@dataclass(frozen=True)
class Certificate:
    """S-stationarity certificate: s * i_m <= i_n for every m >= n (n is 1-based)."""

    s: int
    n: int


def validate_mclosed(M: MultiplicativeLattice, members: Iterable[int]) -> MClosedSet:
    members = sorted(set(members))
    if not members:
        raise EmptySubset("a multiplicatively closed set needs at least the top element")
    M.lattice.check(*members)
    if M.top not in members:
        raise MissingTop("S must contain the top element", witness=(M.top,))
    if M.bottom in members:
        raise ContainsBottom("S must not contain the bottom element", witness=(M.bottom,))
    pool = set(members)
    for a in members:
        for b in members:
            if M.mul(a, b) not in pool:
                raise NotClosed(
                    f"{M.labels[a]} * {M.labels[b]} = {M.labels[M.mul(a, b)]} is not in S",
                    witness=(a, b),
                )
    if not pool <= compact_elements(M.lattice):
        raise NotClosed("S must consist of compact elements")
    return MClosedSet(tuple(members), M)


def top_set(M: MultiplicativeLattice) -> MClosedSet:
    return MClosedSet((M.top,), M)


def meeting_member(S: MClosedSet, q: int) -> int | None:
    """Least t in S with t <= q, or None when S avoids q."""
    le = S.host.lattice.leq
    return next((t for t in S if le[t][q]), None)


def is_s_prime(M: MultiplicativeLattice, S: MClosedSet, p: int) -> Witness | None:
    """Least s in S with: ab <= p implies sa <= p or sb <= p, for all a, b.

    The same s must serve every pair. Returns None if no such s exists or if S
    meets p (see ``meeting_member``).
    """
    M.lattice.check(p)
    if meeting_member(S, p) is not None:
        return None
    le = M.lattice.leq
    E = M.elements
    pairs = [(a, b) for a in E for b in E if le[M.mul(a, b)][p]]
    for s in S:
        ok = [le[M.mul(s, x)][p] for x in E]
        if all(ok[a] or ok[b] for a, b in pairs):
            return Witness(s)
    return None


def is_s_primary(M: MultiplicativeLattice, S: MClosedSet, q: int) -> Witness | None:
    """Least s in S with: cd <= q implies sc <= q or sd <= radical(q), for all ordered c, d."""
    M.require(AxiomClass.C_LATTICE, "S-primary classification")
    M.lattice.check(q)
    if meeting_member(S, q) is not None:
        return None
    rq = radical(M, q)
    le = M.lattice.leq
    E = M.elements
    pairs = [(c, d) for c in E for d in E if le[M.mul(c, d)][q]]
    for s in S:
        into_q = [le[M.mul(s, x)][q] for x in E]
        into_rad = [le[M.mul(s, x)][rq] for x in E]
        if all(into_q[c] or into_rad[d] for c, d in pairs):
            return Witness(s)
    return None


def s_irreducible_witnesses(
    M: MultiplicativeLattice, S: MClosedSet, q: int
) -> dict[tuple[int, int, int], int] | None:
    """Map each triple (s, a, b) with s(a ^ b) <= q <= a ^ b to its least s'.

    s' satisfies ss'a <= q or ss'b <= q. Returns None when some triple has no s'
    or when S meets q.
    """
    M.lattice.check(q)
    if meeting_member(S, q) is not None:
        return None
    le = M.lattice.leq
    E = M.elements
    above = [x for x in E if le[q][x]]
    out: dict[tuple[int, int, int], int] = {}
    for s in S:
        # killers[x]: least s' with s s' x <= q
        killers = [next((t for t in S if le[M.mul(M.mul(s, t), x)][q]), None) for x in E]
        for a in above:
            for b in above:
                ab = M.meet(a, b)
                if not (le[q][ab] and le[M.mul(s, ab)][q]):
                    continue
                cands = [t for t in (killers[a], killers[b]) if t is not None]
                if not cands:
                    return None
                out[(s, a, b)] = min(cands)
    return out


def is_s_irreducible(M: MultiplicativeLattice, S: MClosedSet, q: int) -> bool:
    return s_irreducible_witnesses(M, S, q) is not None


def is_s_compact(M: MultiplicativeLattice, S: MClosedSet, a: int) -> tuple[int, int]:
    """Least-index (s, b) with b compact and s * a <= b <= a.

    Finite lattices always succeed: (top, a) qualifies.
    """
    M.lattice.check(a)
    le = M.lattice.leq
    compact = compact_elements(M.lattice)
    for s in S:
        sa = M.mul(s, a)
        for b in M.elements:
            if b in compact and le[sa][b] and le[b][a]:
                return s, b
    raise AssertionError("unreachable: (top, a) always qualifies")


def saturation(M: MultiplicativeLattice, S: MClosedSet, a: int) -> int:
    """a_S: join of all x with s * x <= a for some s in S."""
    M.require(AxiomClass.MULTIPLICATIVE, "saturation")
    le = M.lattice.leq
    out = M.bottom
    for x in M.elements:
        if any(le[M.mul(s, x)][a] for s in S):
            out = M.join(out, x)
    return out


def s_maximal_elements(M: MultiplicativeLattice, S: MClosedSet, T: Iterable[int]) -> set[int]:
    """Elements m of T having s in S with: m <= a in T implies s * a <= m."""
    T = sorted(set(T))
    if not T:
        raise EmptySubset("S-maximal elements of an empty subset")
    le = M.lattice.leq
    out = set()
    for m in T:
        above = [a for a in T if le[m][a]]
        if any(all(le[M.mul(s, a)][m] for a in above) for s in S):
            out.add(m)
    return out


def check_s_stationary(M: MultiplicativeLattice, S: MClosedSet, chain: Sequence[int]) -> Certificate | None:
    """Certify a finite ascending prefix as S-stationary.

    A certificate is issued only when the prefix has stabilized (its final
    value is repeated), so it extends to every constant continuation. None
    means NOT_IN_PREFIX: the prefix alone cannot decide, nothing is refuted.
    """
    chain = list(chain)
    M.lattice.check(*chain)
    le = M.lattice.leq
    for i in range(len(chain) - 1):
        if not le[chain[i]][chain[i + 1]]:
            raise NotAscending(f"position {i + 1} is not below position {i + 2}", witness=(i, i + 1))
    if len(chain) < 2 or chain[-1] != chain[-2]:
        return None
    for s in S:
        for n in range(len(chain)):
            if all(le[M.mul(s, chain[m])][chain[n]] for m in range(n, len(chain))):
                return Certificate(s, n + 1)
    return None


def _require_r(M: MultiplicativeLattice, name: str) -> None:
    if M.axiom_class < AxiomClass.R_LATTICE:
        raise WrongClass(f"{name} assumes an r-lattice; got {M.axiom_class.name}")


def is_s_noetherian(
    M: MultiplicativeLattice, S: MClosedSet, samples: int = 50, seed: int = 0
) -> PropertyReport:
    """Every element S-compact, cross-checked against the S-maximal clause on sampled subsets."""
    _require_r(M, "S-Noetherian check")
    le = M.lattice.leq
    for a in M.elements:
        s, b = is_s_compact(M, S, a)
        if not (le[M.mul(s, a)][b] and le[b][a]):
            return PropertyReport("s_noetherian", False, (a,), "S-compactness witness invalid")
    rng = random.Random(seed)
    for T in _random_subsets(M, rng, samples):
        if not s_maximal_elements(M, S, T):
            return PropertyReport(
                "s_noetherian", False, tuple(T), "all elements S-compact but a subset has no S-maximal element"
            )
    return PropertyReport("s_noetherian", True, checked=M.size, detail="finite lattice: all elements compact")


def _random_subsets(M: MultiplicativeLattice, rng: random.Random, k: int) -> Iterator[list[int]]:
    for _ in range(k):
        T = [x for x in M.elements if rng.random() < 0.5]
        yield T or [rng.randrange(M.size)]


def _random_chain(M: MultiplicativeLattice, rng: random.Random) -> list[int]:
    le = M.lattice.leq
    cur = rng.randrange(M.size)
    out = [cur]
    for _ in range(rng.randrange(1, M.size + 2)):
        cur = rng.choice([x for x in M.elements if le[cur][x]])
        out.append(cur)
    # extend until it repeats
    out.append(out[-1])
    return out


def verify_noetherian_equivalences(
    M: MultiplicativeLattice, S: MClosedSet, samples: int = 200, seed: int = 0
) -> PropertyReport:
    """Agreement of: all elements S-compact / sampled subsets have S-maximal elements /
    sampled chains are certified S-stationary.

    Infinite chain conditions cannot be observed on a finite lattice; only the
    sampled finite shadows of the three clauses are compared.
    """
    _require_r(M, "S-Noetherian equivalences")
    le = M.lattice.leq
    compact_all = all(
        le[M.mul(s, a)][b] and le[b][a] for a in M.elements for s, b in [is_s_compact(M, S, a)]
    )
    rng = random.Random(seed)
    maximal_all = True
    for T in _random_subsets(M, rng, samples):
        if not s_maximal_elements(M, S, T):
            maximal_all = False
            break
    stationary_all = True
    for _ in range(samples):
        c = _random_chain(M, rng)
        if check_s_stationary(M, S, c) is None:
            stationary_all = False
            break
    agree = compact_all == maximal_all == stationary_all
    return PropertyReport(
        "s_noetherian_equivalences",
        agree,
        None if agree else (compact_all, maximal_all, stationary_all),
        detail=f"compact={compact_all} s_maximal={maximal_all} s_stationary={stationary_all} "
        f"({samples} subsets, {samples} chains); infinite ACC content not observable finitely",
        checked=M.size + 2 * samples,
    )


def cohen_kaplansky_verify(M: MultiplicativeLattice, S: MClosedSet) -> PropertyReport:
    """Both sides of: S-Noetherian iff every S-prime element is S-compact.

    Finite instances make both sides true; this is a consistency check of the
    two computations, not a proof of the infinite statement.
    """
    _require_r(M, "Cohen-Kaplansky check")
    le = M.lattice.leq
    left = bool(is_s_noetherian(M, S))
    right = True
    n = 0
    for p in M.elements:
        if p != M.top and is_s_prime(M, S, p) is not None:
            n += 1
            s, b = is_s_compact(M, S, p)
            if not (le[M.mul(s, p)][b] and le[b][p]):
                right = False
    return PropertyReport(
        "cohen_kaplansky",
        left == right,
        None if left == right else (left, right),
        detail=f"s_noetherian={left} s_primes_s_compact={right}; "
        "finite-instance agreement only, the Zorn's-lemma direction is not exercised",
        checked=n,
    )


def s_compact_closure_check(M: MultiplicativeLattice, S: MClosedSet) -> PropertyReport:
    """i * j and k v i are S-compact for S-compact i, principal j, compact k."""
    _require_r(M, "S-compact closure check")
    le = M.lattice.leq

    def ok(x: int) -> bool:
        s, b = is_s_compact(M, S, x)
        return le[M.mul(s, x)][b] and le[b][x]

    scompact = [i for i in M.elements if ok(i)]
    n = 0
    for i in scompact:
        for j in sorted(M.principal):
            n += 1
            if not ok(M.mul(i, j)):
                return PropertyReport("s_compact_closure", False, ("product", i, j))
        for k in sorted(compact_elements(M.lattice)):
            n += 1
            if not ok(M.join(k, i)):
                return PropertyReport("s_compact_closure", False, ("join", k, i))
    return PropertyReport("s_compact_closure", True, checked=n)


def spec_s(M: MultiplicativeLattice, S: MClosedSet) -> list[int]:
    """S-prime elements; elements met by S are excluded."""
    return [p for p in M.elements if p != M.top and is_s_prime(M, S, p) is not None]


def classify_element(M: MultiplicativeLattice, S: MClosedSet, x: int) -> dict:
    """One row of the analysis table (labels, not indices)."""
    lab = M.labels
    proper = x != M.top
    row: dict = {"element": lab[x]}
    t = meeting_member(S, x)
    row["s_meets"] = None if t is None else lab[t]
    row["prime"] = proper and is_prime(M, x)
    w = is_s_prime(M, S, x)
    row["s_prime"] = None if w is None else lab[w.s]
    if M.axiom_class >= AxiomClass.C_LATTICE:
        row["primary"] = proper and is_primary(M, x)
        w = is_s_primary(M, S, x)
        row["s_primary"] = None if w is None else lab[w.s]
        row["radical"] = lab[radical(M, x)]
        row["saturation"] = lab[saturation(M, S, x)]
    else:
        row["gated"] = "radical-dependent notions need a multiplicative lattice"
    row["s_irreducible"] = is_s_irreducible(M, S, x)
    return row

