"""Id(Z_n) as a multiplicative lattice, and the element-wise ring definitions it mirrors.

Ring-side computations never touch the lattice tables: ideals are residue
sets, products are additive closures of elementwise products, and radicals
come from powering residues. That independence is what makes the
correspondence checks meaningful.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

import numpy as np

from .errors import RingSetContainsZero, RingSetMissingOne, RingSetNotClosed
from .lattice import build_from_leq
from .mult import MultiplicativeLattice, attach_mult, radical
from .reports import PropertyReport
from .s_theory import (
    MClosedSet,
    is_s_irreducible,
    is_s_noetherian,
    is_s_prime,
    is_s_primary,
    validate_mclosed,
)


@dataclass(frozen=True)
class IdealOfZn:
    """The ideal dZ_n; the zero ideal has generator n, the whole ring generator 1."""

    n: int
    generator: int

    @property
    def residues(self) -> frozenset[int]:
        return frozenset(range(0, self.n, self.generator))

    @property
    def label(self) -> str:
        return zn_label(self.n, self.generator)

    def __le__(self, other: "IdealOfZn") -> bool:
        return self.generator % other.generator == 0


@dataclass(frozen=True, eq=False)
class ZnLattice:
    n: int
    divisors: tuple[int, ...]
    M: MultiplicativeLattice

    def index(self, d: int) -> int:
        return self.divisors.index(gcd(d, self.n))

    def ideal(self, x: int) -> IdealOfZn:
        return IdealOfZn(self.n, self.divisors[x])


def zn_label(n: int, d: int) -> str:
    return "(0)" if d % n == 0 else f"({d})"


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def ideal_lattice_zn(n: int) -> ZnLattice:
    """Id(Z_n): elements are divisors d (ascending), (d) <= (e) iff e divides d.

    The order comes from divisibility; meets and joins are derived from it by
    the generic builder, and the product is (gcd(ab, n)).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    ds = divisors(n)
    labels = [zn_label(n, d) for d in ds]
    pairs = [(i, j) for i, d in enumerate(ds) for j, e in enumerate(ds) if d % e == 0]
    L = build_from_leq(labels, pairs)
    pos = {d: i for i, d in enumerate(ds)}
    table = [[pos[gcd(a * b, n)] for b in ds] for a in ds]
    return ZnLattice(n, tuple(ds), attach_mult(L, table))


def validate_ring_set(n: int, s_ring: Iterable[int]) -> frozenset[int]:
    S = frozenset(int(s) % n for s in s_ring)
    if 1 not in S:
        raise RingSetMissingOne(f"S must contain 1 in Z_{n}")
    if 0 in S:
        raise RingSetContainsZero(f"S must not contain 0 in Z_{n}")
    for a in sorted(S):
        for b in sorted(S):
            if a * b % n not in S:
                raise RingSetNotClosed(f"{a}*{b} = {a * b % n} mod {n} is not in S", witness=(a, b))
    return S


def lift_mult_set(n: int, s_ring: Iterable[int]) -> MClosedSet:
    """S_L = {(s) : s in S}, where (s) = (gcd(s, n))."""
    S = validate_ring_set(n, s_ring)
    Z = ideal_lattice_zn(n)
    return validate_mclosed(Z.M, {Z.index(s) for s in S})


def multiplicative_sets(n: int, max_size: int) -> list[tuple[int, ...]]:
    """All multiplicatively closed S in Z_n with 1 in S, 0 not in S, |S| <= max_size.

    Sorted by (size, elements).
    """

    def close(gens: set[int]) -> frozenset[int] | None:
        out = set(gens) | {1}
        if len(out) > max_size or 0 in out:
            return None
        frontier = list(out)
        while frontier:
            a = frontier.pop()
            for b in list(out):
                c = a * b % n
                if c not in out:
                    if c == 0 or len(out) >= max_size:
                        return None
                    out.add(c)
                    frontier.append(c)
        return frozenset(out)

    seen = {frozenset({1})}
    stack = [frozenset({1})]
    while stack:
        X = stack.pop()
        for g in range(2, n):
            if g in X:
                continue
            C = close(set(X) | {g})
            if C is not None and C not in seen:
                seen.add(C)
                stack.append(C)
    return sorted((tuple(sorted(S)) for S in seen), key=lambda t: (len(t), t))


# ring-side brute force -----------------------------------------------------


@lru_cache(maxsize=None)
def _ring(n: int):
    r = np.arange(n)
    return r, np.outer(r, r) % n


@lru_cache(maxsize=None)
def _ideal_mask(n: int, d: int) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    mask[::d] = True
    return mask


def ideal_residues(n: int, gens: Iterable[int]) -> frozenset[int]:
    """Smallest ideal containing ``gens``: closure under addition (Z_n ideals are additive subgroups)."""
    out = {0}
    frontier = [g % n for g in gens]
    while frontier:
        g = frontier.pop()
        if g in out:
            continue
        out.add(g)
        frontier.extend(y for y in ((g + x) % n for x in out) if y not in out)
    return frozenset(out)


def ring_radical(n: int, ideal: frozenset[int]) -> frozenset[int]:
    """{r : r^k in I for some k <= n}."""
    out = set()
    for r in range(n):
        x = r
        for _ in range(n):
            if x in ideal:
                out.add(r)
                break
            x = x * r % n
    return frozenset(out)


@lru_cache(maxsize=None)
def _ring_ideals(n: int) -> tuple[frozenset[int], ...]:
    """Every ideal of Z_n, found as the ideal generated by each residue (Z_n is principal)."""
    found = {ideal_residues(n, [a]) for a in range(n)}
    return tuple(sorted(found, key=lambda I: (len(I), sorted(I)), reverse=True))


def _as_ideal(n: int, residues: frozenset[int]) -> IdealOfZn:
    return IdealOfZn(n, min(r for r in residues if r) if len(residues) > 1 else n)


@lru_cache(maxsize=None)
def _s_prime_elementwise(n: int, d: int, s: int) -> bool:
    r, prod = _ring(n)
    inP = _ideal_mask(n, d)
    ok = inP[s * r % n]
    bad = inP[prod] & ~ok[:, None] & ~ok[None, :]
    return not bad.any()


@lru_cache(maxsize=None)
def _radical_mask(n: int, d: int) -> np.ndarray:
    rad = ring_radical(n, frozenset(range(0, n, d)))
    mask = np.zeros(n, dtype=bool)
    mask[sorted(rad)] = True
    return mask


@lru_cache(maxsize=None)
def _s_primary_elementwise(n: int, d: int, s: int) -> bool:
    r, prod = _ring(n)
    inQ = _ideal_mask(n, d)
    inRad = _radical_mask(n, d)
    sr = s * r % n
    bad = inQ[prod] & ~inQ[sr][:, None] & ~inRad[sr][None, :]
    return not bad.any()


def _proper_avoiding(n: int, S: frozenset[int]) -> list[IdealOfZn]:
    out = []
    for I in _ring_ideals(n):
        if len(I) < n and not (I & S):
            out.append(_as_ideal(n, I))
    return out


def ring_s_prime_ideals(n: int, s_ring: Iterable[int]) -> set[IdealOfZn]:
    """Proper P with P ∩ S empty and one s in S: ab in P implies sa in P or sb in P."""
    S = validate_ring_set(n, s_ring)
    return {P for P in _proper_avoiding(n, S) if any(_s_prime_elementwise(n, P.generator, s) for s in S)}


@lru_cache(maxsize=None)
def _ideal_product(n: int, I: frozenset[int], J: frozenset[int]) -> frozenset[int]:
    return ideal_residues(n, {a * b % n for a in I for b in J})


@lru_cache(maxsize=None)
def _scale(n: int, s: int, I: frozenset[int]) -> frozenset[int]:
    return frozenset(s * a % n for a in I)


def ring_s_prime_ideals_pairwise(n: int, s_ring: Iterable[int]) -> set[IdealOfZn]:
    """Same class via ideal pairs: IJ ⊆ P implies sI ⊆ P or sJ ⊆ P."""
    S = validate_ring_set(n, s_ring)
    ideals = _ring_ideals(n)
    prods = {(I, J): _ideal_product(n, I, J) for I in ideals for J in ideals}
    out = set()
    for P in _proper_avoiding(n, S):
        Pr = P.residues
        pairs = [(I, J) for (I, J), IJ in prods.items() if IJ <= Pr]
        if any(all(_scale(n, s, I) <= Pr or _scale(n, s, J) <= Pr for I, J in pairs) for s in S):
            out.add(P)
    return out


def ring_s_primary_ideals(n: int, s_ring: Iterable[int]) -> set[IdealOfZn]:
    """Proper Q with Q ∩ S empty and one s in S: ab in Q implies sa in Q or sb in rad(Q)."""
    S = validate_ring_set(n, s_ring)
    return {Q for Q in _proper_avoiding(n, S) if any(_s_primary_elementwise(n, Q.generator, s) for s in S)}


def ring_s_irreducible_ideals(n: int, s_ring: Iterable[int]) -> set[IdealOfZn]:
    """Proper Q with Q ∩ S empty such that s(I ∩ J) ⊆ Q ⊆ I ∩ J gives some s' with ss'I ⊆ Q or ss'J ⊆ Q."""
    S = sorted(validate_ring_set(n, s_ring))
    ideals = _ring_ideals(n)
    out = set()
    for Q in _proper_avoiding(n, frozenset(S)):
        Qr = Q.residues
        above = [I for I in ideals if Qr <= I]
        ok = True
        for s in S:
            # kill[I]: some s' has ss'I ⊆ Q
            kill = {I: any(_scale(n, s * t % n, I) <= Qr for t in S) for I in above}
            for I in above:
                for J in above:
                    IJ = I & J
                    if _scale(n, s, IJ) <= Qr and not (kill[I] or kill[J]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.add(Q)
    return out


def _lattice_side(Z: ZnLattice, SL: MClosedSet):
    M = Z.M
    proper = [x for x in M.elements if x != M.top]
    primes = {Z.ideal(x) for x in proper if is_s_prime(M, SL, x) is not None}
    primaries = {Z.ideal(x) for x in proper if is_s_primary(M, SL, x) is not None}
    irreducibles = {Z.ideal(x) for x in proper if is_s_irreducible(M, SL, x)}
    return primes, primaries, irreducibles


@lru_cache(maxsize=4096)
def lattice_classification(n: int, members: tuple[int, ...]):
    Z = ideal_lattice_zn(n)
    return _lattice_side(Z, validate_mclosed(Z.M, members))


def verify_correspondence(n: int, s_ring: Iterable[int]) -> PropertyReport:
    """Ring-side S classes equal lattice-side S_L classes; ring radical equals lattice radical."""
    S = validate_ring_set(n, s_ring)
    Z = ideal_lattice_zn(n)
    SL = lift_mult_set(n, S)
    l_prime, l_primary, l_irred = lattice_classification(n, SL.members)
    checks = [
        ("s_prime", ring_s_prime_ideals(n, S), l_prime),
        ("s_prime_pairwise", ring_s_prime_ideals_pairwise(n, S), l_prime),
        ("s_primary", ring_s_primary_ideals(n, S), l_primary),
        ("s_irreducible", ring_s_irreducible_ideals(n, S), l_irred),
    ]
    for name, ring, lat in checks:
        if ring != lat:
            diff = sorted(I.label for I in ring ^ lat)
            return PropertyReport(
                "correspondence", False, (n, tuple(sorted(S)), name), detail=f"{name} differs on {diff}"
            )
    for x in Z.M.elements:
        d = Z.divisors[x]
        ring_rad = ring_radical(n, frozenset(range(0, n, d)))
        if ring_rad != Z.ideal(radical(Z.M, x)).residues:
            return PropertyReport(
                "correspondence", False, (n, tuple(sorted(S)), "radical", Z.M.labels[x])
            )
    # S-finite: sI ⊆ J ⊆ I with J finitely generated; every ideal of Z_n is, so J = I works
    ring_noeth = all(any(_scale(n, s, I) <= I for s in S) for I in _ring_ideals(n))
    lat_noeth = bool(is_s_noetherian(Z.M, SL))
    if ring_noeth != lat_noeth:
        return PropertyReport("correspondence", False, (n, tuple(sorted(S)), "s_noetherian"))
    return PropertyReport("correspondence", True, checked=4 * Z.M.size + Z.M.size)
