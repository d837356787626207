"""Multiplications on finite lattices: axiom checks, residuals, radicals, principal elements."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Sequence

from .errors import (
    DegenerateLattice,
    NoIdentity,
    NotAssociative,
    NotCommutative,
    NotMonotone,
    NotProper,
    ProductAboveMeet,
    WrongClass,
)
from .lattice import FiniteLattice, Table, compact_elements, is_modular, join_all, product_lattice
from .reports import PropertyReport


class AxiomClass(IntEnum):
    V_LATTICE = 1
    MULTIPLICATIVE = 2
    C_LATTICE = 3
    R_LATTICE = 4

    @classmethod
    def parse(cls, text: str) -> "AxiomClass":
        key = text.strip().upper().replace("-", "_")
        aliases = {"V": "V_LATTICE", "C": "C_LATTICE", "R": "R_LATTICE", "MULT": "MULTIPLICATIVE"}
        key = aliases.get(key, key)
        if key in ("V_LATTICE", "C_LATTICE", "R_LATTICE", "MULTIPLICATIVE"):
            return cls[key]
        raise ValueError(f"unknown lattice class {text!r}")


@dataclass(frozen=True, eq=False)
class MultiplicativeLattice:
    lattice: FiniteLattice
    mult: Table
    axiom_class: AxiomClass
    clause_reports: dict[str, PropertyReport] = field(repr=False)
    residual_table: Table | None = field(default=None, repr=False)
    radical_table: tuple[int, ...] | None = field(default=None, repr=False)
    principal: frozenset[int] = field(default=frozenset(), repr=False)

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def elements(self) -> range:
        return self.lattice.elements

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def labels(self) -> tuple[str, ...]:
        return self.lattice.labels

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def le(self, a: int, b: int) -> bool:
        return self.lattice.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.lattice.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.lattice.join_table[a][b]

    def require(self, cls: AxiomClass, what: str) -> None:
        if self.axiom_class < cls:
            raise WrongClass(f"{what} needs class >= {cls.name}, lattice is {self.axiom_class.name}")


def _first(pred, it):
    for x in it:
        if pred(*x):
            return x
    return None


def _check_v_axioms(L: FiniteLattice, m: Table) -> None:
    E = L.elements
    pairs = [(a, b) for a in E for b in E]
    bad = _first(lambda a, b: m[a][b] != m[b][a], pairs)
    if bad:
        raise NotCommutative(f"{bad} product differs when swapped", witness=bad)
    bad = _first(lambda a, b, c: m[m[a][b]][c] != m[a][m[b][c]], ((a, b, c) for a in E for b in E for c in E))
    if bad:
        raise NotAssociative(f"(ab)c != a(bc) at {bad}", witness=bad)
    bad = next((a for a in E if m[a][L.top] != a), None)
    if bad is not None:
        raise NoIdentity(f"{L.labels[bad]} * top != {L.labels[bad]}", witness=(bad,))
    bad = _first(
        lambda a, b, c: L.leq[a][b] and not L.leq[m[a][c]][m[b][c]],
        ((a, b, c) for a in E for b in E for c in E),
    )
    if bad:
        raise NotMonotone(f"a <= b but ac !<= bc at {bad}", witness=bad)
    bad = _first(lambda a, b: not L.leq[m[a][b]][L.meet(a, b)], pairs)
    if bad:
        raise ProductAboveMeet(f"ab !<= a ^ b at {bad}", witness=bad)


def _power_limit(L: FiniteLattice, m: Table, x: int) -> int:
    # x >= x^2 >= x^3 >= ... so the sequence stabilizes
    cur = x
    while True:
        nxt = m[cur][x]
        if nxt == cur:
            return cur
        cur = nxt


def attach_mult(L: FiniteLattice, table: Sequence[Sequence[int]]) -> MultiplicativeLattice:
    """Validate ``table`` as a multiplication on ``L`` and classify the result.

    Tables failing a V-lattice clause are rejected with an AxiomError carrying
    the witness. Tables that are V-lattices but not distributive are kept with
    class V_LATTICE and no residual/radical caches.
    """
    n = L.size
    if n < 2:
        raise DegenerateLattice("one-element lattice: 0 = 1, no multiplicatively closed set can exclude 0")
    if len(table) != n or any(len(row) != n for row in table):
        raise ValueError(f"multiplication table must be {n}x{n}")
    m = tuple(tuple(int(v) for v in row) for row in table)
    if any(not 0 <= v < n for row in m for v in row):
        raise ValueError("multiplication table entries out of range")
    _check_v_axioms(L, m)

    E = L.elements
    reports: dict[str, PropertyReport] = {
        name: PropertyReport(name, True)
        for name in ("commutative", "associative", "identity", "monotone", "product_below_meet")
    }
    bad = _first(
        lambda a, b, c: m[a][L.join(b, c)] != L.join(m[a][b], m[a][c]),
        ((a, b, c) for a in E for b in E for c in E),
    )
    reports["join_distributive"] = PropertyReport("join_distributive", bad is None, bad)
    bad = next((a for a in E if m[a][L.bottom] != L.bottom), None)
    reports["bottom_absorbing"] = PropertyReport(
        "bottom_absorbing", bad is None, None if bad is None else (bad,)
    )
    if not (reports["join_distributive"] and reports["bottom_absorbing"]):
        for name in ("one_compact", "compactly_generated", "compact_products", "modular", "principally_generated"):
            reports[name] = PropertyReport(name, False, skipped="multiplication does not distribute over joins")
        return MultiplicativeLattice(L, m, AxiomClass.V_LATTICE, reports)

    residual = tuple(
        tuple(join_all(L, (x for x in E if L.leq[m[x][b]][a])) for b in E) for a in E
    )
    radical = tuple(join_all(L, (x for x in E if L.leq[_power_limit(L, m, x)][a])) for a in E)
    compact = compact_elements(L)
    reports["one_compact"] = PropertyReport("one_compact", L.top in compact, detail="finite lattice")
    reports["compactly_generated"] = PropertyReport(
        "compactly_generated",
        all(join_all(L, (c for c in compact if L.leq[c][x])) == x for x in E),
        detail="finite lattice",
    )
    bad = _first(lambda a, b: m[a][b] not in compact, ((a, b) for a in compact for b in compact))
    reports["compact_products"] = PropertyReport("compact_products", bad is None, bad, detail="finite lattice")

    partial = MultiplicativeLattice(L, m, AxiomClass.C_LATTICE, reports, residual, radical)
    principal = frozenset(
        x for x in E if is_meet_principal(partial, x) and is_join_principal(partial, x)
    )
    reports["modular"] = is_modular(L)
    bad = next((x for x in E if join_all(L, (p for p in principal if L.leq[p][x])) != x), None)
    reports["principally_generated"] = PropertyReport(
        "principally_generated", bad is None, None if bad is None else (bad,)
    )
    cls = AxiomClass.C_LATTICE
    if reports["modular"] and reports["principally_generated"]:
        cls = AxiomClass.R_LATTICE
    return MultiplicativeLattice(L, m, cls, reports, residual, radical, principal)


def meet_mult(L: FiniteLattice) -> MultiplicativeLattice:
    """Attach the meet as the multiplication."""
    return attach_mult(L, L.meet_table)


def product_mult(M1: MultiplicativeLattice, M2: MultiplicativeLattice) -> MultiplicativeLattice:
    """Componentwise product of two multiplicative lattices (index ``i * |L2| + j``)."""
    n2 = M2.size
    pairs = [(i, j) for i in M1.elements for j in M2.elements]
    table = [[M1.mul(i, k) * n2 + M2.mul(j, l) for k, l in pairs] for i, j in pairs]
    return attach_mult(product_lattice(M1.lattice, M2.lattice), table)


def classify_lattice(M: MultiplicativeLattice) -> tuple[AxiomClass, dict[str, PropertyReport]]:
    """Strongest axiom class plus one report per clause (computed at attach time)."""
    return M.axiom_class, dict(M.clause_reports)


def power(M: MultiplicativeLattice, x: int, k: int) -> int:
    out = M.top
    for _ in range(k):
        out = M.mul(out, x)
    return out


def residual(M: MultiplicativeLattice, a: int, b: int) -> int:
    """(a : b), the largest x with x * b <= a."""
    if M.residual_table is None:
        M.require(AxiomClass.MULTIPLICATIVE, "residual")
    return M.residual_table[a][b]


def radical(M: MultiplicativeLattice, a: int) -> int:
    """Join of all x having some power below a."""
    if M.radical_table is None:
        M.require(AxiomClass.C_LATTICE, "radical")
    return M.radical_table[a]


def is_meet_principal(M: MultiplicativeLattice, m: int) -> PropertyReport:
    """a ^ mb == m((a:m) ^ b) for all a, b."""
    E = M.elements
    for a in E:
        am = residual(M, a, m)
        for b in E:
            if M.meet(a, M.mul(m, b)) != M.mul(m, M.meet(am, b)):
                return PropertyReport("meet_principal", False, (a, b))
    return PropertyReport("meet_principal", True)


def is_join_principal(M: MultiplicativeLattice, m: int) -> PropertyReport:
    """a v (b:m) == (am v b) : m for all a, b."""
    E = M.elements
    for a in E:
        am = M.mul(a, m)
        for b in E:
            if M.join(a, residual(M, b, m)) != residual(M, M.join(am, b), m):
                return PropertyReport("join_principal", False, (a, b))
    return PropertyReport("join_principal", True)


def is_principal(M: MultiplicativeLattice, m: int) -> bool:
    if M.axiom_class >= AxiomClass.C_LATTICE:
        return m in M.principal
    return False


def _proper(M: MultiplicativeLattice, x: int) -> None:
    M.lattice.check(x)
    if x == M.top:
        raise NotProper(f"{M.labels[x]} is the top element")


def is_prime(M: MultiplicativeLattice, p: int) -> bool:
    """ab <= p implies a <= p or b <= p."""
    _proper(M, p)
    E = M.elements
    le = M.lattice.leq
    return all(
        le[a][p] or le[b][p] for a in E for b in E if le[M.mul(a, b)][p]
    )


def is_primary(M: MultiplicativeLattice, q: int) -> bool:
    """ab <= q implies a <= q or b <= radical(q)."""
    _proper(M, q)
    rq = radical(M, q)
    E = M.elements
    le = M.lattice.leq
    return all(
        le[a][q] or le[b][rq] for a in E for b in E if le[M.mul(a, b)][q]
    )


def mult_to_json(M: MultiplicativeLattice, tables: bool = False) -> dict:
    from .lattice import lattice_to_json

    return {"lattice": lattice_to_json(M.lattice, tables), "mult": [list(r) for r in M.mult]}


def mult_from_json(data: dict) -> MultiplicativeLattice:
    """Accepts ``{"lattice": ..., "mult": ...}`` or a bare lattice (meet becomes the product)."""
    from .lattice import lattice_from_json

    if not isinstance(data, dict):
        raise ValueError("lattice JSON must be an object")
    if "lattice" in data:
        L = lattice_from_json(data["lattice"])
        if "mult" not in data:
            return meet_mult(L)
        return attach_mult(L, data["mult"])
    return meet_mult(lattice_from_json(data))
