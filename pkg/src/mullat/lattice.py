"""Finite lattices over dense integer indices with precomputed order, meet and join tables."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import NoBounds, NotALattice, NotAPoset
from .reports import PropertyReport

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """Immutable finite lattice.

    Elements are the integers ``0 .. size-1``; ``labels`` is display only.
    ``leq[a][b]`` is True iff a <= b.
    """

    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    meet_table: Table
    join_table: Table
    bottom: int
    top: int

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> range:
        return range(len(self.labels))

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def up(self, a: int) -> list[int]:
        return [x for x in self.elements if self.leq[a][x]]

    def down(self, a: int) -> list[int]:
        return [x for x in self.elements if self.leq[x][a]]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def check(self, *xs: int) -> None:
        for x in xs:
            if not (isinstance(x, (int, np.integer)) and 0 <= x < self.size):
                raise ValueError(f"{x!r} is not an element of this {self.size}-element lattice")

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, labels={list(self.labels)})"


def _closure(size: int, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
    rel = np.eye(size, dtype=bool)
    for i, j in pairs:
        if not (0 <= i < size and 0 <= j < size):
            raise ValueError(f"pair {(i, j)} out of range for {size} labels")
        rel[i, j] = True
    # Warshall
    for k in range(size):
        rel |= rel[:, k, None] & rel[None, k, :]
    return rel


def _bound_table(rel: np.ndarray, lower: bool) -> Table:
    """Greatest lower bound (or least upper bound) for every pair."""
    size = rel.shape[0]
    # below[c] = number of elements <= c (resp. >= c for joins)
    order = rel if lower else rel.T
    height = order.sum(axis=0)
    table = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            bounds = np.flatnonzero(order[:, a] & order[:, b])
            if bounds.size == 0:
                raise NotALattice(
                    f"elements {a} and {b} have no common {'lower' if lower else 'upper'} bound",
                    witness=(a, b),
                )
            best = bounds[np.argmax(height[bounds])]
            if not order[bounds, best].all():
                raise NotALattice(
                    f"elements {a} and {b} lack a {'meet' if lower else 'join'}",
                    witness=(a, b),
                )
            table[a][b] = table[b][a] = int(best)
    return tuple(tuple(row) for row in table)


def build_from_leq(labels: Sequence[str], leq_pairs: Iterable[tuple[int, int]]) -> FiniteLattice:
    """Build a lattice from any generating set of order pairs (covers suffice).

    Raises NotAPoset, NoBounds or NotALattice with a witness.
    """
    labels = tuple(str(x) for x in labels)
    size = len(labels)
    if size == 0:
        raise NoBounds("empty carrier has no top or bottom")
    rel = _closure(size, leq_pairs)
    sym = rel & rel.T & ~np.eye(size, dtype=bool)
    if sym.any():
        i, j = (int(v) for v in np.argwhere(sym)[0])
        raise NotAPoset(f"{labels[i]} <= {labels[j]} <= {labels[i]} with distinct elements", witness=(i, j))
    tops = np.flatnonzero(rel.all(axis=0))
    bottoms = np.flatnonzero(rel.all(axis=1))
    if tops.size == 0 or bottoms.size == 0:
        raise NoBounds("order has no " + ("top" if tops.size == 0 else "bottom"))
    meet = _bound_table(rel, lower=True)
    join = _bound_table(rel, lower=False)
    leq = tuple(tuple(bool(v) for v in row) for row in rel)
    return FiniteLattice(labels, leq, meet, join, int(bottoms[0]), int(tops[0]))


def chain(size: int, labels: Sequence[str] | None = None) -> FiniteLattice:
    labels = labels if labels is not None else [str(i) for i in range(size)]
    return build_from_leq(labels, [(i, i + 1) for i in range(size - 1)])


def join_all(L: FiniteLattice, xs: Iterable[int]) -> int:
    return reduce(L.join, xs, L.bottom)


def meet_all(L: FiniteLattice, xs: Iterable[int]) -> int:
    return reduce(L.meet, xs, L.top)


def is_modular(L: FiniteLattice) -> PropertyReport:
    """a <= c implies a v (b ^ c) == (a v b) ^ c, scanned in lexicographic (a, b, c) order."""
    n = 0
    for a in L.elements:
        for b in L.elements:
            for c in L.elements:
                if not L.leq[a][c]:
                    continue
                n += 1
                if L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c):
                    return PropertyReport("modular", False, (a, b, c), checked=n)
    return PropertyReport("modular", True, checked=n)


def compact_elements(L: FiniteLattice) -> frozenset[int]:
    """Compact elements of L.

    Any cover ``c <= join(X)`` in a finite lattice already uses a finite X, so
    every element is compact. Kept so the definitional pipeline reads the same
    as for infinite lattices.
    """
    return frozenset(L.elements)


def product_lattice(L1: FiniteLattice, L2: FiniteLattice) -> FiniteLattice:
    """Componentwise product; pair (i, j) has index ``i * L2.size + j``."""
    n2 = L2.size
    pairs = [(i, j) for i in L1.elements for j in L2.elements]
    labels = tuple(f"<{L1.labels[i]},{L2.labels[j]}>" for i, j in pairs)
    leq = tuple(tuple(L1.leq[i][k] and L2.leq[j][l] for k, l in pairs) for i, j in pairs)
    meet = tuple(tuple(L1.meet(i, k) * n2 + L2.meet(j, l) for k, l in pairs) for i, j in pairs)
    join = tuple(tuple(L1.join(i, k) * n2 + L2.join(j, l) for k, l in pairs) for i, j in pairs)
    return FiniteLattice(labels, leq, meet, join, L1.bottom * n2 + L2.bottom, L1.top * n2 + L2.top)


def lattice_to_json(L: FiniteLattice, tables: bool = False) -> dict:
    out = {
        "labels": list(L.labels),
        "leq": [[a, b] for a in L.elements for b in L.elements if L.leq[a][b]],
    }
    if tables:
        out["meet"] = [list(r) for r in L.meet_table]
        out["join"] = [list(r) for r in L.join_table]
        out["top"] = L.top
        out["bottom"] = L.bottom
    return out


def lattice_from_json(data: dict) -> FiniteLattice:
    try:
        labels = data["labels"]
        pairs = [(int(i), int(j)) for i, j in data["leq"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed lattice JSON: {exc}") from exc
    return build_from_leq(labels, pairs)
