"""Brute-force verification over small prime fields, in type A only.

A complete flag in F_q^n sits in exactly one Bruhat cell, indexed by a
permutation; the cell is an affine space whose points have a unique
column-echelon normal form.  Columns carry pivots at the rows given by the
permutation, entries below a pivot and to the right of a pivot (in its
row) vanish, and the remaining free entries — one per inversion — take
arbitrary field values, so the cell has exactly ``q^{inv(w)}`` points.

A flag satisfies the Hessenberg condition when the single-Jordan-block
nilpotent maps each ``V_i`` into ``V_{h(i)}``, decided here by exact rank
computations mod q.  Counting the passing flags per cell gives an
independent check of the paving: a nonempty cell of predicted dimension d
must contain exactly ``q^d`` points and an empty cell none, and the total
must be the Betti evaluation at q.  The complex-geometry statement is used
as a counting oracle over finite fields; the cells are cut out by the same
equations, so any combinatorial slip shows up as a count mismatch.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import ConsistencyError
from .hessenberg import from_function
from .paving import (
    cell_dimension,
    cell_nonempty,
    poincare_polynomial,
)
from .rootcore import RootSystem, WeylElement, enumerate_weyl

_ALLOWED_PRIMES = (2, 3, 5)
_MAX_N = 5


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """A matrix over F_q with entries reduced to [0, q)."""

    q: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.q > 7 or self.q < 2 or any(self.q % d == 0 for d in range(2, self.q)):
            raise ValueError(f"q must be a prime at most 7, got {self.q}")
        if any(not 0 <= x < self.q for row in self.entries for x in row):
            raise ValueError("entries must be reduced mod q")

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(r * v for r, v in zip(row, vec)) % self.q
                     for row in self.entries)


def jordan_nilpotent(n: int, q: int) -> PrimeFieldMatrix:
    """The regular nilpotent single Jordan block: ones on the superdiagonal."""
    return PrimeFieldMatrix(q, tuple(
        tuple(1 if c == r + 1 else 0 for c in range(n)) for r in range(n)
    ))


@dataclass(frozen=True)
class BruhatFlag:
    """A flag in Bruhat normal form: pivot pattern ``perm`` (1-based,
    column j has its pivot in row perm[j-1]) plus one free entry per
    inversion position."""

    q: int
    perm: tuple[int, ...]
    free: tuple[tuple[tuple[int, int], int], ...]

    def matrix(self) -> PrimeFieldMatrix:
        n = len(self.perm)
        m = [[0] * n for _ in range(n)]
        for j, p in enumerate(self.perm):
            m[p - 1][j] = 1
        for (r, c), v in self.free:
            m[r - 1][c - 1] = v
        return PrimeFieldMatrix(self.q, tuple(tuple(row) for row in m))


def free_positions(perm: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """The free (row, column) positions of the cell's normal form: above the
    pivot of the column, in rows not already used by earlier pivots."""
    n = len(perm)
    earlier: set[int] = set()
    out = []
    for j, p in enumerate(perm, start=1):
        for r in range(1, p):
            if r not in earlier:
                out.append((r, j))
        earlier.add(p)
    return tuple(out)


def enumerate_cell_flags(n: int, q: int, perm: tuple[int, ...]
                         ) -> Iterator[BruhatFlag]:
    """All flags of one Bruhat cell, exactly q^(number of inversions)."""
    if n > _MAX_N:
        raise ValueError(f"flag enumeration is limited to n <= {_MAX_N}")
    if q not in _ALLOWED_PRIMES:
        raise ValueError(f"q must be one of {_ALLOWED_PRIMES}")
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    positions = free_positions(perm)
    for values in itertools.product(range(q), repeat=len(positions)):
        yield BruhatFlag(q, perm, tuple(zip(positions, values)))


class _EchelonBasis:
    """Incremental reduced echelon basis of a subspace of F_q^n."""

    def __init__(self, q: int):
        self.q = q
        self.rows: list[tuple[int, ...]] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [(x - f * y) % self.q for x, y in zip(v, row)]
        return tuple(v)

    def add(self, vec: tuple[int, ...]) -> None:
        v = self._reduce(vec)
        if any(v):
            p = next(k for k, x in enumerate(v) if x)
            inv = pow(v[p], self.q - 2, self.q)
            self.rows.append(tuple(x * inv % self.q for x in v))
            self.pivots.append(p)

    def contains(self, vec: tuple[int, ...]) -> bool:
        return not any(self._reduce(vec))


def hessenberg_check(flag: BruhatFlag, nilpotent: PrimeFieldMatrix,
                     h: tuple[int, ...]) -> bool:
    """Whether the flag satisfies N·V_i ⊆ V_{h(i)} for all i."""
    mat = flag.matrix()
    n = len(flag.perm)
    images = [nilpotent.apply(mat.column(j)) for j in range(n)]
    basis = _EchelonBasis(flag.q)
    filled = 0
    for i in range(1, n + 1):
        target = h[i - 1]
        while filled < target:
            basis.add(mat.column(filled))
            filled += 1
        if not all(basis.contains(images[k]) for k in range(i)):
            return False
    return True


def weyl_to_permutation(w: WeylElement) -> tuple[int, ...]:
    """The permutation of 1..n matching a type-A Weyl element's root action."""
    rs = w.rs
    if rs.lie_type != "A":
        raise ValueError("permutations encode type-A Weyl elements only")
    n = rs.rank + 1
    out = []
    for a in range(1, n + 1):
        b = a
        for i in reversed(w.word):
            if b == i:
                b = i + 1
            elif b == i + 1:
                b = i
        out.append(b)
    return tuple(out)


@dataclass(frozen=True)
class CellCount:
    perm: tuple[int, ...]
    count: int
    predicted: int


@dataclass(frozen=True)
class CountReport:
    n: int
    q: int
    h: tuple[int, ...]
    cells: tuple[CellCount, ...]
    total: int
    betti_eval: int

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "h": list(self.h),
            "cells": [
                {"perm": "".join(str(p) for p in c.perm),
                 "count": c.count, "predicted": c.predicted}
                for c in self.cells
            ],
            "total": self.total,
            "betti_eval": self.betti_eval,
        }


def count_points(n: int, q: int, h) -> CountReport:
    """Count Hessenberg flags over F_q per Bruhat cell and compare with the
    paving prediction; a mismatch raises ConsistencyError.

    For every permutation cell the count must be ``q^dim`` when the paving
    declares the cell nonempty of dimension dim, and 0 when empty; the total
    must equal the Betti evaluation at q.
    """
    hs = tuple(int(x) for x in h)
    space = from_function(n, hs)
    rs: RootSystem = space.rs
    nilpotent = jordan_nilpotent(n, q)

    cells = []
    total = 0
    for w in enumerate_weyl(rs):
        perm = weyl_to_permutation(w)
        if cell_nonempty(w, space):
            predicted = q ** cell_dimension(w, space)
        else:
            predicted = 0
        count = sum(
            1 for flag in enumerate_cell_flags(n, q, perm)
            if hessenberg_check(flag, nilpotent, hs)
        )
        if count != predicted:
            raise ConsistencyError(
                f"cell {perm}: counted {count} flags, paving predicts "
                f"{predicted} (n={n}, q={q}, h={hs})")
        cells.append(CellCount(perm, count, predicted))
        total += count

    betti_eval = poincare_polynomial(rs, space).evaluate(q)
    if total != betti_eval:
        raise ConsistencyError(
            f"total {total} differs from the Betti evaluation {betti_eval}")
    return CountReport(n, q, hs, tuple(cells), total, betti_eval)
