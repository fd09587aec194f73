"""The paving of a regular nilpotent Hessenberg variety by Bruhat cells.

Fix a Hessenberg space with root set ``Φ_H`` and take the nilpotent to be
the sum of simple root vectors (the cell data is the same for every
regular nilpotent in the Borel).  Intersecting the Hessenberg variety with
the Bruhat decomposition gives one cell per Weyl element ``w``:

* the cell is nonempty iff ``w⁻¹α_i ∈ Φ_H`` for every simple root;
* a nonempty cell is an affine space of dimension ``|Φ_w ∩ wΦ_H|``, where
  ``Φ_w`` is the inversion set of ``w``;
* the same dimension arises as the dimension of ``b ∩ Ad w(b⁻ ∩ H)``
  minus the rank, which at root level counts the negative roots of Φ_H
  sent positive by ``w`` — computed here independently as a cross-check;
* the dimension splits across the rows of the positive-root decomposition
  (stage pairs in type D), matching the kernel dimensions of the
  constructive solver in :mod:`hessenpave.liealg`.

Ordering the cells by length gives a paving by affines, so the Betti
numbers of the variety simply count nonempty cells by dimension and the
odd cohomology vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .hessenberg import HessenbergSpace, format_negative_part
from .rootcore import (
    RootSystem,
    WeylElement,
    enumerate_weyl,
    format_word,
    rows,
    type_d_stage_sets,
)


@dataclass(frozen=True)
class PavingCell:
    """One Bruhat cell of the paving: empty, or affine of dimension dim."""

    w: WeylElement
    nonempty: bool
    dim: Optional[int]

    @property
    def length(self) -> int:
        return self.w.length


@dataclass(frozen=True)
class BettiTable:
    """Nonempty-cell counts by dimension; entry k is the 2k-th Betti number."""

    coefficients: tuple[int, ...]

    def evaluate(self, q: int) -> int:
        """The Poincaré polynomial at q — the point count over F_q."""
        return sum(b * q ** k for k, b in enumerate(self.coefficients))

    @property
    def total(self) -> int:
        return sum(self.coefficients)


def _check_compatible(w: WeylElement, space: HessenbergSpace) -> None:
    if w.rs != space.rs:
        raise ValueError("Weyl element and Hessenberg space live in "
                         "different root systems")


def cell_nonempty(w: WeylElement, space: HessenbergSpace) -> bool:
    """Whether the cell of w meets the Hessenberg variety: w⁻¹α_i ∈ Φ_H for
    every simple root α_i (equivalently, the translated sum of simple root
    vectors lies in H)."""
    _check_compatible(w, space)
    rs = w.rs
    inv_perm = w.inverse_root_permutation()
    members = space.member_indices
    for i in range(rs.rank):
        # simple root α_{i+1} has all-roots index equal to its positive index
        idx = rs.root_index(rs.simple_roots[i])
        if inv_perm[idx] not in members:
            return False
    return True


def cell_dimension(w: WeylElement, space: HessenbergSpace) -> int:
    """Dimension of a nonempty cell: the number of inversions of w that w⁻¹
    keeps inside Φ_H."""
    _check_compatible(w, space)
    if not cell_nonempty(w, space):
        raise ValueError("cell is empty; it has no dimension")
    inv_perm = w.inverse_root_permutation()
    members = space.member_indices
    return sum(1 for p in w.inversion_indices() if inv_perm[p] in members)


def cell_dimension_lie(w: WeylElement, space: HessenbergSpace) -> int:
    """The same dimension via the Lie-algebra intersection formula: count
    the negative roots of Φ_H sent positive by w (the Cartan contributes
    exactly the rank, which the formula subtracts)."""
    _check_compatible(w, space)
    if not cell_nonempty(w, space):
        raise ValueError("cell is empty; it has no dimension")
    rs = w.rs
    perm = w.root_permutation()
    npos = rs.num_positive
    return sum(
        1 for beta in space.negative_part if perm[rs.root_index(beta)] < npos
    )


def _w_phi_h_indices(w: WeylElement, space: HessenbergSpace) -> frozenset[int]:
    """Indices of wΦ_H inside all_roots."""
    perm = w.root_permutation()
    return frozenset(perm[m] for m in space.member_indices)


def row_dimension_profile(w: WeylElement, space: HessenbergSpace) -> tuple[int, ...]:
    """Per-stage dimensions of a nonempty cell.

    In types A, B, C entry ``i−1`` is ``|Φ_w ∩ Φ_i ∩ wΦ_H|`` for row i.  In
    type D stage ``i`` (0-based) pairs the plain part of row i with the
    fork-bearing parts of row i+1, and its entry is the variable count
    ``|Φ_w ∩ (Φ_i^0 ∪ Φ_{i+1}^1 ∪ Φ_{i+1}^2)|`` minus the constraint count
    ``|(Φ_i^0 ∪ Φ_i^1 ∪ Φ_{i+1}^2) ∩ wΦ_H^c|``.  Entries always sum to the
    cell dimension.
    """
    _check_compatible(w, space)
    if not cell_nonempty(w, space):
        raise ValueError("cell is empty; it has no profile")
    rs = w.rs
    inv_indices = w.inversion_indices()
    wh = _w_phi_h_indices(w, space)

    if rs.lie_type != "D":
        dec = rows(rs)
        out = []
        for row in dec.rows:
            out.append(sum(
                1 for r in row
                if rs.root_index(r) in inv_indices and rs.root_index(r) in wh
            ))
        return tuple(out)

    out = []
    for dom, cod in type_d_stage_sets(rs):
        free = sum(1 for r in dom if rs.root_index(r) in inv_indices)
        constrained = sum(1 for r in cod if rs.root_index(r) not in wh)
        out.append(free - constrained)
    return tuple(out)


def compute_paving(rs: RootSystem, space: HessenbergSpace) -> tuple[PavingCell, ...]:
    """One cell per Weyl element, in paving order (length, then word)."""
    if rs != space.rs:
        raise ValueError("Hessenberg space belongs to a different root system")
    cells = []
    for w in enumerate_weyl(rs):
        if cell_nonempty(w, space):
            cells.append(PavingCell(w, True, cell_dimension(w, space)))
        else:
            cells.append(PavingCell(w, False, None))
    return tuple(cells)


def poincare_polynomial(rs: RootSystem, space: HessenbergSpace) -> BettiTable:
    """Betti numbers: entry k counts nonempty cells of dimension k."""
    dims = [c.dim for c in compute_paving(rs, space) if c.nonempty]
    top = max(dims)
    coeffs = [0] * (top + 1)
    for d in dims:
        coeffs[d] += 1
    return BettiTable(tuple(coeffs))


def paving_record(rs: RootSystem, space: HessenbergSpace) -> dict:
    """JSON-ready record of a full paving (deterministic key and cell order)."""
    cells = []
    betti: dict[int, int] = {}
    for cell in compute_paving(rs, space):
        entry = {
            "word": format_word(cell.w),
            "length": cell.length,
            "nonempty": cell.nonempty,
            "dim": cell.dim,
            "row_profile": (list(row_dimension_profile(cell.w, space))
                            if cell.nonempty else None),
        }
        if cell.nonempty:
            betti[cell.dim] = betti.get(cell.dim, 0) + 1
        cells.append(entry)
    top = max(betti)
    return {
        "type": rs.lie_type,
        "rank": rs.rank,
        "hessenberg": {"neg": [r for r in format_negative_part(space).split(";") if r]},
        "cells": cells,
        "betti": [betti.get(k, 0) for k in range(top + 1)],
    }
