"""Small exact linear algebra utilities.

Everything here works over the rationals (``fractions.Fraction``, with
plain ints passing through untouched) or over GF(2); matrices in the
Lie-algebra realizations are sparse dicts ``{(row, col): value}`` since
root vectors have at most two nonzero entries.  Sizes never exceed a few
dozen, so the point is exactness and determinism, not asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

Sparse = dict[tuple[int, int], Fraction | int]


# ---------------------------------------------------------------------------
# sparse matrices
# ---------------------------------------------------------------------------


def sp_add(a: Sparse, b: Sparse) -> Sparse:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def sp_scale(a: Sparse, c) -> Sparse:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def sp_mul(a: Sparse, b: Sparse) -> Sparse:
    rows: dict[int, list[tuple[int, Fraction | int]]] = {}
    for (r, c), v in b.items():
        rows.setdefault(r, []).append((c, v))
    out: Sparse = {}
    for (r, c), v in a.items():
        for c2, v2 in rows.get(c, ()):
            k = (r, c2)
            w = out.get(k, 0) + v * v2
            if w:
                out[k] = w
            elif k in out:
                del out[k]
    return out


def sp_commutator(a: Sparse, b: Sparse) -> Sparse:
    return sp_add(sp_mul(a, b), sp_scale(sp_mul(b, a), -1))


def sp_identity(n: int) -> Sparse:
    return {(i, i): 1 for i in range(n)}


def sp_equal(a: Sparse, b: Sparse) -> bool:
    return not sp_add(a, sp_scale(b, -1))


def sp_exp_nilpotent(x: Sparse, size: int) -> Sparse:
    """exp of a nilpotent matrix; the series must terminate within `size`
    steps, which is checked."""
    out = sp_identity(size)
    term: Sparse = sp_identity(size)
    for k in range(1, size + 1):
        term = sp_scale(sp_mul(term, x), Fraction(1, k))
        if not term:
            return out
        out = sp_add(out, term)
    if sp_mul(term, x):
        raise ValueError("matrix is not nilpotent")
    return out


def sp_is_diagonal(a: Sparse) -> bool:
    return all(r == c for (r, c) in a)


def sp_is_strictly_upper(a: Sparse) -> bool:
    return all(r < c for (r, c) in a)


# ---------------------------------------------------------------------------
# dense exact solving
# ---------------------------------------------------------------------------


def solve_affine(matrix: list[list[Fraction | int]],
                 rhs: list[Fraction | int],
                 ) -> Optional[tuple[list[Fraction], int]]:
    """Solve ``A x = rhs`` exactly.

    Returns ``(x, kernel_dim)`` where x is the particular solution with all
    free variables set to zero, or None when the system is inconsistent.
    Pivoting is deterministic (first nonzero entry in column order), so the
    returned solution is a pure function of the input.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    a = [[Fraction(x) for x in row] + [Fraction(rhs[r])]
         for r, row in enumerate(matrix)]
    pivots: list[tuple[int, int]] = []
    prow = 0
    for col in range(n):
        pr = next((r for r in range(prow, m) if a[r][col] != 0), None)
        if pr is None:
            continue
        a[prow], a[pr] = a[pr], a[prow]
        inv = 1 / a[prow][col]
        a[prow] = [x * inv for x in a[prow]]
        for r in range(m):
            if r != prow and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[prow])]
        pivots.append((prow, col))
        prow += 1
        if prow == m:
            break
    for r in range(prow, m):
        if a[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for prow_, col in pivots:
        x[col] = a[prow_][n]
    return x, n - len(pivots)


def gf2_solve(rows: list[list[int]], rhs: list[int]) -> Optional[list[int]]:
    """Solve a linear system over GF(2); free variables are set to zero.

    Rows are 0/1 coefficient lists.  Returns a 0/1 solution vector or None
    when inconsistent.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(row) + [b & 1] for row, b in zip(rows, rhs)]
    pivots = []
    prow = 0
    for col in range(n):
        pr = next((r for r in range(prow, m) if a[r][col] & 1), None)
        if pr is None:
            continue
        a[prow], a[pr] = a[pr], a[prow]
        for r in range(m):
            if r != prow and a[r][col] & 1:
                a[r] = [(x ^ y) for x, y in zip(a[r], a[prow])]
        pivots.append((prow, col))
        prow += 1
        if prow == m:
            break
    for r in range(prow, m):
        if a[r][n]:
            return None
    x = [0] * n
    for prow_, col in pivots:
        x[col] = a[prow_][n]
    return x
