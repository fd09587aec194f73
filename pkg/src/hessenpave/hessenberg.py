"""Hessenberg spaces as root subsets.

A Hessenberg space is a subspace ``H`` of the Lie algebra containing the
Borel and closed under bracket with it.  Such a space is a direct sum of
root spaces together with the full Cartan, so it is determined by its root
set ``Φ_H``, which contains every positive root and is closed under adding
positive roots.  Only the negative part ``Φ_H ∩ Φ⁻`` carries information,
and that is the canonical encoding used here.

Closure under adding any positive root is equivalent to closure under
adding simple roots (positive roots are built up from simples inside Φ⁺),
so constructors check the simple-root condition; the full condition is
re-verified exhaustively in the test suite.

Negating everything, negative parts correspond to down-closed subsets
(order ideals) of the positive-root poset under dominance; their
complements in Φ⁻ are the ad-nilpotent ideals of the opposite Borel.
Enumeration therefore walks the lattice of order ideals.

In type A with rank n−1, Hessenberg spaces match nondecreasing functions
``h: {1..n} → {1..n}`` with ``h(i) ≥ i``: the matrix entries allowed below
the diagonal in column ``j`` reach down to row ``h(j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rootcore import Root, RootSystem, format_root, parse_root


class HessenbergSpace:
    """A Hessenberg space, encoded by its set of negative roots.

    Instances are immutable and hashable; two spaces are equal when they
    live in equal root systems and have the same negative part.  Use
    :func:`from_negative_roots`, :func:`from_function`, or
    :func:`enumerate_hessenberg` to construct validated instances.
    """

    __slots__ = ("rs", "negative_part", "_members")

    def __init__(self, rs: RootSystem, negative_part: frozenset[Root]):
        self.rs = rs
        self.negative_part = negative_part
        members = set(range(rs.num_positive))
        for beta in negative_part:
            members.add(rs.root_index(beta))
        self._members = frozenset(members)

    def contains(self, root: Root) -> bool:
        """Membership of a root in Φ_H."""
        return self.rs.root_index(root) in self._members

    def contains_index(self, idx: int) -> bool:
        return idx in self._members

    @property
    def member_indices(self) -> frozenset[int]:
        """Indices (into rs.all_roots) of the roots of Φ_H."""
        return self._members

    def is_subspace_of(self, other: "HessenbergSpace") -> bool:
        return self.rs == other.rs and self.negative_part <= other.negative_part

    def __eq__(self, other) -> bool:
        return (isinstance(other, HessenbergSpace) and self.rs == other.rs
                and self.negative_part == other.negative_part)

    def __hash__(self) -> int:
        return hash((self.rs.lie_type, self.rs.rank, self.negative_part))

    def __repr__(self) -> str:
        return (f"HessenbergSpace({self.rs.lie_type}{self.rs.rank}, "
                f"neg={format_negative_part(self)!r})")


@dataclass(frozen=True)
class ComplementIdeal:
    """The negative roots missing from a Hessenberg space.

    This set is downward closed (subtracting a positive root stays inside
    whenever the difference is a root) and corresponds to an ad-nilpotent
    ideal of the opposite Borel.
    """

    roots: frozenset[Root]


def from_negative_roots(rs: RootSystem, negatives: Iterable[Root]) -> HessenbergSpace:
    """Build the Hessenberg space with the given negative part.

    Raises ValueError if some element is not a negative root or if the
    closure condition fails; the error names the offending pair.
    """
    neg = frozenset(negatives)
    for beta in neg:
        rs.root_index(beta)
        if not beta.is_negative:
            raise ValueError(f"{format_root(beta)} is not a negative root")
    for beta in neg:
        for i, alpha in enumerate(rs.simple_roots, start=1):
            s = rs.root_add(beta, alpha)
            if s is not None and s.is_negative and s not in neg:
                raise ValueError(
                    f"closure violation: {format_root(beta)} is in the space "
                    f"but {format_root(beta)} + α_{i} = {format_root(s)} is not")
    return HessenbergSpace(rs, neg)


def borel_space(rs: RootSystem) -> HessenbergSpace:
    """The minimal Hessenberg space Φ_H = Φ⁺ (H is the Borel itself)."""
    return HessenbergSpace(rs, frozenset())


def full_space(rs: RootSystem) -> HessenbergSpace:
    """The maximal Hessenberg space Φ_H = Φ (H is the whole Lie algebra)."""
    return HessenbergSpace(rs, frozenset(rs.negative_roots))


def enumerate_hessenberg(rs: RootSystem) -> tuple[HessenbergSpace, ...]:
    """All Hessenberg spaces, ordered by size of the negative part and then
    lexicographically on the sorted index tuple of the negated roots.

    The enumeration walks down-closed subsets of the positive-root poset:
    a positive root may join an ideal once everything reachable from it by
    subtracting one simple root is already present.  The result always
    starts with the Borel and ends with the full Lie algebra; it is cached
    on the root system.
    """
    if rs._hessenberg_cache is not None:
        return rs._hessenberg_cache

    npos = rs.num_positive
    pos = rs.positive_roots
    # lower covers: indices reachable by subtracting one simple root
    covers: list[tuple[int, ...]] = []
    for r in pos:
        cs = []
        for a in rs.simple_roots:
            d = tuple(x - y for x, y in zip(r.coeffs, a.coeffs))
            if rs.is_root(d) and all(c >= 0 for c in d):
                cs.append(rs.root_index(Root(d)))
        covers.append(tuple(cs))

    seen: set[frozenset[int]] = set()
    frontier = [frozenset()]
    seen.add(frontier[0])
    while frontier:
        nxt = []
        for ideal in frontier:
            for p in range(npos):
                if p in ideal:
                    continue
                if all(c in ideal for c in covers[p]):
                    grown = ideal | {p}
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt

    ordered = sorted(seen, key=lambda s: (len(s), tuple(sorted(s))))
    spaces = tuple(
        HessenbergSpace(rs, frozenset(-pos[p] for p in ideal))
        for ideal in ordered
    )
    rs._hessenberg_cache = spaces
    return spaces


def from_function(n: int, h: Iterable[int]) -> HessenbergSpace:
    """The Hessenberg space of a Hessenberg function, in ambient type A_{n−1}.

    The function must be nondecreasing with ``i ≤ h(i) ≤ n``.  The negative
    root ``ε_i − ε_j`` (for ``i > j``) belongs to the space iff ``i ≤ h(j)``.
    """
    hs = tuple(int(x) for x in h)
    if len(hs) != n:
        raise ValueError(f"expected {n} values, got {len(hs)}")
    for i, v in enumerate(hs, start=1):
        if v < i:
            raise ValueError(f"h({i}) = {v} < {i}")
        if v > n:
            raise ValueError(f"h({i}) = {v} > n = {n}")
    if any(hs[k] > hs[k + 1] for k in range(n - 1)):
        raise ValueError(f"h = {hs} is not nondecreasing")
    if n < 2:
        raise ValueError("need n >= 2 for a rank >= 1 ambient system")

    rs = RootSystem("A", n - 1)
    neg = set()
    for j in range(1, n):
        for i in range(j + 1, n + 1):
            if i <= hs[j - 1]:
                coeffs = tuple(-1 if j <= k <= i - 1 else 0
                               for k in range(1, n))
                neg.add(rs.root(coeffs))
    return from_negative_roots(rs, neg)


def to_function(space: HessenbergSpace) -> tuple[int, ...]:
    """Read a type-A Hessenberg space back as a Hessenberg function."""
    rs = space.rs
    if rs.lie_type != "A":
        raise ValueError("Hessenberg functions only encode type-A spaces")
    n = rs.rank + 1
    out = []
    for j in range(1, n + 1):
        hj = j
        for i in range(j + 1, n + 1):
            coeffs = tuple(-1 if j <= k <= i - 1 else 0 for k in range(1, n))
            if space.contains(Root(coeffs)):
                hj = max(hj, i)
        out.append(hj)
    return tuple(out)


def complement_ideal(space: HessenbergSpace) -> ComplementIdeal:
    """The negative roots outside the space (an ad-nilpotent ideal of b⁻)."""
    missing = frozenset(r for r in space.rs.negative_roots
                        if r not in space.negative_part)
    return ComplementIdeal(missing)


# ---------------------------------------------------------------------------
# text encodings
# ---------------------------------------------------------------------------


def format_negative_part(space: HessenbergSpace) -> str:
    """Semicolon-separated negative roots in root text format."""
    rs = space.rs
    ordered = sorted(space.negative_part, key=rs.root_index)
    return ";".join(format_root(r) for r in ordered)


def parse_hessenberg(rs: RootSystem, text: str) -> HessenbergSpace:
    """Parse the text form of a Hessenberg space.

    Accepted forms: ``full`` and ``borel`` for the two extremes,
    ``h=2,3,3`` for a type-A Hessenberg function, and
    ``neg=-1,0;0,-1`` for an explicit negative-root list (``neg=`` with
    nothing after it is the Borel).
    """
    text = text.strip()
    if text == "full":
        return full_space(rs)
    if text == "borel":
        return borel_space(rs)
    if text.startswith("h="):
        if rs.lie_type != "A":
            raise ValueError("h=... requires a type-A root system")
        values = [int(p) for p in text[2:].split(",") if p.strip()]
        space = from_function(rs.rank + 1, values)
        return HessenbergSpace(rs, space.negative_part)
    if text.startswith("neg="):
        body = text[4:].strip()
        if not body:
            return borel_space(rs)
        roots = [parse_root(rs, part) for part in body.split(";")]
        return from_negative_roots(rs, roots)
    raise ValueError(f"malformed Hessenberg text {text!r}")
