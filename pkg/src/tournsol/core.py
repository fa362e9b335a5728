"""Immutable tournaments with bitmask dominance queries.

A tournament is a complete asymmetric relation on alternatives 0..n-1:
for every pair x != y exactly one of "x dominates y" or "y dominates x"
holds.  Dominance is stored one machine integer per alternative (bit y of
row x is set iff x dominates y), which keeps subset operations cheap and
the structure hashable.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

__all__ = [
    "Tournament",
    "chain_insertion_point",
    "is_automorphism",
    "is_transitive_subset",
    "iter_bits",
    "inverse_permutation",
    "maximal_transitive_subsets",
]


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Tournament:
    """Complete asymmetric dominance structure on 0..n-1.

    Instances are immutable; every operation returns fresh values.  The
    constructor accepts a square 0/1 (or boolean) matrix with entry
    (x, y) truthy iff x dominates y, and rejects anything that is not a
    tournament: a truthy diagonal entry, a pair claimed in both
    directions, or a pair claimed in neither.
    """

    __slots__ = ("_n", "_rows", "_cols")

    def __init__(self, matrix: Sequence[Sequence[object]]):
        n = len(matrix)
        if n == 0:
            raise ValueError("tournament needs at least one alternative")
        rows = []
        for x, row in enumerate(matrix):
            if len(row) != n:
                raise ValueError(f"row {x} has length {len(row)}, expected {n}")
            mask = 0
            for y, cell in enumerate(row):
                if cell:
                    mask |= 1 << y
            rows.append(mask)
        for x in range(n):
            if rows[x] >> x & 1:
                raise ValueError(f"alternative {x} marked as dominating itself")
            for y in range(x + 1, n):
                a = rows[x] >> y & 1
                b = rows[y] >> x & 1
                if a and b:
                    raise ValueError(f"pair ({x}, {y}) dominated in both directions")
                if not a and not b:
                    raise ValueError(f"pair ({x}, {y}) left undecided")
        self._init_from_masks(n, rows)

    def _init_from_masks(self, n: int, rows: list[int]) -> None:
        cols = [0] * n
        for x, row in enumerate(rows):
            for y in iter_bits(row):
                cols[y] |= 1 << x
        self._n = n
        self._rows = tuple(rows)
        self._cols = tuple(cols)

    @classmethod
    def _from_masks(cls, n: int, rows: Sequence[int]) -> "Tournament":
        # Trusted fast path for generators that construct valid rows directly.
        t = cls.__new__(cls)
        t._init_from_masks(n, list(rows))
        return t

    @property
    def order(self) -> int:
        return self._n

    @property
    def row_masks(self) -> tuple[int, ...]:
        return self._rows

    def dominates(self, x: int, y: int) -> bool:
        return bool(self._rows[x] >> y & 1)

    def dominion_mask(self, x: int) -> int:
        return self._rows[x]

    def dominators_mask(self, x: int) -> int:
        return self._cols[x]

    def dominion(self, x: int) -> frozenset[int]:
        """Alternatives that x dominates."""
        return frozenset(iter_bits(self._rows[x]))

    def dominators(self, x: int) -> frozenset[int]:
        """Alternatives that dominate x."""
        return frozenset(iter_bits(self._cols[x]))

    def copeland_score(self, x: int) -> int:
        return self._rows[x].bit_count()

    def copeland_scores(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self._rows)

    def restrict(self, members: Iterable[int]) -> tuple["Tournament", tuple[int, ...]]:
        """Subtournament on ``members`` plus the map back to parent ids.

        Position i of the returned index map is the parent alternative
        that became alternative i of the restriction (members ascending).
        """
        index_map = tuple(sorted(set(members)))
        if not index_map:
            raise ValueError("restriction to the empty set")
        if index_map[0] < 0 or index_map[-1] >= self._n:
            raise ValueError("restriction members outside the carrier")
        rows = []
        for x in index_map:
            mask = 0
            for j, y in enumerate(index_map):
                if self._rows[x] >> y & 1:
                    mask |= 1 << j
            rows.append(mask)
        return Tournament._from_masks(len(index_map), rows), index_map

    def skew_adjacency(self) -> list[list[int]]:
        """Matrix with entry (x, y) = +1 if x dominates y, -1 if y dominates x."""
        n = self._n
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            row = self._rows[x]
            for y in range(n):
                if row >> y & 1:
                    out[x][y] = 1
                    out[y][x] = -1
        return out

    def apply_permutation(self, perm: Sequence[int]) -> "Tournament":
        """Relabel alternatives: image dominates image exactly as the originals."""
        n = self._n
        _check_permutation(perm, n)
        rows = [0] * n
        for x in range(n):
            mask = 0
            for y in iter_bits(self._rows[x]):
                mask |= 1 << perm[y]
            rows[perm[x]] = mask
        return Tournament._from_masks(n, rows)

    def to_rows(self) -> list[list[int]]:
        return [[self._rows[x] >> y & 1 for y in range(self._n)] for x in range(self._n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Tournament(order={self._n})"


def _check_permutation(perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm!r}")


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    _check_permutation(perm, len(perm))
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(inv)


def is_automorphism(t: Tournament, perm: Sequence[int]) -> bool:
    """True iff relabelling by ``perm`` maps the tournament onto itself."""
    return t.apply_permutation(perm) == t


def _members_mask(t: Tournament, members: Iterable[int]) -> int:
    mask = 0
    for x in members:
        if x < 0 or x >= t.order:
            raise ValueError(f"alternative {x} outside the carrier")
        mask |= 1 << x
    return mask


def is_transitive_subset(t: Tournament, members: Iterable[int]) -> bool:
    """True iff the restriction to ``members`` is a linear dominance order.

    A tournament on k alternatives is transitive exactly when its internal
    Copeland scores are 0, 1, ..., k-1.
    """
    mask = _members_mask(t, members)
    k = mask.bit_count()
    scores = sorted((t.dominion_mask(x) & mask).bit_count() for x in iter_bits(mask))
    return scores == list(range(k))


def chain_insertion_point(t: Tournament, chain: Sequence[int], v: int) -> int | None:
    """Position where v fits into a dominance chain, or None.

    ``chain`` lists alternatives top down (each dominates all later ones).
    v fits at position i iff every chain member before i dominates v and v
    dominates every chain member from i on; in a tournament that position
    is unique when it exists.
    """
    i = 0
    while i < len(chain) and t.dominates(chain[i], v):
        i += 1
    for j in range(i, len(chain)):
        if not t.dominates(v, chain[j]):
            return None
    return i


def maximal_transitive_subsets(
    t: Tournament,
    within: Iterable[int] | None = None,
    cap: int = 16,
) -> list[frozenset[int]]:
    """All inclusion-maximal transitive subsets of ``within``.

    Maximality is relative to ``within`` (default: the full carrier).
    Enumeration walks dominance chains top down, extending a chain only by
    alternatives dominated by every current member, so each transitive set
    is produced exactly once.  A set is recorded when nothing below extends
    it and no outside alternative can be inserted at any position.

    Raises ValueError when ``within`` has more than ``cap`` members; the
    subset count can grow exponentially.
    """
    if within is None:
        within_mask = (1 << t.order) - 1
    else:
        within_mask = _members_mask(t, within)
    k = within_mask.bit_count()
    if k == 0:
        raise ValueError("empty carrier subset")
    if k > cap:
        raise ValueError(f"subset of size {k} exceeds cap {cap}")

    results: list[frozenset[int]] = []
    chain: list[int] = []

    def grow(cand_mask: int, chain_mask: int) -> None:
        if cand_mask == 0:
            outside = within_mask & ~chain_mask
            for w in iter_bits(outside):
                if chain_insertion_point(t, chain, w) is not None:
                    return
            results.append(frozenset(chain))
            return
        for c in iter_bits(cand_mask):
            chain.append(c)
            grow(cand_mask & t.dominion_mask(c), chain_mask | (1 << c))
            chain.pop()

    grow(within_mask, 0)
    results.sort(key=sorted)
    return results
