"""Random generation, exhaustive enumeration and separation scans.

Randomness is deterministic and platform independent: tournaments are
drawn from ``random.Random`` (Mersenne Twister, stable across CPython
versions), and independent per-sample streams are derived from a master
seed with SplitMix64, ``derive_seed(master, i) =
splitmix64(splitmix64(master) ^ i)``.

Isomorphism is decided through ``canonical_form``: the lexicographically
smallest row-major 0/1 matrix encoding over all relabellings.  Exhaustive
scans walk one representative per isomorphism class and certify coverage
by checking that class sizes (n!/|Aut|) add up to the number of labelled
tournaments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

from .core import Tournament, iter_bits
from .solutions import banks_set, bipartisan_set, copeland_set, top_cycle, uncovered_set

__all__ = [
    "RULES",
    "ScanConfig",
    "ScanOutcome",
    "ScanWitness",
    "automorphism_count",
    "canonical_form",
    "check_disjoint",
    "derive_seed",
    "enumerate_labeled",
    "isomorphism_class_representatives",
    "random_tournament",
    "resolve_rule",
    "scan_separation",
    "splitmix64",
]

_MASK64 = (1 << 64) - 1


def splitmix64(z: int) -> int:
    """One SplitMix64 step (Steele, Lea and Flood's constants)."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    """Seed of the index-th independent stream under ``master``."""
    return splitmix64(splitmix64(master & _MASK64) ^ (index & _MASK64))


def random_tournament(n: int, seed: int) -> Tournament:
    """Uniformly random tournament: every pair an independent fair draw.

    Pairs (x, y) with x < y are visited in lexicographic order and
    oriented by one bit from ``random.Random(seed)``; a set bit points
    from x to y.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    rng = random.Random(seed)
    rows = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            if rng.getrandbits(1):
                rows[x] |= 1 << y
            else:
                rows[y] |= 1 << x
    return Tournament._from_masks(n, rows)


def enumerate_labeled(n: int, cap: int = 6):
    """Yield every labelled tournament of order n exactly once.

    Pair t of the lexicographic pair list (0,1), (0,2), ... orients along
    bit t of a counter running over 2**C(n, 2) values; a set bit points
    from the smaller alternative to the larger.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > cap:
        raise ValueError(f"order {n} above enumeration cap {cap}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for idx, (x, y) in enumerate(pairs):
            if code >> idx & 1:
                rows[x] |= 1 << y
            else:
                rows[y] |= 1 << x
        yield Tournament._from_masks(n, rows)


def canonical_form(t: Tournament, cap: int = 9) -> bytes:
    """Lexicographically smallest row-major matrix encoding over relabellings.

    Two tournaments are isomorphic iff their canonical forms are equal.
    Branch and bound over vertex orderings: the first vertex must have
    minimum dominion (its row then starts with all its dominators), and a
    partial ordering is abandoned when even the optimistic completion of
    its determined cells exceeds the best encoding found so far.
    """
    n = t.order
    if n > cap:
        raise ValueError(f"order {n} above canonicalisation cap {cap}")
    if n == 1:
        return b"0"
    zero = ord("0")
    one = ord("1")
    delta = min(t.copeland_scores())
    starts = [v for v in range(n) if t.copeland_score(v) == delta]
    split = n - 1 - delta  # positions 1..split hold dominators of the first vertex
    best: bytes | None = None
    order = [0] * n

    def descend(pos: int, remaining_dominators: list[int], remaining_dominion: list[int], grid: bytearray) -> None:
        nonlocal best
        if pos == n:
            cand = bytes(grid)
            if best is None or cand < best:
                best = cand
            return
        pool = remaining_dominators if pos <= split else remaining_dominion
        for idx, v in enumerate(pool):
            order[pos] = v
            patch = []
            for j in range(pos):
                u = order[j]
                a = pos * n + j
                b = j * n + pos
                if t.dominates(v, u):
                    patch.append(a)
                    grid[a] = one
                else:
                    patch.append(b)
                    grid[b] = one
            if best is None or bytes(grid) <= best:
                rest = pool[:idx] + pool[idx + 1 :]
                if pos <= split:
                    descend(pos + 1, rest, remaining_dominion, grid)
                else:
                    descend(pos + 1, remaining_dominators, rest, grid)
            for a in patch:
                grid[a] = zero

    for v0 in starts:
        order[0] = v0
        doms = sorted(iter_bits(t.dominators_mask(v0)))
        dom = sorted(iter_bits(t.dominion_mask(v0)))
        descend(1, doms, dom, bytearray(b"0" * (n * n)))
    assert best is not None
    return best


def automorphism_count(t: Tournament) -> int:
    """Number of relabellings mapping the tournament onto itself."""
    n = t.order
    scores = t.copeland_scores()
    count = 0

    def extend(img: list[int], used: int) -> None:
        nonlocal count
        k = len(img)
        if k == n:
            count += 1
            return
        for cand in range(n):
            if used >> cand & 1 or scores[cand] != scores[k]:
                continue
            ok = True
            for j in range(k):
                if t.dominates(k, j) != t.dominates(cand, img[j]):
                    ok = False
                    break
            if ok:
                img.append(cand)
                extend(img, used | 1 << cand)
                img.pop()

    extend([], 0)
    return count


def _extensions(t: Tournament):
    """All tournaments obtained by appending one new alternative."""
    n = t.order
    for mask in range(1 << n):
        rows = list(t.row_masks)
        rows.append(mask)
        inverse = ~mask & ((1 << n) - 1)
        for x in iter_bits(inverse):
            rows[x] |= 1 << n
        yield Tournament._from_masks(n + 1, rows)


def isomorphism_class_representatives(n: int, cap: int = 9) -> list[Tournament]:
    """One representative per isomorphism class of order-n tournaments.

    Built by extending the representatives of order n-1 by one alternative
    in every possible way and deduplicating by canonical form.  Every
    class of order n contains an extension of some class of order n-1
    (delete the last alternative), so the walk is exhaustive.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > cap:
        raise ValueError(f"order {n} above canonicalisation cap {cap}")
    reps = [Tournament._from_masks(1, [0])]
    for _ in range(n - 1):
        seen: dict[bytes, Tournament] = {}
        for r in reps:
            for ext in _extensions(r):
                key = canonical_form(ext, cap=cap)
                if key not in seen:
                    seen[key] = ext
        reps = [seen[key] for key in sorted(seen)]
    return reps


def _bipartisan_support(t: Tournament) -> frozenset[int]:
    return bipartisan_set(t)[0]


RULES = {
    "copeland": copeland_set,
    "tc": top_cycle,
    "top_cycle": top_cycle,
    "uc": uncovered_set,
    "uncovered": uncovered_set,
    "banks": banks_set,
    "bp": _bipartisan_support,
    "bipartisan": _bipartisan_support,
}

_CANONICAL_RULE_NAME = {
    "copeland": "copeland",
    "tc": "tc",
    "top_cycle": "tc",
    "uc": "uc",
    "uncovered": "uc",
    "banks": "banks",
    "bp": "bp",
    "bipartisan": "bp",
}


def resolve_rule(name: str):
    try:
        return RULES[_CANONICAL_RULE_NAME[name]]
    except KeyError:
        raise ValueError(f"unknown rule {name!r}; choose from "
                         "copeland, tc, uc, banks, bp") from None


def check_disjoint(t: Tournament, rule_a: str, rule_b: str) -> bool:
    """True iff the two rules choose disjoint sets on ``t``."""
    a = resolve_rule(rule_a)(t)
    b = resolve_rule(rule_b)(t)
    return not (a & b)


@dataclass(frozen=True)
class ScanConfig:
    """Parameters of a separation scan.

    Exhaustive mode visits one representative per isomorphism class for
    every order up to ``max_order``; random mode draws ``sample_count``
    tournaments of order ``max_order`` from streams derived from ``seed``.
    """

    rules: tuple[str, str]
    max_order: int
    mode: str = "exhaustive"
    sample_count: int = 0
    seed: int = 0
    exhaustive_cap: int = 8

    def __post_init__(self) -> None:
        if len(self.rules) != 2:
            raise ValueError("exactly two rules required")
        for name in self.rules:
            resolve_rule(name)
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")
        if self.mode == "exhaustive" and self.max_order > self.exhaustive_cap:
            raise ValueError(
                f"exhaustive scan above order {self.exhaustive_cap} not supported"
            )
        if self.mode == "random" and self.sample_count < 1:
            raise ValueError("random mode needs sample_count >= 1")


@dataclass(frozen=True)
class ScanWitness:
    order: int
    rules: tuple[str, str]
    text: str  # tournament file content
    choice_sets: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class ScanOutcome:
    orders: tuple[int, ...]
    examined: dict[int, int]  # classes (exhaustive) or samples (random) per order
    labeled_counts: dict[int, int] | None  # exhaustive: labelled tournaments covered
    witnesses: tuple[ScanWitness, ...] = field(default_factory=tuple)


def scan_separation(config: ScanConfig) -> ScanOutcome:
    """Search the configured space for tournaments separating the two rules.

    A witness is a tournament on which the two rules choose disjoint
    sets.  In exhaustive mode the per-order class lists are certified:
    the orbit sizes n!/|Aut| of the representatives must add up to
    2**C(n, 2), which proves every labelled tournament is accounted for
    exactly once.
    """
    from .io import format_tournament

    rule_a, rule_b = config.rules
    fa = resolve_rule(rule_a)
    fb = resolve_rule(rule_b)
    witnesses: list[ScanWitness] = []
    examined: dict[int, int] = {}

    def note(t: Tournament, order: int) -> None:
        sa = fa(t)
        sb = fb(t)
        if not (sa & sb):
            witnesses.append(
                ScanWitness(
                    order=order,
                    rules=config.rules,
                    text=format_tournament(t),
                    choice_sets=(tuple(sorted(sa)), tuple(sorted(sb))),
                )
            )

    if config.mode == "random":
        order = config.max_order
        for i in range(config.sample_count):
            note(random_tournament(order, derive_seed(config.seed, i)), order)
        examined[order] = config.sample_count
        return ScanOutcome(
            orders=(order,), examined=examined, labeled_counts=None,
            witnesses=tuple(witnesses),
        )

    labeled_counts: dict[int, int] = {}
    reps = [Tournament._from_masks(1, [0])]
    for order in range(1, config.max_order + 1):
        if order > 1:
            seen: dict[bytes, Tournament] = {}
            for r in reps:
                for ext in _extensions(r):
                    key = canonical_form(ext, cap=config.exhaustive_cap)
                    if key not in seen:
                        seen[key] = ext
            reps = [seen[key] for key in sorted(seen)]
        covered = sum(factorial(order) // automorphism_count(r) for r in reps)
        expected = 1 << (order * (order - 1) // 2)
        if covered != expected:
            raise RuntimeError(
                f"class representatives of order {order} cover {covered} labelled "
                f"tournaments, expected {expected}"
            )
        labeled_counts[order] = covered
        examined[order] = len(reps)
        for r in reps:
            note(r, order)
    return ScanOutcome(
        orders=tuple(range(1, config.max_order + 1)),
        examined=examined,
        labeled_counts=labeled_counts,
        witnesses=tuple(witnesses),
    )
