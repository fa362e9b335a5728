"""Tournament solution concepts.

Five choice sets, each a nonempty subset of the alternatives:

* Copeland set: maximum dominion size.
* Top cycle: the unique minimal nonempty set whose members dominate
  everything outside; equivalently the top strongly connected component.
* Uncovered set: alternatives not covered by anyone, where y covers x
  when y dominates x and everything x dominates; equivalently the
  alternatives that reach every other in at most two dominance steps.
  Both characterisations are computed and cross-asserted.
* Banks set: alternatives that top some inclusion-maximal transitive
  subset.
* Bipartisan set: support of the unique optimal mixed strategy of the
  skew-symmetric game attached to the tournament.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Tournament, chain_insertion_point, iter_bits
from .games import solve_symmetric_zero_sum

__all__ = [
    "banks_member",
    "banks_set",
    "banks_witness",
    "bipartisan_set",
    "copeland_set",
    "top_cycle",
    "uncovered_set",
]


def copeland_set(t: Tournament) -> frozenset[int]:
    scores = t.copeland_scores()
    best = max(scores)
    return frozenset(x for x, s in enumerate(scores) if s == best)


def top_cycle(t: Tournament) -> frozenset[int]:
    n = t.order
    # A maximum-score alternative reaches every other in at most two steps,
    # so it lies in the top component; the component is then exactly the
    # set of alternatives with a dominance path to it.
    start = max(range(n), key=lambda x: (t.copeland_score(x), -x))
    reached = 1 << start
    frontier = reached
    while frontier:
        grown = 0
        for x in iter_bits(frontier):
            grown |= t.dominators_mask(x)
        frontier = grown & ~reached
        reached |= grown
    return frozenset(iter_bits(reached))


def uncovered_set(t: Tournament) -> frozenset[int]:
    n = t.order
    full = (1 << n) - 1
    two_step = 0
    for x in range(n):
        reach = t.dominion_mask(x) | (1 << x)
        for y in iter_bits(t.dominion_mask(x)):
            reach |= t.dominion_mask(y)
        if reach == full:
            two_step |= 1 << x
    uncovered = 0
    for x in range(n):
        dx = t.dominion_mask(x)
        for y in iter_bits(t.dominators_mask(x)):
            if dx & ~t.dominion_mask(y) == 0:
                break
        else:
            uncovered |= 1 << x
    assert two_step == uncovered, "covering and two-step characterisations disagree"
    return frozenset(iter_bits(uncovered))


def banks_witness(t: Tournament, x: int) -> tuple[int, ...] | None:
    """A transitive subset of x's dominion certifying Banks membership.

    Returns a chain (top down) B inside the dominion of x such that no
    alternative dominates all of B and x, or None after an exhaustive
    search proves no such chain exists.  Appending x below such a chain
    and extending greedily inside x's dominion yields a maximal transitive
    subset topped by x, so the chain is a genuine membership witness.

    Search: depth-first over chains.  At each node pick the common
    dominator w of the current chain plus x whose set of usable counters
    (chain-insertable members of x's dominion that dominate w) is
    smallest, and branch on those counters; a pivot with no counters
    refutes the whole node.  Ties everywhere break toward the smallest
    alternative index, so the returned witness is deterministic.
    """
    if x < 0 or x >= t.order:
        raise ValueError(f"alternative {x} outside the carrier")
    dominion = t.dominion_mask(x)
    chain: list[int] = []

    def search(common_dominators: int, chain_mask: int) -> bool:
        if common_dominators == 0:
            return True
        best: list[tuple[int, int]] | None = None
        for w in iter_bits(common_dominators):
            counters: list[tuple[int, int]] = []
            for b in iter_bits(dominion & t.dominators_mask(w) & ~chain_mask):
                pos = chain_insertion_point(t, chain, b)
                if pos is not None:
                    counters.append((b, pos))
            if best is None or len(counters) < len(best):
                best = counters
                if not counters:
                    break
        assert best is not None
        for b, pos in best:
            chain.insert(pos, b)
            if search(common_dominators & t.dominators_mask(b), chain_mask | (1 << b)):
                return True
            del chain[pos]
        return False

    if search(t.dominators_mask(x), 0):
        witness = tuple(chain)
        mask = 0
        for i, b in enumerate(witness):
            assert dominion >> b & 1, "witness leaves the dominion"
            for lower in witness[i + 1:]:
                assert t.dominates(b, lower), "witness chain out of order"
            mask |= 1 << b
        common = t.dominators_mask(x)
        for b in witness:
            common &= t.dominators_mask(b)
        assert common == 0, "witness still has a common dominator"
        return witness
    return None


def banks_member(t: Tournament, x: int) -> bool:
    return banks_witness(t, x) is not None


def banks_set(t: Tournament) -> frozenset[int]:
    return frozenset(x for x in range(t.order) if banks_witness(t, x) is not None)


def bipartisan_set(t: Tournament) -> tuple[frozenset[int], tuple[Fraction, ...]]:
    """Support and exact lottery of the optimal mixed strategy."""
    lottery = solve_symmetric_zero_sum(t.skew_adjacency())
    support = frozenset(x for x, w in enumerate(lottery) if w > 0)
    return support, lottery
