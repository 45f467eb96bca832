"""Brute-force search for every supercharacter theory of a small group.

The search walks set partitions of the nonidentity elements in canonical
order: each new block starts at the smallest unassigned element, so every
partition is visited exactly once.  Convolution closure is enforced as blocks
complete - the product of any two completed block sums must be constant on
every completed block - and partial products prune candidates early.  A
block's elementwise inverse set must itself be a block; that check is applied
as soon as the inverse set touches assigned territory.

One search node is a completed block placement that passed all checks.  With
a budget, the search raises once it would exceed that many nodes.
"""

from __future__ import annotations

from itertools import combinations

from .groups import GroupSpec
from .theories import Partition, Theory, sort_key, theory_from_classes

EXHAUSTIVE_LIMIT = 12


class BudgetExhaustedError(Exception):
    """The node budget ran out before the search space was exhausted."""

    def __init__(self, nodes: int, found: int):
        self.nodes = nodes
        self.found = found
        super().__init__(f"search budget exhausted after {nodes} nodes ({found} theories found)")


def _search(g: GroupSpec, budget: int | None, emit) -> None:
    n = g.order
    if n > EXHAUSTIVE_LIMIT and budget is None:
        raise ValueError(
            f"|G| = {n} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}; pass a budget"
        )
    mt = g.mult_table
    inv = g.inverse_table
    nodes = [0]

    def conv(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        coeff = [0] * n
        for x in a:
            row = mt[x]
            for y in b:
                coeff[row[y]] += 1
        return tuple(coeff)

    def recurse(unassigned: tuple[int, ...], assigned: frozenset[int],
                blocks: list, products: list, block_sets: set) -> None:
        if not unassigned:
            emit([(0,)] + blocks)
            return
        s = unassigned[0]
        rest = unassigned[1:]
        allowed = [t for t in rest if all(p[t] == p[s] for p in products)]
        for size in range(len(allowed) + 1):
            for extra in combinations(allowed, size):
                block = (s,) + extra
                bset = frozenset(block)
                iset = frozenset(inv[x] for x in block)
                if iset != bset:
                    # once the inverse set touches placed elements it must be
                    # a block already; otherwise decide when it gets placed
                    touched = any(x in assigned or x in bset for x in iset)
                    if touched and iset not in block_sets:
                        continue
                new_products = []
                ok = True
                for other in blocks + [block]:
                    coeff = conv(other, block)
                    for done in blocks:
                        ref = coeff[done[0]]
                        if any(coeff[h] != ref for h in done[1:]):
                            ok = False
                            break
                    if not ok:
                        break
                    ref = coeff[block[0]]
                    if any(coeff[h] != ref for h in block[1:]):
                        ok = False
                        break
                    new_products.append(coeff)
                if not ok:
                    continue
                nodes[0] += 1
                if budget is not None and nodes[0] > budget:
                    raise BudgetExhaustedError(nodes[0], -1)
                block_sets.add(bset)
                recurse(
                    tuple(t for t in rest if t not in bset),
                    assigned | bset,
                    blocks + [block],
                    products + new_products,
                    block_sets,
                )
                block_sets.discard(bset)
        return

    recurse(tuple(range(1, n)), frozenset({0}), [], [], set())


def brute_force_count(g: GroupSpec, budget: int | None = None) -> int:
    """Number of supercharacter theories found by exhaustive search."""
    found = [0]

    def emit(_blocks):
        found[0] += 1

    try:
        _search(g, budget, emit)
    except BudgetExhaustedError as e:
        raise BudgetExhaustedError(e.nodes, found[0]) from None
    return found[0]


def brute_force_enumerate(g: GroupSpec, budget: int | None = None) -> list[Theory]:
    """Every theory of g by exhaustive search, in canonical order."""
    partitions: list[Partition] = []

    def emit(blocks):
        partitions.append(Partition.from_blocks(blocks, g.order))

    try:
        _search(g, budget, emit)
    except BudgetExhaustedError as e:
        raise BudgetExhaustedError(e.nodes, len(partitions)) from None
    theories = [theory_from_classes(g, part) for part in partitions]
    return sorted(theories, key=sort_key)
