"""Supercharacter theories as paired partitions of a group and its characters.

A theory is valid when the identity and the trivial character sit in singleton
blocks, both partitions have the same number of blocks, and for every
character block X the function sigma_X = sum of the characters in X is
constant on every class block.  Partitions are stored canonically: each block
sorted ascending, blocks ordered by least member, so equal theories compare
equal and render identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .cyclotomic import CycInt
from .groups import GroupSpec, Subgroup


@dataclass(frozen=True)
class Partition:
    """A set partition of range(size) in canonical block order."""

    size: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks, size: int) -> "Partition":
        cleaned = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in cleaned):
            raise ValueError("empty block")
        canon = tuple(sorted(cleaned, key=lambda b: b[0]))
        seen: list[int] = []
        for b in canon:
            seen.extend(b)
        if sorted(seen) != list(range(size)):
            raise ValueError(f"blocks do not partition range({size})")
        return cls(size, canon)

    @classmethod
    def discrete(cls, size: int) -> "Partition":
        return cls.from_blocks([(i,) for i in range(size)], size)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        """Index of the block containing each point."""
        out = [0] * self.size
        for bi, b in enumerate(self.blocks):
            for i in b:
                out[i] = bi
        return tuple(out)

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, block) -> bool:
        return tuple(sorted(block)) in set(self.blocks)


@dataclass(frozen=True)
class Theory:
    """A pair of partitions: superclasses of G and blocks of Irr(G)."""

    group: GroupSpec
    classes: Partition
    charparts: Partition

    def __post_init__(self):
        n = self.group.order
        if self.classes.size != n or self.charparts.size != n:
            raise ValueError("partition sizes do not match the group order")


@dataclass(frozen=True)
class Violation:
    """Which defining condition failed, with a minimal witness."""

    condition: int
    witness: tuple
    message: str


@dataclass
class TheoryRecord:
    """A theory with the constructions that produced it and their witnesses."""

    theory: Theory
    tags: set[str] = field(default_factory=set)
    provenance: list[dict] = field(default_factory=list)


def minimal_theory(g: GroupSpec) -> Theory:
    n = g.order
    return Theory(g, Partition.discrete(n), Partition.discrete(n))


def maximal_theory(g: GroupSpec) -> Theory:
    n = g.order
    if n == 1:
        return minimal_theory(g)
    two = Partition.from_blocks([(0,), tuple(range(1, n))], n)
    return Theory(g, two, two)


def canonical_key(t: Theory) -> str:
    """Deterministic rendering of the class partition; equal iff theories equal."""
    head = ".".join(str(f) for f in t.group.factors)
    body = "|".join(",".join(str(i) for i in b) for b in t.classes.blocks)
    return f"{head}:{body}"


def sort_key(t: Theory) -> tuple[int, str]:
    return (len(t.classes), canonical_key(t))


def _sigma(g: GroupSpec, chi_indices, g_idx: int):
    """sigma_X(g) = sum over chi in X of chi(g), exactly."""
    elements = g.elements
    ge = elements[g_idx]
    if g.p is None:
        total = 0
        for c in chi_indices:
            sign, _ = g.pairing_parts(elements[c], ge)
            total += sign
        return total
    counts = [0] * g.p
    for c in chi_indices:
        sign, t = g.pairing_parts(elements[c], ge)
        counts[t] += sign
    return CycInt.from_power_counts(g.p, counts)


def verify(t: Theory) -> Violation | None:
    """Check the defining conditions; None when valid, else the first failure."""
    g = t.group
    if (0,) not in t.classes.blocks:
        return Violation(1, (0,), "identity is not a singleton class")
    if (0,) not in t.charparts.blocks:
        return Violation(1, (0,), "trivial character is not a singleton block")
    if len(t.classes) != len(t.charparts):
        return Violation(
            2,
            (len(t.classes), len(t.charparts)),
            f"{len(t.classes)} classes vs {len(t.charparts)} character blocks",
        )
    for xi, x in enumerate(t.charparts.blocks):
        for k in t.classes.blocks:
            ref = _sigma(g, x, k[0])
            for h in k[1:]:
                if _sigma(g, x, h) != ref:
                    return Violation(
                        3,
                        (xi, k[0], h),
                        f"sigma of character block {xi} differs at elements {k[0]} and {h}",
                    )
    return None


def verify_algebra(g: GroupSpec, classes: Partition) -> Violation | None:
    """Check that the span of the class sums is closed under convolution:
    the product of any two block sums must be constant on every block."""
    if (0,) not in classes.blocks:
        return Violation(1, (0,), "identity is not a singleton class")
    table = g.mult_table
    n = g.order
    blocks = classes.blocks
    for i, bi in enumerate(blocks):
        for j in range(i, len(blocks)):
            bj = blocks[j]
            coeff = [0] * n
            for x in bi:
                row = table[x]
                for y in bj:
                    coeff[row[y]] += 1
            for k, bk in enumerate(blocks):
                ref = coeff[bk[0]]
                for h in bk[1:]:
                    if coeff[h] != ref:
                        return Violation(
                            3,
                            (i, j, k, bk[0], h),
                            f"product of blocks {i},{j} is not constant on block {k}",
                        )
    return None


def induced_character_partition(g: GroupSpec, classes: Partition) -> Partition:
    """Group characters by their values on all class sums.

    For a convolution-closed class partition this yields the unique character
    partition completing it to a theory, with the same number of blocks.
    """
    n = g.order
    elements = g.elements
    sigs: dict[tuple, list[int]] = {}
    for c in range(n):
        chi = elements[c]
        sig = []
        for b in classes.blocks:
            if g.p is None:
                val = sum(g.pairing_parts(chi, elements[x])[0] for x in b)
            else:
                counts = [0] * g.p
                for x in b:
                    sign, t = g.pairing_parts(chi, elements[x])
                    counts[t] += sign
                val = CycInt.from_power_counts(g.p, counts)
            sig.append(val)
        sigs.setdefault(tuple(sig), []).append(c)
    part = Partition.from_blocks(sigs.values(), n)
    if len(part) != len(classes):
        raise RuntimeError(
            f"induced partition has {len(part)} blocks for {len(classes)} classes; "
            "the class partition is not convolution-closed"
        )
    return part


def theory_from_classes(g: GroupSpec, classes: Partition) -> Theory:
    """Complete a convolution-closed class partition to a theory."""
    return Theory(g, classes, induced_character_partition(g, classes))


def supercharacter_table(t: Theory):
    """Matrix of sigma_X values, one row per character block, one column per
    class block, recomputed at every element to confirm constancy."""
    g = t.group
    rows = []
    for xi, x in enumerate(t.charparts.blocks):
        row = []
        for k in t.classes.blocks:
            ref = _sigma(g, x, k[0])
            for h in k[1:]:
                if _sigma(g, x, h) != ref:
                    raise ValueError(
                        f"sigma not constant: character block {xi}, elements {k[0]}, {h}"
                    )
            row.append(ref)
        rows.append(row)
    return rows


def invariant_subgroups(t: Theory) -> list[Subgroup]:
    """Subgroups that are unions of class blocks, smallest first."""
    out = []
    block_of = t.classes.block_of
    for h in t.group.all_subgroups:
        covered = sum(len(t.classes.blocks[b]) for b in {block_of[i] for i in h.members})
        if covered == h.order:
            out.append(h)
    return out


def restriction(t: Theory, n: Subgroup) -> Theory:
    """The theory on an invariant subgroup formed by the classes inside it."""
    if n not in invariant_subgroups(t):
        raise ValueError("subgroup is not a union of classes")
    emb = t.group.subgroup_embedding(n)
    blocks = [
        tuple(sorted(emb.from_parent[i] for i in b))
        for b in t.classes.blocks
        if all(i in emb.from_parent for i in b)
    ]
    classes = Partition.from_blocks(blocks, emb.group.order)
    return theory_from_classes(emb.group, classes)


def dual(t: Theory) -> Theory:
    """Swap the two partitions across the exponent-vector identification of
    G with its character group; valid for every valid theory."""
    d = Theory(t.group, Partition(t.charparts.size, t.charparts.blocks),
               Partition(t.classes.size, t.classes.blocks))
    bad = verify(d)
    if bad is not None:
        raise RuntimeError(f"transported partition fails verification: {bad.message}")
    return d


def refines(t1: Theory, t2: Theory) -> bool:
    """True when every class of t1 lies inside a class of t2."""
    if t1.group != t2.group:
        raise ValueError("theories live on different groups")
    block_of = t2.classes.block_of
    return all(
        all(block_of[i] == block_of[b[0]] for i in b) for b in t1.classes.blocks
    )


# -- serialization ----------------------------------------------------------


def group_to_json(g: GroupSpec) -> dict:
    fam = g.family
    if g.p is not None:
        return {"family": fam, "p": g.p}
    return {"family": fam}


def group_from_json(d) -> GroupSpec:
    if not isinstance(d, dict) or "family" not in d:
        raise ValueError("group must be an object with a family")
    return GroupSpec.from_family(d["family"], d.get("p"))


def _partition_to_lists(g: GroupSpec, part: Partition) -> list:
    return [[list(g.elements[i]) for i in b] for b in part.blocks]


def _partition_from_lists(g: GroupSpec, data, what: str) -> Partition:
    if not isinstance(data, list):
        raise ValueError(f"{what} must be a list of blocks")
    blocks = []
    for b in data:
        if not isinstance(b, list) or not b:
            raise ValueError(f"{what} blocks must be nonempty lists")
        block = []
        for exps in b:
            if not isinstance(exps, list) or len(exps) != len(g.factors):
                raise ValueError(f"bad exponent vector {exps!r} in {what}")
            if any(not isinstance(e, int) or not 0 <= e < f for e, f in zip(exps, g.factors)):
                raise ValueError(f"exponents out of range in {what}: {exps!r}")
            block.append(g.index_of(exps))
        blocks.append(block)
    return Partition.from_blocks(blocks, g.order)


def theory_to_json(rec: "TheoryRecord | Theory") -> dict:
    if isinstance(rec, Theory):
        rec = TheoryRecord(rec)
    t = rec.theory
    return {
        "group": group_to_json(t.group),
        "superclasses": _partition_to_lists(t.group, t.classes),
        "character_classes": _partition_to_lists(t.group, t.charparts),
        "tags": sorted(rec.tags),
        "provenance": rec.provenance,
    }


def theory_from_json(d) -> TheoryRecord:
    if not isinstance(d, dict):
        raise ValueError("theory must be a JSON object")
    g = group_from_json(d.get("group"))
    classes = _partition_from_lists(g, d.get("superclasses"), "superclasses")
    charparts = _partition_from_lists(g, d.get("character_classes"), "character_classes")
    tags = d.get("tags", [])
    prov = d.get("provenance", [])
    if not isinstance(tags, list) or not all(isinstance(s, str) for s in tags):
        raise ValueError("tags must be a list of strings")
    if not isinstance(prov, list):
        raise ValueError("provenance must be a list")
    return TheoryRecord(Theory(g, classes, charparts), set(tags), list(prov))
