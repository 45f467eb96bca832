"""Three ways to build supercharacter theories: orbits of a set of
automorphisms, direct products across a complementary pair of subgroups, and
wedges over a proper nontrivial subgroup."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import AutMap, GroupSpec, Subgroup, SubgroupEmbedding, aut_generating_subset
from .theories import (
    Partition,
    Theory,
    canonical_key,
    invariant_subgroups,
    restriction,
    theory_from_classes,
    verify,
)


def _orbit_partition(n: int, perms) -> Partition:
    """Orbits of the group generated by the given permutations (union-find)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in perms:
        for i in range(n):
            ri, rj = find(i), find(perm[i])
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return Partition.from_blocks(groups.values(), n)


def from_automorphisms(g: GroupSpec, gens) -> Theory:
    """Classes are the orbits of the generated subgroup of Aut(G) on elements,
    character blocks its orbits on characters; no generators means the
    discrete orbits, i.e. the minimal theory."""
    gens = list(gens)
    for a in gens:
        if a.group != g:
            raise ValueError("automorphism acts on a different group")
    classes = _orbit_partition(g.order, [a.perm for a in gens])
    charparts = _orbit_partition(g.order, [a.char_perm for a in gens])
    t = Theory(g, classes, charparts)
    bad = verify(t)
    if bad is not None:
        raise RuntimeError(f"orbit theory fails verification: {bad.message}")
    return t


def _restrict_char(g: GroupSpec, emb: SubgroupEmbedding, c: int) -> int:
    """Index in Irr(emb.group) of character c of g restricted along emb."""
    sub = emb.group
    chi = g.elements[c]
    exps = []
    for i, f in enumerate(sub.factors):
        unit = sub.index_of(tuple(1 if j == i else 0 for j in range(len(sub.factors))))
        parent = g.elements[emb.to_parent[unit]]
        sign, t = g.pairing_parts(chi, parent)
        if f == 2:
            exps.append(0 if sign > 0 else 1)
        else:
            # the p generator of a subgroup embeds as a pure p-part element
            if sign < 0:
                raise RuntimeError("p generator embedded with a sign component")
            exps.append(t)
    return sub.index_of(tuple(exps))


def _char_product_map(
    g: GroupSpec, e1: SubgroupEmbedding, e2: SubgroupEmbedding
) -> dict[tuple[int, int], int]:
    """For a complementary pair, Irr(G) = Irr(H1) x Irr(H2) by restriction."""
    out = {}
    for c in range(g.order):
        out[(_restrict_char(g, e1, c), _restrict_char(g, e2, c))] = c
    if len(out) != g.order:
        raise ValueError("restriction map is not a bijection; pair is not complementary")
    return out


def direct_product(t1: Theory, t2: Theory, h1: Subgroup, h2: Subgroup) -> Theory:
    """The theory on h1.group whose classes are all products K*L of a class of
    t1 by a class of t2, across the complementary pair (h1, h2)."""
    g = h1.group
    if h2.group != g:
        raise ValueError("subgroups live in different groups")
    if h1.order * h2.order != g.order or len(set(h1.members) & set(h2.members)) != 1:
        raise ValueError("subgroups do not form a complementary pair")
    e1, e2 = g.subgroup_embedding(h1), g.subgroup_embedding(h2)
    if t1.group != e1.group or t2.group != e2.group:
        raise ValueError("factor theories do not match the embedded subgroups")
    blocks = [
        tuple(
            g.mul_idx(e1.to_parent[x], e2.to_parent[y]) for x in k for y in m
        )
        for k in t1.classes.blocks
        for m in t2.classes.blocks
    ]
    classes = Partition.from_blocks(blocks, g.order)
    cmap = _char_product_map(g, e1, e2)
    cblocks = [
        tuple(cmap[(x, y)] for x in bx for y in by)
        for bx in t1.charparts.blocks
        for by in t2.charparts.blocks
    ]
    charparts = Partition.from_blocks(cblocks, g.order)
    t = Theory(g, classes, charparts)
    bad = verify(t)
    if bad is not None:
        raise RuntimeError(f"direct product fails verification: {bad.message}")
    return t


@dataclass(frozen=True)
class WedgeSpec:
    """A wedge datum: a proper nontrivial subgroup, a theory on it, and a
    theory on the quotient by it."""

    n: Subgroup
    inner: Theory
    outer: Theory


def wedge(ws: WedgeSpec) -> Theory:
    """Classes inside the subgroup come from the inner theory; outside it they
    are preimages of the nonidentity classes of the outer quotient theory.
    The character side is derived from the classes."""
    g = ws.n.group
    if not 1 < ws.n.order < g.order:
        raise ValueError("wedge needs a proper nontrivial subgroup")
    emb = g.subgroup_embedding(ws.n)
    q = g.quotient(ws.n)
    if ws.inner.group != emb.group or ws.outer.group != q.group:
        raise ValueError("inner/outer theories do not match the subgroup and quotient")
    blocks = [
        tuple(emb.to_parent[i] for i in b) for b in ws.inner.classes.blocks
    ]
    proj = q.projection
    for b in ws.outer.classes.blocks:
        if b == (0,):
            continue
        want = set(b)
        blocks.append(tuple(i for i in range(g.order) if proj[i] in want))
    t = theory_from_classes(g, Partition.from_blocks(blocks, g.order))
    bad = verify(t)
    if bad is not None:
        raise RuntimeError(f"wedge fails verification: {bad.message}")
    return t


def character_side_wedge(ws: WedgeSpec) -> Partition:
    """The wedge's character partition built directly: inflations of the outer
    character blocks, plus unions of restriction fibers over each nontrivial
    inner character block.  Must agree with the derived side of wedge()."""
    g = ws.n.group
    emb = g.subgroup_embedding(ws.n)
    q = g.quotient(ws.n)
    qg = q.group
    # inflation: a character of the quotient composed with the projection
    infl = {}
    for cq in range(qg.order):
        chi_q = qg.elements[cq]
        exps = []
        for i, f in enumerate(g.factors):
            unit = g.index_of(tuple(1 if j == i else 0 for j in range(len(g.factors))))
            sign, t = qg.pairing_parts(chi_q, qg.elements[q.projection[unit]])
            if f == 2:
                exps.append(0 if sign > 0 else 1)
            else:
                if sign < 0:
                    raise RuntimeError("projection of the p generator has a sign part")
                exps.append(t)
        infl[cq] = g.index_of(tuple(exps))
    blocks = [tuple(infl[c] for c in b) for b in ws.outer.charparts.blocks]
    # fibers of restriction to the subgroup
    fiber: dict[int, list[int]] = {}
    for c in range(g.order):
        fiber.setdefault(_restrict_char(g, emb, c), []).append(c)
    for b in ws.inner.charparts.blocks:
        if b == (0,):
            continue
        blocks.append(tuple(x for psi in b for x in fiber[psi]))
    return Partition.from_blocks(blocks, g.order)


def automorphism_witness(t: Theory) -> tuple[AutMap, ...] | None:
    """Generators of a subgroup of Aut(G) whose orbit theory equals t, or None."""
    g = t.group
    key = canonical_key(t)
    for subgroup in g.subgroups_of_aut():
        gens = aut_generating_subset(subgroup)
        if canonical_key(from_automorphisms(g, gens)) == key:
            return gens
    return None


def direct_decompositions(t: Theory) -> list[tuple[Subgroup, Subgroup]]:
    """Complementary pairs of invariant subgroups over which t equals the
    direct product of its own restrictions."""
    g = t.group
    key = canonical_key(t)
    invariant = {s.members for s in invariant_subgroups(t)}
    out = []
    for h1, h2 in g.complementary_pairs():
        if h1.members not in invariant or h2.members not in invariant:
            continue
        try:
            back = direct_product(restriction(t, h1), restriction(t, h2), h1, h2)
        except RuntimeError:
            continue
        if canonical_key(back) == key:
            out.append((h1, h2))
    return out


def wedge_decompositions(t: Theory) -> list[WedgeSpec]:
    """All wedge data (subgroup, inner and outer theories) that rebuild t."""
    g = t.group
    key = canonical_key(t)
    out = []
    for n in invariant_subgroups(t):
        if not 1 < n.order < g.order:
            continue
        nset = set(n.members)
        q = g.quotient(n)
        proj = q.projection
        outer_blocks = [(0,)]
        fits = True
        for b in t.classes.blocks:
            if set(b) <= nset:
                continue
            images = {proj[i] for i in b}
            if len(b) != len(images) * n.order:
                fits = False
                break
            outer_blocks.append(tuple(sorted(images)))
        if not fits:
            continue
        try:
            inner = restriction(t, n)
            outer = theory_from_classes(
                q.group, Partition.from_blocks(outer_blocks, q.group.order)
            )
            ws = WedgeSpec(n, inner, outer)
            back = wedge(ws)
        except RuntimeError:
            continue
        if canonical_key(back) == key:
            out.append(ws)
    return out
