"""Finite abelian groups of shape C_p x (C_2)^d for d <= 3 - p an odd prime,
or absent - with exact characters, subgroups, quotients, and automorphisms.

Elements and characters are exponent vectors against the fixed generator list
(the odd-order generator first, then the involutions), stored in lexicographic
order so that index 0 is always the identity / trivial character.  A character
with exponents (m, n, o) takes the value zeta_p^(m*i) * (-1)^(n*j + o*k) at
the element with exponents (i, j, k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .cyclotomic import CycInt, is_odd_prime

DEFAULT_MAX_P = 199

_FAMILY_BY_FACTORS = {
    (): "Trivial",
    (2,): "C2",
    (2, 2): "Klein",
    (2, 2, 2): "C2cubed",
}


@dataclass(frozen=True)
class Element:
    """A group element as a reduced exponent vector."""

    exps: tuple[int, ...]


@dataclass(frozen=True)
class Character:
    """An irreducible character as a reduced exponent vector."""

    exps: tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """One of the supported abelian groups, with derived data cached."""

    factors: tuple[int, ...]

    def __post_init__(self):
        odd = [f for f in self.factors if f != 2]
        if len(odd) > 1:
            raise ValueError(f"at most one odd factor is supported, got {self.factors}")
        if odd and (not is_odd_prime(odd[0]) or self.factors[0] != odd[0]):
            raise ValueError(f"odd factor must be a leading odd prime, got {self.factors}")
        if len(self.factors) - len(odd) > (2 if odd else 3):
            raise ValueError(f"unsupported factor shape {self.factors}")

    @classmethod
    @lru_cache(maxsize=None)
    def of(cls, factors: tuple[int, ...]) -> "GroupSpec":
        """Interned constructor so equal specs share cached tables."""
        return cls(factors)

    @classmethod
    def cp(cls, p: int) -> "GroupSpec":
        return cls.of((p,))

    @classmethod
    def klein(cls) -> "GroupSpec":
        return cls.of((2, 2))

    @classmethod
    def cp_c2(cls, p: int) -> "GroupSpec":
        return cls.of((p, 2))

    @classmethod
    def c2_cubed(cls) -> "GroupSpec":
        return cls.of((2, 2, 2))

    @classmethod
    def cp_c2_c2(cls, p: int) -> "GroupSpec":
        return cls.of((p, 2, 2))

    @classmethod
    def from_family(cls, family: str, p: int | None = None) -> "GroupSpec":
        needs_p = {"Cp": (), "CpC2": (2,), "CpC2C2": (2, 2)}
        if family in needs_p:
            if p is None:
                raise ValueError(f"family {family} needs p")
            return cls.of((p,) + needs_p[family])
        for factors, name in _FAMILY_BY_FACTORS.items():
            if name == family:
                return cls.of(factors)
        raise ValueError(f"unknown family {family!r}")

    @property
    def p(self) -> int | None:
        """The odd prime factor, if present."""
        return self.factors[0] if self.factors and self.factors[0] != 2 else None

    @property
    def dim2(self) -> int:
        return len(self.factors) - (1 if self.p else 0)

    @property
    def family(self) -> str:
        if self.p is None:
            return _FAMILY_BY_FACTORS[self.factors]
        return {1: "Cp", 2: "CpC2", 3: "CpC2C2"}[len(self.factors)]

    @property
    def order(self) -> int:
        n = 1
        for f in self.factors:
            n *= f
        return n

    @cached_property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        """All exponent vectors in lexicographic order; index 0 is the identity."""
        return tuple(itertools.product(*(range(f) for f in self.factors)))

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {exps: i for i, exps in enumerate(self.elements)}

    def reduce(self, exps) -> tuple[int, ...]:
        if len(exps) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} exponents, got {len(exps)}")
        return tuple(e % f for e, f in zip(exps, self.factors))

    def element(self, exps) -> Element:
        return Element(self.reduce(exps))

    def character(self, exps) -> Character:
        return Character(self.reduce(exps))

    def index_of(self, x) -> int:
        exps = x.exps if isinstance(x, (Element, Character)) else tuple(x)
        return self._index[self.reduce(exps)]

    def mul(self, g: Element, h: Element) -> Element:
        return self.element(tuple(a + b for a, b in zip(g.exps, h.exps)))

    def inverse(self, g: Element) -> Element:
        return self.element(tuple(-a for a in g.exps))

    def mul_idx(self, i: int, j: int) -> int:
        a, b = self.elements[i], self.elements[j]
        return self._index[tuple((x + y) % f for x, y, f in zip(a, b, self.factors))]

    @cached_property
    def mult_table(self) -> tuple[tuple[int, ...], ...]:
        n = self.order
        return tuple(tuple(self.mul_idx(i, j) for j in range(n)) for i in range(n))

    @cached_property
    def inverse_table(self) -> tuple[int, ...]:
        return tuple(
            self._index[tuple(-a % f for a, f in zip(exps, self.factors))]
            for exps in self.elements
        )

    def order_of_index(self, i: int) -> int:
        exps = self.elements[i]
        n = 1
        for e, f in zip(exps, self.factors):
            if e:
                n = n * f // _gcd(n, f)
        return n

    # -- characters ---------------------------------------------------------

    def pairing_parts(self, chi_exps, g_exps) -> tuple[int, int]:
        """(sign, t) with chi(g) = sign * zeta_p^t; t is 0 when there is no p part."""
        # the odd slot contributes to t, the involution slots to the sign
        t = 0
        s = 0
        for c, g, f in zip(chi_exps, g_exps, self.factors):
            if f == 2:
                s += c * g
            else:
                t = (c * g) % f
        return (-1 if s % 2 else 1, t)

    def char_value(self, chi: Character, g: Element) -> "CycInt | int":
        """chi(g), a cyclotomic integer when the group has a p part, else +-1."""
        sign, t = self.pairing_parts(chi.exps, g.exps)
        if self.p is None:
            return sign
        v = CycInt.root_power(self.p, t)
        return -v if sign < 0 else v

    def annihilator(self, members) -> tuple[int, ...]:
        """Indices of characters that are 1 on every listed element index."""
        if isinstance(members, Subgroup):
            members = members.members
        out = []
        for c, chi in enumerate(self.elements):
            for i in members:
                sign, t = self.pairing_parts(chi, self.elements[i])
                if sign != 1 or t != 0:
                    break
            else:
                out.append(c)
        return tuple(out)

    # -- subgroups ----------------------------------------------------------

    def subgroup(self, member_indices) -> "Subgroup":
        members = tuple(sorted(set(member_indices)))
        if 0 not in members:
            raise ValueError("a subgroup must contain the identity")
        mset = set(members)
        for i in members:
            if self.inverse_table[i] not in mset:
                raise ValueError(f"not closed under inversion at index {i}")
            for j in members:
                if self.mul_idx(i, j) not in mset:
                    raise ValueError(f"not closed under product at indices ({i}, {j})")
        gens: list[int] = []
        generated = {0}
        for i in members:
            if i not in generated:
                gens.append(i)
                generated = self._close(generated | {i})
        return Subgroup(self, members, tuple(gens))

    def _close(self, seed: set[int]) -> set[int]:
        out = set(seed) | {0}
        queue = list(out)
        while queue:
            i = queue.pop()
            for j in list(out):
                for k in (self.mul_idx(i, j), self.inverse_table[i]):
                    if k not in out:
                        out.add(k)
                        queue.append(k)
        return out

    def generated_subgroup(self, generator_indices) -> "Subgroup":
        return self.subgroup(self._close(set(generator_indices)))

    @cached_property
    def two_part_vectors(self) -> tuple[tuple[int, ...], ...]:
        """Exponent patterns of the (C_2)^d part, in lexicographic order."""
        return tuple(itertools.product((0, 1), repeat=self.dim2))

    def _embed_parts(self, a_exp: int, vec: tuple[int, ...]) -> int:
        exps = ((a_exp,) if self.p else ()) + vec
        return self._index[exps]

    @cached_property
    def all_subgroups(self) -> tuple["Subgroup", ...]:
        """Every subgroup; each splits as (p part) x (F_2 subspace of the 2 part)."""
        subs = []
        p_parts = [(0,)] if self.p is None else [(0,), tuple(range(self.p))]
        for space in _subspaces(self.dim2):
            for p_part in p_parts:
                members = [self._embed_parts(i, v) for i in p_part for v in space]
                subs.append(self.subgroup(members))
        return tuple(sorted(subs, key=lambda h: (h.order, h.members)))

    def complementary_pairs(self) -> tuple[tuple["Subgroup", "Subgroup"], ...]:
        """Unordered pairs of proper nontrivial subgroups that intersect trivially
        and jointly generate the group; the larger factor is listed first."""
        subs = [h for h in self.all_subgroups if 1 < h.order < self.order]
        pairs = []
        for i, h1 in enumerate(subs):
            for h2 in subs[i + 1 :]:
                if h1.order * h2.order != self.order:
                    continue
                if len(set(h1.members) & set(h2.members)) == 1:
                    big, small = sorted((h1, h2), key=lambda h: (-h.order, h.members))
                    pairs.append((big, small))
        return tuple(sorted(pairs, key=lambda pr: (-pr[0].order, pr[0].members, pr[1].members)))

    def subgroup_embedding(self, h: "Subgroup") -> "SubgroupEmbedding":
        if h.group != self:
            raise ValueError("subgroup belongs to a different group")
        return _embedding(self, h.members)

    def quotient(self, n: "Subgroup") -> "QuotientMap":
        if n.group != self:
            raise ValueError("subgroup belongs to a different group")
        return _quotient(self, n.members)

    # -- automorphisms ------------------------------------------------------

    def aut_from_parts(self, u: int | None, mat: tuple[tuple[int, ...], ...]) -> "AutMap":
        """Automorphism from a unit u on the p part and an invertible F_2 matrix
        on the involution part."""
        images = []
        if self.p:
            images.append(((u if u is not None else 1) % self.p,) + (0,) * self.dim2)
        for row in mat:
            images.append(((0,) if self.p else ()) + tuple(row))
        return AutMap(self, tuple(images))

    def aut_group(self) -> tuple["AutMap", ...]:
        """Every automorphism: unit action on the p part times GL(d, 2)."""
        return _cached_aut_group(self)

    def subgroups_of_aut(self) -> tuple[tuple["AutMap", ...], ...]:
        """All subgroups of Aut(G), each a multiplication-closed set of maps.

        For groups with a p part (and for the Klein group) the automorphism
        group is the direct product of a cyclic group and a copy of GL(d, 2),
        and the subgroups come from the Goursat parameterization; for (C_2)^3
        the full GL(3, 2) is enumerated by exhaustive closure, which is slow.
        """
        return _cached_aut_subgroups(self)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _subspaces(d: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All F_2-subspaces of F_2^d as sorted vector tuples, smallest first."""
    vecs = list(itertools.product((0, 1), repeat=d))
    nonzero = vecs[1:]
    spaces = set()
    for r in range(len(nonzero) + 1):
        for subset in itertools.combinations(nonzero, r):
            span = {(0,) * d}
            for v in subset:
                span |= {tuple(a ^ b for a, b in zip(v, w)) for w in span}
            spaces.add(tuple(sorted(span)))
    return tuple(sorted(spaces, key=lambda s: (len(s), s)))


@lru_cache(maxsize=None)
def _gl2_matrices(d: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Invertible d x d matrices over F_2 in lexicographic order."""
    if d == 0:
        return ((),)
    out = []
    for bits in itertools.product((0, 1), repeat=d * d):
        mat = tuple(bits[i * d : (i + 1) * d] for i in range(d))
        if _f2_rank(mat) == d:
            out.append(mat)
    return tuple(out)


def _f2_rank(mat) -> int:
    rows = [list(r) for r in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _f2_rref(vectors) -> tuple[tuple[int, ...], ...]:
    """Row-reduced echelon basis of the span, rows ordered by pivot column."""
    rows = [list(v) for v in vectors]
    basis: list[list[int]] = []
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in rows if r[col] and all(x == 0 for x in r[:col])), None)
        if pivot is None:
            continue
        basis.append(pivot)
        rows = [
            [a ^ b for a, b in zip(r, pivot)] if r[col] else r
            for r in rows
            if r is not pivot
        ]
    # eliminate above the pivots for canonical rows
    for i, b in enumerate(basis):
        col = b.index(1)
        for j in range(i):
            if basis[j][col]:
                basis[j] = [a ^ x for a, x in zip(basis[j], b)]
    return tuple(tuple(b) for b in basis)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted member indices and greedy generators."""

    group: GroupSpec
    members: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def generator_exps(self) -> list[list[int]]:
        return [list(self.group.elements[i]) for i in self.generators]


@dataclass(frozen=True)
class SubgroupEmbedding:
    """A subgroup rebuilt as a standalone group plus the index maps in and out."""

    parent: GroupSpec
    group: GroupSpec
    to_parent: tuple[int, ...]

    @cached_property
    def from_parent(self) -> dict[int, int]:
        return {g: i for i, g in enumerate(self.to_parent)}


@dataclass(frozen=True)
class QuotientMap:
    """A quotient group together with the index projection from the source."""

    source: GroupSpec
    group: GroupSpec
    projection: tuple[int, ...]


@lru_cache(maxsize=None)
def _embedding(g: GroupSpec, members: tuple[int, ...]) -> SubgroupEmbedding:
    mset = set(members)
    has_p = g.p is not None and any(g.elements[i][0] for i in members)
    if has_p and g._index[(1,) + (0,) * g.dim2] not in mset:
        raise ValueError("p part of subgroup does not contain the generator")
    two_vecs = [
        g.elements[i][1 if g.p else 0 :]
        for i in members
        if (g.p is None or g.elements[i][0] == 0) and any(g.elements[i])
    ]
    basis = _f2_rref(two_vecs) if two_vecs else ()
    factors = ((g.p,) if has_p else ()) + (2,) * len(basis)
    sub = GroupSpec.of(factors)
    to_parent = []
    for exps in sub.elements:
        a_exp = exps[0] if has_p else 0
        vec_bits = exps[1 if has_p else 0 :]
        vec = [0] * g.dim2
        for bit, bvec in zip(vec_bits, basis):
            if bit:
                vec = [x ^ y for x, y in zip(vec, bvec)]
        idx = g._embed_parts(a_exp if g.p else 0, tuple(vec))
        to_parent.append(idx)
    if set(to_parent) != mset:
        raise ValueError("embedding does not cover the subgroup")
    return SubgroupEmbedding(g, sub, tuple(to_parent))


@lru_cache(maxsize=None)
def _quotient(g: GroupSpec, members: tuple[int, ...]) -> QuotientMap:
    n = g.order
    rep = [0] * n
    for i in range(n):
        rep[i] = min(g.mul_idx(i, j) for j in members)
    p_survives = g.p is not None and all(g.elements[i][0] == 0 for i in members)
    two_size_n = sum(1 for i in members if g.p is None or g.elements[i][0] == 0)
    dim2_q = g.dim2 - (two_size_n.bit_length() - 1)
    q_spec = GroupSpec.of(((g.p,) if p_survives else ()) + (2,) * dim2_q)

    gen_idx: list[int] = []
    if p_survives:
        gen_idx.append(g._index[(1,) + (0,) * g.dim2])
    span = {rep[0]}
    for i in range(n):
        if len(gen_idx) == (1 if p_survives else 0) + dim2_q:
            break
        exps = g.elements[i]
        if g.p is not None and exps[0]:
            continue
        if rep[i] in span:
            continue
        gen_idx.append(i)
        # re-span over all chosen involution cosets to keep independence exact
        span = set()
        for bits in itertools.product((0, 1), repeat=len(gen_idx) - (1 if p_survives else 0)):
            x = 0
            for bit, gi in zip(bits, gen_idx[1 if p_survives else 0 :]):
                if bit:
                    x = g.mul_idx(x, gi)
            span.add(rep[x])

    rep_to_q: dict[int, int] = {}
    for q_i, q_exps in enumerate(q_spec.elements):
        x = 0
        for e, gi in zip(q_exps, gen_idx):
            for _ in range(e):
                x = g.mul_idx(x, gi)
        rep_to_q[rep[x]] = q_i
    if len(rep_to_q) != q_spec.order:
        raise ValueError("quotient coordinatization failed")
    projection = tuple(rep_to_q[rep[i]] for i in range(n))
    return QuotientMap(g, q_spec, projection)


@dataclass(frozen=True)
class AutMap:
    """An automorphism given by the images of the canonical generators."""

    group: GroupSpec
    gen_images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.group
        if len(self.gen_images) != len(g.factors):
            raise ValueError("one image per generator is required")
        for img in self.gen_images:
            if len(img) != len(g.factors):
                raise ValueError("image has wrong exponent length")
        object.__setattr__(
            self, "gen_images", tuple(g.reduce(img) for img in self.gen_images)
        )
        for img, f in zip(self.gen_images, g.factors):
            if g.order_of_index(g._index[img]) != f:
                raise ValueError(f"image {img} does not have order {f}")
        if len(set(self.perm)) != g.order:
            raise ValueError("generator images do not define a bijection")

    @classmethod
    def identity(cls, g: GroupSpec) -> "AutMap":
        eye = []
        for i in range(len(g.factors)):
            eye.append(tuple(1 if j == i else 0 for j in range(len(g.factors))))
        return cls(g, tuple(eye))

    def apply_exps(self, exps) -> tuple[int, ...]:
        g = self.group
        out = [0] * len(g.factors)
        for e, img in zip(exps, self.gen_images):
            if e:
                out = [x + e * y for x, y in zip(out, img)]
        return g.reduce(out)

    @cached_property
    def perm(self) -> tuple[int, ...]:
        g = self.group
        return tuple(g._index[self.apply_exps(exps)] for exps in g.elements)

    @cached_property
    def inverse_perm(self) -> tuple[int, ...]:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return tuple(inv)

    @cached_property
    def char_perm(self) -> tuple[int, ...]:
        """Index permutation of Irr(G) under chi -> chi o alpha^(-1)."""
        g = self.group
        unit = [g._index[tuple(1 if j == i else 0 for j in range(len(g.factors)))]
                for i in range(len(g.factors))]
        # exponent rows of alpha^(-1) on each generator; cross-order entries are 0
        beta = [g.elements[self.inverse_perm[u]] for u in unit]
        out = []
        for chi in g.elements:
            new = tuple(
                sum(b * c for b, c in zip(beta[i], chi)) % g.factors[i]
                for i in range(len(g.factors))
            )
            out.append(g._index[new])
        return tuple(out)

    def act_on_element(self, g: Element) -> Element:
        return self.group.element(self.apply_exps(g.exps))

    def act_on_character(self, chi: Character) -> Character:
        g = self.group
        return Character(g.elements[self.char_perm[g.index_of(chi)]])

    def compose(self, other: "AutMap") -> "AutMap":
        """self after other."""
        if other.group != self.group:
            raise ValueError("maps act on different groups")
        return AutMap(self.group, tuple(self.apply_exps(img) for img in other.gen_images))

    def inverse(self) -> "AutMap":
        g = self.group
        unit = [tuple(1 if j == i else 0 for j in range(len(g.factors)))
                for i in range(len(g.factors))]
        images = tuple(g.elements[self.inverse_perm[g._index[u]]] for u in unit)
        return AutMap(g, images)

    def is_identity(self) -> bool:
        return all(self.perm[i] == i for i in range(len(self.perm)))


def close_aut_set(gens) -> tuple[AutMap, ...]:
    """Multiplicative closure of a set of automorphisms (breadth-first)."""
    if not gens:
        raise ValueError("need at least one map to infer the group")
    g = gens[0].group
    ident = AutMap.identity(g)
    have = {ident.perm: ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for a in gens:
            z = a.compose(x)
            if z.perm not in have:
                have[z.perm] = z
                queue.append(z)
    return tuple(sorted(have.values(), key=lambda m: m.gen_images))


def _generic_subgroups(perms: list[tuple[int, ...]]) -> list[frozenset[tuple[int, ...]]]:
    """All subgroups of a permutation-represented group by exhaustive closure."""
    n = len(perms[0])
    ident = tuple(range(n))

    def compose(a, b):
        return tuple(a[x] for x in b)

    def close(gens):
        have = {ident}
        queue = [ident]
        while queue:
            x = queue.pop()
            for a in gens:
                z = compose(a, x)
                if z not in have:
                    have.add(z)
                    queue.append(z)
        return frozenset(have)

    known = {frozenset({ident}): ()}
    frontier = [(frozenset({ident}), ())]
    while frontier:
        h, gens = frontier.pop()
        for a in sorted(perms):
            if a not in h:
                s = close(list(gens) + [a])
                if s not in known:
                    known[s] = tuple(gens) + (a,)
                    frontier.append((s, known[s]))
    return sorted(known, key=lambda s: (len(s), sorted(s)))


def _primitive_root(p: int) -> int:
    for r in range(2, p):
        x, seen = 1, set()
        for _ in range(p - 1):
            x = x * r % p
            seen.add(x)
        if len(seen) == p - 1:
            return r
    raise ValueError(f"no primitive root mod {p}")


def _sort_aut_subgroups(subs) -> tuple[tuple[AutMap, ...], ...]:
    uniq = {frozenset(s) for s in subs}
    ordered = [tuple(sorted(s, key=lambda m: m.gen_images)) for s in uniq]
    return tuple(sorted(ordered, key=lambda s: (len(s), [m.gen_images for m in s])))


@lru_cache(maxsize=None)
def _cached_aut_group(g: GroupSpec) -> tuple[AutMap, ...]:
    units = [None] if g.p is None else list(range(1, g.p))
    return tuple(
        g.aut_from_parts(u, m) for u in units for m in _gl2_matrices(g.dim2)
    )


@lru_cache(maxsize=None)
def _cached_aut_subgroups(g: GroupSpec) -> tuple[tuple[AutMap, ...], ...]:
    if g.p is None and g.dim2 == 3:
        auts = g.aut_group()
        by_perm = {a.perm: a for a in auts}
        subs = _generic_subgroups([a.perm for a in auts])
        return _sort_aut_subgroups([frozenset(by_perm[q] for q in s) for s in subs])
    return _sort_aut_subgroups(_goursat_subgroups(g))


def aut_generating_subset(subgroup: tuple[AutMap, ...]) -> tuple[AutMap, ...]:
    """A small generating subset of a multiplication-closed set of automorphisms."""
    nontrivial = [a for a in subgroup if not a.is_identity()]
    if not nontrivial:
        return ()
    gens: list[AutMap] = []
    have: set[tuple[int, ...]] = {AutMap.identity(nontrivial[0].group).perm}
    for a in sorted(nontrivial, key=lambda m: m.gen_images):
        if a.perm in have:
            continue
        gens.append(a)
        have = {m.perm for m in close_aut_set(tuple(gens))}
        if len(have) == len(subgroup):
            break
    return tuple(gens)


def _goursat_subgroups(g: GroupSpec) -> list[frozenset[AutMap]]:
    """Subgroups of Aut(G) = C_(p-1) x GL(d, 2) via Goursat's parameterization:
    pick (H1, N1) in the cyclic part, (H2, N2) in the matrix part, and an
    isomorphism of the (cyclic) quotients; the subgroup is the fiber product."""
    p = g.p
    m = (p - 1) if p else 1
    r = _primitive_root(p) if p else None

    # cyclic side: subgroup of order h is generated by r^(m/h); remember the
    # discrete log of each unit so coset labels mod q are immediate
    def cyclic_subgroup(h: int) -> dict[int | None, int]:
        if p is None:
            return {None: 0}
        gen = pow(r, m // h, p)
        units, x = {}, 1
        for i in range(h):
            units[x] = i
            x = x * gen % p
        return units

    # matrix side: subgroups of GL(d, 2) with all (N2, cyclic-quotient) data
    mats = _gl2_matrices(g.dim2)
    mat_subs = [
        tuple(sorted(s))
        for s in _generic_mat_subgroups(mats)
    ]

    def mat_mul(a, b):
        d = len(a)
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(d)) % 2 for j in range(d))
            for i in range(d)
        )

    out = []
    for h in _divisors(m):
        units = cyclic_subgroup(h)
        for q in _divisors(h):
            # unique index-q subgroup of the cyclic part; label = log mod q
            for h2 in mat_subs:
                for n2, gen_cosets in _cyclic_quotients(h2, q, mat_mul, g.dim2):
                    for gamma in gen_cosets:
                        # label each y in H2 by its power of the generator coset
                        label2 = {}
                        coset = set(n2)
                        for k in range(q):
                            for y in coset:
                                label2[y] = k
                            coset = {mat_mul(gamma, y) for y in coset}
                        members = frozenset(
                            g.aut_from_parts(u, y)
                            for u, log in units.items()
                            for y, lab in label2.items()
                            if log % q == lab
                        )
                        out.append(members)
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _generic_mat_subgroups(mats) -> list[frozenset]:
    d = len(mats[0]) if mats and mats[0] else 0
    if d == 0:
        return [frozenset({()})]

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(d)) % 2 for j in range(d))
            for i in range(d)
        )

    ident = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))

    def close(gens):
        have = {ident}
        queue = [ident]
        while queue:
            x = queue.pop()
            for a in gens:
                z = mul(a, x)
                if z not in have:
                    have.add(z)
                    queue.append(z)
        return frozenset(have)

    known = {frozenset({ident}): ()}
    frontier = [(frozenset({ident}), ())]
    while frontier:
        h, gens = frontier.pop()
        for a in mats:
            if a not in h:
                s = close(list(gens) + [a])
                if s not in known:
                    known[s] = tuple(gens) + (a,)
                    frontier.append((s, known[s]))
    return sorted(known, key=lambda s: (len(s), sorted(s)))


def _cyclic_quotients(h2, q, mat_mul, d):
    """(N2, generator cosets) pairs with N2 normal in H2 and H2/N2 cyclic of
    order q; generator cosets are returned as representative matrices."""
    if len(h2) % q != 0:
        return
    target = len(h2) // q
    h2set = set(h2)
    for n2 in _generic_mat_subgroups(list(h2)):
        if len(n2) != target or not n2 <= h2set:
            continue
        if any(mat_mul(mat_mul(x, y), _mat_inv(x, mat_mul, d)) not in n2
               for x in h2 for y in n2):
            continue
        # cosets of n2 in h2
        seen, cosets = set(), []
        for x in h2:
            cs = frozenset(mat_mul(x, y) for y in n2)
            if cs not in seen:
                seen.add(cs)
                cosets.append(cs)
        # generator cosets: representatives whose coset has order exactly q
        n2set = set(n2)
        gens = []
        for cs in cosets:
            x = min(cs)
            # order of the coset = smallest k with x^k in n2
            k, acc = 1, x
            while acc not in n2set:
                acc = mat_mul(x, acc)
                k += 1
            if k == q:
                gens.append(x)
        if q == 1:
            yield tuple(sorted(n2)), [min(n2)]
        elif gens:
            # distinct isomorphisms correspond to distinct generator cosets
            reps, seen_cs = [], set()
            for x in sorted(gens):
                cs = frozenset(mat_mul(x, y) for y in n2)
                if cs not in seen_cs:
                    seen_cs.add(cs)
                    reps.append(x)
            yield tuple(sorted(n2)), reps


def _mat_inv(x, mat_mul, d):
    # small group: invert by powering until identity
    ident = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
    acc, prev = x, ident
    while acc != ident:
        prev = acc
        acc = mat_mul(x, acc)
    return prev
