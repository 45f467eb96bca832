"""Group models, characters, subgroup machinery, and automorphism actions."""

import random

import pytest

from supercharacters import (
    AutMap,
    CycInt,
    GroupSpec,
    aut_generating_subset,
    close_aut_set,
)
from supercharacters.groups import _generic_subgroups


def test_family_construction():
    assert GroupSpec.cp(5).factors == (5,)
    assert GroupSpec.klein().factors == (2, 2)
    assert GroupSpec.cp_c2(7).factors == (7, 2)
    assert GroupSpec.c2_cubed().factors == (2, 2, 2)
    assert GroupSpec.cp_c2_c2(3).factors == (3, 2, 2)
    assert GroupSpec.cp_c2_c2(5).order == 20
    # interning: equal specs are the same object
    assert GroupSpec.cp_c2_c2(5) is GroupSpec.of((5, 2, 2))


@pytest.mark.parametrize("family,p,expect", [
    ("Cp", 7, (7,)), ("Klein", None, (2, 2)), ("CpC2", 3, (3, 2)),
    ("C2cubed", None, (2, 2, 2)), ("CpC2C2", 11, (11, 2, 2)),
])
def test_from_family(family, p, expect):
    g = GroupSpec.from_family(family, p)
    assert g.factors == expect
    assert g.family == family


@pytest.mark.parametrize("factors", [(4,), (9, 2), (2, 3), (3, 3), (2, 2, 2, 2), (3, 2, 2, 2)])
def test_invalid_factors(factors):
    with pytest.raises(ValueError):
        GroupSpec.of(factors)


def test_unknown_family():
    with pytest.raises(ValueError):
        GroupSpec.from_family("dihedral", 5)
    with pytest.raises(ValueError):
        GroupSpec.from_family("Cp", None)


def test_element_indexing():
    g = GroupSpec.cp_c2_c2(3)
    assert g.order == 12
    assert g.elements[0] == (0, 0, 0)
    assert g.elements[1] == (0, 0, 1)
    assert g.index_of((2, 1, 1)) == g.order - 1
    for i in range(g.order):
        assert g.index_of(g.elements[i]) == i
    assert g.index_of((5, 3, -1)) == g.index_of((2, 1, 1))


def test_group_laws_exhaustive_klein():
    g = GroupSpec.klein()
    for i in range(4):
        assert g.mul_idx(i, 0) == i
        assert g.mul_idx(i, g.inverse_table[i]) == 0
        for j in range(4):
            assert g.mul_idx(i, j) == g.mul_idx(j, i)
            for k in range(4):
                assert g.mul_idx(g.mul_idx(i, j), k) == g.mul_idx(i, g.mul_idx(j, k))


@pytest.mark.parametrize("p", [3, 5])
def test_group_laws_random(p):
    g = GroupSpec.cp_c2_c2(p)
    rng = random.Random(7 * p)
    for _ in range(60):
        i, j, k = (rng.randrange(g.order) for _ in range(3))
        assert g.mul_idx(i, 0) == i
        assert g.mul_idx(i, g.inverse_table[i]) == 0
        assert g.mul_idx(i, j) == g.mul_idx(j, i)
        assert g.mul_idx(g.mul_idx(i, j), k) == g.mul_idx(i, g.mul_idx(j, k))


def test_element_orders():
    g = GroupSpec.cp_c2_c2(5)
    orders = sorted(g.order_of_index(i) for i in range(g.order))
    assert orders.count(1) == 1
    assert orders.count(2) == 3
    assert orders.count(5) == 4
    assert orders.count(10) == 12
    assert g.order_of_index(g.index_of((1, 1, 1))) == 10


def test_character_values():
    g = GroupSpec.cp_c2_c2(5)
    chi = g.character((1, 0, 0))
    assert g.char_value(chi, g.element((1, 0, 0))) == CycInt.root_power(5, 1)
    assert g.char_value(chi, g.element((0, 1, 0))) == CycInt.one(5)
    sign_char = g.character((0, 0, 1))
    assert g.char_value(sign_char, g.element((0, 0, 1))) == CycInt.from_int(5, -1)
    assert g.char_value(sign_char, g.element((0, 1, 0))) == CycInt.one(5)
    mixed = g.character((2, 1, 0))
    assert g.char_value(mixed, g.element((1, 1, 1))) == -CycInt.root_power(5, 2)


def test_character_values_are_ints_without_p_part():
    g = GroupSpec.klein()
    for ce in g.elements:
        for ge in g.elements:
            v = g.char_value(g.character(ce), g.element(ge))
            assert isinstance(v, int) and v in (-1, 1)


@pytest.mark.parametrize("g", [GroupSpec.klein(), GroupSpec.cp_c2_c2(3)])
def test_character_orthogonality(g):
    for ci in range(g.order):
        for cj in range(g.order):
            chi = g.character(g.elements[ci])
            psi = g.character(g.elements[cj])
            total = 0
            for ge in g.elements:
                e = g.element(ge)
                total = total + g.char_value(chi, e) * _conj(g.char_value(psi, e))
            want = g.order if ci == cj else 0
            if isinstance(total, int):
                assert total == want
            else:
                assert total.is_rational_integer() == want


def _conj(v):
    return v if isinstance(v, int) else v.conjugate()


@pytest.mark.parametrize("g,count", [
    (GroupSpec.cp(7), 2),
    (GroupSpec.klein(), 5),
    (GroupSpec.cp_c2(5), 4),
    (GroupSpec.c2_cubed(), 16),
    (GroupSpec.cp_c2_c2(3), 10),
    (GroupSpec.cp_c2_c2(5), 10),
])
def test_subgroup_counts(g, count):
    subs = g.all_subgroups
    assert len(subs) == count
    orders = [s.order for s in subs]
    assert orders == sorted(orders)
    for s in subs:
        members = set(s.members)
        for x in s.members:
            assert g.inverse_table[x] in members
            for y in s.members:
                assert g.mul_idx(x, y) in members
        assert set(g.generated_subgroup(s.generators).members) == members


def test_subgroup_validation():
    g = GroupSpec.cp(5)
    with pytest.raises(ValueError):
        g.subgroup((0, 1))  # not closed
    with pytest.raises(ValueError):
        g.subgroup((1, 2, 3, 4))  # missing identity
    s = g.subgroup((0, 1, 2, 3, 4))
    assert s.order == 5


@pytest.mark.parametrize("g,count", [
    (GroupSpec.cp(7), 0),
    (GroupSpec.klein(), 3),
    (GroupSpec.cp_c2(5), 1),
    (GroupSpec.c2_cubed(), 28),
    (GroupSpec.cp_c2_c2(3), 7),
])
def test_complementary_pairs(g, count):
    pairs = g.complementary_pairs()
    assert len(pairs) == count
    for h1, h2 in pairs:
        assert h1.order * h2.order == g.order
        assert h1.order >= h2.order
        assert set(h1.members) & set(h2.members) == {0}


def test_embedding_is_homomorphism():
    g = GroupSpec.cp_c2_c2(3)
    for s in g.all_subgroups:
        emb = g.subgroup_embedding(s)
        h = emb.group
        assert h.order == s.order
        for x in range(h.order):
            assert emb.from_parent[emb.to_parent[x]] == x
            for y in range(h.order):
                assert (
                    emb.to_parent[h.mul_idx(x, y)]
                    == g.mul_idx(emb.to_parent[x], emb.to_parent[y])
                )


def test_quotient_families():
    g = GroupSpec.cp_c2_c2(3)
    a = g.subgroup(tuple(g.index_of((i, 0, 0)) for i in range(3)))
    b = g.subgroup((0, g.index_of((0, 1, 0))))
    klein = g.subgroup(sorted(g.index_of((0, j, k)) for j in range(2) for k in range(2)))
    big = g.generated_subgroup((g.index_of((1, 0, 0)), g.index_of((0, 1, 0))))
    assert g.quotient(a).group.factors == (2, 2)
    assert g.quotient(b).group.factors == (3, 2)
    assert g.quotient(klein).group.factors == (3,)
    assert g.quotient(big).group.factors == (2,)


def test_quotient_projection_is_homomorphism():
    g = GroupSpec.cp_c2_c2(3)
    for s in g.all_subgroups:
        if s.order in (1, g.order):
            continue
        q = g.quotient(s)
        proj = q.projection
        assert proj[0] == 0
        assert {i for i in range(g.order) if proj[i] == 0} == set(s.members)
        for x in range(g.order):
            for y in range(g.order):
                assert proj[g.mul_idx(x, y)] == q.group.mul_idx(proj[x], proj[y])


@pytest.mark.parametrize("g,size", [
    (GroupSpec.cp(7), 6),
    (GroupSpec.klein(), 6),
    (GroupSpec.cp_c2(5), 4),
    (GroupSpec.c2_cubed(), 168),
    (GroupSpec.cp_c2_c2(5), 24),
])
def test_aut_group_size(g, size):
    auts = g.aut_group()
    assert len(auts) == size
    assert len({a.perm for a in auts}) == size


def test_aut_maps_are_homomorphisms():
    g = GroupSpec.cp_c2_c2(3)
    for a in g.aut_group():
        perm = a.perm
        assert perm[0] == 0
        for x in range(g.order):
            for y in range(g.order):
                assert perm[g.mul_idx(x, y)] == g.mul_idx(perm[x], perm[y])


def test_aut_character_compatibility():
    # (alpha . chi)(g) == chi(alpha^-1(g)) for every automorphism
    g = GroupSpec.cp_c2_c2(5)
    rng = random.Random(11)
    auts = g.aut_group()
    for a in rng.sample(auts, 8):
        inv = a.inverse()
        for _ in range(25):
            ci, gi = rng.randrange(g.order), rng.randrange(g.order)
            chi = g.character(g.elements[ci])
            moved = g.character(g.elements[a.char_perm[ci]])
            elem = g.element(g.elements[gi])
            pulled = g.element(g.elements[inv.perm[gi]])
            assert g.char_value(moved, elem) == g.char_value(chi, pulled)


def test_act_on_character_swap():
    g = GroupSpec.cp_c2_c2(3)
    swap = g.aut_from_parts(1, ((0, 1), (1, 0)))
    chi = g.character((0, 1, 0))
    assert swap.act_on_character(chi).exps == (0, 0, 1)
    fixed = g.character((0, 1, 1))
    assert swap.act_on_character(fixed).exps == (0, 1, 1)


def test_aut_compose_inverse():
    g = GroupSpec.cp_c2_c2(5)
    rng = random.Random(4)
    auts = g.aut_group()
    ident = AutMap.identity(g)
    for _ in range(10):
        a, b = rng.choice(auts), rng.choice(auts)
        assert a.compose(a.inverse()) == ident
        ab = a.compose(b)
        for x in range(g.order):
            assert ab.perm[x] == a.perm[b.perm[x]]


def test_aut_from_parts_validation():
    g = GroupSpec.cp_c2_c2(5)
    with pytest.raises(ValueError):
        g.aut_from_parts(0, ((1, 0), (0, 1)))  # 0 is not a unit mod 5
    with pytest.raises(ValueError):
        g.aut_from_parts(1, ((1, 0), (1, 0)))  # singular matrix
    with pytest.raises(ValueError):
        AutMap(g, ((0, 1, 0), (0, 1, 0), (0, 0, 1)))  # wrong image orders


def test_close_aut_set():
    g = GroupSpec.cp_c2_c2(5)
    doubling = g.aut_from_parts(2, ((1, 0), (0, 1)))
    closure = close_aut_set((doubling,))
    assert len(closure) == 4
    swap = g.aut_from_parts(1, ((0, 1), (1, 0)))
    assert len(close_aut_set((doubling, swap))) == 8


def test_aut_generating_subset():
    g = GroupSpec.cp_c2_c2(3)
    for sub in g.subgroups_of_aut():
        gens = aut_generating_subset(sub)
        if len(sub) == 1:
            assert gens == ()
        else:
            assert {m.perm for m in close_aut_set(gens)} == {m.perm for m in sub}


@pytest.mark.parametrize("g,count", [
    (GroupSpec.cp(3), 2),
    (GroupSpec.cp(5), 3),
    (GroupSpec.cp(13), 6),
    (GroupSpec.klein(), 6),
    (GroupSpec.cp_c2(5), 3),
    (GroupSpec.cp_c2_c2(3), 16),
])
def test_subgroups_of_aut_counts(g, count):
    subs = g.subgroups_of_aut()
    assert len(subs) == count
    for s in subs:
        perms = {m.perm for m in s}
        for x in s:
            for y in s:
                assert x.compose(y).perm in perms


@pytest.mark.parametrize("g", [GroupSpec.klein(), GroupSpec.cp_c2_c2(3)])
def test_subgroups_of_aut_against_exhaustive_closure(g):
    # the parameterized construction must agree with brute-force closure
    auts = g.aut_group()
    want = {frozenset(s) for s in _generic_subgroups([a.perm for a in auts])}
    got = {frozenset(m.perm for m in s) for s in g.subgroups_of_aut()}
    assert got == want


def test_orbit_counts_match_on_both_sides():
    g = GroupSpec.cp_c2_c2(3)
    for sub in g.subgroups_of_aut():
        elem_orbits = _orbit_count([a.perm for a in sub], g.order)
        char_orbits = _orbit_count([a.char_perm for a in sub], g.order)
        assert elem_orbits == char_orbits


def _orbit_count(perms, n):
    seen, count = set(), 0
    for i in range(n):
        if i in seen:
            continue
        count += 1
        frontier = {i}
        while frontier:
            x = frontier.pop()
            if x in seen:
                continue
            seen.add(x)
            frontier.update(p[x] for p in perms)
    return count


def test_annihilator():
    g = GroupSpec.cp_c2_c2(5)
    for s in g.all_subgroups:
        ann = g.annihilator(s)
        assert len(ann) * s.order == g.order
        for ci in ann:
            chi = g.character(g.elements[ci])
            for gi in s.members:
                v = g.char_value(chi, g.element(g.elements[gi]))
                assert (v == 1) if isinstance(v, int) else (v == CycInt.one(5))


def test_annihilator_reverses_inclusion():
    g = GroupSpec.cp_c2_c2(3)
    subs = g.all_subgroups
    for s in subs:
        for t in subs:
            if set(s.members) <= set(t.members):
                assert set(g.annihilator(t)) <= set(g.annihilator(s))
