import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prymdim.errors import (
    CapExceeded,
    DegreeMismatch,
    NotASubgroup,
    NotRationalGroup,
    ParseError,
)
from prymdim.permgroup import (
    Permutation,
    group_from_generators,
    parse_generators,
    parse_permutation,
)
from prymdim.weyl import weyl_group

from conftest import SMALL_WEYL


# -- parsing / printing ---------------------------------------------------------


def test_cycle_parse_and_print():
    p = Permutation.from_cycles("(0 1)(2 3)")
    assert p.images == (1, 0, 3, 2)
    assert p.cycle_str() == "(0 1)(2 3)"
    assert Permutation.from_cycles("()", degree=4).images == (0, 1, 2, 3)
    assert Permutation.identity(3).cycle_str() == "()"
    assert parse_permutation("1 0 2").images == (1, 0, 2)
    assert parse_permutation("[2, 0, 1]").images == (2, 0, 1)


def test_parse_rejects_garbage():
    for bad in ["(0 1", "0 1)", "(0 0 1)", "(x)", "(0 1)(1 2)", "1 1 0"]:
        with pytest.raises(ParseError):
            parse_permutation(bad)


@given(st.permutations(list(range(6))))
def test_cycle_roundtrip(images):
    p = Permutation.from_images(images)
    assert Permutation.from_cycles(p.cycle_str(), degree=6) == p


@given(st.permutations(list(range(5))), st.permutations(list(range(5))))
def test_compose_inverse(a, b):
    pa, pb = Permutation.from_images(a), Permutation.from_images(b)
    assert (pa * pb) * (pa * pb).inverse() == Permutation.identity(5)
    assert pa.inverse().inverse() == pa


# -- enumeration ----------------------------------------------------------------


def test_group_examples(trivial, z2, s3):
    assert z2.order == 2
    assert s3.order == 6
    assert trivial.order == 1
    # independent oracle: S3 is all permutations of 3 points
    everything = {p.images for p in s3.elements}
    assert everything == set(itertools.permutations(range(3)))


def test_group_identity_is_index_zero(s4):
    assert s4.identity_index == 0
    assert s4.elements[0].is_identity()


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        group_from_generators(parse_generators(["(0 1)", "(0 1 2 3)"]), cap=10)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        group_from_generators(
            [Permutation.from_cycles("(0 1)"), Permutation.from_cycles("(0 1 2)")]
        )


@given(st.lists(st.permutations(list(range(4))), min_size=1, max_size=2))
def test_closure_is_a_group(gens):
    G = group_from_generators([Permutation.from_images(g) for g in gens])
    idx = set(range(G.order))
    assert all(G.inv(x) in idx for x in idx)
    for x in list(idx)[:6]:
        for y in list(idx)[:6]:
            assert G.mul(x, y) in idx
    assert G.order % 1 == 0 and 24 % G.order == 0  # Lagrange inside S4


# -- conjugacy classes -----------------------------------------------------------


def brute_force_classes(G):
    """Independent oracle: conjugate by every group element."""
    seen = set()
    classes = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = {G.conjugate(x, g) for g in range(G.order)}
        seen |= cls
        classes.append(frozenset(cls))
    return set(classes)


def test_conjugacy_classes_examples(trivial, z2, s3):
    assert [c.size for c in s3.conjugacy_classes()] == [1, 3, 2]
    assert [c.size for c in z2.conjugacy_classes()] == [1, 1]
    assert len(trivial.conjugacy_classes()) == 1


def test_conjugacy_classes_match_brute_force(s3, s4):
    for G in (s3, s4):
        got = {frozenset(c.members) for c in G.conjugacy_classes()}
        assert got == brute_force_classes(G)


def test_class_equation_on_fleet():
    for letter, rank in SMALL_WEYL:
        G = weyl_group(letter, rank).group
        classes = G.conjugacy_classes()
        assert sum(c.size for c in classes) == G.order
        assert all(G.order % c.size == 0 for c in classes)
        assert classes[0].representative == G.identity_index


# -- rationality and cyclic classes ----------------------------------------------


def test_rationality_examples(trivial, s3, z3, z5):
    assert s3.is_rational_group()
    assert trivial.is_rational_group()
    assert not z3.is_rational_group()
    assert not z5.is_rational_group()
    # the power-map witness for Z/3: x^2 is not conjugate to x
    x = next(i for i in range(z3.order) if i != z3.identity_index)
    assert z3.class_of(z3.mul(x, x)) != z3.class_of(x)


def cyclic_subgroups_up_to_conjugacy(G):
    """Independent oracle: enumerate every cyclic subgroup, then merge
    conjugates; returns the sorted subgroup orders."""
    subgroups = {frozenset(G.subgroup_closure([x])) for x in range(G.order)}
    merged = set()
    for H in subgroups:
        orbit = frozenset(
            frozenset(G.mul(G.mul(g, h), G.inv(g)) for h in H) for g in range(G.order)
        )
        merged.add(orbit)
    return sorted(len(next(iter(orbit))) for orbit in merged)


def test_cyclic_classes_examples(z2, s3, z3):
    assert [k.subgroup_order for k in s3.cyclic_subgroup_classes()] == [1, 2, 3]
    assert [k.subgroup_order for k in z2.cyclic_subgroup_classes()] == [1, 2]
    g2 = weyl_group("G", 2).group
    assert [k.subgroup_order for k in g2.cyclic_subgroup_classes()] == [1, 2, 2, 2, 3, 6]
    assert cyclic_subgroups_up_to_conjugacy(g2) == [1, 2, 2, 2, 3, 6]
    assert cyclic_subgroups_up_to_conjugacy(s3) == [1, 2, 3]
    with pytest.raises(NotRationalGroup):
        z3.cyclic_subgroup_classes()


def test_cyclic_classes_are_power_sets(s4):
    for K in s4.cyclic_subgroup_classes():
        powers = {s4.power(K.generator, t) for t in range(K.subgroup_order)}
        assert powers == set(K.subgroup_elements)
        assert len(K.subgroup_elements) == K.subgroup_order
        assert sum(K.member_class_profile.values()) == K.subgroup_order


def test_lemma_one_bijection_on_fleet():
    """Conjugates of the generator generate exactly the conjugates of H_k,
    and cyclic classes biject with element classes."""
    for letter, rank in [("A", 2), ("A", 3), ("B", 2), ("G", 2)]:
        G = weyl_group(letter, rank).group
        classes = G.conjugacy_classes()
        cyclic = G.cyclic_subgroup_classes()
        assert len(cyclic) == len(classes)
        for K in cyclic:
            members = classes[G.class_of(K.generator)].members
            generated = {
                frozenset(G.subgroup_closure([y])) for y in members
            }
            conjugates = {
                frozenset(G.mul(G.mul(g, h), G.inv(g)) for h in K.subgroup_elements)
                for g in range(G.order)
            }
            assert generated == conjugates


# -- coset actions and double cosets ----------------------------------------------


def test_coset_action_examples(s3):
    triv = s3.coset_action([s3.identity_index])
    assert len(triv.cosets) == 6  # regular action
    three_cycle = next(
        i for i in range(s3.order) if s3.element_order(i) == 3
    )
    act = s3.coset_action(s3.subgroup_closure([three_cycle]))
    assert len(act.cosets) == 2
    assert act.element_action(three_cycle) == (0, 1)  # 3-cycles act trivially
    transposition = next(i for i in range(s3.order) if s3.element_order(i) == 2)
    assert act.element_action(transposition) == (1, 0)  # transpositions swap
    whole = s3.coset_action(range(s3.order))
    assert len(whole.cosets) == 1


def test_coset_action_rejects_non_subgroup(s3):
    transpositions = [i for i in range(s3.order) if s3.element_order(i) == 2]
    with pytest.raises(NotASubgroup):
        s3.coset_action([s3.identity_index] + transpositions[:2])


def test_coset_action_homomorphism(s4):
    act = s4.coset_action(s4.subgroup_closure([s4.generator_indices[0]]))
    for x in range(0, s4.order, 5):
        for y in range(0, s4.order, 7):
            via_mul = act.element_action(s4.mul(x, y))
            ax, ay = act.element_action(x), act.element_action(y)
            assert via_mul == tuple(ax[c] for c in ay)


def test_double_coset_examples(s3):
    cyclic = s3.cyclic_subgroup_classes()
    H2, H3 = cyclic[1], cyclic[2]
    assert s3.double_coset_count(H2, H2) == 2
    assert s3.double_coset_count(cyclic[0], H3) == s3.order // H3.subgroup_order
    assert s3.double_coset_count(H3, range(s3.order)) == 1


def double_cosets_by_partition(G, a_elems, b_elems):
    """Independent oracle: partition G into AxB sets and count them."""
    unassigned = set(range(G.order))
    count = 0
    while unassigned:
        x = min(unassigned)
        dc = {G.mul(a, G.mul(x, b)) for a in a_elems for b in b_elems}
        assert dc <= unassigned
        unassigned -= dc
        count += 1
    return count


def test_double_coset_symmetry():
    for letter, rank in SMALL_WEYL:
        G = weyl_group(letter, rank).group
        cyclic = G.cyclic_subgroup_classes()
        for A in cyclic:
            for B in cyclic:
                assert G.double_coset_count(A, B) == G.double_coset_count(B, A)


def test_double_coset_routes_fleet_under_5000():
    """Orbit counting agrees with the direct partition of G into AxB sets,
    for every pair of cyclic classes in every fleet group of order <= 5000."""
    from conftest import WEYL_FLEET

    seen: set[int] = set()
    for letter, rank in WEYL_FLEET:
        G = weyl_group(letter, rank).group
        if G.order > 5000 or id(G) in seen:  # B and C share the group instance
            continue
        seen.add(id(G))
        cyclic = G.cyclic_subgroup_classes()
        for A in cyclic:
            for B in cyclic:
                orbit_route = G.double_coset_count(A, B)
                partition_route = double_cosets_by_partition(
                    G, A.subgroup_elements, B.subgroup_elements
                )
                assert orbit_route == partition_route, (letter, rank)


def test_trivial_double_coset_is_index():
    for letter, rank in [("A", 3), ("B", 2), ("G", 2)]:
        G = weyl_group(letter, rank).group
        cyclic = G.cyclic_subgroup_classes()
        for H in cyclic:
            assert G.double_coset_count(cyclic[0], H) == G.order // H.subgroup_order
