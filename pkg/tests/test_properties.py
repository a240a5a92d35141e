"""Property-based checks of algebraic invariants on random inputs."""

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from maxsub import atlas
from maxsub.field import field_of_order
from maxsub.group import PermGroup, coset_action, is_maximal
from maxsub.perm import Permutation
from maxsub.structure import chief_series, index_class, is_supersolvable, maximal_subgroups

import oracles

perms = st.integers(2, 7).flatmap(lambda n: st.permutations(range(n)).map(Permutation))
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def same_degree_pair(n):
    return st.tuples(st.permutations(range(n)), st.permutations(range(n)))


@SETTINGS
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(*[st.permutations(range(n))] * 3)))
def test_product_associative_and_matches_oracle(abc):
    a, b, c = (Permutation(x) for x in abc)
    assert (a * b) * c == a * (b * c)
    assert tuple((a * b).images) == oracles.mul(tuple(a.images), tuple(b.images))
    assert (a * ~a).is_identity()
    assert (a * b).order() == oracles.order_of(tuple((a * b).images))


@SETTINGS
@given(st.integers(2, 6).flatmap(lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=3)))
def test_chain_order_equals_enumeration(gens):
    n = len(gens[0])
    G = PermGroup([Permutation(g) for g in gens], degree=n)
    elems = oracles.elements(gens, n)
    assert G.order() == len(elems)
    for e in list(elems)[:10]:
        assert G.contains(Permutation(e))


@SETTINGS
@given(st.integers(3, 5).flatmap(lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=2)))
def test_chief_factor_product_and_supersolvability(gens):
    n = len(gens[0])
    G = PermGroup([Permutation(g) for g in gens], degree=n)
    prod = 1
    for f in chief_series(G).factors:
        prod *= f.order
    assert prod == G.order()
    if G.order() <= 48:  # the brute-force subgroup lattice is slow beyond this
        assert is_supersolvable(G) == oracles.is_supersolvable(oracles.elements(gens, n), n)


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 5).flatmap(lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=2)))
def test_maximal_reports_are_maximal_with_consistent_index(gens):
    n = len(gens[0])
    G = PermGroup([Permutation(g) for g in gens], degree=n)
    if G.order() == 1:
        return
    for r in maximal_subgroups(G):
        assert r.index * r.order == G.order()
        assert r.index_class == index_class(r.index)
        assert is_maximal(G, r.subgroup.sub)
        assert r.violates == (not r.is_supersolvable and r.index_class == "other")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 5, 7, 8, 9, 11, 13, 16, 25, 27]), st.data())
def test_field_distributive(q, data):
    F = field_of_order(q)
    a, b, c = (F.element(data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if not a.is_zero():
        assert (a * b) / a == b


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_coset_action_is_a_homomorphism(seed):
    G = atlas.pgl2(7)
    H = PermGroup(G.generators[:2], degree=G.degree)
    act = coset_action(G, H)
    rng = np.random.default_rng(seed)
    a, b = G.random_element(rng), G.random_element(rng)
    assert act.act(a * b) == act.act(a) * act.act(b)
