import numpy as np
import pytest

from maxsub import atlas
from maxsub.errors import InputError, ResourceBoundError
from maxsub.group import (
    PermGroup,
    SubgroupRef,
    centralizer,
    coset_action,
    group_from_generators,
    intersection,
    is_maximal,
    is_member,
    is_normal,
    is_primitive,
    minimal_block_systems,
    normal_closure,
    normalizer,
    orbit,
    preimage,
    quotient_group,
    trivial_group,
)
from maxsub.perm import Permutation
from maxsub.structure import sylow_subgroup

import oracles

P = Permutation.from_cycles


def _oracle_order(G):
    return len(oracles.elements([g.images for g in G.generators], G.degree))


def test_sym5_from_two_generators():
    G = group_from_generators([P(5, [(0, 1)]), P(5, [(0, 1, 2, 3, 4)])])
    assert G.order() == 120


def test_trivial_group():
    assert trivial_group(3).order() == 1
    assert PermGroup((), degree=3).order() == 1


@pytest.mark.parametrize(
    "make,order",
    [(lambda: atlas.psl2(8), 504), (lambda: atlas.pgammal2(8), 1512), (lambda: atlas.alt(5), 60), (lambda: atlas.pgl2(7), 336)],
)
def test_chain_order_matches_enumeration(make, order):
    G = make()
    assert G.order() == order == _oracle_order(G)


def test_membership():
    A5 = atlas.alt(5)
    assert not is_member(A5, P(5, [(0, 1)]))
    assert is_member(A5, P(5, [(0, 1, 2)]))
    assert A5.is_subgroup_of(atlas.sym(5))


def test_orbits_and_transitivity():
    assert sorted(orbit(atlas.psl2(11), 0)) == list(range(12))
    assert sorted(orbit(trivial_group(4), 2)) == [2]
    assert not atlas.direct_product(atlas.sym(3), atlas.sym(3)).is_transitive()


def test_element_table_agrees_with_oracle():
    G = atlas.pgl2(5)
    rows = {tuple(int(x) for x in r) for r in G.table().elems}
    assert rows == oracles.elements([g.images for g in G.generators], G.degree)
    t = G.table()
    a, b = 17, 33
    prod = tuple(int(x) for x in t.row(t.mul(a, b)))
    assert prod == oracles.mul(tuple(t.row(a)), tuple(t.row(b)))


def test_sym4_is_primitive():
    assert is_primitive(atlas.sym(4))


def test_c6_block_systems():
    systems = minimal_block_systems(atlas.cyclic(6))
    assert sorted(s.block_size for s in systems if not s.is_trivial()) == [2, 3]


def test_imprimitive_wreath_blocks():
    W = atlas.wreath_product(atlas.sym(5), atlas.cyclic(2))
    systems = [s for s in minimal_block_systems(W) if not s.is_trivial()]
    assert any(s.block_count == 2 and s.block_size == 5 for s in systems)
    assert not is_primitive(W)


def test_coset_actions():
    A5 = atlas.alt(5)
    A4 = PermGroup([P(5, [(0, 1, 2)]), P(5, [(0, 1), (2, 3)])], degree=5)
    act = coset_action(A5, A4)
    assert act.action_degree == 5
    assert act.image.order() == 60
    G = atlas.psl2(8)
    B = PermGroup(G.generators[:2], degree=9)  # translations and scalings fix infinity
    assert B.order() == 56
    assert coset_action(G, B).action_degree == 9


def test_coset_action_degree_100():
    X = atlas.sym(5)
    H = PermGroup([P(5, [(0, 1)]), P(5, [(0, 1, 2)]), P(5, [(3, 4)])], degree=5)
    G = atlas.wreath_product(X, atlas.cyclic(2))
    copy0 = [Permutation(np.concatenate([h.array, np.arange(5, 10)])) for h in H.generators]
    W = PermGroup(copy0 + [atlas.swap_copies(5)], degree=10)
    act = coset_action(G, W)
    assert act.action_degree == 100
    assert act.image.is_transitive()


def test_coset_action_respects_products():
    G = atlas.pgl2(7)
    H = sylow_subgroup(G, 7).sub
    act = coset_action(G, H)
    rng = np.random.default_rng(1)
    for _ in range(10):
        a, b = G.random_element(rng), G.random_element(rng)
        assert act.act(a * b) == act.act(a) * act.act(b)


def test_normal_closure_of_three_cycle():
    N = normal_closure(atlas.sym(5), [P(5, [(0, 1, 2)])])
    assert N.order() == 60
    assert N.sub.same_as(atlas.alt(5))


def test_normalizer_of_sylow_11():
    G = atlas.psl2(11)
    assert normalizer(G, sylow_subgroup(G, 11)).order() == 55


def test_diagonal_meets_factor_trivially():
    D = atlas.diagonal_subgroup(atlas.alt(5))
    left = PermGroup([Permutation(np.concatenate([g.array, np.arange(5, 10)])) for g in atlas.alt(5).generators], degree=10)
    assert intersection(D.sub, left).order() == 1


def test_centralizer_of_sym3_in_product():
    G = atlas.direct_product(atlas.sym(3), atlas.sym(3))
    left = PermGroup(G.generators[:2], degree=6)
    assert centralizer(G, left).order() == 6


def test_quotients_and_preimages():
    Q, act = quotient_group(atlas.sym(5), atlas.alt(5))
    assert Q.order() == 2
    assert preimage(act, trivial_group(Q.degree)).order() == 60
    G = atlas.nla_group()
    A5sq = atlas.direct_product(atlas.alt(5), atlas.alt(5))
    assert is_normal(G, A5sq)
    assert quotient_group(G, A5sq)[0].order() == 4
    with pytest.raises(InputError):
        quotient_group(atlas.sym(4), sylow_subgroup(atlas.sym(4), 3))


def test_is_maximal_examples():
    A5 = atlas.alt(5)
    A4 = PermGroup([P(5, [(0, 1, 2)]), P(5, [(0, 1), (2, 3)])], degree=5)
    C5 = PermGroup([P(5, [(0, 1, 2, 3, 4)])], degree=5)
    assert is_maximal(A5, A4)
    assert not is_maximal(A5, C5)
    D = atlas.diagonal_subgroup(atlas.alt(5))
    assert is_maximal(D.ambient, D.sub)
    with pytest.raises(InputError):
        is_maximal(A5, A5)


def test_is_maximal_matches_oracle_on_sym4():
    G = atlas.sym(4)
    Gset = oracles.elements([g.images for g in G.generators], 4)
    maxes = oracles.maximal_subgroups(Gset, 4)
    for H in oracles.all_subgroups(Gset, 4):
        if len(H) in (1, 24):
            continue
        sub = PermGroup(list(H), degree=4)
        assert is_maximal(G, sub) == (H in maxes)


def test_coset_degree_bound():
    G = atlas.sym(9)
    with pytest.raises(ResourceBoundError):
        coset_action(G, trivial_group(9), bound=1000)


def test_subgroup_ref_checks():
    with pytest.raises(InputError):
        SubgroupRef(atlas.sym(4), atlas.sym(5))
    ref = SubgroupRef(atlas.sym(5), atlas.alt(5))
    assert ref.index == 2
