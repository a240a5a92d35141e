"""The numba kernels and their numpy fallbacks must agree bit for bit."""

import subprocess
import sys

import numpy as np
import pytest

from maxsub import _accel, atlas, kernels
from maxsub.group import coset_action
from maxsub.structure import maximal_subgroups, sylow_subgroup

pytestmark = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not importable")


@pytest.fixture
def both():
    def run(fn):
        outs = {}
        for be in ("numpy", "numba"):
            prev = _accel.set_backend(be)
            try:
                outs[be] = fn()
            finally:
                _accel.set_backend(prev)
        return outs["numpy"], outs["numba"]

    return run


@pytest.mark.parametrize("expr", ["psl2(11)", "m11", "wr(sym(3),cyclic(2))"])
def test_element_orders(both, expr):
    t = atlas.parse_group_expr(expr).table()
    a, b = both(lambda: kernels.element_orders(t.elems))
    assert np.array_equal(a, b)


@pytest.mark.parametrize("cap", [None, 50])
def test_closure(both, cap):
    G = atlas.psl3_3()
    t = G.table()
    gens = t.elems[[5, 77, 1234]].astype(np.int64)
    a, b = both(lambda: kernels.closure(t.elems, t.keys, t.base, t.weights, gens, [t.identity], cap))
    if cap is not None and a is None:
        assert b is None
    else:
        assert np.array_equal(a, b)


def test_minimal_block(both):
    W = atlas.wreath_product(atlas.sym(4), atlas.cyclic(3))
    gens = np.stack([g.array for g in W.generators]).astype(np.int64)
    for x in range(1, W.degree):
        a, b = both(lambda: kernels.minimal_block(gens, 0, x))
        assert np.array_equal(a, b)


def test_canonical_coset_reps(both):
    G = atlas.pgl2(11)
    H = sylow_subgroup(G, 2).sub
    act = coset_action(G, H)
    rng = np.random.default_rng(7)
    rows = np.stack([G.random_element(rng).array for _ in range(500)]).astype(np.int64)
    a, b = both(lambda: kernels.canonical_coset_reps(rows, *act._canon))
    assert np.array_equal(a, b)


def test_maximal_subgroups_agree(both):
    def run():
        return [(r.order, r.index, r.is_supersolvable) for r in maximal_subgroups(atlas.psl2(13), mode="two-generated")]

    a, b = both(run)
    assert a == b


def test_env_flag_selects_numpy():
    code = "from maxsub import _accel; print(_accel.backend())"
    out = subprocess.run([sys.executable, "-c", code], env={"MAXSUB_NUMBA": "0", "PATH": ""}, capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"
