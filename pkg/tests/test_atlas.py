import pytest

from maxsub import atlas
from maxsub.atlas import GroupExprError, parse_group_expr
from maxsub.errors import InputError, ResourceBoundError
from maxsub.group import is_normal, normal_closure
from maxsub.perm import write_generators
from maxsub.structure import is_perfect

import oracles


@pytest.mark.parametrize(
    "expr,order",
    [
        ("sym(5)", 120),
        ("alt(7)", 2520),
        ("cyclic(2)", 2),
        ("psl2(11)", 660),
        ("pgl2(7)", 336),
        ("pgammal2(8)", 1512),
        ("pgl2(9)", 720),
        ("psl3_3", 5616),
        ("aut_psl3_3", 11232),
        ("m11", 7920),
        ("psu3_3", 6048),
        ("wr(alt(5),cyclic(2))", 7200),
        ("wr(sym(5),cyclic(2))", 28800),
        ("dp(sym(3),sym(3))", 36),
        ("diag(alt(5))", 60),
        ("nla(alt(5),sym(5))", 14400),
        ("nla(psl2(7),pgl2(7))", 4 * 168**2),
    ],
)
def test_orders(expr, order):
    assert parse_group_expr(expr).order() == order


@pytest.mark.parametrize("expr", ["psl2(7)", "pgl2(5)", "m11", "psl3_3"])
def test_small_orders_match_enumeration(expr):
    G = parse_group_expr(expr)
    if G.order() > 8000:
        pytest.skip("enumeration oracle limited to 8000 elements")
    assert len(oracles.elements([g.images for g in G.generators], G.degree)) == G.order()


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 32])
def test_psl2_order_formula(q):
    G = atlas.psl2(q)
    assert G.degree == q + 1
    assert G.order() == atlas.order_formula_psl2(q)
    assert atlas.pgl2(q).order() == q * (q * q - 1)


def test_psl2_is_perfect_and_index_in_pgl2():
    for q in (7, 9, 11):
        S, G = atlas.psl2(q), atlas.pgl2(q)
        assert is_perfect(S)
        assert S.is_subgroup_of(G) and is_normal(G, S)


def test_pgammal2_8_contains_psl2_8_with_index_3():
    G, S = atlas.pgammal2(8), atlas.psl2(8)
    assert S.is_subgroup_of(G)
    assert G.order() // S.order() == 3


def test_aut_psl3_3_socle_has_index_2():
    A = atlas.aut_psl3_3()
    S = atlas.psl3_3_on_26()
    assert S.order() == 5616 and is_normal(A, S)
    assert A.order() // S.order() == 2
    # the duality is outside the socle
    assert not S.contains(atlas.duality_26())


def test_embedded_generators_self_check():
    M = atlas.m11()
    assert M.order() == 7920
    assert normal_closure(M, [M.generators[0]]).order() == 7920


def test_direct_and_wreath_products():
    W = atlas.wreath_product(atlas.cyclic(2), atlas.cyclic(2))
    assert W.order() == 8
    assert atlas.wreath_product(atlas.cyclic(3), atlas.cyclic(4)).order() == 3**4 * 4
    with pytest.raises(ResourceBoundError):
        atlas.wreath_product(atlas.sym(9), atlas.sym(8))


def test_nla_contains_normal_square():
    G = atlas.nla_group()
    N = atlas.direct_product(atlas.alt(5), atlas.alt(5))
    assert is_normal(G, N)


def test_nla_requires_index_two():
    with pytest.raises(InputError):
        atlas.nla_like(atlas.alt(5), atlas.alt(5))


def test_constructor_bounds():
    with pytest.raises(InputError):
        atlas.sym(40)
    with pytest.raises(InputError):
        atlas.psl2(6)
    with pytest.raises(InputError):
        atlas.alt(2)


@pytest.mark.parametrize(
    "text,pos",
    [("wr(sym(5),", 10), ("foo(3)", 0), ("dp(sym(3))", 9), ("sym(3) x", 7), ("sym(", 4)],
)
def test_parser_errors_report_position(text, pos):
    with pytest.raises(GroupExprError) as info:
        parse_group_expr(text)
    assert info.value.pos == pos
    assert isinstance(info.value, InputError)


def test_parser_round_trip_and_names():
    assert str(atlas.parse_expr(" wr( sym(5) , cyclic(2) ) ")) == "wr(sym(5),cyclic(2))"
    assert parse_group_expr("dp(sym(3),sym(3))").name == "Sym(3)xSym(3)"
    assert str(atlas.parse_expr("dp(sym(3),alt(4))")) == "dp(sym(3),alt(4))"


def test_file_groups(tmp_path):
    path = tmp_path / "a5.gens"
    path.write_text(write_generators(5, list(atlas.alt(5).generators)))
    G = parse_group_expr(f"file:{path}")
    assert G.order() == 60
    assert parse_group_expr(f"dp(file:{path},cyclic(2))").order() == 120


def test_simple_catalog():
    cat = atlas.simple_catalog()
    assert len(cat) == 16
    assert [e.order for e in cat] == sorted(e.order for e in cat)
    assert sum(e.expected_satisfied for e in cat) == 4
    for e in cat:
        assert e.construct().order() == e.order
    assert [e.name for e in atlas.simple_catalog(100)] == ["Alt(5)"]
