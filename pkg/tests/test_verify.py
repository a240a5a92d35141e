import pytest

from maxsub import atlas, verify
from maxsub.errors import InputError
from maxsub.group import PermGroup
from maxsub.perm import Permutation
from maxsub.structure import _is_supersolvable_chief
from maxsub.verify import CheckResult, Witness, durbin_criterion, hypothesis_check, theorem_a_branch


def test_check_result_contract():
    with pytest.raises(ValueError):
        CheckResult("x", "fail")
    with pytest.raises(ValueError):
        CheckResult("x", "skipped")
    r = CheckResult("x", "fail", [Witness("w", 24, 55, "other", False, [[1, 0]])])
    d = r.as_dict()
    assert list(d) == ["id", "status", "elapsed_ms", "notes", "witnesses"]
    assert list(d["witnesses"][0]) == ["description", "order", "index", "index_class", "supersolvable", "generators"]


def test_hypothesis_verdicts():
    assert hypothesis_check(atlas.psl2(11)).satisfied
    v = hypothesis_check(atlas.pgl2(11))
    assert not v.satisfied
    assert (24, 55) in {(r.order, r.index) for r in v.violating}
    v = hypothesis_check(atlas.alt(6))
    assert (60, 6) in {(r.order, r.index) for r in v.violating}
    a11 = [r for r in hypothesis_check(atlas.psl2(11)).reports if r.index == 11]
    assert a11 and a11[0].order == 60


def test_verdict_consistent_with_reports():
    for G in (atlas.sym(5), atlas.pgl2(9), atlas.psl2(13)):
        v = hypothesis_check(G)
        assert v.satisfied == (not any(not r.is_supersolvable and r.index_class == "other" for r in v.reports))


def test_witness_mode_requires_maximal_candidates():
    A5 = atlas.alt(5)
    C5 = PermGroup([Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])], degree=5)
    with pytest.raises(InputError):
        hypothesis_check(A5, candidates=[C5])
    D10 = PermGroup([Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]), Permutation.from_cycles(5, [(1, 4), (2, 3)])], degree=5)
    v = hypothesis_check(A5, candidates=[D10])
    assert v.satisfied and v.reports[0].index == 6


def test_simple_scan_small_bound():
    r = verify.theorem_b_scan(max_order=100)
    assert r.passed and r.data["satisfied"] == ["Alt(5)"]
    r = verify.theorem_b_scan(max_order=20_000)
    assert r.status == "skipped" and "10000" in r.notes[-1]


@pytest.mark.parametrize(
    "expr,branch",
    [("sym(5)", "ii"), ("psl2(8)", "i"), ("pgl2(9)", "not-applicable"), ("sym(4)", "not-applicable"), ("dp(cyclic(2),sym(5))", "ii")],
)
def test_branch_identification(expr, branch):
    got, v, detail = theorem_a_branch(atlas.parse_group_expr(expr))
    assert got == branch, detail
    if expr == "pgl2(9)":
        assert (72, 10) in {(r.order, r.index) for r in v.violating}


def test_branch_iii_table():
    table = verify._branch_iii_orders()
    assert table[atlas.order_formula_psl2(17)] == (17, 0)
    assert table[atlas.order_formula_psl2(9)] == (3, 1)
    assert atlas.order_formula_psl2(11) not in table  # 11 = 3 mod 8


def test_sylow_cases():
    assert verify.sylow_normalizer_case(11, 11) == "1"
    assert verify.sylow_normalizer_case(11, 2) == "4.2"
    assert verify.sylow_normalizer_case(9, 2) == "4.1"
    assert verify.sylow_normalizer_case(17, 2) == "4.1"
    r = verify.sylow_normalizer_profile((9, 11, 17))
    assert r.passed
    assert r.data[(11, 11)] == ("1", 55)
    assert r.data[(9, 2)] == ("4.1", 8)


def test_case22_facts():
    assert verify.case22_sylow_facts().passed


@pytest.mark.parametrize(
    "A,B,expected",
    [(2, 2, True), (3, 2, True), (3, 4, False), (5, 4, True), (2, 3, False)],
)
def test_wreath_criterion_examples(A, B, expected):
    a, b = atlas.cyclic(A), atlas.cyclic(B)
    assert durbin_criterion(a, b, +1) == expected
    assert _is_supersolvable_chief(atlas.wreath_product(a, b)) == expected


def test_minus_one_reading_fails_on_c3_wr_c4():
    assert durbin_criterion(atlas.cyclic(3), atlas.cyclic(4), -1) is True
    assert not _is_supersolvable_chief(atlas.wreath_product(atlas.cyclic(3), atlas.cyclic(4)))
    with pytest.raises(InputError):
        durbin_criterion(atlas.cyclic(3), atlas.cyclic(4), 0)


def test_wreath_criterion_small_corpus():
    r = verify.durbin_crosscheck(max_order=500)
    assert r.passed and r.data["sign"] == 1
    assert "C3 wr C4" in r.data["disagreements"][-1]


def test_diagonal_check():
    r = verify.diagonal_correspondence_check()
    assert r.passed
    assert r.data["Sym(3)"] == (3, 3)
    assert r.data["Alt(5)-maximal"] and not r.data["Sym(4)-maximal"]


def test_small_wreath_witnesses():
    labels = {c[0]: c for c in verify.wreath_constructions()[:3]}
    assert len(labels) == 3
    _, G, W, want = verify.wreath_constructions()[1]
    assert G.order() // W.order() == want == 100


def test_run_check_unknown_name():
    with pytest.raises(KeyError):
        verify.run_check("nope")
