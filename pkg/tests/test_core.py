from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from osgkit.core import (
    StructureError,
    diagnose,
    downward_closure,
    dual,
    from_order_pairs,
    parse,
    set_product,
    to_osg,
    validate,
)
from conftest import mk


def idx(S, *names):
    return frozenset(S.index(name) for name in names)


def test_parse_worked_example(worked_example):
    S = worked_example
    assert S.n == 3
    assert S.names == ("a", "e", "f")
    # right-zero: every row is (a, e, f)
    assert S.table == ((0, 1, 2),) * 3
    expected = {(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)}
    actual = {(i, j) for i in range(3) for j in range(3) if S.leq[i][j]}
    assert actual == expected


def test_parse_trivial_without_order_section():
    S = parse("osg v1\nelements: x\ntable:\nx\n")
    assert S.n == 1
    assert S.leq == ((True,),)


def test_parse_cyclic_order_reports_antisymmetry():
    text = "osg v1\nelements: e f\ntable:\ne f\ne f\norder:\ne <= f\nf <= e\n"
    with pytest.raises(StructureError) as err:
        parse(text)
    kinds = {d.kind: d for d in err.value.diagnostics}
    assert kinds["antisymmetry"].witness == ("e", "f")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("elements: x\ntable:\nx\n", "osg v1"),
        ("osg v1\nelements: x x\ntable:\nx\n", "distinct"),
        ("osg v1\nelements: x y\ntable:\nx y\nx\n", "expected 2"),
        ("osg v1\nelements: x y\ntable:\nx y\nx z\n", "unknown element"),
        ("osg v1\nelements: x\ntable:\nx\nextras:\n", "unknown section"),
        ("osg v1\nelements: x\ntable:\nx\norder:\nx < x\n", "<name> <= <name>"),
        ("osg v1\nelements: x\ntable:\nx\norder:\nx <= y\n", "unknown element"),
    ],
)
def test_parse_diagnostics(text, fragment):
    with pytest.raises(StructureError) as err:
        parse(text)
    assert any(fragment in d.message for d in err.value.diagnostics)


def test_parse_round_trip(worked_example):
    assert parse(to_osg(worked_example)) == worked_example


def test_validate_accepts_left_zero_with_chain():
    S = mk(("e", "f"), [[0, 0], [1, 1]], [(0, 1)])
    assert S.leq[0][1] and not S.leq[1][0]


def test_validate_rejects_nonassociative_with_rechecking_witness():
    # found by scan: row-0 = identity-ish, row-1 constant a
    table = [[0, 1], [0, 0]]
    # oracle: first failing triple in lexicographic order
    first = next(
        (a, b, c)
        for a in range(2)
        for b in range(2)
        for c in range(2)
        if table[table[a][b]][c] != table[a][table[b][c]]
    )
    leq = [[True, False], [False, True]]
    with pytest.raises(StructureError) as err:
        validate(table, leq, names=("a", "b"))
    diag = next(d for d in err.value.diagnostics if d.kind == "associativity")
    assert diag.witness == tuple("ab"[i] for i in first)
    a, b, c = first
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_validate_compatibility_diagnostic():
    # right-zero with only e <= f fails nothing; force a failure with an
    # incompatible order on the two-point meet semilattice flipped table
    table = [[0, 1], [1, 0]]  # xor group
    leq = [[True, True], [False, True]]
    with pytest.raises(StructureError) as err:
        validate(table, leq, names=("0", "1"))
    assert any(d.kind == "compatibility" for d in err.value.diagnostics)


def test_validate_matches_bruteforce_scan(corpus2):
    # every emitted structure passes; mangled tables fail exactly when the
    # n³ scans say so
    for S in corpus2:
        assert diagnose(S.table, S.leq) == []


def test_downward_closure_worked_example(worked_example):
    S = worked_example
    assert downward_closure(S, idx(S, "e")) == idx(S, "a", "e")
    assert downward_closure(S, frozenset()) == frozenset()
    assert downward_closure(S, idx(S, "e", "f")) == idx(S, "a", "e", "f")


def test_set_product_worked_example(worked_example):
    S = worked_example
    assert set_product(S, idx(S, "a"), idx(S, "e", "f")) == idx(S, "e", "f")
    assert set_product(S, frozenset(), idx(S, "e")) == frozenset()
    assert set_product(S, idx(S, "e"), idx(S, "a")) == idx(S, "a")


def test_dual_of_right_zero_is_left_zero(worked_example):
    D = dual(worked_example)
    assert D.table == ((0, 0, 0), (1, 1, 1), (2, 2, 2))
    assert D.leq == worked_example.leq
    assert diagnose(D.table, D.leq) == []


def test_dual_is_involution(corpus2):
    for S in corpus2:
        assert dual(dual(S)) == S


def test_dual_fixes_commutative(meet2):
    assert dual(meet2) == meet2


@st.composite
def structure_and_subsets(draw, corpus):
    S = draw(st.sampled_from(corpus))
    mask_a = draw(st.integers(min_value=0, max_value=(1 << S.n) - 1))
    mask_b = draw(st.integers(min_value=0, max_value=(1 << S.n) - 1))
    to_set = lambda m: frozenset(i for i in range(S.n) if m >> i & 1)
    return S, to_set(mask_a), to_set(mask_b)


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_downward_closure_laws(data, corpus3):
    S, H, K = data.draw(structure_and_subsets(corpus3))
    closed = downward_closure(S, H)
    assert H <= closed
    assert downward_closure(S, closed) == closed
    assert downward_closure(S, H) <= downward_closure(S, H | K)


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_set_product_is_associative(data, corpus3):
    S, A, B = data.draw(structure_and_subsets(corpus3))
    mask_c = data.draw(st.integers(min_value=0, max_value=(1 << S.n) - 1))
    C = frozenset(i for i in range(S.n) if mask_c >> i & 1)
    assert set_product(S, set_product(S, A, B), C) == set_product(S, A, set_product(S, B, C))


def test_order_closure_is_automatic():
    # generating pairs only; reflexive and transitive pairs are inferred
    S = from_order_pairs(("a", "b", "c"), [[0, 0, 0], [0, 1, 1], [0, 1, 2]], [(0, 1), (1, 2)])
    assert S.leq[0][2]
    assert all(S.leq[i][i] for i in range(3))


def test_size_cap_applies(monkeypatch):
    monkeypatch.setenv("OSG_MAX_N", "2")
    with pytest.raises(StructureError):
        parse("osg v1\nelements: a e f\ntable:\na e f\na e f\na e f\n")
    monkeypatch.setenv("OSG_MAX_N", "3")
    assert parse("osg v1\nelements: a e f\ntable:\na e f\na e f\na e f\n").n == 3
