import pytest

from osgkit.core import dual
from osgkit.green import (
    EquivalenceRelation,
    green_class,
    green_relation,
    is_ideal,
    minimal_ideal_oracle,
    principal_ideal,
)


def idx(S, *names):
    return frozenset(S.index(name) for name in names)


def blocks_by_name(S, kind):
    return [tuple(S.set_names(b)) for b in green_relation(S, kind).blocks()]


def test_is_ideal_worked_example(worked_example):
    S = worked_example
    assert is_ideal(S, idx(S, "a"), "left").holds
    bad = is_ideal(S, idx(S, "a"), "right")
    assert bad.holds is False
    assert bad.witness == ("a", "e")
    assert is_ideal(S, S.carrier, "two_sided").holds


def test_is_ideal_failure_tags(worked_example, left_zero2):
    S = worked_example
    # {e,f} is left-absorbing in a right-zero table but not downward closed
    bad = is_ideal(S, idx(S, "e", "f"), "left")
    assert bad.holds is False and bad.tag == "downward" and bad.witness == ("a", "e")
    # left-zero: S·{e} = {e,f} escapes the subset
    bad = is_ideal(left_zero2, frozenset({0}), "left")
    assert bad.holds is False and bad.tag == "SI" and bad.witness == ("f", "e")


def test_is_ideal_rejects_empty(worked_example):
    with pytest.raises(ValueError):
        is_ideal(worked_example, frozenset(), "left")


def test_principal_ideals_worked_example(worked_example):
    S = worked_example
    assert principal_ideal(S, S.index("a"), "left") == idx(S, "a")
    assert principal_ideal(S, S.index("e"), "left") == idx(S, "a", "e")
    assert principal_ideal(S, S.index("a"), "right") == idx(S, "a", "e", "f")


def test_minimal_ideal_oracle_examples(worked_example, trivial, left_zero2):
    S = worked_example
    assert minimal_ideal_oracle(S, S.index("e"), "left") == idx(S, "a", "e")
    assert minimal_ideal_oracle(trivial, 0, "two_sided") == trivial.carrier
    assert minimal_ideal_oracle(left_zero2, 0, "left") == left_zero2.carrier


def test_minimal_ideal_oracle_bound(worked_example):
    with pytest.raises(ValueError):
        minimal_ideal_oracle(worked_example, 0, "left", bound=2)


def test_principal_equals_oracle_everywhere(corpus3):
    for S in corpus3:
        for a in range(S.n):
            for side in ("left", "right", "two_sided"):
                assert principal_ideal(S, a, side) == minimal_ideal_oracle(S, a, side)


def test_principal_ideal_is_an_ideal_containing_a(corpus3):
    for S in corpus3:
        for a in range(S.n):
            for side in ("left", "right", "two_sided"):
                ideal = principal_ideal(S, a, side)
                assert a in ideal
                assert is_ideal(S, ideal, side).holds


def test_green_relations_worked_example(worked_example):
    S = worked_example
    assert blocks_by_name(S, "R") == [("a", "e", "f")]
    assert blocks_by_name(S, "L") == [("a",), ("e",), ("f",)]
    assert blocks_by_name(S, "H") == [("a",), ("e",), ("f",)]
    assert blocks_by_name(S, "J") == [("a", "e", "f")]


def test_green_class_worked_example(worked_example):
    S = worked_example
    e = S.index("e")
    assert green_class(S, e, "R") == idx(S, "a", "e", "f")
    assert green_class(S, e, "L") == idx(S, "e")


def test_green_refinements(corpus3):
    for S in corpus3:
        L = green_relation(S, "L")
        R = green_relation(S, "R")
        J = green_relation(S, "J")
        H = green_relation(S, "H")
        assert H == L.meet(R)
        assert L.is_refinement_of(J)
        assert R.is_refinement_of(J)
        assert H.is_refinement_of(L) and H.is_refinement_of(R)


def test_duality_swaps_left_and_right(corpus3):
    for S in corpus3:
        D = dual(S)
        for a in range(S.n):
            assert principal_ideal(S, a, "left") == principal_ideal(D, a, "right")
            assert principal_ideal(S, a, "two_sided") == principal_ideal(D, a, "two_sided")
        assert green_relation(S, "L") == green_relation(D, "R")
        assert green_relation(S, "R") == green_relation(D, "L")
        assert green_relation(S, "J") == green_relation(D, "J")


def test_equivalence_relation_canonical_ids():
    rel = EquivalenceRelation.from_blocks(4, [[2, 0], [1, 3]])
    assert rel.class_id == (0, 1, 0, 1)
    assert rel.block(3) == frozenset({1, 3})
    assert rel.blocks() == (frozenset({0, 2}), frozenset({1, 3}))
    assert rel.meet(EquivalenceRelation.identity(4)) == EquivalenceRelation.identity(4)
    assert rel.is_refinement_of(EquivalenceRelation.universal(4))
    with pytest.raises(ValueError):
        EquivalenceRelation.from_blocks(3, [[0, 1]])
