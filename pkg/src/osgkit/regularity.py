"""Regularity variants, ordered idempotents, and ordered inverses."""

from __future__ import annotations

from functools import lru_cache

from .core import ElementSet, OrderedSemigroup, Verdict, downward_closure, set_product

REGULARITY_VARIANTS = ("regular", "completely_regular", "left_regular", "right_regular")

IDEMPOTENT_READINGS = ("leq", "eq")


def _membership_set(S: OrderedSemigroup, a: int, variant: str) -> ElementSet:
    point = frozenset((a,))
    square = frozenset((S.table[a][a],))
    carrier = S.carrier
    if variant == "regular":
        return set_product(S, set_product(S, point, carrier), point)
    if variant == "completely_regular":
        return set_product(S, set_product(S, square, carrier), square)
    if variant == "right_regular":
        return set_product(S, square, carrier)
    if variant == "left_regular":
        return set_product(S, carrier, square)
    raise ValueError(f"variant must be one of {REGULARITY_VARIANTS}, got {variant!r}")


@lru_cache(maxsize=65536)
def regularity_variant(S: OrderedSemigroup, variant: str) -> Verdict:
    """Every element inside the downward closure of its variant product set."""
    for a in range(S.n):
        if a not in downward_closure(S, _membership_set(S, a, variant)):
            return Verdict(False, (S.names[a],), variant)
    return Verdict(True)


def is_regular(S: OrderedSemigroup) -> Verdict:
    return regularity_variant(S, "regular")


@lru_cache(maxsize=65536)
def ordered_idempotents(S: OrderedSemigroup, eidem: str = "leq") -> ElementSet:
    """Elements with e ≤ e² ("leq" reading) or e = e² ("eq" reading)."""
    if eidem == "leq":
        return frozenset(e for e in range(S.n) if S.leq[e][S.table[e][e]])
    if eidem == "eq":
        return frozenset(e for e in range(S.n) if e == S.table[e][e])
    raise ValueError(f"eidem must be one of {IDEMPOTENT_READINGS}, got {eidem!r}")


def inverses(S: OrderedSemigroup, a: int) -> ElementSet:
    """All b with a ≤ aba and b ≤ bab."""
    out = []
    for b in range(S.n):
        ab = S.table[a][b]
        ba = S.table[b][a]
        if S.leq[a][S.table[ab][a]] and S.leq[b][S.table[ba][b]]:
            out.append(b)
    return frozenset(out)
