"""Ideals, principal ideals, and the Green relations L, R, J, H."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .core import ElementSet, OrderedSemigroup, Verdict, downward_closure, set_product

SIDES = ("left", "right", "two_sided")
GREEN_KINDS = ("L", "R", "J", "H")

ORACLE_MAX_N = 8


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


@dataclass(frozen=True)
class EquivalenceRelation:
    """Partition of 0..n-1; ``class_id[i]`` is the least member of i's block."""

    n: int
    class_id: tuple[int, ...]

    @staticmethod
    def from_key(n: int, key: Sequence[Hashable]) -> "EquivalenceRelation":
        """Group elements by equal key; first occurrence becomes the block id."""
        reps: dict[Hashable, int] = {}
        cid = []
        for i, k in enumerate(key):
            reps.setdefault(k, i)
            cid.append(reps[k])
        return EquivalenceRelation(n, tuple(cid))

    @staticmethod
    def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> "EquivalenceRelation":
        cid = [-1] * n
        for block in blocks:
            members = sorted(block)
            if not members:
                raise ValueError("blocks must be nonempty")
            rep = members[0]
            for m in members:
                if cid[m] != -1:
                    raise ValueError(f"element {m} in two blocks")
                cid[m] = rep
        if -1 in cid:
            raise ValueError("blocks must cover the carrier")
        return EquivalenceRelation(n, tuple(cid))

    @staticmethod
    def identity(n: int) -> "EquivalenceRelation":
        return EquivalenceRelation(n, tuple(range(n)))

    @staticmethod
    def universal(n: int) -> "EquivalenceRelation":
        return EquivalenceRelation(n, (0,) * n)

    def related(self, a: int, b: int) -> bool:
        return self.class_id[a] == self.class_id[b]

    def block(self, a: int) -> ElementSet:
        rep = self.class_id[a]
        return frozenset(i for i in range(self.n) if self.class_id[i] == rep)

    def blocks(self) -> tuple[ElementSet, ...]:
        seen: dict[int, list[int]] = {}
        for i in range(self.n):
            seen.setdefault(self.class_id[i], []).append(i)
        return tuple(frozenset(seen[rep]) for rep in sorted(seen))

    def meet(self, other: "EquivalenceRelation") -> "EquivalenceRelation":
        if self.n != other.n:
            raise ValueError("relations live on different carriers")
        return EquivalenceRelation.from_key(
            self.n, list(zip(self.class_id, other.class_id))
        )

    def is_refinement_of(self, other: "EquivalenceRelation") -> bool:
        """True iff every block of self lies inside a block of other."""
        return all(other.related(i, self.class_id[i]) for i in range(self.n))


def is_ideal(S: OrderedSemigroup, I: ElementSet, side: str) -> Verdict:
    """Absorption on the given side plus downward closure; witness on failure."""
    _check_side(side)
    I = frozenset(I)
    if not I:
        raise ValueError("ideal test needs a nonempty subset")
    members = sorted(I)
    n = S.n
    if side in ("left", "two_sided"):
        for s in range(n):
            for i in members:
                if S.table[s][i] not in I:
                    return Verdict(False, (S.names[s], S.names[i]), "SI")
    if side in ("right", "two_sided"):
        for i in members:
            for s in range(n):
                if S.table[i][s] not in I:
                    return Verdict(False, (S.names[i], S.names[s]), "IS")
    for t in range(n):
        if t in I:
            continue
        for h in members:
            if S.leq[t][h]:
                return Verdict(False, (S.names[t], S.names[h]), "downward")
    return Verdict(True)


def principal_ideal(S: OrderedSemigroup, a: int, side: str) -> ElementSet:
    """Smallest side-ideal containing a, by the closed form ({a} ∪ Sa ...]."""
    _check_side(side)
    point = frozenset((a,))
    if side == "left":
        germ = point | set_product(S, S.carrier, point)
    elif side == "right":
        germ = point | set_product(S, point, S.carrier)
    else:
        sa = set_product(S, S.carrier, point)
        a_s = set_product(S, point, S.carrier)
        sas = set_product(S, sa, S.carrier)
        germ = point | sa | a_s | sas
    return downward_closure(S, germ)


def minimal_ideal_oracle(
    S: OrderedSemigroup, a: int, side: str, bound: int = ORACLE_MAX_N
) -> ElementSet:
    """Intersection of all side-ideals containing a, by scanning every subset.

    Exponential; exists to cross-check principal_ideal and refuses carriers
    above ``bound``.
    """
    _check_side(side)
    n = S.n
    if n > bound:
        raise ValueError(f"subset-scan oracle is limited to n <= {bound}")
    best: ElementSet | None = None
    for mask in range(1, 1 << n):
        if not mask & (1 << a):
            continue
        members = frozenset(i for i in range(n) if mask & (1 << i))
        if is_ideal(S, members, side).holds:
            best = members if best is None else best & members
    assert best is not None  # the whole carrier is always an ideal
    return best


_GREEN_SIDE = {"L": "left", "R": "right", "J": "two_sided"}


@lru_cache(maxsize=65536)
def green_relation(S: OrderedSemigroup, kind: str) -> EquivalenceRelation:
    """Relate elements whose principal ideals coincide; H is L meet R."""
    if kind == "H":
        return green_relation(S, "L").meet(green_relation(S, "R"))
    if kind not in _GREEN_SIDE:
        raise ValueError(f"kind must be one of {GREEN_KINDS}, got {kind!r}")
    side = _GREEN_SIDE[kind]
    key = [principal_ideal(S, a, side) for a in range(S.n)]
    return EquivalenceRelation.from_key(S.n, key)


def green_class(S: OrderedSemigroup, a: int, kind: str) -> ElementSet:
    return green_relation(S, kind).block(a)


def idempotent_pairs_related(
    S: OrderedSemigroup, idempotents: Iterable[int], kind: str
) -> Verdict:
    """All pairs of the given elements related under the Green relation."""
    rel = green_relation(S, kind)
    for e, f in combinations(sorted(idempotents), 2):
        if not rel.related(e, f):
            return Verdict(False, (S.names[e], S.names[f]), f"not_{kind}_related")
    return Verdict(True)
