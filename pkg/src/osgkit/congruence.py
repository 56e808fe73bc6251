"""Congruences, semilattice congruences, and complete-semilattice decompositions."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator

from .core import OrderedSemigroup, Verdict, induced
from .classify import is_group_like
from .green import EquivalenceRelation

CLASS_PRED_MODES = {
    "right_group_like": "right",
    "left_group_like": "left",
    "group_like": "both",
}

CSC_ORACLE_MAX_N = 6


def is_congruence(S: OrderedSemigroup, rel: EquivalenceRelation, side: str = "two_sided") -> Verdict:
    """Stability of the equivalence under translation on the given side(s)."""
    if side not in ("left", "right", "two_sided"):
        raise ValueError(f"side must be left/right/two_sided, got {side!r}")
    if rel.n != S.n:
        raise ValueError("relation and structure sizes differ")
    n = S.n
    for a in range(n):
        for b in range(n):
            if a == b or not rel.related(a, b):
                continue
            for c in range(n):
                if side in ("left", "two_sided"):
                    if not rel.related(S.table[c][a], S.table[c][b]):
                        return Verdict(False, (S.names[a], S.names[b], S.names[c]), "left")
                if side in ("right", "two_sided"):
                    if not rel.related(S.table[a][c], S.table[b][c]):
                        return Verdict(False, (S.names[a], S.names[b], S.names[c]), "right")
    return Verdict(True)


def is_semilattice_congruence(S: OrderedSemigroup, rel: EquivalenceRelation) -> Verdict:
    """A two-sided congruence relating a with a² and ab with ba."""
    cong = is_congruence(S, rel, "two_sided")
    if not cong.holds:
        return cong
    n = S.n
    for a in range(n):
        if not rel.related(a, S.table[a][a]):
            return Verdict(False, (S.names[a],), "a~a2")
    for a in range(n):
        for b in range(n):
            if not rel.related(S.table[a][b], S.table[b][a]):
                return Verdict(False, (S.names[a], S.names[b]), "ab~ba")
    return Verdict(True)


def is_complete_semilattice_congruence(S: OrderedSemigroup, rel: EquivalenceRelation) -> Verdict:
    """Semilattice congruence additionally relating a with ab whenever a ≤ b."""
    semi = is_semilattice_congruence(S, rel)
    if not semi.holds:
        return semi
    n = S.n
    for a in range(n):
        for b in range(n):
            if a != b and S.leq[a][b] and not rel.related(a, S.table[a][b]):
                return Verdict(False, (S.names[a], S.names[b]), "a~ab")
    return Verdict(True)


def congruence_closure(
    S: OrderedSemigroup, pairs: Iterable[tuple[int, int]]
) -> EquivalenceRelation:
    """Least equivalence containing the pairs and stable under both
    translations. Every union of two classes enqueues the merged pair; its
    left and right translates are then merged in turn until the fixpoint."""
    n = S.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending: deque[tuple[int, int]] = deque()

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx == ry:
            return
        if ry < rx:
            rx, ry = ry, rx
        parent[ry] = rx
        pending.append((x, y))

    for a, b in pairs:
        union(a, b)
    while pending:
        x, y = pending.popleft()
        for c in range(n):
            union(S.table[c][x], S.table[c][y])
            union(S.table[x][c], S.table[y][c])
    return EquivalenceRelation.from_key(n, [find(i) for i in range(n)])


def _csc_generators(S: OrderedSemigroup) -> list[tuple[int, int]]:
    n = S.n
    gens = [(a, S.table[a][a]) for a in range(n)]
    gens += [(S.table[a][b], S.table[b][a]) for a in range(n) for b in range(n)]
    gens += [(a, S.table[a][b]) for a in range(n) for b in range(n) if a != b and S.leq[a][b]]
    return gens


@lru_cache(maxsize=65536)
def least_complete_semilattice_congruence(S: OrderedSemigroup) -> EquivalenceRelation:
    """Fixpoint of the congruence closure seeded with (a,a²), (ab,ba), and
    (a,ab) for a ≤ b. The seed conditions do not depend on the relation, so
    one closure pass reaches the least solution; the re-seed loop is a guard."""
    gens = _csc_generators(S)
    rel = congruence_closure(S, gens)
    for _ in range(S.n * S.n):
        verdict = is_complete_semilattice_congruence(S, rel)
        if verdict.holds:
            return rel
        a = S.index(verdict.witness[0])  # pragma: no cover - closure already settles it
        if verdict.tag == "a~a2":  # pragma: no cover
            extra = (a, S.table[a][a])
        else:  # pragma: no cover
            b = S.index(verdict.witness[1])
            extra = (a, S.table[a][b]) if verdict.tag == "a~ab" else (S.table[a][b], S.table[b][a])
        gens.append(extra)  # pragma: no cover
        rel = congruence_closure(S, gens)  # pragma: no cover
    raise AssertionError("complete semilattice congruence fixpoint did not settle")


def all_equivalences(n: int) -> Iterator[EquivalenceRelation]:
    """Every partition of 0..n-1 (Bell(n) of them), deterministically ordered."""

    def place(i: int, blocks: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from place(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from place(i + 1, blocks)
        blocks.pop()

    for shape in place(0, []):
        yield EquivalenceRelation.from_blocks(n, shape)


def least_csc_oracle(S: OrderedSemigroup, bound: int = CSC_ORACLE_MAX_N) -> EquivalenceRelation:
    """Intersection of all complete semilattice congruences, found by a
    Bell-number scan of every partition; exists to cross-check the fixpoint."""
    if S.n > bound:
        raise ValueError(f"partition-scan oracle is limited to n <= {bound}")
    passing = [
        rel for rel in all_equivalences(S.n) if is_complete_semilattice_congruence(S, rel).holds
    ]
    # the universal relation always qualifies, so the meet is over a nonempty set
    key = [tuple(rel.class_id[i] for rel in passing) for i in range(S.n)]
    return EquivalenceRelation.from_key(S.n, key)


def is_complete_semilattice_of(S: OrderedSemigroup, class_pred: str) -> Verdict:
    """Every class of the least complete semilattice congruence is a
    product-closed subsemigroup satisfying the named group-like predicate
    as an induced ordered substructure."""
    if class_pred not in CLASS_PRED_MODES:
        raise ValueError(f"class_pred must be one of {sorted(CLASS_PRED_MODES)}")
    mode = CLASS_PRED_MODES[class_pred]
    rho = least_complete_semilattice_congruence(S)
    for block in rho.blocks():
        for a in sorted(block):
            for b in sorted(block):
                if S.table[a][b] not in block:
                    return Verdict(
                        False, (S.names[a], S.names[b]), "class_not_closed"
                    )
    for block in rho.blocks():
        sub = induced(S, block)
        inner = is_group_like(sub, mode)
        if inner.holds is None:
            return Verdict(False, inner.witness, "class_" + inner.tag)
        if not inner.holds:
            return Verdict(False, inner.witness, "class_not_" + class_pred)
    return Verdict(True)
