"""Exhaustive generation of small ordered semigroups and predicate search.

Labeled enumeration is the ground truth: every associative table appears
exactly once, in lexicographic order, and isomorphism reduction is a
post-pass over canonical forms. Anti-isomorphic structures are kept apart
on purpose; collapsing duals would erase the left/right distinctions this
toolkit studies.
"""

from __future__ import annotations

import ast
import hashlib
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Iterator, Sequence

from .core import OrderedSemigroup, default_names
from .classify import (
    CLASS_KEYS,
    classify,
    is_union_of_group_like,
)
from .congruence import (
    is_complete_semilattice_of,
    is_congruence,
    least_complete_semilattice_congruence,
)
from .green import green_relation
from .regularity import is_regular

ENUM_MAX_N = 4
ENUM_MAX_N_LARGE = 5

Table = tuple[tuple[int, ...], ...]
Leq = tuple[tuple[bool, ...], ...]


def _triple_ok(table: list[list[int]], a: int, b: int, c: int) -> bool:
    ab = table[a][b]
    if ab < 0:
        return True
    bc = table[b][c]
    if bc < 0:
        return True
    left = table[ab][c]
    if left < 0:
        return True
    right = table[a][bc]
    if right < 0:
        return True
    return left == right


def _cell_ok(table: list[list[int]], n: int, i: int, j: int) -> bool:
    """Re-check exactly the triples that read the newly assigned cell (i, j).

    The cell can appear as either inner product of a triple, as the left
    outer product (a·b, j) with a·b = i, or as the right outer product
    (i, b·c) with b·c = j. A triple is fully determined exactly when the
    last of its four read cells is assigned, and that cell is always one of
    these positions, so no violation escapes the scan.
    """
    for c in range(n):
        if not _triple_ok(table, i, j, c):
            return False
        if not _triple_ok(table, c, i, j):
            return False
    for a in range(n):
        row = table[a]
        for b in range(n):
            v = row[b]
            if v == i and not _triple_ok(table, a, b, j):
                return False
            if v == j and not _triple_ok(table, i, a, b):
                return False
    return True


def enumerate_tables(
    n: int, allow_large: bool = False, first_row: Sequence[int] | None = None
) -> Iterator[Table]:
    """Every associative n×n table exactly once, lexicographically.

    Cells are filled row-major with backtracking, pruning as soon as a fully
    determined associativity triple fails. ``first_row`` pins row 0, which is
    how parallel corpus runs split the work.
    """
    cap = ENUM_MAX_N_LARGE if allow_large else ENUM_MAX_N
    if not 1 <= n <= cap:
        raise ValueError(
            f"table enumeration is limited to 1 <= n <= {cap}"
            + ("" if allow_large else " (pass allow_large for 5)")
        )
    if first_row is not None:
        first_row = tuple(first_row)
        if len(first_row) != n or any(not 0 <= v < n for v in first_row):
            raise ValueError("first_row must be n values in 0..n-1")
    return _tables(n, first_row)


def _tables(n: int, first_row: Sequence[int] | None) -> Iterator[Table]:
    table = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    start = 0
    if first_row is not None:
        for j, v in enumerate(first_row):
            table[0][j] = v
            if not _cell_ok(table, n, 0, j):
                return
        start = n

    def fill(k: int) -> Iterator[Table]:
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[k]
        for v in range(n):
            table[i][j] = v
            if _cell_ok(table, n, i, j):
                yield from fill(k + 1)
        table[i][j] = -1

    yield from fill(start)


def is_associative(table: Sequence[Sequence[int]]) -> bool:
    n = len(table)
    return all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


@lru_cache(maxsize=8)
def all_posets(n: int) -> tuple[Leq, ...]:
    """Every partial order on n labeled points, deterministically ordered.

    Each unordered pair independently gets one of {incomparable, <, >}
    (antisymmetry by construction); transitivity is then filtered. The
    discrete order is always first.
    """
    pairs = list(combinations(range(n), 2))
    found: list[Leq] = []
    for choice in product((0, 1, 2), repeat=len(pairs)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), how in zip(pairs, choice):
            if how == 1:
                leq[i][j] = True
            elif how == 2:
                leq[j][i] = True
        if _is_transitive(leq, n):
            found.append(tuple(tuple(row) for row in leq))
    return tuple(found)


def _is_transitive(leq: list[list[bool]], n: int) -> bool:
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j]:
                row_j = leq[j]
                row_i = leq[i]
                for k in range(n):
                    if row_j[k] and not row_i[k]:
                        return False
    return True


def order_is_compatible(table: Sequence[Sequence[int]], leq: Sequence[Sequence[bool]]) -> bool:
    n = len(table)
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            for x in range(n):
                if not leq[table[x][i]][table[x][j]]:
                    return False
                if not leq[table[i][x]][table[j][x]]:
                    return False
    return True


def compatible_orders(table: Sequence[Sequence[int]]) -> Iterator[Leq]:
    """All partial orders compatible with the table; the discrete order is
    always emitted (first)."""
    for leq in all_posets(len(table)):
        if order_is_compatible(table, leq):
            yield leq


def enumerate_structures(
    n: int,
    allow_large: bool = False,
    names: Sequence[str] | None = None,
    first_row: Sequence[int] | None = None,
) -> Iterator[OrderedSemigroup]:
    """Every (associative table, compatible order) pair as a structure.

    Construction is direct: emitted values are valid by construction, which
    the test suite re-checks against the axiom scanner.
    """
    if names is None:
        names = default_names(n)
    names = tuple(names)
    for table in enumerate_tables(n, allow_large, first_row):
        for leq in compatible_orders(table):
            yield OrderedSemigroup(names, table, leq, label=f"enum{n}")


def relabel(S: OrderedSemigroup, perm: Sequence[int]) -> OrderedSemigroup:
    """Apply a simultaneous relabeling old index -> perm[old index]."""
    n = S.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    table = [[0] * n for _ in range(n)]
    leq = [[False] * n for _ in range(n)]
    names = [""] * n
    for i in range(n):
        names[perm[i]] = S.names[i]
        for j in range(n):
            table[perm[i]][perm[j]] = perm[S.table[i][j]]
            leq[perm[i]][perm[j]] = S.leq[i][j]
    return OrderedSemigroup(
        tuple(names), tuple(map(tuple, table)), tuple(map(tuple, leq)), label=S.label
    )


def canonical_form(S: OrderedSemigroup) -> tuple[tuple[int, ...], tuple[bool, ...]]:
    """Lexicographically least flattened (table, leq) over all relabelings.

    Two structures are isomorphic as ordered semigroups (a bijection
    preserving both the product and the order, in both directions) exactly
    when their canonical forms coincide.
    """
    n = S.n
    best: tuple[tuple[int, ...], tuple[bool, ...]] | None = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        flat_table = tuple(
            perm[S.table[inv[i]][inv[j]]] for i in range(n) for j in range(n)
        )
        flat_leq = tuple(S.leq[inv[i]][inv[j]] for i in range(n) for j in range(n))
        cand = (flat_table, flat_leq)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def canonical_key(S: OrderedSemigroup) -> str:
    flat_table, flat_leq = canonical_form(S)
    return (
        f"{S.n}|"
        + ",".join(str(v) for v in flat_table)
        + "|"
        + "".join("1" if v else "0" for v in flat_leq)
    )


def canonical_hash(S: OrderedSemigroup) -> str:
    return hashlib.sha256(canonical_key(S).encode()).hexdigest()[:16]


def canonical_structure(S: OrderedSemigroup) -> OrderedSemigroup:
    """The canonical representative of S's isomorphism class, freshly named."""
    n = S.n
    flat_table, flat_leq = canonical_form(S)
    table = tuple(tuple(flat_table[i * n + j] for j in range(n)) for i in range(n))
    leq = tuple(tuple(flat_leq[i * n + j] for j in range(n)) for i in range(n))
    return OrderedSemigroup(default_names(n), table, leq, label=S.label)


def _holds(verdict) -> bool:
    return verdict.holds is True


def _pred_from_report(key: str) -> Callable[[OrderedSemigroup], bool]:
    def check(S: OrderedSemigroup) -> bool:
        return _holds(classify(S)[key])

    return check


PREDICATES: dict[str, Callable[[OrderedSemigroup], bool]] = {
    key: _pred_from_report(key) for key in CLASS_KEYS
}
PREDICATES.update(
    {
        "r_congruence": lambda S: _holds(is_congruence(S, green_relation(S, "R"), "two_sided")),
        "l_congruence": lambda S: _holds(is_congruence(S, green_relation(S, "L"), "two_sided")),
        "l_equals_h": lambda S: green_relation(S, "L") == green_relation(S, "H"),
        "r_is_least_csc": lambda S: green_relation(S, "R")
        == least_complete_semilattice_congruence(S),
        "csl_right_group_like": lambda S: _holds(is_complete_semilattice_of(S, "right_group_like")),
        "csl_left_group_like": lambda S: _holds(is_complete_semilattice_of(S, "left_group_like")),
        "csl_group_like": lambda S: _holds(is_complete_semilattice_of(S, "group_like")),
        "union_of_group_like": lambda S: _holds(is_union_of_group_like(S)),
        "discrete_order": lambda S: S.is_discrete(),
    }
)
# not_applicable counts as non-membership here: a predicate name in a search
# expression asks "is it in the class", and a non-regular structure is not.


def predicate_fn(expr: str) -> Callable[[OrderedSemigroup], bool]:
    """Compile an and/or/not expression over predicate names."""
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"bad predicate expression: {exc.msg}") from None

    def check(node: ast.AST) -> None:
        if isinstance(node, ast.Expression):
            check(node.body)
        elif isinstance(node, ast.BoolOp) and isinstance(node.op, (ast.And, ast.Or)):
            for value in node.values:
                check(value)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            check(node.operand)
        elif isinstance(node, ast.Name):
            if node.id not in PREDICATES:
                raise ValueError(f"unknown predicate name {node.id!r}")
        else:
            raise ValueError("only predicate names combined with and/or/not are allowed")

    check(tree)

    def evaluate(node: ast.AST, S: OrderedSemigroup) -> bool:
        if isinstance(node, ast.Expression):
            return evaluate(node.body, S)
        if isinstance(node, ast.BoolOp):
            values = (evaluate(v, S) for v in node.values)
            return all(values) if isinstance(node.op, ast.And) else any(values)
        if isinstance(node, ast.UnaryOp):
            return not evaluate(node.operand, S)
        assert isinstance(node, ast.Name)
        return PREDICATES[node.id](S)

    return lambda S: evaluate(tree, S)


def search(
    n: int,
    where: str,
    limit: int | None = None,
    up_to_iso: bool = False,
    allow_large: bool = False,
) -> Iterator[OrderedSemigroup]:
    """Stream the structures of order n satisfying the expression."""
    pred = predicate_fn(where)
    seen: set[str] = set()
    emitted = 0
    for S in enumerate_structures(n, allow_large):
        if up_to_iso:
            key = canonical_key(S)
            if key in seen:
                continue
            seen.add(key)
        if pred(S):
            yield S
            emitted += 1
            if limit is not None and emitted >= limit:
                return


def structure_from_key(key: str) -> OrderedSemigroup:
    """Rebuild the canonical representative encoded by a canonical key."""
    n_text, table_text, leq_text = key.split("|")
    n = int(n_text)
    flat = [int(v) for v in table_text.split(",")]
    table = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
    leq = tuple(tuple(leq_text[i * n + j] == "1" for j in range(n)) for i in range(n))
    return OrderedSemigroup(default_names(n), table, leq, label="canonical")


def _emit_worker(args) -> list[tuple[tuple, str, tuple[bool, ...]]]:
    n, first_row, expr, allow_large = args
    pred = predicate_fn(expr) if expr else None
    names = default_names(n)
    out = []
    for table in enumerate_tables(n, allow_large, first_row):
        for leq in compatible_orders(table):
            S = OrderedSemigroup(names, table, leq, label=f"enum{n}")
            if pred is not None and not pred(S):
                continue
            report = classify(S)
            bits = tuple(report[key].holds is True for key in CLASS_KEYS)
            flat_table = tuple(v for row in table for v in row)
            flat_leq = tuple(v for row in leq for v in row)
            key = canonical_key(S)
            out.append(((n, key, flat_table, flat_leq), key, bits))
    return out


def emit_corpus(
    n: int,
    target,
    expr: str | None = None,
    workers: int = 1,
    allow_large: bool = False,
) -> dict:
    """Write one osg file per canonical form plus a manifest of counts.

    Files are named by the hash of their canonical encoding, so isomorphic
    labeled duplicates collapse to a single representative. Results are
    merged in canonical-encoding order, which makes the manifest bytes
    independent of how the work was scheduled.
    """
    import json
    from concurrent.futures import ProcessPoolExecutor
    from pathlib import Path

    target = Path(target)
    tasks = [
        (n, row, expr, allow_large) for row in product(range(n), repeat=n)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_emit_worker, tasks))
    else:
        chunks = [_emit_worker(task) for task in tasks]
    results = sorted((item for chunk in chunks for item in chunk), key=lambda item: item[0])

    class_counts = {key: 0 for key in CLASS_KEYS}
    for _, _, bits in results:
        for key, bit in zip(CLASS_KEYS, bits):
            class_counts[key] += bit

    from .core import to_osg

    target.mkdir(parents=True, exist_ok=True)
    files = []
    seen: set[str] = set()
    for _, key, _ in results:
        if key in seen:
            continue
        seen.add(key)
        digest = hashlib.sha256(key.encode()).hexdigest()[:16]
        name = f"{digest}.osg"
        (target / name).write_text(to_osg(structure_from_key(key)))
        files.append(name)

    manifest = {
        "format": "osg-corpus-v1",
        "n": n,
        "filter": expr,
        "labeled": len(results),
        "canonical": len(seen),
        "classes": class_counts,
        "files": sorted(files),
    }
    (target / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return manifest
