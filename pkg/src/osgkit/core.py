"""Finite ordered semigroups: a Cayley table plus a compatible partial order.

Elements are dense indices 0..n-1, each carrying a printable name; subsets
of the carrier are plain ``frozenset[int]`` values. Structures are immutable
and every operation in this package is a pure function of its arguments, so
values can be shared freely between threads or worker processes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

ElementSet = frozenset[int]

DEFAULT_MAX_N = 12

NOT_REGULAR = "not_regular"


def max_structure_size() -> int:
    """Largest accepted carrier size; OSG_MAX_N in the environment overrides."""
    raw = os.environ.get("OSG_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"OSG_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("OSG_MAX_N must be at least 1")
    return value


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(n))


@dataclass(frozen=True)
class Diagnostic:
    """One violated axiom, with a witness that re-checks against the input."""

    kind: str  # associativity|reflexivity|antisymmetry|transitivity|compatibility|parse
    witness: tuple[str, ...]
    message: str


class StructureError(ValueError):
    """Input rejected; ``diagnostics`` lists one entry per violated axiom kind."""

    def __init__(self, diagnostics: Iterable[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.message for d in self.diagnostics))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decidable predicate.

    ``holds`` is None when the predicate does not apply to the input (for
    instance a class that is only defined on regular structures); ``tag``
    then names the unmet hypothesis. Witnesses are element names, chosen as
    the lexicographically least violating tuple in scan order; for a holding
    predicate the witness is either empty or a satisfying certificate.
    """

    holds: bool | None
    witness: tuple[str, ...] = ()
    tag: str = ""


@dataclass(frozen=True)
class OrderedSemigroup:
    """Carrier 0..n-1 with a multiplication table and a compatible order.

    ``table[i][j]`` is the index of (element i)·(element j), row = left
    operand; ``leq[i][j]`` means element i ≤ element j. Construct through
    ``validate`` or ``parse`` so the axioms are guaranteed; building the
    dataclass directly skips all checking.
    """

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]
    label: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def carrier(self) -> ElementSet:
        return frozenset(range(self.n))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown element name {name!r}") from None

    def name_tuple(self, indices: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.names[i] for i in indices)

    def set_names(self, members: ElementSet) -> tuple[str, ...]:
        return tuple(self.names[i] for i in sorted(members))

    def is_discrete(self) -> bool:
        n = self.n
        return all(self.leq[i][j] == (i == j) for i in range(n) for j in range(n))


def downward_closure(S: OrderedSemigroup, H: ElementSet) -> ElementSet:
    """All elements lying below some member of H; contains H by reflexivity."""
    return frozenset(t for t in range(S.n) if any(S.leq[t][h] for h in H))


def set_product(S: OrderedSemigroup, A: ElementSet, B: ElementSet) -> ElementSet:
    """Elementwise product {a·b : a in A, b in B}; no downward closure applied."""
    return frozenset(S.table[i][j] for i in A for j in B)


def dual(S: OrderedSemigroup) -> OrderedSemigroup:
    """Opposite multiplication on the same carrier and order.

    Exchanges every left/right notion in the toolkit: left ideals of the
    dual are right ideals of the original, and so on.
    """
    n = S.n
    table = tuple(tuple(S.table[j][i] for j in range(n)) for i in range(n))
    label = f"dual({S.label})" if S.label else "dual"
    return OrderedSemigroup(S.names, table, S.leq, label=label)


def induced(S: OrderedSemigroup, members: Iterable[int]) -> OrderedSemigroup:
    """Substructure on a product-closed subset, order restricted to it."""
    subset = sorted(set(members))
    pos = {element: k for k, element in enumerate(subset)}
    for a in subset:
        for b in subset:
            if S.table[a][b] not in pos:
                raise ValueError(
                    f"subset {S.set_names(frozenset(subset))} is not closed under products"
                )
    names = tuple(S.names[a] for a in subset)
    table = tuple(tuple(pos[S.table[a][b]] for b in subset) for a in subset)
    leq = tuple(tuple(S.leq[a][b] for b in subset) for a in subset)
    return OrderedSemigroup(names, table, leq, label=S.label)


def _assoc_witness(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(table)
    for i in range(n):
        for j in range(n):
            ij = table[i][j]
            for k in range(n):
                if table[ij][k] != table[i][table[j][k]]:
                    return (i, j, k)
    return None


def _compat_witness(
    table: Sequence[Sequence[int]], leq: Sequence[Sequence[bool]]
) -> tuple[int, int, int, str] | None:
    n = len(table)
    for i in range(n):
        for j in range(n):
            if not leq[i][j]:
                continue
            for x in range(n):
                if not leq[table[x][i]][table[x][j]]:
                    return (i, j, x, "left")
                if not leq[table[i][x]][table[j][x]]:
                    return (i, j, x, "right")
    return None


def diagnose(
    table: Sequence[Sequence[int]],
    leq: Sequence[Sequence[bool]],
    names: Sequence[str] | None = None,
) -> list[Diagnostic]:
    """Check every axiom; report the first violation of each kind in scan order."""
    n = len(table)
    if names is None:
        names = default_names(n)
    out: list[Diagnostic] = []

    w = _assoc_witness(table)
    if w is not None:
        i, j, k = w
        lhs, rhs = table[table[i][j]][k], table[i][table[j][k]]
        out.append(
            Diagnostic(
                "associativity",
                (names[i], names[j], names[k]),
                f"associativity fails at ({names[i]},{names[j]},{names[k]}): "
                f"({names[i]}·{names[j]})·{names[k]} = {names[lhs]} but "
                f"{names[i]}·({names[j]}·{names[k]}) = {names[rhs]}",
            )
        )

    refl = next((i for i in range(n) if not leq[i][i]), None)
    if refl is not None:
        out.append(
            Diagnostic(
                "reflexivity", (names[refl],), f"order is not reflexive at {names[refl]}"
            )
        )

    anti = next(
        (
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if leq[i][j] and leq[j][i]
        ),
        None,
    )
    if anti is not None:
        i, j = anti
        out.append(
            Diagnostic(
                "antisymmetry",
                (names[i], names[j]),
                f"order is not antisymmetric: {names[i]} <= {names[j]} and "
                f"{names[j]} <= {names[i]} with {names[i]} != {names[j]}",
            )
        )

    trans = next(
        (
            (i, j, k)
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if leq[i][j] and leq[j][k] and not leq[i][k]
        ),
        None,
    )
    if trans is not None:
        i, j, k = trans
        out.append(
            Diagnostic(
                "transitivity",
                (names[i], names[j], names[k]),
                f"order is not transitive: {names[i]} <= {names[j]} <= {names[k]} "
                f"but not {names[i]} <= {names[k]}",
            )
        )

    compat = _compat_witness(table, leq)
    if compat is not None:
        i, j, x, side = compat
        if side == "left":
            detail = (
                f"{names[i]} <= {names[j]} but not "
                f"{names[x]}·{names[i]} <= {names[x]}·{names[j]}"
            )
        else:
            detail = (
                f"{names[i]} <= {names[j]} but not "
                f"{names[i]}·{names[x]} <= {names[j]}·{names[x]}"
            )
        out.append(
            Diagnostic(
                "compatibility",
                (names[i], names[j], names[x]),
                f"order is not compatible with multiplication: {detail}",
            )
        )

    return out


def validate(
    table: Sequence[Sequence[int]],
    leq: Sequence[Sequence[bool]],
    names: Sequence[str] | None = None,
    label: str = "",
) -> OrderedSemigroup:
    """Build a structure iff every axiom holds; raise StructureError otherwise."""
    n = len(table)
    if n < 1:
        raise StructureError([Diagnostic("parse", (), "need at least one element")])
    if n > max_structure_size():
        raise StructureError(
            [Diagnostic("parse", (), f"{n} elements exceeds the size cap {max_structure_size()}")]
        )
    if names is None:
        names = default_names(n)
    names = tuple(names)
    if len(names) != n or len(set(names)) != n:
        raise ValueError("names must be distinct and match the table size")
    if any(len(row) != n for row in table) or any(len(row) != n for row in leq) or len(leq) != n:
        raise ValueError("table and leq must both be n×n")
    if any(not (0 <= v < n) for row in table for v in row):
        raise ValueError("table entries must be element indices 0..n-1")

    problems = diagnose(table, leq, names)
    if problems:
        raise StructureError(problems)
    frozen_table = tuple(tuple(int(v) for v in row) for row in table)
    frozen_leq = tuple(tuple(bool(v) for v in row) for row in leq)
    return OrderedSemigroup(names, frozen_table, frozen_leq, label=label)


def order_closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[bool]]:
    """Reflexive-transitive closure of generating order pairs."""
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        leq[a][b] = True
    for k in range(n):
        row_k = leq[k]
        for i in range(n):
            if leq[i][k]:
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def from_order_pairs(
    names: Sequence[str],
    table: Sequence[Sequence[int]],
    pairs: Iterable[tuple[int, int]],
    label: str = "",
) -> OrderedSemigroup:
    """Validate a table with the order generated by the given pairs."""
    return validate(table, order_closure(len(table), pairs), names, label)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


_SECTIONS = ("elements:", "table:", "order:")


def parse(text: str, label: str = "") -> OrderedSemigroup:
    """Parse the line-oriented "osg v1" format.

    Grammar: an ``osg v1`` header, an ``elements:`` line of distinct names,
    a ``table:`` section of n rows of n names, and an optional ``order:``
    section of ``<name> <= <name>`` generating pairs. ``#`` starts a comment.
    The order is closed reflexively and transitively before antisymmetry is
    checked. Raises StructureError carrying parse or validation diagnostics.
    """
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if line:
            rows.append((lineno, line))

    def bail(message: str, lineno: int | None = None, witness: tuple[str, ...] = ()) -> None:
        where = f"line {lineno}: " if lineno is not None else ""
        raise StructureError([Diagnostic("parse", witness, where + message)])

    if not rows or rows[0][1] != "osg v1":
        bail("expected 'osg v1' header on the first line", rows[0][0] if rows else None)
    pos = 1

    if pos >= len(rows) or not rows[pos][1].startswith("elements:"):
        bail("expected 'elements:' section", rows[pos][0] if pos < len(rows) else None)
    lineno, line = rows[pos]
    names = tuple(line[len("elements:"):].split())
    if not names:
        bail("elements: needs at least one name", lineno)
    if len(set(names)) != len(names):
        bail("element names must be distinct", lineno)
    if "<=" in names:
        bail("'<=' cannot be used as an element name", lineno)
    n = len(names)
    if n > max_structure_size():
        bail(f"{n} elements exceeds the size cap {max_structure_size()}", lineno)
    where = {name: i for i, name in enumerate(names)}
    pos += 1

    problems: list[Diagnostic] = []
    if pos >= len(rows) or rows[pos][1] != "table:":
        bail("expected 'table:' section", rows[pos][0] if pos < len(rows) else None)
    pos += 1
    table: list[list[int]] = []
    for r in range(n):
        if pos >= len(rows) or rows[pos][1].endswith(":"):
            bail(f"table: expected {n} rows, found {r}", rows[pos - 1][0])
        lineno, line = rows[pos]
        tokens = line.split()
        if len(tokens) != n:
            problems.append(
                Diagnostic(
                    "parse",
                    tuple(tokens),
                    f"line {lineno}: table row has {len(tokens)} entries, expected {n}",
                )
            )
            table.append([0] * n)
        else:
            row = []
            for tok in tokens:
                if tok not in where:
                    problems.append(
                        Diagnostic(
                            "parse", (tok,), f"line {lineno}: unknown element name {tok!r}"
                        )
                    )
                    row.append(0)
                else:
                    row.append(where[tok])
            table.append(row)
        pos += 1

    pairs: list[tuple[int, int]] = []
    if pos < len(rows):
        lineno, line = rows[pos]
        if line != "order:":
            head = line.split()[0]
            bail(f"unknown section {head!r}", lineno)
        pos += 1
        while pos < len(rows):
            lineno, line = rows[pos]
            tokens = line.split()
            if len(tokens) == 1 and tokens[0].endswith(":"):
                bail(f"unknown section {tokens[0]!r}", lineno)
            if len(tokens) != 3 or tokens[1] != "<=":
                problems.append(
                    Diagnostic(
                        "parse",
                        tuple(tokens),
                        f"line {lineno}: expected '<name> <= <name>'",
                    )
                )
            else:
                a, b = tokens[0], tokens[2]
                missing = [t for t in (a, b) if t not in where]
                if missing:
                    problems.append(
                        Diagnostic(
                            "parse",
                            tuple(missing),
                            f"line {lineno}: unknown element name {missing[0]!r}",
                        )
                    )
                else:
                    pairs.append((where[a], where[b]))
            pos += 1

    if problems:
        raise StructureError(problems)
    return from_order_pairs(names, table, pairs, label=label)


def to_osg(S: OrderedSemigroup) -> str:
    """Serialize back to the "osg v1" format (strict order pairs, sorted)."""
    lines = ["osg v1", "elements: " + " ".join(S.names), "table:"]
    for i in range(S.n):
        lines.append(" ".join(S.names[S.table[i][j]] for j in range(S.n)))
    lines.append("order:")
    for i in range(S.n):
        for j in range(S.n):
            if i != j and S.leq[i][j]:
                lines.append(f"{S.names[i]} <= {S.names[j]}")
    return "\n".join(lines) + "\n"
