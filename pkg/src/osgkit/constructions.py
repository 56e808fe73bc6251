"""Derived structures: discrete-order embeddings and power semigroups."""

from __future__ import annotations

from typing import Sequence

from .core import (
    OrderedSemigroup,
    Verdict,
    default_names,
    max_structure_size,
    validate,
)
from .classify import is_right_inverse


def from_plain(
    table: Sequence[Sequence[int]], names: Sequence[str] | None = None, label: str = ""
) -> OrderedSemigroup:
    """A plain semigroup as an ordered one under the discrete order.

    Downward closures, ordered idempotents, and ordered inverses then all
    reduce to their classical unordered counterparts.
    """
    n = len(table)
    leq = [[i == j for j in range(n)] for i in range(n)]
    return validate(table, leq, names, label)


def power_semigroup(
    table: Sequence[Sequence[int]], names: Sequence[str] | None = None, label: str = ""
) -> OrderedSemigroup:
    """All nonempty subsets under subset-wise product, ordered by inclusion.

    The empty set is excluded: it would be an absorbing zero. Element names
    are brace-delimited member lists such as ``{e,f}``.
    """
    base = from_plain(table, names, label)
    m = base.n
    size = (1 << m) - 1
    if size > max_structure_size():
        raise ValueError(
            f"power semigroup of {m} elements has {size} subsets, over the size cap "
            f"{max_structure_size()}"
        )
    masks = list(range(1, 1 << m))
    bits = {mask: [i for i in range(m) if mask & (1 << i)] for mask in masks}

    def product_mask(a: int, b: int) -> int:
        out = 0
        for x in bits[a]:
            row = base.table[x]
            for y in bits[b]:
                out |= 1 << row[y]
        return out

    # subsets are indexed by mask - 1, so a product's index is its mask - 1
    ptable = [[product_mask(a, b) - 1 for b in masks] for a in masks]
    pleq = [[(a | b) == b for b in masks] for a in masks]
    pnames = tuple("{" + ",".join(base.names[i] for i in bits[mask]) + "}" for mask in masks)
    plabel = f"P({label})" if label else "power"
    return validate(ptable, pleq, pnames, plabel)


def is_right_inverse_plain(
    table: Sequence[Sequence[int]], names: Sequence[str] | None = None
) -> Verdict:
    """Classical right-inverse test, realized through the discrete order."""
    return is_right_inverse(from_plain(table, names))
