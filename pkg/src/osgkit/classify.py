"""Membership tests for every ordered-semigroup class the toolkit knows.

Classes whose definitions presuppose regularity (right inverse, Clifford,
group-like) report ``not_applicable`` instead of false on a non-regular
input, so corpus statistics stay honest. All witnesses are deterministic:
the lexicographically least violating tuple in scan order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .core import (
    ElementSet,
    NOT_REGULAR,
    OrderedSemigroup,
    Verdict,
    downward_closure,
    dual,
    induced,
    set_product,
)
from .green import green_relation, principal_ideal
from .regularity import inverses, is_regular, ordered_idempotents, regularity_variant

CLASS_KEYS = (
    "regular",
    "completely_regular",
    "left_regular",
    "right_regular",
    "right_inverse",
    "left_inverse_dual",
    "right_clifford",
    "left_clifford",
    "group_like",
    "left_group_like",
    "right_group_like",
    "simple",
    "left_simple",
    "right_simple",
    "has_zero",
)

RI_CONDITIONS = ("RI1", "RI2", "RI3", "RI4", "RI5", "RI6")
RC_CONDITIONS = ("RC2", "RC3", "RC4", "RC5", "LC1", "LC2")

GROUP_LIKE_MODES = ("left", "right", "both")

UNION_SCAN_MAX_N = 10

ClassificationReport = dict[str, Verdict]


@dataclass(frozen=True)
class ConditionPair:
    """Two sides of a stated equivalence, evaluated independently."""

    lhs: Verdict
    rhs: Verdict
    hypothesis_met: bool = True


def _na(S: OrderedSemigroup) -> Verdict | None:
    """None when S is regular, else a not_applicable verdict."""
    reg = is_regular(S)
    if reg.holds:
        return None
    return Verdict(None, reg.witness, NOT_REGULAR)


def _down_product(S: OrderedSemigroup, *parts: ElementSet) -> ElementSet:
    """Downward closure of a product chain such as (fSeSf]."""
    acc = parts[0]
    for part in parts[1:]:
        acc = set_product(S, acc, part)
    return downward_closure(S, acc)


def _pt(a: int) -> ElementSet:
    return frozenset((a,))


def generator_idempotents(S: OrderedSemigroup, a: int, eidem: str = "leq") -> ElementSet:
    """Ordered idempotents generating the same principal left ideal as a."""
    la = principal_ideal(S, a, "left")
    return frozenset(
        e for e in ordered_idempotents(S, eidem) if principal_ideal(S, e, "left") == la
    )


def is_right_inverse(S: OrderedSemigroup, eidem: str = "leq") -> Verdict:
    """Regular, and each principal left ideal's ordered-idempotent generators
    are pairwise R-related (an R-unique generator exists)."""
    reg = is_regular(S)
    if not reg.holds:
        return Verdict(False, reg.witness, NOT_REGULAR)
    rel = green_relation(S, "R")
    for a in range(S.n):
        gens = sorted(generator_idempotents(S, a, eidem))
        if not gens:
            return Verdict(False, (S.names[a],), "no_idempotent_generator")
        for e, f in combinations(gens, 2):
            if not rel.related(e, f):
                return Verdict(False, (S.names[e], S.names[f]), "generators_not_R_related")
    return Verdict(True)


def right_inverse_condition(S: OrderedSemigroup, cond: str, eidem: str = "leq") -> Verdict:
    """One of the six characterizations RI1..RI6 of right inverse structures."""
    na = _na(S)
    if na is not None:
        return na
    n = S.n
    carrier = S.carrier
    idems = sorted(ordered_idempotents(S, eidem))

    if cond == "RI1":
        return is_right_inverse(S, eidem)

    if cond == "RI2":
        rel = green_relation(S, "R")
        for a in range(n):
            inv = sorted(inverses(S, a))
            for x, y in combinations(inv, 2):
                if not rel.related(x, y):
                    return Verdict(
                        False, (S.names[a], S.names[x], S.names[y]), "inverses_not_R_related"
                    )
        return Verdict(True)

    if cond == "RI3":
        for e, f in product(idems, idems):
            ef = S.table[e][f]
            if ef not in _down_product(S, _pt(f), carrier, _pt(e), carrier, _pt(f)):
                return Verdict(False, (S.names[e], S.names[f]), "ef_notin_fSeSf")
        return Verdict(True)

    if cond == "RI4":
        for e, f in product(idems, idems):
            left = downward_closure(S, set_product(S, _pt(e), carrier)) & downward_closure(
                S, set_product(S, _pt(f), carrier)
            )
            ef = S.table[e][f]
            right = downward_closure(S, set_product(S, _pt(ef), carrier))
            if left != right:
                d = min(left ^ right)
                return Verdict(
                    False, (S.names[e], S.names[f], S.names[d]), "right_ideal_meet"
                )
        return Verdict(True)

    if cond == "RI5":
        for e in idems:
            se = downward_closure(S, set_product(S, carrier, _pt(e)))
            es = downward_closure(S, set_product(S, _pt(e), carrier))
            for x in sorted(se):
                for xp in sorted(inverses(S, x)):
                    if xp not in es:
                        return Verdict(
                            False, (S.names[e], S.names[x], S.names[xp]), "inverse_escapes_eS"
                        )
        return Verdict(True)

    if cond == "RI6":
        rel_l = green_relation(S, "L")
        rel_h = green_relation(S, "H")
        for e, f in combinations(idems, 2):
            if rel_l.related(e, f) and not rel_h.related(e, f):
                return Verdict(False, (S.names[e], S.names[f]), "L_without_H")
        return Verdict(True)

    raise ValueError(f"cond must be one of {RI_CONDITIONS}, got {cond!r}")


def is_clifford(S: OrderedSemigroup, side: str) -> Verdict:
    """Right: (Sa] ⊆ (aS] for every a; left: the mirror inclusion."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    na = _na(S)
    if na is not None:
        return na
    carrier = S.carrier
    for a in range(S.n):
        sa = downward_closure(S, set_product(S, carrier, _pt(a)))
        a_s = downward_closure(S, set_product(S, _pt(a), carrier))
        small, big = (sa, a_s) if side == "right" else (a_s, sa)
        extra = small - big
        if extra:
            return Verdict(False, (S.names[a], S.names[min(extra)]), "inclusion")
    return Verdict(True)


def right_clifford_condition(S: OrderedSemigroup, cond: str, eidem: str = "leq") -> Verdict:
    """One of the equivalent right-Clifford conditions RC2..RC5, or the two
    consequences LC1 (a ∈ (a²Sa]) and LC2 (ef ∈ (feSef])."""
    na = _na(S)
    if na is not None:
        return na
    n = S.n
    carrier = S.carrier
    idems = sorted(ordered_idempotents(S, eidem))

    if cond == "RC2":
        for e in idems:
            se = downward_closure(S, set_product(S, carrier, _pt(e)))
            es = downward_closure(S, set_product(S, _pt(e), carrier))
            extra = se - es
            if extra:
                return Verdict(False, (S.names[e], S.names[min(extra)]), "inclusion")
        return Verdict(True)

    if cond == "RC3":
        for e in idems:
            for a in range(n):
                ea = S.table[e][a]
                if not any(S.leq[ea][S.table[a][x]] for x in range(n)):
                    return Verdict(False, (S.names[e], S.names[a]), "no_x_with_ea_le_ax")
        return Verdict(True)

    if cond == "RC4":
        for b in range(n):
            for a in range(n):
                ba = S.table[b][a]
                if not any(S.leq[ba][S.table[a][x]] for x in range(n)):
                    return Verdict(False, (S.names[b], S.names[a]), "no_x_with_ba_le_ax")
        return Verdict(True)

    if cond == "RC5":
        rel_l = green_relation(S, "L")
        rel_r = green_relation(S, "R")
        for a in range(n):
            for b in range(a + 1, n):
                if rel_l.related(a, b) and not rel_r.related(a, b):
                    return Verdict(False, (S.names[a], S.names[b]), "L_not_in_R")
        return Verdict(True)

    if cond == "LC1":
        for a in range(n):
            a2 = S.table[a][a]
            if a not in _down_product(S, _pt(a2), carrier, _pt(a)):
                return Verdict(False, (S.names[a],), "a_notin_a2Sa")
        return Verdict(True)

    if cond == "LC2":
        for e, f in product(idems, idems):
            ef = S.table[e][f]
            fe = S.table[f][e]
            if ef not in _down_product(S, _pt(fe), carrier, _pt(ef)):
                return Verdict(False, (S.names[e], S.names[f]), "ef_notin_feSef")
        return Verdict(True)

    raise ValueError(f"cond must be one of {RC_CONDITIONS}, got {cond!r}")


def group_like_inclusions(S: OrderedSemigroup, mode: str) -> Verdict:
    """The bare membership conditions, with no regularity gate.

    left: a ∈ (Sb] for all a,b; right: a ∈ (bS]; both: the conjunction.
    """
    if mode not in GROUP_LIKE_MODES:
        raise ValueError(f"mode must be one of {GROUP_LIKE_MODES}, got {mode!r}")
    carrier = S.carrier
    for a in range(S.n):
        for b in range(S.n):
            if mode in ("left", "both"):
                if a not in downward_closure(S, set_product(S, carrier, _pt(b))):
                    return Verdict(False, (S.names[a], S.names[b]), "a_notin_Sb")
            if mode in ("right", "both"):
                if a not in downward_closure(S, set_product(S, _pt(b), carrier)):
                    return Verdict(False, (S.names[a], S.names[b]), "a_notin_bS")
    return Verdict(True)


def is_group_like(S: OrderedSemigroup, mode: str) -> Verdict:
    """Group-like membership on a regular structure; not_applicable otherwise."""
    na = _na(S)
    if na is not None:
        return na
    return group_like_inclusions(S, mode)


def is_simple(S: OrderedSemigroup, side: str) -> Verdict:
    """No proper side-ideal: every principal side-ideal is the whole carrier."""
    for a in range(S.n):
        if principal_ideal(S, a, side) != S.carrier:
            return Verdict(False, (S.names[a],), "proper_ideal")
    return Verdict(True)


def idempotents_related(S: OrderedSemigroup, kind: str, eidem: str = "leq") -> Verdict:
    """All ordered idempotents pairwise related under Green's L or R."""
    if kind not in ("L", "R"):
        raise ValueError(f"kind must be 'L' or 'R', got {kind!r}")
    na = _na(S)
    if na is not None:
        return na
    rel = green_relation(S, kind)
    for e, f in combinations(sorted(ordered_idempotents(S, eidem)), 2):
        if not rel.related(e, f):
            return Verdict(False, (S.names[e], S.names[f]), f"not_{kind}_related")
    return Verdict(True)


def h_commutative_corollary(
    S: OrderedSemigroup, e: int, f: int, eidem: str = "leq"
) -> ConditionPair:
    """Sides of the stated equivalence for ordered idempotents e, f.

    lhs: ef H fe (the configured reading of H-commutativity);
    rhs: (Se] ∩ (Sf] = (Sef]. hypothesis_met records whether S is right
    inverse, the hypothesis under which the equivalence is claimed.
    """
    idems = ordered_idempotents(S, eidem)
    if e not in idems or f not in idems:
        raise ValueError("e and f must be ordered idempotents")
    carrier = S.carrier
    ef = S.table[e][f]
    fe = S.table[f][e]
    lhs_holds = green_relation(S, "H").related(ef, fe)
    lhs = Verdict(lhs_holds, (S.names[ef], S.names[fe]), "ef_H_fe")
    left = downward_closure(S, set_product(S, carrier, _pt(e))) & downward_closure(
        S, set_product(S, carrier, _pt(f))
    )
    right = downward_closure(S, set_product(S, carrier, _pt(ef)))
    if left == right:
        rhs = Verdict(True, (S.names[e], S.names[f]), "left_ideal_meet")
    else:
        d = min(left ^ right)
        rhs = Verdict(False, (S.names[e], S.names[f], S.names[d]), "left_ideal_meet")
    hyp = is_right_inverse(S, eidem).holds is True
    return ConditionPair(lhs, rhs, hypothesis_met=hyp)


def left_related_inverses_condition(
    S: OrderedSemigroup, quantifier: str = "forall", eidem: str = "leq"
) -> ConditionPair:
    """lhs: any two ordered inverses of an element are L-related.

    rhs: ef ∈ (eSfSe] over pairs of ordered idempotents, read under the
    given quantifier ("forall" or "exists"); both readings are supported so
    a corpus run can compare them.
    """
    if quantifier not in ("forall", "exists"):
        raise ValueError(f"quantifier must be 'forall' or 'exists', got {quantifier!r}")
    na = _na(S)
    if na is not None:
        return ConditionPair(na, na, hypothesis_met=False)
    carrier = S.carrier
    rel = green_relation(S, "L")

    lhs = Verdict(True)
    for a in range(S.n):
        inv = sorted(inverses(S, a))
        stop = False
        for x, y in combinations(inv, 2):
            if not rel.related(x, y):
                lhs = Verdict(
                    False, (S.names[a], S.names[x], S.names[y]), "inverses_not_L_related"
                )
                stop = True
                break
        if stop:
            break

    idems = sorted(ordered_idempotents(S, eidem))
    memberships = []
    for e, f in product(idems, idems):
        ef = S.table[e][f]
        inside = ef in _down_product(S, _pt(e), carrier, _pt(f), carrier, _pt(e))
        memberships.append((e, f, inside))
    if quantifier == "forall":
        bad = next(((e, f) for e, f, inside in memberships if not inside), None)
        if bad is None:
            rhs = Verdict(True, (), "forall_ef_in_eSfSe")
        else:
            rhs = Verdict(False, (S.names[bad[0]], S.names[bad[1]]), "ef_notin_eSfSe")
    else:
        good = next(((e, f) for e, f, inside in memberships if inside), None)
        if good is None:
            rhs = Verdict(False, (), "no_pair_with_ef_in_eSfSe")
        else:
            rhs = Verdict(True, (S.names[good[0]], S.names[good[1]]), "exists_ef_in_eSfSe")
    return ConditionPair(lhs, rhs)


def is_union_of_group_like(S: OrderedSemigroup, bound: int = UNION_SCAN_MAX_N) -> Verdict:
    """Every element lies in some product-closed subset that is group-like
    under the induced structure (closures taken inside the subset)."""
    n = S.n
    if n > bound:
        raise ValueError(f"subsemigroup scan is limited to n <= {bound}")
    covered = set()
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask & (1 << i)]
        if any(not (mask >> S.table[a][b]) & 1 for a in members for b in members):
            continue
        sub = induced(S, members)
        if group_like_inclusions(sub, "both").holds:
            covered.update(members)
    missing = [a for a in range(n) if a not in covered]
    if missing:
        return Verdict(False, (S.names[missing[0]],), "not_in_group_like_subsemigroup")
    return Verdict(True)


def zero_element(S: OrderedSemigroup) -> int | None:
    """The absorbing element z with zx = xz = z for all x, when one exists."""
    for z in range(S.n):
        if all(S.table[z][x] == z and S.table[x][z] == z for x in range(S.n)):
            return z
    return None


def classify(S: OrderedSemigroup, eidem: str = "leq") -> ClassificationReport:
    """Evaluate every class predicate; regularity-gated ones come back
    not_applicable on a non-regular input."""
    report: ClassificationReport = {}
    reg = is_regular(S)
    report["regular"] = reg
    for variant in ("completely_regular", "left_regular", "right_regular"):
        report[variant] = regularity_variant(S, variant)

    if reg.holds:
        report["right_inverse"] = is_right_inverse(S, eidem)
        report["left_inverse_dual"] = is_right_inverse(dual(S), eidem)
    else:
        gate = Verdict(None, reg.witness, NOT_REGULAR)
        report["right_inverse"] = gate
        report["left_inverse_dual"] = gate
    report["right_clifford"] = is_clifford(S, "right")
    report["left_clifford"] = is_clifford(S, "left")
    report["group_like"] = is_group_like(S, "both")
    report["left_group_like"] = is_group_like(S, "left")
    report["right_group_like"] = is_group_like(S, "right")
    report["simple"] = is_simple(S, "two_sided")
    report["left_simple"] = is_simple(S, "left")
    report["right_simple"] = is_simple(S, "right")
    z = zero_element(S)
    report["has_zero"] = Verdict(True, (S.names[z],), "zero") if z is not None else Verdict(False)
    return report
