"""Theorem harness: evaluate each cataloged equivalence or implication on a
structure, and sweep enumerated corpora for mismatches.

The catalog entries are treated as testable hypotheses, not assumptions: a
few of the underlying notions admit more than one reading (the idempotent
reading, one quantifier), so a corpus sweep reports disagreements instead of
crashing on them. Reports are deterministic and schedule-independent.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from .core import OrderedSemigroup, default_names, max_structure_size, to_osg
from .classify import (
    h_commutative_corollary,
    idempotents_related,
    is_clifford,
    is_group_like,
    is_right_inverse,
    is_union_of_group_like,
    left_related_inverses_condition,
    right_clifford_condition,
    right_inverse_condition,
    UNION_SCAN_MAX_N,
)
from .congruence import (
    is_complete_semilattice_of,
    is_congruence,
    least_complete_semilattice_congruence,
)
from .constructions import power_semigroup
from .enumeration import canonical_key, compatible_orders, enumerate_tables
from .green import green_relation
from .regularity import is_regular, ordered_idempotents, regularity_variant

THEOREM_IDS = (
    "T_RC_EQUIV",
    "L_RC_LEMMA",
    "T_RC_LEAST_CSC",
    "T_RC_DECOMP",
    "T_RI_IDEMP",
    "T_GL_IDEMP",
    "C_RI_LGL",
    "T_LINV_LREL",
    "T5_EQUIV",
    "C_H_COMM",
    "T_PF_POWER",
    "T_RC_IFF_RI",
    "T_RI_LC_UNION",
    "T_RI_CONG",
    "C_CREG",
)

CONSISTENT = "consistent"
MISMATCH = "mismatch"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class TheoremOutcome:
    theorem: str
    hypothesis_met: bool
    sides: tuple[tuple[str, bool], ...]
    verdict: str
    witness: tuple[str, ...] = ()


TheoremReport = dict[str, TheoremOutcome]


def _na(tid: str) -> TheoremOutcome:
    return TheoremOutcome(tid, False, (), NOT_APPLICABLE)


def _equivalence(tid: str, sides: list[tuple[str, bool]], witness=()) -> TheoremOutcome:
    values = {value for _, value in sides}
    verdict = CONSISTENT if len(values) == 1 else MISMATCH
    return TheoremOutcome(tid, True, tuple(sides), verdict, witness if verdict == MISMATCH else ())


def _implication(tid: str, conclusion, extra_sides=()) -> TheoremOutcome:
    sides = tuple(extra_sides) + (("conclusion", conclusion.holds is True),)
    if conclusion.holds is True:
        return TheoremOutcome(tid, True, sides, CONSISTENT)
    return TheoremOutcome(tid, True, sides, MISMATCH, conclusion.witness)


def _holds(verdict) -> bool:
    return verdict.holds is True


def theorem_suite(
    S: OrderedSemigroup, eidem: str = "leq", linv_quant: str = "forall"
) -> TheoremReport:
    """Evaluate every cataloged statement on one structure."""
    report: TheoremReport = {}
    regular = _holds(is_regular(S))

    def ri(cond: str) -> bool:
        return _holds(right_inverse_condition(S, cond, eidem))

    def rc(cond: str) -> bool:
        return _holds(right_clifford_condition(S, cond, eidem))

    # right Clifford <=> each of RC2..RC5
    if not regular:
        report["T_RC_EQUIV"] = _na("T_RC_EQUIV")
    else:
        sides = [("right_clifford", _holds(is_clifford(S, "right")))]
        sides += [(cond, rc(cond)) for cond in ("RC2", "RC3", "RC4", "RC5")]
        report["T_RC_EQUIV"] = _equivalence("T_RC_EQUIV", sides)

    # right Clifford => LC1 and LC2
    if not (regular and _holds(is_clifford(S, "right"))):
        report["L_RC_LEMMA"] = _na("L_RC_LEMMA")
    else:
        lc1 = right_clifford_condition(S, "LC1", eidem)
        lc2 = right_clifford_condition(S, "LC2", eidem)
        sides = (("LC1", _holds(lc1)), ("LC2", _holds(lc2)))
        if _holds(lc1) and _holds(lc2):
            report["L_RC_LEMMA"] = TheoremOutcome("L_RC_LEMMA", True, sides, CONSISTENT)
        else:
            bad = lc1 if not _holds(lc1) else lc2
            report["L_RC_LEMMA"] = TheoremOutcome("L_RC_LEMMA", True, sides, MISMATCH, bad.witness)

    # right Clifford <=> R is the least complete semilattice congruence
    if not regular:
        report["T_RC_LEAST_CSC"] = _na("T_RC_LEAST_CSC")
    else:
        same = green_relation(S, "R") == least_complete_semilattice_congruence(S)
        report["T_RC_LEAST_CSC"] = _equivalence(
            "T_RC_LEAST_CSC",
            [("right_clifford", _holds(is_clifford(S, "right"))), ("R_is_least_csc", same)],
        )

    # right Clifford <=> complete semilattice of right group-like classes
    if not regular:
        report["T_RC_DECOMP"] = _na("T_RC_DECOMP")
    else:
        decomp = is_complete_semilattice_of(S, "right_group_like")
        report["T_RC_DECOMP"] = _equivalence(
            "T_RC_DECOMP",
            [("right_clifford", _holds(is_clifford(S, "right"))), ("csl_right_group_like", _holds(decomp))],
            witness=decomp.witness,
        )

    # right inverse <=> (e L f implies e H f for ordered idempotents)
    if not regular:
        report["T_RI_IDEMP"] = _na("T_RI_IDEMP")
    else:
        report["T_RI_IDEMP"] = _equivalence(
            "T_RI_IDEMP", [("right_inverse", ri("RI1")), ("RI6", ri("RI6"))]
        )

    # left (right) group-like <=> idempotents pairwise L (R) related
    if not regular:
        report["T_GL_IDEMP"] = _na("T_GL_IDEMP")
    else:
        lgl = _holds(is_group_like(S, "left"))
        rgl = _holds(is_group_like(S, "right"))
        idem_l = _holds(idempotents_related(S, "L", eidem))
        idem_r = _holds(idempotents_related(S, "R", eidem))
        sides = (
            ("left_group_like", lgl),
            ("idempotents_L_related", idem_l),
            ("right_group_like", rgl),
            ("idempotents_R_related", idem_r),
        )
        verdict = CONSISTENT if (lgl == idem_l and rgl == idem_r) else MISMATCH
        report["T_GL_IDEMP"] = TheoremOutcome("T_GL_IDEMP", True, sides, verdict)

    # right inverse and left group-like => group-like
    if not (regular and _holds(is_right_inverse(S, eidem)) and _holds(is_group_like(S, "left"))):
        report["C_RI_LGL"] = _na("C_RI_LGL")
    else:
        report["C_RI_LGL"] = _implication("C_RI_LGL", is_group_like(S, "both"))

    # inverses pairwise L-related <=> ef in (eSfSe] under the chosen quantifier
    if not regular:
        report["T_LINV_LREL"] = _na("T_LINV_LREL")
    else:
        pair = left_related_inverses_condition(S, linv_quant, eidem)
        report["T_LINV_LREL"] = _equivalence(
            "T_LINV_LREL",
            [("inverses_L_related", _holds(pair.lhs)), (f"{linv_quant}_ef_in_eSfSe", _holds(pair.rhs))],
            witness=pair.lhs.witness or pair.rhs.witness,
        )

    # the five right-inverse characterizations agree
    if not regular:
        report["T5_EQUIV"] = _na("T5_EQUIV")
    else:
        sides = [(cond, ri(cond)) for cond in ("RI1", "RI2", "RI3", "RI4", "RI5")]
        report["T5_EQUIV"] = _equivalence("T5_EQUIV", sides)

    # on right inverse structures: ef H fe <=> (Se] ∩ (Sf] = (Sef], per pair
    if not (regular and _holds(is_right_inverse(S, eidem))):
        report["C_H_COMM"] = _na("C_H_COMM")
    else:
        outcome = None
        idems = sorted(ordered_idempotents(S, eidem))
        for e, f in product(idems, idems):
            pair = h_commutative_corollary(S, e, f, eidem)
            if _holds(pair.lhs) != _holds(pair.rhs):
                outcome = TheoremOutcome(
                    "C_H_COMM",
                    True,
                    (("ef_H_fe", _holds(pair.lhs)), ("meet_eq_Sef", _holds(pair.rhs))),
                    MISMATCH,
                    (S.names[e], S.names[f]),
                )
                break
        if outcome is None:
            outcome = TheoremOutcome(
                "C_H_COMM", True, (("all_pairs_agree", True),), CONSISTENT
            )
        report["C_H_COMM"] = outcome

    # power semigroup is right inverse <=> the plain base is
    if not S.is_discrete() or (1 << S.n) - 1 > max_structure_size():
        report["T_PF_POWER"] = _na("T_PF_POWER")
    else:
        power_ri = is_right_inverse(power_semigroup(S.table, S.names), eidem)
        base_ri = is_right_inverse(S, eidem)
        report["T_PF_POWER"] = _equivalence(
            "T_PF_POWER",
            [("power_right_inverse", _holds(power_ri)), ("base_right_inverse", _holds(base_ri))],
        )

    # right Clifford <=> right inverse and a in (a²Sa] for every a
    if not regular:
        report["T_RC_IFF_RI"] = _na("T_RC_IFF_RI")
    else:
        rhs = ri("RI1") and rc("LC1")
        report["T_RC_IFF_RI"] = _equivalence(
            "T_RC_IFF_RI",
            [("right_clifford", _holds(is_clifford(S, "right"))), ("right_inverse_and_a2Sa", rhs)],
        )

    # right inverse and left Clifford => union of group-like subsemigroups
    if not (regular and _holds(is_right_inverse(S, eidem)) and _holds(is_clifford(S, "left"))):
        report["T_RI_LC_UNION"] = _na("T_RI_LC_UNION")
    elif S.n > UNION_SCAN_MAX_N:
        report["T_RI_LC_UNION"] = _na("T_RI_LC_UNION")
    else:
        report["T_RI_LC_UNION"] = _implication("T_RI_LC_UNION", is_union_of_group_like(S))

    # on right inverse structures: R congruence <=> L = H <=> decomposition
    if not (regular and _holds(is_right_inverse(S, eidem))):
        report["T_RI_CONG"] = _na("T_RI_CONG")
        report["C_CREG"] = _na("C_CREG")
    else:
        r_cong = _holds(is_congruence(S, green_relation(S, "R"), "two_sided"))
        l_eq_h = green_relation(S, "L") == green_relation(S, "H")
        decomp = _holds(is_complete_semilattice_of(S, "right_group_like"))
        report["T_RI_CONG"] = _equivalence(
            "T_RI_CONG",
            [("R_congruence", r_cong), ("L_equals_H", l_eq_h), ("csl_right_group_like", decomp)],
        )
        if not _holds(regularity_variant(S, "left_regular")):
            report["C_CREG"] = _na("C_CREG")
        else:
            creg = _holds(regularity_variant(S, "completely_regular"))
            report["C_CREG"] = _equivalence(
                "C_CREG",
                [
                    ("R_congruence", r_cong),
                    ("L_equals_H", l_eq_h),
                    ("csl_right_group_like", decomp),
                    ("completely_regular", creg),
                ],
            )

    return {tid: report[tid] for tid in THEOREM_IDS}


def outcome_to_json(outcome: TheoremOutcome) -> dict:
    return {
        "hypothesis_met": outcome.hypothesis_met,
        "sides": {name: value for name, value in outcome.sides},
        "verdict": outcome.verdict,
        "witness": list(outcome.witness),
    }


def _sort_key(S: OrderedSemigroup) -> tuple:
    flat_table = tuple(v for row in S.table for v in row)
    flat_leq = tuple(v for row in S.leq for v in row)
    return (S.n, canonical_key(S), flat_table, flat_leq)


def _score_structure(S: OrderedSemigroup, ids, eidem, linv_quant):
    report = theorem_suite(S, eidem, linv_quant)
    return {tid: report[tid].verdict for tid in ids}


def _corpus_worker(args) -> list[tuple[tuple, dict, str]]:
    n, first_row, ids, eidem, linv_quant, allow_large = args
    out = []
    names = default_names(n)
    for table in enumerate_tables(n, allow_large, first_row):
        for leq in compatible_orders(table):
            S = OrderedSemigroup(names, table, leq, label=f"enum{n}")
            verdicts = _score_structure(S, ids, eidem, linv_quant)
            out.append((_sort_key(S), verdicts, to_osg(S)))
    return out


def corpus_verify(
    n_max: int,
    theorems=None,
    eidem: str = "leq",
    linv_quant: str = "forall",
    emit_dir: str | Path | None = None,
    workers: int = 1,
    allow_large: bool = False,
) -> dict:
    """Run the theorem suite over every structure of order 1..n_max.

    Work is split by the first table row when ``workers`` > 1; results are
    merged in canonical-encoding order so parallel and sequential runs emit
    byte-identical summaries and mismatch files.
    """
    ids = tuple(theorems) if theorems else THEOREM_IDS
    unknown = [tid for tid in ids if tid not in THEOREM_IDS]
    if unknown:
        raise ValueError(f"unknown theorem ids: {unknown}")

    tasks = [
        (n, row, ids, eidem, linv_quant, allow_large)
        for n in range(1, n_max + 1)
        for row in product(range(n), repeat=n)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_corpus_worker, tasks))
    else:
        chunks = [_corpus_worker(task) for task in tasks]

    results = sorted(
        (item for chunk in chunks for item in chunk), key=lambda item: item[0]
    )

    counts = {tid: {CONSISTENT: 0, MISMATCH: 0, NOT_APPLICABLE: 0} for tid in ids}
    mismatches = []
    for sort_key, verdicts, osg_text in results:
        for tid, verdict in verdicts.items():
            counts[tid][verdict] += 1
        bad = [tid for tid, verdict in verdicts.items() if verdict == MISMATCH]
        if bad:
            mismatches.append((sort_key, bad, osg_text))

    emitted = []
    if emit_dir is not None:
        target = Path(emit_dir)
        target.mkdir(parents=True, exist_ok=True)
        for sort_key, bad, osg_text in mismatches:
            digest = _text_hash(osg_text)
            for tid in bad:
                name = f"{tid}__{digest}.osg"
                body = osg_text.replace(
                    "osg v1\n", f"osg v1\n# mismatch: {tid}\n", 1
                )
                (target / name).write_text(body)
                emitted.append(name)

    summary = {
        "n_max": n_max,
        "eidem": eidem,
        "linv_quant": linv_quant,
        "structures": len(results),
        "theorems": {tid: counts[tid] for tid in ids},
        "mismatch_count": sum(counts[tid][MISMATCH] for tid in ids),
        "mismatch_files": sorted(set(emitted)),
    }
    return summary


def _text_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def summary_to_json(summary: dict) -> str:
    return json.dumps(summary, indent=2)
