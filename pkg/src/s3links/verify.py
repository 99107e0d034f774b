"""Verification sweeps over the torus, double-twist and Conway families.

Each sweep returns a report dict.  Every row carries a ``checks`` mapping
of named booleans; a row with a failed check also carries the diagram in
the text format so it can be re-run on its own.
"""

from __future__ import annotations

import random
import time

from .diagram import linking_number
from .group import THREE_CYCLES, TRANSPOSITIONS
from .moves import MoveError, promote_to_five
from .notation import emit_diagram, format_family, FamilySpec, FamilyKind, plat_diagram
from .solver import classify, constructive_conway_coloring, determinant, is_valid_coloring

__all__ = [
    "check_promotion",
    "verify_torus",
    "verify_double_twist",
    "verify_conway",
    "sample_conway",
]


def _finish(command, inputs, rows, started):
    return {
        "command": command,
        "inputs": inputs,
        "results": rows,
        "passed": all(all(r["checks"].values()) for r in rows),
        "elapsed_s": round(time.perf_counter() - started, 4),
    }


def _row(family, d, checks, **data):
    row = {"family": family, **data, "checks": checks}
    if not all(checks.values()):
        row["diagram"] = emit_diagram(d)
    return row


def check_promotion(d, coloring) -> dict:
    """Promote a 4-coloring and check the result and each inserted middle arc.

    A missing transposition must come from a transposition-colored arc
    slid under a 3-cycle-colored arc, and a missing 3-cycle the other way
    round.
    """
    try:
        promo = promote_to_five(d, coloring)
    except MoveError as exc:
        return {"ok": False, "error": str(exc)}
    original = set(coloring)
    patterns_ok = True
    for rec in promo.moves:
        mid = promo.coloring[rec.new_arcs[0]]
        moving = promo.coloring[rec.site["moving_arc"]]
        over = promo.coloring[rec.site["over_arc"]]
        if mid in TRANSPOSITIONS:
            patterns_ok &= moving in TRANSPOSITIONS and over in THREE_CYCLES
        else:
            patterns_ok &= moving in THREE_CYCLES and over in TRANSPOSITIONS
        patterns_ok &= mid not in original
    ok = (is_valid_coloring(promo.diagram, promo.coloring)
          and len(set(promo.coloring)) == 5 and patterns_ok)
    return {"ok": ok, "moves": [m.to_json() for m in promo.moves],
            "crossings": promo.diagram.num_crossings}


def verify_torus(q_max: int = 20, q_min: int = 2, promote: bool = True) -> dict:
    """T(2,q): 4-colorable iff 4 | q, 3-colorable iff 3 | det, det = q."""
    if q_max < q_min or q_min < 1:
        raise ValueError(f"need 1 <= q_min <= q_max, got {q_min}..{q_max}")
    started = time.perf_counter()
    rows = []
    for q in range(q_min, q_max + 1):
        d = plat_diagram(q)
        cls = classify(d)
        det = determinant(d)
        checks = {
            "four_iff_q_0_mod_4": (4 in cls) == (q % 4 == 0),
            "three_iff_det_0_mod_3": (3 in cls) == (det % 3 == 0),
            "det_equals_q": det == q,
        }
        link_n = set(cls.n_set)
        data = {"q": q, "n_set": sorted(cls.n_set), "counts": cls.to_json()["counts"],
                "determinant": det}
        if promote and 4 in cls:
            promo = check_promotion(d, cls.witnesses[4])
            checks["promotion_to_five"] = promo["ok"]
            data["promotion"] = promo
            if promo["ok"]:
                link_n.add(5)
        data["link_n_set"] = sorted(link_n)
        rows.append(_row(f"T(2,{q})", d, checks, **data))
    return _finish("verify-torus", {"q_min": q_min, "q_max": q_max}, rows, started)


def verify_double_twist(k_max: int = 7, l_max: int = 7, promote: bool = True) -> dict:
    """J(k,l), odd k, l: 4-colorable iff kl = 3 mod 4, 3-colorable iff
    kl = 2 mod 3, det = 1 + kl."""
    if k_max < 1 or l_max < 1:
        raise ValueError("bounds must be >= 1")
    started = time.perf_counter()
    rows = []
    for k in range(1, k_max + 1, 2):
        for l in range(1, l_max + 1, 2):
            d = plat_diagram(k, l)
            cls = classify(d)
            det = determinant(d)
            kl = k * l
            checks = {
                "four_iff_kl_3_mod_4": (4 in cls) == (kl % 4 == 3),
                "three_iff_kl_2_mod_3": (3 in cls) == (kl % 3 == 2),
                "det_equals_1_plus_kl": det == 1 + kl,
            }
            data = {"k": k, "l": l, "n_set": sorted(cls.n_set),
                    "counts": cls.to_json()["counts"], "determinant": det}
            if promote and 4 in cls:
                promo = check_promotion(d, cls.witnesses[4])
                checks["promotion_to_five"] = promo["ok"]
                data["promotion"] = promo
            rows.append(_row(f"J({k},{l})", d, checks, **data))
    return _finish("verify-j", {"k_max": k_max, "l_max": l_max}, rows, started)


def sample_conway(rng: random.Random, max_crossings: int = 16, max_twist: int = 3,
                  max_m: int = 2) -> tuple[int, ...]:
    """Draw C(2a1, 2b1, ..., 2a_{m+1}) with 1 <= |a_i|, |b_j| <= max_twist."""
    if max_crossings < 2:
        raise ValueError("max_crossings must be at least 2")
    while True:
        m = rng.randint(0, max_m)
        entries = tuple(2 * rng.choice((-1, 1)) * rng.randint(1, max_twist)
                        for _ in range(2 * m + 1))
        if sum(abs(e) for e in entries) <= max_crossings:
            return entries


def verify_conway(seed: int = 0, samples: int = 100, max_crossings: int = 16,
                  promote: bool = True) -> dict:
    """Sampled Conway diagrams against the seed-and-propagate construction,
    5-colorable => 4-colorable, and linking-number parity."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    started = time.perf_counter()
    rng = random.Random(seed)
    rows = []
    for _ in range(samples):
        entries = sample_conway(rng, max_crossings)
        d = plat_diagram(*entries)
        a_sum = sum(abs(e) // 2 for e in entries[::2])
        even = a_sum % 2 == 0
        built = constructive_conway_coloring(entries)
        cls = classify(d)
        lk = linking_number(d)
        checks = {
            "construct_iff_sum_a_even": (built is not None) == even,
            "construct_valid_4_colors": built is None or (
                is_valid_coloring(d, built) and len(set(built)) == 4),
            "five_implies_four": 5 not in cls or 4 in cls,
            "linking_parity": lk % 2 == a_sum % 2,
        }
        data = {"entries": list(entries), "sum_abs_a": a_sum, "constructed": built is not None,
                "n_set": sorted(cls.n_set), "linking_number": lk}
        four = built if built is not None else cls.witnesses.get(4)
        if promote and four is not None:
            promo = check_promotion(d, four)
            checks["promotion_to_five"] = promo["ok"]
            data["promotion"] = promo
        family = format_family(FamilySpec(FamilyKind.PLAT, entries))
        rows.append(_row(family, d, checks, **data))
    return _finish("verify-conway", {"seed": seed, "samples": samples,
                                     "max_crossings": max_crossings}, rows, started)
