"""Reidemeister I/II insertions on colored diagrams and 4-to-5 promotion.

Moves act on the incidence structure only, so an R2 insertion is allowed
between any two distinct arcs.  New arcs are appended after the existing
crossing arcs; free-loop colors shift up to stay last.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Crossing, Diagram, under_color
from .group import NON_IDENTITY, THREE_CYCLES, TRANSPOSITIONS
from .solver import Coloring, ColoringError, as_coloring, is_valid_coloring

__all__ = ["MoveRecord", "MoveError", "Promotion", "r1_insert", "r2_insert", "promote_to_five"]


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class MoveRecord:
    kind: str
    site: dict
    new_arcs: tuple[int, ...]
    new_crossings: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"kind": self.kind, "site": dict(self.site),
                "new_arcs": list(self.new_arcs), "new_crossings": list(self.new_crossings)}


def _checked(d, c):
    c = as_coloring(d, c)
    if not is_valid_coloring(d, c):
        raise ColoringError("input coloring is not valid on the diagram")
    return c


def _terminal_crossing(d, arc):
    return next(i for i, x in enumerate(d.crossings) if x.under_in == arc)


def _with_new_arcs(d, c, crossings, colors):
    n = d.num_arcs
    d2 = Diagram(n + len(colors), tuple(crossings), d.free_loops)
    c2 = c[:n] + tuple(colors) + c[n:]
    return d2, c2


def r1_insert(d: Diagram, c, arc: int, sign: int = 1):
    """Put a curl at the far end of ``arc``.

    The arc passes over itself and then under, so its tail becomes a new
    arc with the same color.
    """
    c = _checked(d, c)
    if not 0 <= arc < d.num_arcs:
        raise MoveError(f"arc {arc} is not a crossing arc of the diagram")
    if sign not in (1, -1):
        raise MoveError(f"sign must be +1 or -1, got {sign!r}")
    new = d.num_arcs
    end = _terminal_crossing(d, arc)
    crossings = list(d.crossings)
    old = crossings[end]
    crossings[end] = Crossing(old.sign, old.over, new, old.under_out)
    crossings.append(Crossing(sign, arc, arc, new))
    color = under_color(sign, c[arc], c[arc])
    d2, c2 = _with_new_arcs(d, c, crossings, [color])
    record = MoveRecord("R1Insert", {"arc": arc, "sign": sign}, (new,), (len(crossings) - 1,))
    return d2, c2, record


def r2_insert(d: Diagram, c, moving_arc: int, over_arc: int):
    """Slide the end of ``moving_arc`` under ``over_arc``.

    Adds a positive then a negative crossing: the moving arc now ends at
    the first one, a middle arc runs between them, and a tail arc carries
    the original color on to the old undercrossing.
    """
    c = _checked(d, c)
    for a in (moving_arc, over_arc):
        if not 0 <= a < d.num_arcs:
            raise MoveError(f"arc {a} is not a crossing arc of the diagram")
    if moving_arc == over_arc:
        raise MoveError("R2 needs two distinct arcs")
    mid, tail = d.num_arcs, d.num_arcs + 1
    end = _terminal_crossing(d, moving_arc)
    crossings = list(d.crossings)
    old = crossings[end]
    crossings[end] = Crossing(old.sign, old.over, tail, old.under_out)
    crossings.append(Crossing(1, over_arc, moving_arc, mid))
    crossings.append(Crossing(-1, over_arc, mid, tail))
    mid_color = under_color(1, c[over_arc], c[moving_arc])
    tail_color = under_color(-1, c[over_arc], mid_color)
    d2, c2 = _with_new_arcs(d, c, crossings, [mid_color, tail_color])
    k = len(crossings)
    record = MoveRecord("R2Insert", {"moving_arc": moving_arc, "over_arc": over_arc},
                        (mid, tail), (k - 2, k - 1))
    return d2, c2, record


@dataclass
class Promotion:
    diagram: Diagram
    coloring: Coloring
    moves: list[MoveRecord] = field(default_factory=list)


def _find_pair(c, n, moving_class, over_class, target):
    for m in range(n):
        if c[m] not in moving_class:
            continue
        for o in range(n):
            if o != m and c[o] in over_class and under_color(1, c[o], c[m]) is target:
                return m, o
    return None


def promote_to_five(d: Diagram, c) -> Promotion:
    """Turn a 4-color coloring into a 5-color one by R2 insertions.

    A missing transposition is produced by sliding a transposition-colored
    arc under a 3-cycle-colored one; a missing 3-cycle by sliding a
    3-cycle-colored arc under a transposition-colored one.
    """
    c = _checked(d, c)
    used = set(c)
    if len(used) != 4:
        raise MoveError(f"promotion needs a 4-color coloring, got {len(used)} colors")
    missing = [g for g in NON_IDENTITY if g not in used]
    result = Promotion(d, c)
    for target in missing:
        if target in TRANSPOSITIONS:
            classes = (TRANSPOSITIONS, THREE_CYCLES)
            case = "missing transposition"
        else:
            classes = (THREE_CYCLES, TRANSPOSITIONS)
            case = "missing 3-cycle"
        for _ in range(2):
            pair = _find_pair(result.coloring, result.diagram.num_arcs, *classes, target)
            if pair is None:
                raise MoveError(f"{case} {target}: no crossing arc pair produces it")
            dd, cc, rec = r2_insert(result.diagram, result.coloring, *pair)
            result.diagram, result.coloring = dd, cc
            result.moves.append(rec)
            if target in cc:
                break
        else:
            raise MoveError(f"{case} {target}: not produced after 2 insertions")
    if len(set(result.coloring)) != 5:
        raise AssertionError("promotion finished without 5 colors")
    return result
