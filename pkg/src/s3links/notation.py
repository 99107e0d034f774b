"""Family notation and diagram text format.

Family diagrams are built as 4-plats.  Strand positions are numbered 0..3
from the top.  Both ends are closed by an outer cap joining positions 0
and 3 and an inner cap joining 1 and 2.  Entries at odd positions
(1st, 3rd, ...) twist the top pair (0, 1); entries at even positions twist
the middle pair (1, 2).  A single entry ``q`` is the standard closed
2-braid diagram of T(2, q).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .diagram import Crossing, Diagram, check

__all__ = [
    "FamilyKind",
    "FamilySpec",
    "NotationError",
    "parse_family",
    "format_family",
    "family_diagram",
    "plat_diagram",
    "plat_layout",
    "PlatLayout",
    "double_twist_diagram",
    "torus2_diagram",
    "continued_fraction",
    "parse_diagram",
    "emit_diagram",
]


class NotationError(ValueError):
    """Malformed family notation or diagram text.

    ``position`` is a 0-based character offset for family notation and
    ``line`` a 1-based line number for diagram text.
    """

    def __init__(self, message, *, position=None, line=None):
        self.position = position
        self.line = line
        where = ""
        if position is not None:
            where = f" at position {position}"
        elif line is not None:
            where = f" on line {line}"
        super().__init__(message + where)


class FamilyKind(Enum):
    PLAT = "C"
    DOUBLE_TWIST = "J"
    TORUS2 = "T"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: tuple[int, ...]

    @property
    def plat_entries(self) -> tuple[int, ...]:
        if self.kind is FamilyKind.TORUS2:
            return (self.params[1],)
        return self.params

    @property
    def is_conway_form(self) -> bool:
        """All entries even and nonzero, i.e. C(2a1, 2b1, ..., 2a_{m+1})."""
        return (self.kind is FamilyKind.PLAT and len(self.params) % 2 == 1
                and all(c % 2 == 0 for c in self.params))

    def __str__(self) -> str:
        return format_family(self)


_FAMILY_RE = re.compile(r"\s*([A-Za-z]+)\s*\(")
_INT_RE = re.compile(r"\s*([+-]?\d+)\s*")


def parse_family(text: str) -> FamilySpec:
    """Parse ``C(i1,...,in)``, ``J(k,l)`` or ``T(2,q)``."""
    m = _FAMILY_RE.match(text)
    if not m:
        raise NotationError("expected C(...), J(k,l) or T(2,q)", position=0)
    name = m.group(1)
    try:
        kind = FamilyKind(name)
    except ValueError:
        raise NotationError(f"unknown family {name!r}", position=m.start(1)) from None
    pos = m.end()
    params = []
    starts = []
    while True:
        im = _INT_RE.match(text, pos)
        if not im:
            raise NotationError("expected a signed integer", position=pos)
        params.append(int(im.group(1)))
        starts.append(im.start(1))
        pos = im.end()
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == ")":
            pos += 1
            break
        raise NotationError("expected ',' or ')'", position=pos)
    if text[pos:].strip():
        raise NotationError("trailing text", position=pos + len(text[pos:]) - len(text[pos:].lstrip()))

    if kind is FamilyKind.DOUBLE_TWIST and len(params) != 2:
        raise NotationError(f"J takes 2 parameters, got {len(params)}", position=m.end())
    if kind is FamilyKind.TORUS2:
        if len(params) != 2:
            raise NotationError(f"T takes 2 parameters, got {len(params)}", position=m.end())
        if params[0] != 2:
            raise NotationError("only 2-strand torus links T(2,q) are supported",
                                position=starts[0])
    nonzero = params[1:] if kind is FamilyKind.TORUS2 else params
    offset = 1 if kind is FamilyKind.TORUS2 else 0
    for i, c in enumerate(nonzero):
        if c == 0:
            raise NotationError("entries must be nonzero", position=starts[i + offset])
    return FamilySpec(kind, tuple(params))


def format_family(spec: FamilySpec) -> str:
    return f"{spec.kind.value}({','.join(str(p) for p in spec.params)})"


def continued_fraction(entries) -> tuple[int, int]:
    """Return ``(p, q)`` with ``p/q = c1 + 1/(c2 + 1/(... + 1/cn))``.

    The pair is not normalised for sign; ``p`` may be 0.
    """
    p, q = 1, 0
    for c in reversed(entries):
        p, q = c * p + q, p
    return p, q


@dataclass(frozen=True)
class PlatLayout:
    """A generated plat diagram plus where its strand pieces landed.

    ``slot_arc[(k, j)]`` is the arc occupying position ``j`` just left of
    column ``k`` (``k == num_columns`` is right of the last column).
    """

    entries: tuple[int, ...]
    diagram: Diagram
    slot_arc: dict

    @property
    def seed_arcs(self) -> tuple[int, int]:
        """Arcs at the left end on positions 0 and 1."""
        return self.slot_arc[(0, 0)], self.slot_arc[(0, 1)]


def _columns(entries):
    cols = []
    for i, c in enumerate(entries):
        top = 0 if i % 2 == 0 else 1
        # Even-position boxes use the opposite handedness so that an
        # all-positive entry list gives an alternating diagram.
        hand = 1 if c > 0 else -1
        if i % 2 == 1:
            hand = -hand
        cols.extend([(top, hand)] * abs(c))
    return cols


_NESTED_CAPS = {0: 3, 3: 0, 1: 2, 2: 1}
_STACKED_CAPS = {0: 1, 1: 0, 2: 3, 3: 2}


def plat_layout(entries) -> PlatLayout:
    entries = tuple(int(c) for c in entries)
    if not entries:
        raise ValueError("plat needs at least one entry")
    if any(c == 0 for c in entries):
        raise ValueError(f"plat entries must be nonzero: {entries}")
    cols = _columns(entries)
    ncol = len(cols)
    right_cap = _NESTED_CAPS if len(entries) % 2 else _STACKED_CAPS

    def step(k, j, d):
        """Follow the strand from slot (k, j) travelling d (+1 right).

        Returns ``(next_slot, direction, passage)`` where passage is ``(col, kind)``
        with kind 'down' for the (k,p)-(k+1,p+1) strand, or ``None``.
        """
        if d == 1:
            if k == ncol:
                return (k, right_cap[j]), -1, None
            p, _ = cols[k]
            if j == p:
                return (k + 1, p + 1), 1, (k, "down")
            if j == p + 1:
                return (k + 1, p), 1, (k, "up")
            return (k + 1, j), 1, None
        if k == 0:
            return (0, _NESTED_CAPS[j]), 1, None
        p, _ = cols[k - 1]
        if j == p + 1:
            return (k - 1, p), -1, (k - 1, "down")
        if j == p:
            return (k - 1, p + 1), -1, (k - 1, "up")
        return (k - 1, j), -1, None

    def is_over(col, kind):
        hand = cols[col][1]
        return (kind == "down") == (hand == 1)

    all_slots = [(k, j) for k in range(ncol + 1) for j in range(4)]
    visited = set()
    # column -> {"over"|"under": (slot_in, slot_out, direction, kind)}
    passages = {}
    traversals = []
    for start in all_slots:
        if start in visited:
            continue
        # entries: (slot, leaves through an under passage?)
        seq = []
        # Components start leftward; with this orientation the forced
        # colors in a top-pair twist seeded by (s, st) run s, st / t, ts.
        slot, d = start, -1
        while True:
            visited.add(slot)
            nxt, nd, passage = step(slot[0], slot[1], d)
            under = False
            if passage is not None:
                col, kind = passage
                under = not is_over(col, kind)
                passages.setdefault(col, {})["under" if under else "over"] = (slot, nxt, d, kind)
            seq.append((slot, under))
            slot, d = nxt, nd
            if slot == start:
                break
        traversals.append(seq)

    # An arc runs from just after one under passage to the next.
    slot_arc_raw = {}
    arc_count = 0
    for seq in traversals:
        unders = [i for i, (_, under) in enumerate(seq) if under]
        if not unders:
            raise ValueError(f"plat {entries} has a component that never passes "
                             f"under a crossing; not representable as a Diagram")
        first = unders[0] + 1
        order = seq[first:] + seq[:first]
        for i, (slot, under) in enumerate(order):
            slot_arc_raw[slot] = arc_count
            if under:
                arc_count += 1

    # Renumber arcs by their leftmost, then topmost slot.
    first_slot = {}
    for slot in all_slots:
        a = slot_arc_raw[slot]
        if a not in first_slot:
            first_slot[a] = slot
    ranked = sorted(first_slot, key=lambda a: first_slot[a])
    renum = {a: i for i, a in enumerate(ranked)}
    slot_arc = {s: renum[a] for s, a in slot_arc_raw.items()}

    vec = {("down", 1): (1, -1), ("down", -1): (-1, 1),
           ("up", 1): (1, 1), ("up", -1): (-1, -1)}
    crossings = []
    for col in range(ncol):
        ov, un = passages[col]["over"], passages[col]["under"]
        o = vec[(ov[3], ov[2])]
        u = vec[(un[3], un[2])]
        cross = o[0] * u[1] - o[1] * u[0]
        sign = 1 if cross > 0 else -1
        crossings.append(Crossing(sign, slot_arc[ov[0]], slot_arc[un[0]], slot_arc[un[1]]))

    d = Diagram(arc_count, tuple(crossings))
    check(d)
    return PlatLayout(entries, d, slot_arc)


def plat_diagram(*entries) -> Diagram:
    """4-plat diagram with twist boxes ``entries`` (all nonzero)."""
    if len(entries) == 1 and not isinstance(entries[0], int):
        entries = tuple(entries[0])
    return plat_layout(entries).diagram


def double_twist_diagram(k: int, l: int) -> Diagram:
    return plat_diagram(k, l)


def torus2_diagram(q: int) -> Diagram:
    return plat_diagram(q)


def family_diagram(spec: FamilySpec) -> Diagram:
    return plat_diagram(spec.plat_entries)


_ARCS_RE = re.compile(r"^arcs\s+(\d+)$")
_LOOPS_RE = re.compile(r"^loops\s+(\d+)$")
_CROSS_RE = re.compile(r"^x\s+([+-])\s+(\d+)\s+(\d+)\s+(\d+)$")


def parse_diagram(text: str) -> Diagram:
    """Parse the line-oriented diagram format and validate the result."""
    num_arcs = None
    loops = 0
    crossings = []
    seen_crossing = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if num_arcs is None:
            m = _ARCS_RE.match(line)
            if not m:
                raise NotationError(f"expected 'arcs <N>', got {line!r}", line=lineno)
            num_arcs = int(m.group(1))
            continue
        m = _LOOPS_RE.match(line)
        if m:
            if seen_crossing or loops:
                raise NotationError("'loops' must directly follow 'arcs'", line=lineno)
            loops = int(m.group(1))
            continue
        m = _CROSS_RE.match(line)
        if not m:
            raise NotationError(f"expected 'x <+|-> <over> <in> <out>', got {line!r}",
                                line=lineno)
        seen_crossing = True
        sign = 1 if m.group(1) == "+" else -1
        crossings.append(Crossing(sign, int(m.group(2)), int(m.group(3)), int(m.group(4))))
    if num_arcs is None:
        raise NotationError("missing 'arcs <N>' header", line=1)
    return check(Diagram(num_arcs, tuple(crossings), loops))


def emit_diagram(d: Diagram) -> str:
    lines = [f"arcs {d.num_arcs}"]
    if d.free_loops:
        lines.append(f"loops {d.free_loops}")
    for c in d.crossings:
        s = "+" if c.sign == 1 else "-"
        lines.append(f"x {s} {c.over} {c.under_in} {c.under_out}")
    return "\n".join(lines) + "\n"

