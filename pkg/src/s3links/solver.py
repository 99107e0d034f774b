"""S3-colorings of diagrams, Fox colorings and the link determinant."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from . import kernel
from .diagram import Diagram, check, components, under_color
from .group import (ELEMENTS, NON_IDENTITY, ClassLabel, S3Element, class_of,
                    format_element, parse_element)
from .notation import plat_layout

__all__ = [
    "Coloring",
    "ColoringError",
    "Classification",
    "as_coloring",
    "is_valid_coloring",
    "enumerate_colorings",
    "palette",
    "classify",
    "component_class_profile",
    "constructive_conway_coloring",
    "fox_coloring_count",
    "determinant",
    "bareiss_determinant",
    "format_coloring",
    "parse_coloring",
]

#: Colors indexed by arc id; free-loop arcs follow the crossing arcs.
Coloring = tuple[S3Element, ...]


class ColoringError(ValueError):
    """A coloring is incomplete, malformed or not valid where required."""


def as_coloring(d: Diagram, c) -> Coloring:
    """Normalise a sequence or ``{arc: element}`` mapping to a Coloring."""
    n = d.total_arcs
    if isinstance(c, Mapping):
        missing = [a for a in range(n) if a not in c]
        if missing:
            raise ColoringError(f"no color assigned to arc(s) {missing}")
        extra = sorted(set(c) - set(range(n)))
        if extra:
            raise ColoringError(f"colors given for unknown arc(s) {extra}")
        c = [c[a] for a in range(n)]
    elif not isinstance(c, Sequence):
        raise ColoringError(f"expected a sequence or mapping, got {type(c).__name__}")
    if len(c) != n:
        raise ColoringError(f"coloring has {len(c)} entries for {n} arcs")
    for a, g in enumerate(c):
        if not isinstance(g, S3Element):
            raise ColoringError(f"arc {a}: {g!r} is not an S3 element")
    return tuple(c)


def is_valid_coloring(d: Diagram, c) -> bool:
    c = as_coloring(d, c)
    if S3Element.E in c:
        return False
    return all(under_color(x.sign, c[x.over], c[x.under_in]) is c[x.under_out]
               for x in d.crossings)


def enumerate_colorings(d: Diagram) -> list[Coloring]:
    """Every valid coloring of ``d`` exactly once, in lexicographic order."""
    check(d)
    raw = kernel.enumerate_colorings(d.num_arcs, *d.arrays())
    base = [tuple(ELEMENTS[v] for v in col) for col in raw]
    if not d.free_loops:
        return base
    loops = list(itertools.product(NON_IDENTITY, repeat=d.free_loops))
    return [col + extra for col in base for extra in loops]


def palette(c) -> frozenset:
    return frozenset(c)


@dataclass
class Classification:
    """Per palette size: how many colorings, and the first one found."""

    counts: dict[int, int] = field(default_factory=dict)
    witnesses: dict[int, Coloring] = field(default_factory=dict)

    @property
    def n_set(self) -> frozenset:
        return frozenset(self.counts)

    def __contains__(self, n) -> bool:
        return n in self.counts

    def to_json(self) -> dict:
        return {"n": sorted(self.counts),
                "counts": {str(n): self.counts[n] for n in sorted(self.counts)}}


def classify(d: Diagram, colorings=None) -> Classification:
    result = Classification()
    for col in enumerate_colorings(d) if colorings is None else colorings:
        n = len(set(col))
        if n not in result.counts:
            result.counts[n] = 0
            result.witnesses[n] = col
        result.counts[n] += 1
    return result


def component_class_profile(d: Diagram, c) -> dict[int, ClassLabel]:
    """The conjugacy class shared by the colors of each component.

    Components are numbered as in :func:`diagram.components`, followed by
    one entry per free loop.
    """
    c = as_coloring(d, c)
    if not is_valid_coloring(d, c):
        raise ColoringError("coloring is not valid on this diagram")
    profile = {}
    blocks = components(d)
    for k, block in enumerate(blocks):
        labels = {class_of(c[a]) for a in block}
        if len(labels) != 1:
            raise AssertionError(f"component {k} mixes classes {labels}")
        profile[k] = labels.pop()
    for i in range(d.free_loops):
        profile[len(blocks) + i] = class_of(c[d.num_arcs + i])
    return profile


def constructive_conway_coloring(entries) -> Coloring | None:
    """Seed-and-propagate coloring of the Conway diagram ``C(entries)``.

    The arcs at the left end on positions 0 and 1 get ``s`` and ``st``;
    every other color is forced through the twist boxes.  Returns ``None``
    when the forced colors clash at the right-hand closure.
    """
    entries = tuple(entries)
    if not entries or any(e == 0 or e % 2 for e in entries):
        raise ValueError(f"Conway form needs even nonzero entries, got {entries}")
    layout = plat_layout(entries)
    d = layout.diagram
    x, y = layout.seed_arcs
    fixed = [0] * d.num_arcs
    fixed[x] = S3Element.S.index
    fixed[y] = S3Element.ST.index
    forced = kernel.propagate(d.num_arcs, *d.arrays(), fixed)
    if forced is None:
        return None
    if 0 in forced:
        raise AssertionError("seeds did not determine every arc")
    return tuple(ELEMENTS[v] for v in forced)


def _coloring_matrix(d: Diagram):
    rows = []
    for x in d.crossings:
        row = [0] * d.num_arcs
        row[x.over] += 2
        row[x.under_in] -= 1
        row[x.under_out] -= 1
        rows.append(row)
    return rows


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % f for f in range(2, int(p ** 0.5) + 1))


def fox_coloring_count(d: Diagram, p: int) -> int:
    """Number of Fox colorings mod ``p``, trivial ones included."""
    check(d)
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if d.free_loops:
        raise ValueError("Fox coloring count needs every component to pass under a crossing")
    rows = [[v % p for v in row] for row in _coloring_matrix(d)]
    rank = 0
    ncol = d.num_arcs
    for col in range(ncol):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(v - f * w) % p for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return p ** (ncol - rank)


def bareiss_determinant(matrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free)."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(d: Diagram, row: int = -1, col: int = -1) -> int:
    """Absolute value of the first minor deleting ``row`` and ``col``."""
    check(d)
    if d.free_loops:
        raise ValueError("determinant is defined here only for diagrams without free loops")
    n = d.num_arcs
    if n == 0:
        raise ValueError("determinant needs at least one crossing")
    row %= n
    col %= n
    m = _coloring_matrix(d)
    minor = [[v for j, v in enumerate(r) if j != col] for i, r in enumerate(m) if i != row]
    return abs(bareiss_determinant(minor))


def format_coloring(c) -> str:
    return "".join(f"arc {a} {format_element(g)}\n" for a, g in enumerate(c))


def parse_coloring(text: str, d: Diagram | None = None) -> Coloring:
    """Read ``arc <i> <element>`` lines; completeness is checked against ``d``."""
    assignment = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 3 or line[0] != "arc" or not line[1].isdigit():
            raise ColoringError(f"line {lineno}: expected 'arc <i> <element>'")
        a = int(line[1])
        if a in assignment:
            raise ColoringError(f"line {lineno}: arc {a} colored twice")
        try:
            assignment[a] = parse_element(line[2])
        except ValueError as exc:
            raise ColoringError(f"line {lineno}: {exc}") from None
    if d is None:
        n = max(assignment, default=-1) + 1
        d = Diagram(n)
    return as_coloring(d, assignment)
