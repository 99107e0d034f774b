"""Combinatorial model of an oriented link diagram.

A diagram is a list of signed crossings over dense arc indices.  Each
crossing names its over arc, the under arc entering it and the under arc
leaving it.  Geometry is not stored: the sign alone selects which of the
two crossing relations applies to a coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import S3Element, conjugate, inverse

__all__ = [
    "Crossing",
    "Diagram",
    "DiagramError",
    "validate",
    "check",
    "components",
    "component_count",
    "component_of_arc",
    "under_color",
    "linking_number",
]


class DiagramError(ValueError):
    """A diagram violates the arc/crossing incidence invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid diagram: " + "; ".join(self.violations))


@dataclass(frozen=True)
class Crossing:
    sign: int
    over: int
    under_in: int
    under_out: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class Diagram:
    """Signed crossings over arcs ``0 .. num_arcs - 1``.

    ``free_loops`` counts crossing-free circle components; each carries
    one arc that is not indexed among the crossing arcs.
    """

    num_arcs: int
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0
    _components: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def total_arcs(self) -> int:
        """Crossing arcs plus one arc per free loop."""
        return self.num_arcs + self.free_loops

    def arrays(self):
        """Return ``(over, under_in, under_out, sign)`` as int lists."""
        cs = self.crossings
        return ([c.over for c in cs], [c.under_in for c in cs],
                [c.under_out for c in cs], [c.sign for c in cs])


def validate(d: Diagram) -> list[str]:
    """List every invariant violation of ``d``; empty means valid."""
    problems = []
    if d.num_arcs < 0:
        problems.append(f"negative arc count {d.num_arcs}")
    if d.free_loops < 0:
        problems.append(f"negative free loop count {d.free_loops}")
    n = max(d.num_arcs, 0)
    ins = [0] * n
    outs = [0] * n
    for i, c in enumerate(d.crossings):
        for role in ("over", "under_in", "under_out"):
            a = getattr(c, role)
            if not isinstance(a, int) or not 0 <= a < n:
                problems.append(f"crossing {i}: {role} arc {a!r} out of range 0..{n - 1}")
        if 0 <= c.under_in < n:
            ins[c.under_in] += 1
        if 0 <= c.under_out < n:
            outs[c.under_out] += 1
    for a in range(n):
        if ins[a] != 1:
            problems.append(f"arc {a} enters {ins[a]} undercrossings (expected 1)")
        if outs[a] != 1:
            problems.append(f"arc {a} leaves {outs[a]} undercrossings (expected 1)")
    return problems


def check(d: Diagram) -> Diagram:
    """Return ``d`` unchanged, raising :class:`DiagramError` if invalid."""
    problems = validate(d)
    if problems:
        raise DiagramError(problems)
    return d


def components(d: Diagram) -> list[tuple[int, ...]]:
    """Partition the crossing arcs into link components.

    Arcs are linked by the successor relation ``under_in -> under_out``.
    Blocks are listed in order of their smallest arc, each in traversal
    order starting from that arc.  Free loops are not included.
    """
    if d._components is not None:
        return list(d._components)
    check(d)
    succ = [0] * d.num_arcs
    for c in d.crossings:
        succ[c.under_in] = c.under_out
    seen = [False] * d.num_arcs
    blocks = []
    for start in range(d.num_arcs):
        if seen[start]:
            continue
        block = []
        a = start
        while not seen[a]:
            seen[a] = True
            block.append(a)
            a = succ[a]
        blocks.append(tuple(block))
    object.__setattr__(d, "_components", tuple(blocks))
    return blocks


def component_count(d: Diagram) -> int:
    return len(components(d)) + d.free_loops


def component_of_arc(d: Diagram) -> list[int]:
    """Map each crossing arc to the index of its component block."""
    owner = [0] * d.num_arcs
    for k, block in enumerate(components(d)):
        for a in block:
            owner[a] = k
    return owner


def under_color(sign: int, x: S3Element, y: S3Element) -> S3Element:
    """Color of the outgoing under arc given the over and incoming colors.

    Positive crossings satisfy ``x y = z x`` and negative ones ``x z = y x``.
    """
    if x is S3Element.E or y is S3Element.E:
        raise ValueError("colors must be non-identity elements")
    if sign == 1:
        return conjugate(x, y)
    if sign == -1:
        return conjugate(inverse(x), y)
    raise ValueError(f"crossing sign must be +1 or -1, got {sign!r}")


def linking_number(d: Diagram) -> int:
    """Linking number of a diagram with exactly two crossing components."""
    blocks = components(d)
    if len(blocks) != 2 or d.free_loops:
        raise ValueError(f"linking number needs exactly 2 components with crossings, "
                         f"got {len(blocks)} (+{d.free_loops} free loops)")
    owner = component_of_arc(d)
    total = sum(c.sign for c in d.crossings if owner[c.over] != owner[c.under_in])
    if total % 2:
        raise AssertionError("odd inter-component sign sum")
    return total // 2
