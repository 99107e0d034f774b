"""Arithmetic in the symmetric group of degree three.

Elements are the six reduced words in the generators ``s`` and ``t``
subject to ``ss = tt = e`` and ``sts = tst``.  The multiplication table is
computed once at import by rewriting concatenated words to normal form, so
no permutation action (and hence no left/right convention) is involved.
"""

from __future__ import annotations

from enum import Enum

__all__ = [
    "S3Element",
    "ClassLabel",
    "ELEMENTS",
    "NON_IDENTITY",
    "TRANSPOSITIONS",
    "THREE_CYCLES",
    "reduce_word",
    "mul",
    "inverse",
    "conjugate",
    "class_of",
    "parse_element",
    "format_element",
    "ElementParseError",
]

# Rewriting system for the presentation <s, t | s^2, t^2, sts = tst>.
# Shortlex with s < t; complete (critical pairs checked in the tests).
_RULES = (("ss", ""), ("tt", ""), ("tst", "sts"))


def reduce_word(word: str) -> str:
    """Rewrite a word over ``{s, t}`` to its normal form.

    ``"e"`` and the empty string both denote the identity; the identity is
    returned as ``"e"``.
    """
    if word == "e":
        word = ""
    if set(word) - {"s", "t"}:
        raise ValueError(f"not a word in s, t: {word!r}")
    changed = True
    while changed:
        changed = False
        for lhs, rhs in _RULES:
            i = word.find(lhs)
            if i >= 0:
                word = word[:i] + rhs + word[i + len(lhs):]
                changed = True
                break
    return word or "e"


class ElementParseError(ValueError):
    """Raised for a token that does not name an element of S3."""

    def __init__(self, token):
        self.token = token
        super().__init__(f"unknown S3 element token {token!r} "
                         f"(expected one of e, s, t, sts, st, ts)")


class S3Element(Enum):
    """One of the six elements, valued by its normal-form word.

    Definition order ``e < s < t < sts < st < ts`` is the canonical
    enumeration order used throughout the package.
    """

    E = "e"
    S = "s"
    T = "t"
    STS = "sts"
    ST = "st"
    TS = "ts"

    @property
    def index(self) -> int:
        return _INDEX[self]

    @property
    def word(self) -> str:
        return self.value

    def __mul__(self, other: "S3Element") -> "S3Element":
        if not isinstance(other, S3Element):
            return NotImplemented
        return ELEMENTS[MUL_TABLE[_INDEX[self]][_INDEX[other]]]

    def __lt__(self, other: "S3Element") -> bool:
        if not isinstance(other, S3Element):
            return NotImplemented
        return _INDEX[self] < _INDEX[other]

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"S3Element({self.value!r})"


class ClassLabel(Enum):
    IDENTITY = "Identity"
    TRANSPOSITION = "Transposition"
    THREE_CYCLE = "ThreeCycle"

    def __str__(self) -> str:
        return self.value


ELEMENTS: tuple[S3Element, ...] = tuple(S3Element)
NON_IDENTITY: tuple[S3Element, ...] = ELEMENTS[1:]
TRANSPOSITIONS = frozenset({S3Element.S, S3Element.T, S3Element.STS})
THREE_CYCLES = frozenset({S3Element.ST, S3Element.TS})

_INDEX = {a: i for i, a in enumerate(ELEMENTS)}
_BY_WORD = {a.value: a for a in ELEMENTS}


def _build_tables():
    words = [a.value for a in ELEMENTS]
    table = []
    for u in words:
        row = []
        for v in words:
            w = reduce_word((u if u != "e" else "") + (v if v != "e" else ""))
            if w not in _BY_WORD:
                raise AssertionError(f"rewriting left non-normal word {w!r}")
            row.append(_INDEX[_BY_WORD[w]])
        table.append(tuple(row))
    inv = tuple(row.index(0) for row in table)
    return tuple(table), inv


#: ``MUL_TABLE[i][j]`` is the index of ``ELEMENTS[i] * ELEMENTS[j]``.
MUL_TABLE, INV_TABLE = _build_tables()

#: ``CONJ_TABLE[i][j]`` is the index of ``x y x^-1`` for x, y at i, j.
CONJ_TABLE = tuple(
    tuple(MUL_TABLE[MUL_TABLE[i][j]][INV_TABLE[i]] for j in range(6))
    for i in range(6)
)
#: ``CONJ_INV_TABLE[i][j]`` is the index of ``x^-1 y x``.
CONJ_INV_TABLE = tuple(
    tuple(MUL_TABLE[MUL_TABLE[INV_TABLE[i]][j]][i] for j in range(6))
    for i in range(6)
)


def mul(a: S3Element, b: S3Element) -> S3Element:
    return ELEMENTS[MUL_TABLE[_INDEX[a]][_INDEX[b]]]


def inverse(a: S3Element) -> S3Element:
    return ELEMENTS[INV_TABLE[_INDEX[a]]]


def conjugate(x: S3Element, y: S3Element) -> S3Element:
    """Return ``x * y * x^-1``."""
    return ELEMENTS[CONJ_TABLE[_INDEX[x]][_INDEX[y]]]


def class_of(a: S3Element) -> ClassLabel:
    if a is S3Element.E:
        return ClassLabel.IDENTITY
    if a in TRANSPOSITIONS:
        return ClassLabel.TRANSPOSITION
    return ClassLabel.THREE_CYCLE


def parse_element(text: str) -> S3Element:
    try:
        return _BY_WORD[text]
    except (KeyError, TypeError):
        raise ElementParseError(text) from None


def format_element(a: S3Element) -> str:
    return a.value
