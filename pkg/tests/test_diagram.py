import itertools

import pytest
from hypothesis import given

from s3links.diagram import (Crossing, Diagram, DiagramError, check, component_count,
                             components, linking_number, under_color, validate)
from s3links.group import NON_IDENTITY, S3Element, class_of
from s3links.notation import plat_diagram, torus2_diagram

from oracles import (CROSSING_TABLE, components_by_union_find, curl, el, hopf,
                     relation_holds, crossing_table_entry, trefoil)
from strategies import diagrams


def test_validate_curl():
    assert validate(curl()) == []


def test_validate_reports_arc_never_leaving():
    d = Diagram(4, (Crossing(1, 1, 0, 1), Crossing(1, 0, 1, 2), Crossing(1, 0, 2, 0),
                    Crossing(1, 1, 3, 1)))
    problems = validate(d)
    assert any("arc 3 leaves 0" in p for p in problems)
    with pytest.raises(DiagramError) as info:
        check(d)
    assert info.value.violations == problems


def test_validate_empty_with_loop():
    assert validate(Diagram(0, (), free_loops=1)) == []


def test_validate_out_of_range():
    problems = validate(Diagram(1, (Crossing(1, 5, 0, 0),)))
    assert any("crossing 0: over arc 5" in p for p in problems)


def test_crossing_sign_must_be_unit():
    with pytest.raises(ValueError):
        Crossing(0, 0, 0, 0)


def test_components_examples():
    assert component_count(trefoil()) == 1
    assert component_count(hopf()) == 2
    assert component_count(Diagram(1, curl().crossings, free_loops=1)) == 2


def test_components_blocks_follow_successor():
    d = torus2_diagram(4)
    blocks = components(d)
    assert sorted(a for b in blocks for a in b) == list(range(4))
    succ = {c.under_in: c.under_out for c in d.crossings}
    for b in blocks:
        for a, nxt in zip(b, b[1:] + b[:1]):
            assert succ[a] == nxt


@given(diagrams(max_arcs=8))
def test_components_match_union_find(d):
    assert len(components(d)) == components_by_union_find(d)


@pytest.mark.parametrize("x, y, sign, expected", [
    ("st", "sts", 1, "s"),
    ("st", "sts", -1, "t"),
    ("s", "st", 1, "ts"),
])
def test_under_color_examples(x, y, sign, expected):
    assert under_color(sign, el(x), el(y)) is el(expected)


def test_under_color_rejects_identity():
    with pytest.raises(ValueError):
        under_color(1, S3Element.E, S3Element.S)
    with pytest.raises(ValueError):
        under_color(1, S3Element.S, S3Element.E)


def test_under_color_satisfies_crossing_relation():
    for sign, x, y in itertools.product((1, -1), NON_IDENTITY, NON_IDENTITY):
        z = under_color(sign, x, y)
        assert z is not S3Element.E
        assert relation_holds(sign, x.index, y.index, z.index)


def test_crossing_table_conformance():
    for x, z in itertools.product(NON_IDENTITY, repeat=2):
        for sign in (1, -1):
            solutions = [y for y in NON_IDENTITY if under_color(sign, x, y) is z]
            assert len(solutions) == 1
            assert solutions[0].word == crossing_table_entry(x.word, z.word, sign), (x, z, sign)
    split = [(x, z) for x in CROSSING_TABLE for z, cell in CROSSING_TABLE[x].items()
             if isinstance(cell, tuple)]
    assert len(split) == 6


def test_under_color_properties():
    for sign, x, y in itertools.product((1, -1), NON_IDENTITY, NON_IDENTITY):
        assert under_color(-sign, x, under_color(sign, x, y)) is y
        assert class_of(under_color(sign, x, y)) is class_of(y)
    for sign, x in itertools.product((1, -1), NON_IDENTITY):
        assert under_color(sign, x, x) is x


def test_linking_number_hopf():
    assert abs(linking_number(hopf())) == 1
    assert abs(linking_number(torus2_diagram(2))) == 1


def test_linking_number_t24():
    assert abs(linking_number(torus2_diagram(4))) == 2


def test_linking_number_split():
    d = Diagram(2, (Crossing(1, 0, 0, 0), Crossing(-1, 1, 1, 1)))
    assert linking_number(d) == 0


def test_linking_number_needs_two_components():
    with pytest.raises(ValueError):
        linking_number(trefoil())
    with pytest.raises(ValueError):
        linking_number(plat_diagram(2, 2))  # figure-eight knot


def test_diagram_is_immutable():
    d = hopf()
    with pytest.raises(AttributeError):
        d.num_arcs = 3
    assert d == hopf()
