import pytest

from dyckgram.intsets import (BadProgression, IntSet, NonPositiveValue,
                              Progression, Range, RestrictionQuad, SetSyntaxError,
                              Single, parse_set)


def members(s: IntSet, bound: int = 40) -> set[int]:
    return {v for v in range(1, bound + 1) if s.contains(v)}


def test_empty_string_is_empty_set():
    s = parse_set("")
    assert s.is_empty()
    assert members(s) == set()


def test_single_atom():
    assert parse_set("5").atoms == (Single(5),)
    assert members(parse_set("5")) == {5}


def test_range_atom():
    assert parse_set("2..4").atoms == (Range(2, 4),)
    assert members(parse_set("2..4")) == {2, 3, 4}
    assert members(parse_set("3..3")) == {3}


def test_open_range_is_step_one_progression():
    assert parse_set("3..").atoms == (Progression(1, 3),)
    assert members(parse_set("3..")) == set(range(3, 41))


def test_progression_atom():
    assert parse_set("ap(2,3)").atoms == (Progression(2, 3),)
    assert members(parse_set("ap(2,3)"), 12) == {3, 5, 7, 9, 11}


def test_union_of_atoms():
    s = parse_set("1,4..6,ap(10,9)")
    assert members(s, 30) == {1, 4, 5, 6, 9, 19, 29}


def test_whitespace_tolerated():
    assert parse_set(" 2 , 4..6 , ap( 2 , 3 ) ") == parse_set("2,4..6,ap(2,3)")


def test_rendering_round_trips():
    for text in ("", "5", "2..4", "3..", "ap(2,3)", "1,4..6,ap(3,2)"):
        assert str(parse_set(str(parse_set(text)))) == str(parse_set(text))


def test_zero_rejected():
    with pytest.raises(NonPositiveValue) as e:
        parse_set("0")
    assert e.value.value == 0
    with pytest.raises(NonPositiveValue):
        parse_set("1,0..4")


def test_bad_progression_rejected():
    with pytest.raises(BadProgression):
        parse_set("ap(0,3)")
    with pytest.raises(BadProgression):
        parse_set("ap(2,0)")


def test_syntax_errors_carry_positions():
    with pytest.raises(SetSyntaxError) as e:
        parse_set("x")
    assert e.value.position == 0
    with pytest.raises(SetSyntaxError) as e:
        parse_set("3,,4")
    assert e.value.position == 2
    with pytest.raises(SetSyntaxError):
        parse_set("-3")
    with pytest.raises(SetSyntaxError):
        parse_set("ap(2;3)")
    with pytest.raises(SetSyntaxError):
        parse_set("3..4 5")


def test_reversed_range_rejected():
    with pytest.raises(SetSyntaxError) as e:
        parse_set("5..3")
    assert e.value.position == 0


def test_membership_needs_positive_query():
    with pytest.raises(ValueError):
        parse_set("3").contains(0)


def test_progression_membership_matches_generated_values():
    # exhaustive check against the defining form {step*r + base}
    for step in range(1, 11):
        for base in range(1, 11):
            generated = {step * r + base for r in range(120)}
            p = Progression(step, base)
            for v in range(1, 101):
                assert p.contains(v) == (v in generated)


def test_quad_parse_and_emptiness():
    q = RestrictionQuad.parse(peaks="ap(2,3)", up_runs="3..")
    assert not q.is_empty()
    assert q.valleys.is_empty()
    assert RestrictionQuad.parse().is_empty()


def test_quad_swapped_runs():
    q = RestrictionQuad.parse(up_runs="2", down_runs="3..")
    s = q.swapped_runs()
    assert s.up_runs == q.down_runs and s.down_runs == q.up_runs
    assert s.peaks == q.peaks and s.valleys == q.valleys
