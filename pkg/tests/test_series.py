from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dyckgram.series import (BadConstantTerm, NoConvergence, NonUnitConstant,
                             NotContractive, OrderMismatch, Poly, SeriesSystem,
                             TruncatedSeries, solve)

S = TruncatedSeries.from_coeffs


def test_construction_and_padding():
    a = S([1, 2], 5)
    assert a.coeffs == (1, 2, 0, 0, 0)
    assert a.order == 5
    assert S([1, 2, 3], 2).coeffs == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries(())


def test_add_sub_mul():
    one_plus = S([1, 1], 6)
    one_minus = S([1, -1], 6)
    assert (one_plus * one_minus).coeffs == (1, 0, -1, 0, 0, 0)
    assert (one_plus + one_minus).coeffs == (2, 0, 0, 0, 0, 0)
    assert (one_plus - one_minus).coeffs == (0, 2, 0, 0, 0, 0)


def test_pow():
    a = S([1, 1], 6)
    assert (a ** 0).coeffs == (1, 0, 0, 0, 0, 0)
    assert (a ** 3).coeffs == (1, 3, 3, 1, 0, 0)
    with pytest.raises(ValueError):
        a ** -1


def test_order_mismatch_rejected():
    with pytest.raises(OrderMismatch):
        S([1], 4) + S([1], 5)


def test_reciprocal_geometric():
    assert S([1, -1], 6).reciprocal().coeffs == (1, 1, 1, 1, 1, 1)
    assert (S([1, -1], 8) * S([1, -2], 8).reciprocal()).coeffs == \
        (1, 1, 2, 4, 8, 16, 32, 64)


def test_reciprocal_of_negative_unit():
    a = S([-1, 1], 5)
    assert (a * a.reciprocal()).coeffs == (1, 0, 0, 0, 0)


def test_reciprocal_requires_unit_constant():
    with pytest.raises(NonUnitConstant):
        S([2, 1], 4).reciprocal()
    with pytest.raises(NonUnitConstant):
        S([0, 1], 4).reciprocal()


@given(st.lists(st.integers(-5, 5), min_size=0, max_size=9),
       st.sampled_from([1, -1]))
def test_reciprocal_round_trip(tail, unit):
    a = S([unit] + tail, 10)
    assert (a * a.reciprocal()).coeffs == TruncatedSeries.one(10).coeffs


def test_sqrt_examples():
    assert S([1, 2, 1], 6).sqrt().coeffs == (1, 1, 0, 0, 0, 0)
    assert TruncatedSeries.one(4).sqrt().coeffs == (1, 0, 0, 0)


def test_sqrt_requires_constant_one():
    with pytest.raises(BadConstantTerm):
        S([4, 1], 4).sqrt()


@given(st.lists(st.integers(-4, 4), min_size=0, max_size=9))
def test_sqrt_squares_back(tail):
    a = S([1] + tail, 10)
    r = a.sqrt()
    assert (r * r).coeffs == a.coeffs


def test_sqrt_of_quartic_gives_growth_sequence():
    # the radical whose shifted half encodes 1, 1, 1, 2, 4, 8, 17, ...
    inner = S([1, -2, -1, -2, 1], 10)
    g = (S([1, -1, 1], 10) - inner.sqrt()).shift_down(2).scale(Fraction(1, 2))
    assert g.coeffs == (1, 1, 1, 2, 4, 8, 17, 37)


def test_shift_down_requires_divisibility():
    assert S([0, 0, 3, 4], 4).shift_down(2).coeffs == (3, 4)
    with pytest.raises(ValueError):
        S([0, 1], 4).shift_down(2)


def test_require_counts():
    assert S([1, 0, 2], 3).require_counts().coeffs == (1, 0, 2)
    with pytest.raises(ValueError):
        S([1, -1], 3).require_counts()
    with pytest.raises(ValueError):
        TruncatedSeries((Fraction(1, 2), 0)).require_counts()


def test_rendering():
    assert str(S([1, 0, -2], 3)) == "1 - 2*z^2 + O(z^3)"
    assert str(S([0, 1], 3)) == "z + O(z^3)"
    assert str(TruncatedSeries.zero(2)) == "0 + O(z^2)"


def test_poly_arithmetic_and_rendering():
    p = Poly.const(1) + Poly.z() * Poly.var("P") ** 2
    assert str(p) == "1 + z*P^2"
    assert p.unknowns() == {"P"}
    q = (Poly.var("P") + Poly.z()) ** 2
    assert str(q) == "P^2 + 2*z*P + z^2"


def test_poly_eval():
    p = Poly.const(2) + Poly.z(2) * Poly.var("X")
    x = S([1, 1], 5)
    assert p.eval({"X": x}, 5).coeffs == (2, 0, 1, 1, 0)


def test_solve_catalan():
    system = SeriesSystem(("P",), {"P": Poly.const(1) + Poly.z() * Poly.var("P") ** 2})
    assert solve(system, 8)["P"].coeffs == (1, 1, 2, 5, 14, 42, 132, 429)


def test_solve_motzkin():
    m = Poly.var("M")
    system = SeriesSystem(("M",), {"M": Poly.const(1) + Poly.z() * m + Poly.z(2) * m ** 2})
    assert solve(system, 7)["M"].coeffs == (1, 1, 2, 4, 9, 21, 51)


def test_solve_pair_system():
    system = SeriesSystem(("P", "Q"), {
        "P": Poly.const(1) + Poly.z() * Poly.var("P")
             + Poly.z(2) * Poly.var("Q") * Poly.var("P"),
        "Q": Poly.const(1) + Poly.z() * Poly.var("Q")})
    assert solve(system, 5)["P"].coeffs == (1, 1, 2, 4, 8)


def test_solution_is_a_fixed_point():
    system = SeriesSystem(("P",), {"P": Poly.const(1) + Poly.z() * Poly.var("P") ** 2})
    sol = solve(system, 12)
    assert system.equations["P"].eval(sol, 12) == sol["P"]


def test_non_contractive_system_rejected():
    with pytest.raises(NotContractive):
        solve(SeriesSystem(("X",), {"X": Poly.var("X") + Poly.const(1)}), 4)


def test_unbound_unknown_rejected():
    with pytest.raises(ValueError):
        solve(SeriesSystem(("X",), {"X": Poly.z() * Poly.var("Y")}), 4)
