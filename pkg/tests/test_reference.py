from fractions import Fraction

from cyclocoh import reference as ref


def test_printed_values():
    assert ref.PrintedValue("0.166...").truncated
    assert ref.PrintedValue("2.136...e6").as_fraction() == 2136000
    assert ref.PrintedValue("--").undefined
    assert ref.PrintedValue("0.024.").as_fraction() == Fraction(24, 1000)


def test_rational_matching():
    assert ref.rational_matches(Fraction(1, 6), ref.PrintedValue("0.166..."))
    # truncation, not rounding
    assert not ref.rational_matches(Fraction(1, 6), ref.PrintedValue("0.167..."))
    assert ref.rational_matches(Fraction(1, 2), ref.PrintedValue("0.5"))
    assert not ref.rational_matches(Fraction(1, 2), ref.PrintedValue("0.50001"))
    assert ref.rational_matches(None, ref.PrintedValue("--"))


def test_real_matching():
    assert ref.real_matches(1.6661, ref.PrintedValue("1.666..."))
    assert not ref.real_matches(1.70, ref.PrintedValue("1.666..."))
    assert ref.real_matches(1.6995e18, ref.PrintedValue("1.699...e18"))


def test_table_loaded():
    rows = ref.load_table1()
    assert {r.d for r in rows} == {6, 8, 24, 72, 160}
    assert len({(r.d, r.n) for r in rows}) == len(rows)
