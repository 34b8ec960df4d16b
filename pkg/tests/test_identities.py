from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import fib, gapped_subsets, golden_power, pell, silver_power
from zeckit.catalog import ERRATUM, OK, check_catalog, load_catalog
from zeckit.errors import (
    FamilyNotSecondOrder,
    OddPellLucasValue,
    OddR,
    RangeBelowMinN,
    TNotOne,
    WindowTooLarge,
)
from zeckit.identities import (
    FIB_LUCAS,
    PELL_PELL_LUCAS,
    IdentityPattern,
    LinearForm,
    diophantine_check,
    discover,
    family_generate,
    family_pattern,
    power_sum,
    reduce_to_linear_form,
    verify_numeric,
    verify_symbolic,
)
from zeckit.quadring import lucas_power_sum
from zeckit.recurrence import FIBONACCI, LUCAS, PELL, PELL_LUCAS, RecurrenceSpec, SequenceFamily, custom


def pattern(family, c, offsets, min_n=None):
    return IdentityPattern(family, c, tuple(offsets), min_n)


def test_pattern_normalises_offsets():
    p = pattern(PELL, 20, [-4, 3, -3, 2])
    assert p.offsets == (3, 2, -3, -4)
    assert p.min_n == 4
    assert p.to_json() == {"family": "pell", "multiplier": 20, "offsets": [3, 2, -3, -4], "min_n": 4}
    assert IdentityPattern.from_json(p.to_json()) == p
    assert str(p) == "20P(n) = P(n+3) + P(n+2) + P(n-3) + P(n-4), n >= 4"


@pytest.mark.parametrize(
    "args",
    [(FIBONACCI, 3, [2, 2]), (FIBONACCI, 0, [1]), (FIBONACCI, 3, [2, -2], 1), (FIBONACCI, 1, [])],
)
def test_pattern_validation(args):
    with pytest.raises(ValueError):
        pattern(*args)


def test_verify_numeric_examples():
    assert verify_numeric(pattern(FIBONACCI, 4, [2, 0, -2]), 2, 30).holds
    five = pattern(FIBONACCI, 5, [3, -1, -4])
    assert verify_numeric(five, 10, 10).holds
    assert 5 * fib(10) == fib(13) + fib(9) + fib(6) == 275
    bad = verify_numeric(pattern(PELL, 4, [1, -1, -2]), 2, 10)
    assert not bad.holds
    assert (bad.witness.n, bad.witness.lhs, bad.witness.rhs) == (2, 8, 6)


def test_verify_numeric_range_errors():
    with pytest.raises(RangeBelowMinN):
        verify_numeric(pattern(FIBONACCI, 5, [3, -1, -4]), 3, 10)


@pytest.mark.parametrize(
    "family, e, alpha, beta",
    [(PELL, 3, 12, 5), (PELL, 0, 1, 0), (FIBONACCI, 0, 1, 0), (PELL, -3, -2, 5), (PELL, 2, 5, 2), (PELL, -4, 5, -12)],
)
def test_linear_form_examples(family, e, alpha, beta):
    assert reduce_to_linear_form(family, e) == LinearForm(Fraction(alpha), Fraction(beta))


def test_twenty_pell_expansion_line():
    # 5P_{n-1} + 12P_n + 2P_{n-1} + 5P_n + 5P_{n-1} - 2P_n - 12P_{n-1} + 5P_n
    forms = [reduce_to_linear_form(PELL, e) for e in (3, 2, -3, -4)]
    assert [(f.alpha, f.beta) for f in forms] == [(12, 5), (5, 2), (-2, 5), (5, -12)]


@pytest.mark.parametrize("family", [FIBONACCI, PELL])
@pytest.mark.parametrize("e", range(-10, 11))
def test_reduction_soundness(family, e):
    oracle = fib if family is FIBONACCI else pell
    form = reduce_to_linear_form(family, e)
    for n in range(max(1, 1 - e), 31):
        assert form.alpha * oracle(n) + form.beta * oracle(n - 1) == oracle(n + e)


def test_reduction_applies_to_companion_sequences():
    for e in range(-6, 7):
        form = reduce_to_linear_form(LUCAS, e)
        for n in range(max(1, 1 - e), 20):
            assert form.alpha * (fib(n + 1) + fib(n - 1)) + form.beta * (fib(n) + fib(n - 2)) == fib(n + e + 1) + fib(n + e - 1)


def test_reduction_general_t_rational():
    fam = custom(RecurrenceSpec((1, 2), (0, 1)))
    form = reduce_to_linear_form(fam, -2)
    assert form.alpha.denominator > 1 or form.beta.denominator > 1
    for n in range(3, 15):
        lhs = form.alpha * int(_value(fam, n)) + form.beta * int(_value(fam, n - 1))
        assert lhs == _value(fam, n - 2)


def _value(fam, n):
    from zeckit.recurrence import eval_at

    return eval_at(fam, n)


def test_second_order_required():
    trib = custom(RecurrenceSpec((1, 1, 1), (0, 0, 1)))
    with pytest.raises(FamilyNotSecondOrder):
        reduce_to_linear_form(trib, 1)
    with pytest.raises(FamilyNotSecondOrder):
        family_generate(trib, 2)


@pytest.mark.parametrize(
    "family, c, offsets",
    [
        (PELL, 20, [3, 2, -3, -4]),
        (FIBONACCI, 3, [2, -2]),
        (FIBONACCI, 57, [8, 4, 2, -2, -4, -8]),
    ],
)
def test_verify_symbolic_examples(family, c, offsets):
    v = verify_symbolic(pattern(family, c, offsets))
    assert v.holds
    assert v.detail == {"alpha_sum": c, "beta_sum": 0}


def test_verify_symbolic_twenty_pell_sums():
    v = verify_symbolic(pattern(PELL, 20, [3, 2, -3, -4]))
    assert v.detail["alpha_sum"] == 12 + 5 - 2 + 5
    assert v.detail["beta_sum"] == 5 + 2 + 5 - 12


@pytest.mark.parametrize(
    "family, r, c",
    [(FIBONACCI, 4, 7), (PELL, 6, 198), (FIBONACCI, 2, 3), (FIBONACCI, 6, 18), (PELL, 2, 6), (PELL, 4, 34)],
)
def test_family_generate_examples(family, r, c):
    p = family_generate(family, r)
    assert (p.multiplier, p.offsets, p.min_n) == (c, (r, -r), r)
    assert verify_symbolic(p).holds


def test_family_generate_errors():
    with pytest.raises(OddR):
        family_generate(FIBONACCI, 3)
    with pytest.raises(OddR):
        family_generate(FIBONACCI, 0)
    with pytest.raises(TNotOne):
        family_generate(custom(RecurrenceSpec((1, 2), (0, 1))), 2)


def test_family_coherence():
    for r in range(2, 21, 2):
        for family, ring in ((FIBONACCI, "fibonacci"), (PELL, "pell")):
            p = family_generate(family, r)
            assert p.multiplier == lucas_power_sum(r, ring)[0]
            assert verify_symbolic(p).holds
        assert verify_symbolic(family_generate(LUCAS, r)).holds
        assert verify_symbolic(family_generate(PELL_LUCAS, r)).holds


def test_family_sharpness():
    for r in range(1, 20, 2):
        for family in (FIBONACCI, PELL):
            v = verify_symbolic(family_pattern(family, r))
            assert not v.holds and v.detail["beta_sum"] != 0


@pytest.mark.parametrize(
    "family, c, window, offsets",
    [(FIBONACCI, 5, 8, (3, -1, -4)), (FIBONACCI, 1, 8, (0,)), (PELL, 20, 8, (3, 2, -3, -4)), (FIBONACCI, 6, 8, (3, 1, -4))],
)
def test_discover_examples(family, c, window, offsets):
    found = discover(family, c, window)
    assert [p.offsets for p in found] == [offsets]


def test_discover_guards():
    with pytest.raises(WindowTooLarge):
        discover(FIBONACCI, 5, 17)
    assert discover(FIBONACCI, 0, 4) == []
    with pytest.raises(ValueError):
        discover(LUCAS, 3, 4)


def _brute_discover(power, c, window, gap):
    out = []
    for subset in gapped_subsets(range(-window, window + 1), gap):
        if subset:
            a = sum(power(e)[0] for e in subset)
            b = sum(power(e)[1] for e in subset)
            if (a, b) == (c, 0):
                out.append(tuple(sorted(subset, reverse=True)))
    return sorted(out, reverse=True)


@pytest.mark.parametrize("c", [1, 2, 3, 4, 7, 11, 18, 29])
def test_discover_matches_brute_force_golden(c):
    for gap in (1, 2):
        got = [p.offsets for p in discover(FIBONACCI, c, 6, gap=gap)]
        assert got == _brute_discover(golden_power, c, 6, gap)


@pytest.mark.parametrize("c", [1, 2, 3, 6, 14, 20, 34])
def test_discover_matches_brute_force_silver(c):
    for gap in (1, 2):
        got = [p.offsets for p in discover(PELL, c, 6, gap=gap)]
        assert got == _brute_discover(silver_power, c, 6, gap)


def test_discover_round_trip():
    for c in range(1, 201):
        found = discover(FIBONACCI, c, 12)
        assert found
        for p in found:
            assert verify_symbolic(p).holds
            total = power_sum(FIBONACCI, p.offsets)
            assert (total.a, total.b) == (c, 0)


@pytest.mark.parametrize(
    "kind, n", [(FIB_LUCAS, 0), (FIB_LUCAS, 3), (PELL_PELL_LUCAS, 2)]
)
def test_diophantine_examples(kind, n):
    assert diophantine_check(kind, n)


def test_diophantine_values():
    assert fib(3) == 2 and fib(4) + fib(2) == 4
    assert 4**2 - 5 * 2**2 == -4
    assert diophantine_check(PELL_PELL_LUCAS, 2)
    assert all(diophantine_check(FIB_LUCAS, n) and diophantine_check(PELL_PELL_LUCAS, n) for n in range(61))


def test_diophantine_odd_pell_lucas(monkeypatch):
    import zeckit.identities as ident

    broken = SequenceFamily("pell-lucas", RecurrenceSpec((2, 1), (2, 1)))
    monkeypatch.setattr(ident, "PELL_LUCAS", broken)
    with pytest.raises(OddPellLucasValue):
        diophantine_check(PELL_PELL_LUCAS, 1)


def test_catalog_agreement():
    results = check_catalog()
    assert len(results) == 17
    for r in results:
        assert r.symbolic.holds == r.numeric.holds
        expected = ERRATUM if r.entry.erratum else OK
        assert r.status == expected
        if r.entry.erratum:
            w = r.numeric.witness
            assert {"n": w.n, "lhs": int(w.lhs), "rhs": int(w.rhs)} == r.entry.expected_witness


def test_catalog_loads_from_path(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text('[{"tag": "x", "family": "lucas", "multiplier": 3, "offsets": [2, -2]}]')
    (entry,) = load_catalog(path)
    assert entry.pattern.min_n == 2
    assert check_catalog([entry])[0].status == OK


@given(
    st.sampled_from([FIBONACCI, PELL, LUCAS]),
    st.lists(st.integers(-8, 8), min_size=1, max_size=5, unique=True),
)
def test_symbolic_agrees_with_numeric(family, offsets):
    # multiplier chosen so the alpha part matches; beta decides the verdict
    alpha = sum(reduce_to_linear_form(family, e).alpha for e in offsets)
    if alpha < 1:
        return
    p = pattern(family, int(alpha), offsets)
    assert verify_symbolic(p).holds == verify_numeric(p, p.min_n, p.min_n + 30).holds
