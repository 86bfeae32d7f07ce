import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gekr.core import (
    GEKR,
    ArrayMatrix,
    LogMagnitude,
    Model,
    ModelParams,
    PatternSet,
    pack_row,
    parse_alpha,
    parse_array,
    parse_magnitude,
    render_magnitude,
)


class TestLogMagnitude:
    def test_zero(self):
        z = LogMagnitude.zero()
        assert z.is_zero
        assert render_magnitude(z) == "0"
        assert z.to_float() == 0.0

    def test_from_float_round_trip(self):
        v = LogMagnitude.from_float(226.0)
        assert v.to_float() == pytest.approx(226.0)

    def test_render_known_value(self):
        v = LogMagnitude.from_log10(289.35351202229026)
        assert render_magnitude(v) == "2.26e289"

    def test_render_negative_exponent(self):
        v = LogMagnitude.from_log10(-695.88216)
        assert render_magnitude(v) == "1.31e-696"

    def test_render_mantissa_rollover(self):
        # 9.997e5 rounds to 10.0 at three digits, which must bump the
        # exponent rather than print "10.00e5".
        v = LogMagnitude.from_float(9.997e5)
        assert render_magnitude(v) == "1.00e6"

    def test_render_digits_control(self):
        v = LogMagnitude.from_float(12345.0)
        assert render_magnitude(v, digits=2) == "1.2e4"
        assert render_magnitude(v, digits=5) == "1.2345e4"
        with pytest.raises(ValueError):
            render_magnitude(v, digits=0)

    def test_parse_inverse(self):
        assert parse_magnitude("0").is_zero
        v = parse_magnitude("2.26e289")
        assert v.log10 == pytest.approx(289.35411, abs=1e-3)
        assert parse_magnitude("0.5").log10 == pytest.approx(math.log10(0.5))

    def test_from_fraction_huge(self):
        v = LogMagnitude.from_fraction(Fraction(10**500, 3))
        assert v.log10 == pytest.approx(500 - math.log10(3))
        assert LogMagnitude.from_fraction(Fraction(0)).is_zero

    def test_ordering(self):
        small = LogMagnitude.from_float(1e-300)
        big = LogMagnitude.from_log10(1e6)
        assert LogMagnitude.zero() < small < big

    def test_to_float_overflow(self):
        with pytest.raises(OverflowError):
            LogMagnitude.from_log10(400.0).to_float()

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            LogMagnitude.from_log10(math.nan)
        with pytest.raises(ValueError):
            LogMagnitude.from_float(-1.0)

    @given(st.floats(min_value=-5000, max_value=5000, allow_nan=False))
    def test_render_parse_round_trip(self, log10):
        v = LogMagnitude.from_log10(log10)
        back = parse_magnitude(render_magnitude(v, digits=6))
        # Six significant digits keep the log within ~5e-7.
        assert abs(back.log10 - v.log10) < 1e-5

    @given(
        st.floats(min_value=-1000, max_value=1000, allow_nan=False),
        st.floats(min_value=-1000, max_value=1000, allow_nan=False),
    )
    def test_ordering_matches_log10(self, x, y):
        assert (LogMagnitude.from_log10(x) < LogMagnitude.from_log10(y)) == (x < y)


class TestPatternSet:
    def test_gekr_members(self):
        assert GEKR.members == {(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)}
        assert (1, 1, 1) in GEKR
        assert (0, 0, 0) not in GEKR
        assert len(GEKR) == 4

    def test_from_text(self):
        ps = PatternSet.from_text("011, 111")
        assert ps.members == {(0, 1, 1), (1, 1, 1)}

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            PatternSet(frozenset())
        with pytest.raises(ValueError):
            PatternSet.from_text("01")

    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            PatternSet(frozenset({(0, 1, 2)}))

    def test_iteration_sorted(self):
        assert list(GEKR) == [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]


class TestArrayMatrix:
    def test_pack_row(self):
        # Column 0 is the least significant bit.
        assert pack_row("110") == 0b011
        assert pack_row([1, 0, 1]) == 0b101
        with pytest.raises(ValueError):
            pack_row("1x0")
        with pytest.raises(ValueError):
            pack_row([0, 2])

    def test_parse_round_trip(self):
        text = "1110\n1101\n1011\n"
        arr = parse_array(text)
        assert arr.m == 3
        assert arr.n == 4
        assert arr.declared_weight == 3
        assert arr.to_text() == text

    def test_parse_comments_blanks_crlf(self):
        arr = parse_array("# header\r\n10\r\n\r\n01")
        assert arr.m == 2
        assert arr.rows == (0b01, 0b10)
        assert arr.declared_weight == 1

    def test_parse_bytes(self):
        assert parse_array(b"11\n00\n").m == 2

    def test_parse_mixed_weights(self):
        assert parse_array("110\n100\n").declared_weight is None

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_array("110\n1100\n")
        with pytest.raises(ValueError):
            parse_array("")
        with pytest.raises(ValueError):
            parse_array("# only a comment\n")
        with pytest.raises(ValueError):
            parse_array("102\n")

    def test_validation(self):
        with pytest.raises(ValueError):
            ArrayMatrix(n=2, rows=(4,))
        with pytest.raises(ValueError):
            ArrayMatrix(n=3, rows=(0b111,), declared_weight=2)
        with pytest.raises(ValueError):
            ArrayMatrix(n=0, rows=())

    def test_weights_and_bits(self):
        arr = ArrayMatrix(n=3, rows=(0b011, 0b101))
        assert arr.weights() == (2, 2)
        assert arr.row_bits(0) == (1, 1, 0)

    @given(
        st.lists(st.text(alphabet="01", min_size=1, max_size=16), min_size=1, max_size=8)
    )
    def test_parse_render_round_trip(self, lines):
        same_len = [line.ljust(16, "0") for line in lines]
        text = "\n".join(same_len) + "\n"
        arr = parse_array(text)
        assert arr.to_text() == text
        assert parse_array(arr.to_text()).rows == arr.rows


class TestModelParams:
    def test_independent(self):
        p = ModelParams.independent("2/3", 30)
        assert p.alpha == Fraction(2, 3)
        assert p.model is Model.INDEPENDENT
        assert p.r is None

    def test_fixed_weight(self):
        p = ModelParams.fixed_weight(20, 14)
        assert p.alpha == Fraction(7, 10)
        assert p.r == 14

    def test_full_weight_and_density_one(self):
        # Degenerate but legal: weight n rows and certain 1-entries.
        assert ModelParams.fixed_weight(6, 6).alpha == 1
        assert ModelParams.independent(1, 5).alpha == 1

    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            ModelParams.independent(0, 10)
        with pytest.raises(ValueError):
            ModelParams.independent(Fraction(3, 2), 10)
        with pytest.raises(ValueError):
            ModelParams.fixed_weight(10, 0)
        with pytest.raises(ValueError):
            ModelParams.fixed_weight(10, 11)
        with pytest.raises(ValueError):
            ModelParams(n=10, alpha=Fraction(1, 2), model=Model.FIXED_WEIGHT)

    def test_alpha_weight_consistency(self):
        with pytest.raises(ValueError):
            ModelParams(n=10, alpha=Fraction(1, 3), model=Model.FIXED_WEIGHT, r=5)


def test_parse_alpha():
    assert parse_alpha("2/3") == Fraction(2, 3)
    assert parse_alpha("0.5") == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_alpha("abc")
    with pytest.raises(ValueError):
        parse_alpha("1/0")
