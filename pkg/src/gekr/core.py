"""Shared vocabulary: binary arrays, pattern sets, model parameters, and
quantities too large for floating point.

Rows of a binary array are stored as Python integers with bit j holding
column j (least significant bit is column 0).  Python integers are
arbitrary precision, so a row is a single machine object regardless of
the number of columns, and bitwise AND/OR/XOR act on all columns at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Pattern = tuple[int, int, int]

_ALL_PATTERNS = frozenset(
    (a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)
)


@dataclass(frozen=True)
class PatternSet:
    """A set of length-3 binary column patterns.

    A triple of rows "covers" pattern (a, b, c) when some column reads a
    in the first row, b in the second, and c in the third.  A triple that
    misses at least one pattern of the set is called deficient.
    """

    members: frozenset[Pattern]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("pattern set must be non-empty")
        if not self.members <= _ALL_PATTERNS:
            bad = sorted(self.members - _ALL_PATTERNS)
            raise ValueError(f"not binary length-3 patterns: {bad}")

    def __iter__(self) -> Iterator[Pattern]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, pattern: object) -> bool:
        return pattern in self.members

    @classmethod
    def from_text(cls, text: str) -> "PatternSet":
        """Parse a comma-separated list such as "011,101,110,111"."""
        members = set()
        for token in text.split(","):
            token = token.strip()
            if len(token) != 3 or any(ch not in "01" for ch in token):
                raise ValueError(f"bad pattern {token!r}: want three 0/1 chars")
            members.add((int(token[0]), int(token[1]), int(token[2])))
        return cls(frozenset(members))


#: The pattern set whose covering arrays generalize the Erdos-Ko-Rado
#: intersection conditions: every row triple must show a common 1-column
#: and, for each pair of rows, a column where exactly that pair has 1s.
GEKR = PatternSet(frozenset({(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)}))


@dataclass(frozen=True, order=True)
class LogMagnitude:
    """A non-negative real carried as its base-10 logarithm.

    Row-count bounds routinely exceed 10^30000, far beyond float range,
    so we never materialize the value itself.  Ordering compares
    (is_zero, log10) with zero sorting below every positive value; the
    sort_key field makes the derived comparisons do exactly that.
    """

    sort_key: tuple[int, float] = field(repr=False)
    is_zero: bool = field(compare=False)
    log10: float = field(compare=False)

    @classmethod
    def zero(cls) -> "LogMagnitude":
        return cls(sort_key=(0, 0.0), is_zero=True, log10=-math.inf)

    @classmethod
    def from_log10(cls, log10: float) -> "LogMagnitude":
        if math.isnan(log10):
            raise ValueError("log10 must not be NaN")
        if log10 == -math.inf:
            return cls.zero()
        return cls(sort_key=(1, log10), is_zero=False, log10=log10)

    @classmethod
    def from_float(cls, value: float) -> "LogMagnitude":
        if value < 0:
            raise ValueError(f"magnitude must be non-negative, got {value}")
        if value == 0:
            return cls.zero()
        return cls.from_log10(math.log10(value))

    @classmethod
    def from_fraction(cls, value: Fraction) -> "LogMagnitude":
        """Exact rational to log magnitude; safe for huge numerators."""
        if value < 0:
            raise ValueError(f"magnitude must be non-negative, got {value}")
        if value == 0:
            return cls.zero()
        # math.log10 accepts arbitrarily large ints without overflow.
        return cls.from_log10(
            math.log10(value.numerator) - math.log10(value.denominator)
        )

    def to_float(self) -> float:
        """The plain float value; raises OverflowError out of range."""
        if self.is_zero:
            return 0.0
        if self.log10 > 308:
            raise OverflowError(f"10^{self.log10:.1f} exceeds float range")
        return 10.0 ** self.log10

    def scientific(self, digits: int = 3) -> tuple[float, int]:
        """Mantissa in [1, 10) and exponent, mantissa rounded to
        `digits` significant digits.  Rounding that reaches 10.0 bumps
        the exponent instead, so 9.998 at 3 digits becomes (1.0, e+1).
        """
        if self.is_zero:
            raise ValueError("zero has no scientific mantissa/exponent")
        exponent = math.floor(self.log10)
        mantissa = 10.0 ** (self.log10 - exponent)
        mantissa = round(mantissa, digits - 1)
        if mantissa >= 10.0:
            mantissa /= 10.0
            exponent += 1
        return mantissa, exponent


def render_magnitude(value: LogMagnitude, digits: int = 3) -> str:
    """Format as "2.26e289" with `digits` significant digits; zero is "0"."""
    if digits < 1:
        raise ValueError("digits must be at least 1")
    if value.is_zero:
        return "0"
    mantissa, exponent = value.scientific(digits)
    return f"{mantissa:.{digits - 1}f}e{exponent}"


def parse_magnitude(text: str) -> LogMagnitude:
    """Inverse of render_magnitude, also accepting plain decimals."""
    text = text.strip()
    if not text:
        raise ValueError("empty magnitude")
    if text == "0":
        return LogMagnitude.zero()
    lowered = text.lower()
    if "e" in lowered:
        mant_text, _, exp_text = lowered.partition("e")
        mantissa = float(mant_text)
        exponent = int(exp_text)
        if mantissa <= 0:
            raise ValueError(f"mantissa must be positive in {text!r}")
        return LogMagnitude.from_log10(math.log10(mantissa) + exponent)
    return LogMagnitude.from_float(float(text))


class Model(Enum):
    """How random rows are drawn in the probabilistic bounds."""

    INDEPENDENT = "independent"
    FIXED_WEIGHT = "fixed-weight"


@dataclass(frozen=True)
class ModelParams:
    """Column count plus the row distribution.

    alpha is the density: the per-entry 1-probability in the independent
    model, or r/n in the fixed-weight model where every row has exactly
    r ones.  It is kept as an exact Fraction so that r = alpha * n holds
    without rounding concerns.
    """

    n: int
    alpha: Fraction
    model: Model
    r: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one column, got n={self.n}")
        if not 0 < self.alpha <= 1:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if self.model is Model.FIXED_WEIGHT:
            if self.r is None:
                raise ValueError("fixed-weight model needs the row weight r")
            if not 0 < self.r <= self.n:
                raise ValueError(f"need 0 < r <= n, got r={self.r}, n={self.n}")
            if self.alpha != Fraction(self.r, self.n):
                raise ValueError(
                    f"alpha={self.alpha} does not equal r/n={self.r}/{self.n}"
                )
        elif self.r is not None and self.alpha != Fraction(self.r, self.n):
            raise ValueError("r given but inconsistent with alpha")

    @classmethod
    def independent(cls, alpha: Fraction | float | str, n: int) -> "ModelParams":
        return cls(n=n, alpha=Fraction(alpha), model=Model.INDEPENDENT)

    @classmethod
    def fixed_weight(cls, n: int, r: int) -> "ModelParams":
        return cls(n=n, alpha=Fraction(r, n), model=Model.FIXED_WEIGHT, r=r)


@dataclass(frozen=True)
class ArrayMatrix:
    """A binary array: m rows over n columns, rows as packed integers.

    declared_weight, when set, asserts that every row has exactly that
    many ones; construction routines for the fixed-weight model set it.
    """

    n: int
    rows: tuple[int, ...]
    declared_weight: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one column, got n={self.n}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise ValueError(f"row {i} does not fit in {self.n} columns")
        if self.declared_weight is not None:
            for i, row in enumerate(self.rows):
                if row.bit_count() != self.declared_weight:
                    raise ValueError(
                        f"row {i} has weight {row.bit_count()}, "
                        f"declared {self.declared_weight}"
                    )

    @property
    def m(self) -> int:
        return len(self.rows)

    def weights(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def row_bits(self, i: int) -> tuple[int, ...]:
        """Row i as a tuple of 0/1 column values."""
        row = self.rows[i]
        return tuple((row >> j) & 1 for j in range(self.n))

    def to_text(self) -> str:
        """Render as one '0'/'1' line per row, LF-terminated."""
        lines = []
        for row in self.rows:
            lines.append("".join("1" if (row >> j) & 1 else "0" for j in range(self.n)))
        return "\n".join(lines) + "\n"


def pack_row(bits: Sequence[int] | str) -> int:
    """Pack a 0/1 sequence (or '0'/'1' string) into a row integer."""
    packed = 0
    for j, bit in enumerate(bits):
        if isinstance(bit, str):
            if bit not in "01":
                raise ValueError(f"bad character {bit!r} in row")
            bit = int(bit)
        elif bit not in (0, 1):
            raise ValueError(f"bad column value {bit!r} in row")
        if bit:
            packed |= 1 << j
    return packed


def parse_array(text: str | bytes) -> ArrayMatrix:
    """Parse the textual array format.

    One row per line of '0'/'1' characters; lines starting with '#' are
    comments; blank lines and CR before LF are ignored.  All rows must
    have the same length.  If every row has the same number of ones,
    declared_weight is set to that count.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    rows: list[int] = []
    n: int | None = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise ValueError(
                f"line {lineno}: row length {len(line)} != {n} of first row"
            )
        rows.append(pack_row(line))
    if n is None:
        raise ValueError("no rows: input is empty or all comments")
    weights = {row.bit_count() for row in rows}
    declared = weights.pop() if len(weights) == 1 else None
    return ArrayMatrix(n=n, rows=tuple(rows), declared_weight=declared)


@dataclass(frozen=True)
class DeficiencyReport:
    """Outcome of scanning an array's row triples against a pattern set.

    deficient lists the offending (i, j, l) index triples, i < j < l in
    lexicographic order, and missing[t] holds the patterns triple t
    fails to cover.  total_checked counts triples actually examined,
    which is less than comb(m, 3) when the scan stopped early.
    """

    deficient: tuple[tuple[int, int, int], ...]
    missing: tuple[frozenset[Pattern], ...]
    total_checked: int

    def __post_init__(self) -> None:
        if len(self.deficient) != len(self.missing):
            raise ValueError("deficient and missing must run in parallel")

    @property
    def deficient_count(self) -> int:
        return len(self.deficient)

    @property
    def ok(self) -> bool:
        return not self.deficient


def parse_alpha(text: str) -> Fraction:
    """Parse a density argument: decimal like "0.5" or fraction "2/3"."""
    text = text.strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad density {text!r}: {exc}") from None
    return value
