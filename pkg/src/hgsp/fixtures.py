"""Embedded reference tables for the degree-6 census.

Table "A" holds the 40 maximally-unipotent rows (f fixed to the sixth power
of x - 1): for each, the beta parameters, the absolute leading coefficient
of f - g, the vector v, and, for 18 of them, a witness word certifying
arithmeticity.  Five of the remaining rows carry a gcd obstruction.  Table
"D" holds the 64 open rows given by their alpha and beta parameters.  The
census totals are stored as counts: 211 rows settle by the small leading
coefficient criterion (table "C") and 143 by witness words found outside
the maximally-unipotent family (table "B").

Two dependent examples are included as negative controls for the
certificate checker: their words pass the last-entry test with c = 2 and
c = 1 respectively but fail linear independence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cyclotomic import factorization_from_parameters, parse_parameters
from .pairs import QualifiedPair, make_pair
from .words import Word


@dataclass(frozen=True)
class MumRow:
    number: int
    beta: tuple[str, ...]
    lc_abs: int
    v: tuple[int, ...]
    witness: Optional[str]

    def pair(self) -> QualifiedPair:
        f_fac = factorization_from_parameters(parse_parameters(",".join(["0"] * 6)))
        g_fac = factorization_from_parameters(parse_parameters(",".join(self.beta)))
        return make_pair(f_fac, g_fac)

    def witness_word(self) -> Optional[Word]:
        return Word.parse(self.witness) if self.witness else None


@dataclass(frozen=True)
class OpenRow:
    number: int
    alpha: tuple[str, ...]
    beta: tuple[str, ...]

    def pair(self) -> QualifiedPair:
        f_fac = factorization_from_parameters(parse_parameters(",".join(self.alpha)))
        g_fac = factorization_from_parameters(parse_parameters(",".join(self.beta)))
        return make_pair(f_fac, g_fac)


@dataclass(frozen=True)
class DependentExample:
    label: str
    alpha: tuple[str, ...]
    beta: tuple[str, ...]
    word: str
    expected_c: int

    def pair(self) -> QualifiedPair:
        f_fac = factorization_from_parameters(parse_parameters(",".join(self.alpha)))
        g_fac = factorization_from_parameters(parse_parameters(",".join(self.beta)))
        return make_pair(f_fac, g_fac)


TABLE_A: tuple[MumRow, ...] = (
    MumRow(1, ("1/2", "1/2", "1/2", "1/2", "1/2", "1/2"), 12, (-12, 0, -40, 0, -12, 0), None),
    MumRow(2, ("1/2", "1/2", "1/2", "1/2", "1/3", "2/3"), 11, (-11, 4, -34, 4, -11, 0), None),
    MumRow(3, ("1/2", "1/2", "1/2", "1/2", "1/4", "3/4"), 10, (-10, 8, -28, 8, -10, 0), None),
    MumRow(4, ("1/2", "1/2", "1/2", "1/2", "1/6", "5/6"), 9, (-9, 12, -22, 12, -9, 0), None),
    MumRow(5, ("1/2", "1/2", "1/3", "1/3", "2/3", "2/3"), 10, (-10, 7, -30, 7, -10, 0), None),
    MumRow(6, ("1/2", "1/2", "1/3", "2/3", "1/4", "3/4"), 9, (-9, 10, -26, 10, -9, 0), None),
    MumRow(7, ("1/2", "1/2", "1/3", "2/3", "1/6", "5/6"), 8, (-8, 13, -22, 13, -8, 0), None),
    MumRow(8, ("1/2", "1/2", "1/4", "1/4", "3/4", "3/4"), 8, (-8, 12, -24, 12, -8, 0), None),
    MumRow(9, ("1/2", "1/2", "1/4", "3/4", "1/6", "5/6"), 7, (-7, 14, -22, 14, -7, 0), None),
    MumRow(10, ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5"), 9, (-9, 11, -24, 11, -9, 0), None),
    MumRow(11, ("1/2", "1/2", "1/6", "1/6", "5/6", "5/6"), 6, (-6, 15, -22, 15, -6, 0), None),
    MumRow(12, ("1/2", "1/2", "1/8", "3/8", "5/8", "7/8"), 8, (-8, 14, -20, 14, -8, 0), None),
    MumRow(13, ("1/2", "1/2", "1/10", "3/10", "7/10", "9/10"), 7, (-7, 15, -20, 15, -7, 0), None),
    MumRow(14, ("1/2", "1/2", "1/12", "5/12", "7/12", "11/12"), 8, (-8, 15, -18, 15, -8, 0), None),
    MumRow(15, ("1/3", "1/3", "1/3", "2/3", "2/3", "2/3"), 9, (-9, 9, -27, 9, -9, 0), None),
    MumRow(16, ("1/3", "1/3", "2/3", "2/3", "1/4", "3/4"), 8, (-8, 11, -24, 11, -8, 0), None),
    MumRow(17, ("1/3", "1/3", "2/3", "2/3", "1/6", "5/6"), 7, (-7, 13, -21, 13, -7, 0), "A^2BA^-1B^4A"),
    MumRow(18, ("1/3", "2/3", "1/4", "1/4", "3/4", "3/4"), 7, (-7, 12, -22, 12, -7, 0), "AB^-1A^3B^3AB^-3"),
    MumRow(19, ("1/3", "2/3", "1/4", "3/4", "1/6", "5/6"), 6, (-6, 13, -20, 13, -6, 0), "AB^2AB^5AB^-1AB^-2"),
    MumRow(20, ("1/3", "2/3", "1/6", "5/6", "1/6", "5/6"), 5, (-5, 13, -19, 13, -5, 0), "B^3"),
    MumRow(21, ("1/3", "2/3", "1/5", "2/5", "3/5", "4/5"), 8, (-8, 12, -23, 12, -8, 0), None),
    MumRow(22, ("1/3", "2/3", "1/8", "3/8", "5/8", "7/8"), 7, (-7, 14, -20, 14, -7, 0), "AB^5"),
    MumRow(23, ("1/3", "2/3", "1/10", "3/10", "7/10", "9/10"), 6, (-6, 14, -19, 14, -6, 0), "B^6A^2B^4A^-1"),
    MumRow(24, ("1/3", "2/3", "1/12", "5/12", "7/12", "11/12"), 7, (-7, 15, -19, 15, -7, 0), None),
    MumRow(25, ("1/4", "1/4", "1/4", "3/4", "3/4", "3/4"), 6, (-6, 12, -20, 12, -6, 0), "B^2A"),
    MumRow(26, ("1/4", "1/4", "3/4", "3/4", "1/6", "5/6"), 5, (-5, 12, -18, 12, -5, 0), "B^2A^3B^-3"),
    MumRow(27, ("1/4", "3/4", "1/5", "2/5", "3/5", "4/5"), 7, (-7, 13, -22, 13, -7, 0), "A^4B^4A(AB)^-1"),
    MumRow(28, ("1/4", "3/4", "1/6", "5/6", "1/6", "5/6"), 4, (-4, 11, -16, 11, -4, 0), "BA^-1B^6A"),
    MumRow(29, ("1/4", "3/4", "1/8", "3/8", "5/8", "7/8"), 6, (-6, 14, -20, 14, -6, 0), "A^2B^2A^-1B^4AB^-1A^2"),
    MumRow(30, ("1/4", "3/4", "1/10", "3/10", "7/10", "9/10"), 5, (-5, 13, -18, 13, -5, 0), "AB^2A^-1B^3AB^-1"),
    MumRow(31, ("1/4", "3/4", "1/12", "5/12", "7/12", "11/12"), 6, (-6, 15, -20, 15, -6, 0), None),
    MumRow(32, ("1/5", "2/5", "3/5", "4/5", "1/6", "5/6"), 6, (-6, 14, -21, 14, -6, 0), "AB^5"),
    MumRow(33, ("1/6", "5/6", "1/6", "5/6", "1/6", "5/6"), 3, (-3, 9, -13, 9, -3, 0), "A^2B^4"),
    MumRow(34, ("1/6", "5/6", "1/8", "3/8", "5/8", "7/8"), 5, (-5, 14, -20, 14, -5, 0), "B^-4AB^4"),
    MumRow(35, ("1/6", "5/6", "1/10", "3/10", "7/10", "9/10"), 4, (-4, 12, -17, 12, -4, 0), "B^4A"),
    MumRow(36, ("1/6", "5/6", "1/12", "5/12", "7/12", "11/12"), 5, (-5, 15, -21, 15, -5, 0), "BA^-1B^6AB^-5"),
    MumRow(37, ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7"), 7, (-7, 14, -21, 14, -7, 0), None),
    MumRow(38, ("1/9", "2/9", "4/9", "5/9", "7/9", "8/9"), 6, (-6, 15, -21, 15, -6, 0), None),
    MumRow(39, ("1/14", "3/14", "5/14", "9/14", "11/14", "13/14"), 5, (-5, 14, -19, 14, -5, 0), None),
    MumRow(40, ("1/18", "5/18", "7/18", "11/18", "13/18", "17/18"), 6, (-6, 15, -19, 15, -6, 0), "A^4B^4A(A^2B)^-1"),
)

#: Rows of table A where gcd(v) > 2 rules out any witness.
OBSTRUCTED_ROWS = (1, 8, 15, 37, 38)

TABLE_D: tuple[OpenRow, ...] = (
    OpenRow(1, ("0", "0", "0", "0", "1/2", "1/2"), ("1/3", "1/3", "2/3", "2/3", "1/6", "5/6")),
    OpenRow(2, ("0", "0", "0", "0", "1/3", "2/3"), ("1/2", "1/2", "1/2", "1/2", "1/4", "3/4")),
    OpenRow(3, ("0", "0", "0", "0", "1/3", "2/3"), ("1/2", "1/2", "1/2", "1/2", "1/6", "5/6")),
    OpenRow(4, ("0", "0", "0", "0", "1/3", "2/3"), ("1/2", "1/2", "1/4", "3/4", "1/4", "3/4")),
    OpenRow(5, ("0", "0", "0", "0", "1/3", "2/3"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(6, ("0", "0", "0", "0", "1/3", "2/3"), ("1/2", "1/2", "1/8", "3/8", "5/8", "7/8")),
    OpenRow(7, ("0", "0", "0", "0", "1/3", "2/3"), ("1/2", "1/2", "1/10", "3/10", "7/10", "9/10")),
    OpenRow(8, ("0", "0", "0", "0", "1/3", "2/3"), ("1/2", "1/2", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(9, ("0", "0", "0", "0", "1/3", "2/3"), ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7")),
    OpenRow(10, ("0", "0", "0", "0", "1/3", "2/3"), ("1/9", "2/9", "4/9", "5/9", "7/9", "8/9")),
    OpenRow(11, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/2", "1/2", "1/3", "2/3")),
    OpenRow(12, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/3", "1/3", "2/3", "2/3")),
    OpenRow(13, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/3", "2/3", "1/6", "5/6")),
    OpenRow(14, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(15, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/6", "5/6", "1/6", "5/6")),
    OpenRow(16, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/8", "3/8", "5/8", "7/8")),
    OpenRow(17, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/10", "3/10", "7/10", "9/10")),
    OpenRow(18, ("0", "0", "0", "0", "1/4", "3/4"), ("1/2", "1/2", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(19, ("0", "0", "0", "0", "1/4", "3/4"), ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7")),
    OpenRow(20, ("0", "0", "0", "0", "1/4", "3/4"), ("1/9", "2/9", "4/9", "5/9", "7/9", "8/9")),
    OpenRow(21, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/2", "1/2", "1/3", "2/3")),
    OpenRow(22, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/3", "1/3", "2/3", "2/3")),
    OpenRow(23, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/3", "2/3", "1/4", "3/4")),
    OpenRow(24, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/4", "3/4", "1/4", "3/4")),
    OpenRow(25, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(26, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/8", "3/8", "5/8", "7/8")),
    OpenRow(27, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/10", "3/10", "7/10", "9/10")),
    OpenRow(28, ("0", "0", "0", "0", "1/6", "5/6"), ("1/2", "1/2", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(29, ("0", "0", "0", "0", "1/6", "5/6"), ("1/3", "1/3", "1/3", "2/3", "2/3", "2/3")),
    OpenRow(30, ("0", "0", "0", "0", "1/6", "5/6"), ("1/3", "1/3", "2/3", "2/3", "1/4", "3/4")),
    OpenRow(31, ("0", "0", "0", "0", "1/6", "5/6"), ("1/3", "2/3", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(32, ("0", "0", "0", "0", "1/6", "5/6"), ("1/4", "3/4", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(33, ("0", "0", "0", "0", "1/6", "5/6"), ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7")),
    OpenRow(34, ("0", "0", "0", "0", "1/6", "5/6"), ("1/9", "2/9", "4/9", "5/9", "7/9", "8/9")),
    OpenRow(35, ("0", "0", "1/3", "2/3", "1/4", "3/4"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(36, ("0", "0", "1/3", "2/3", "1/6", "5/6"), ("1/2", "1/2", "1/4", "1/4", "3/4", "3/4")),
    OpenRow(37, ("0", "0", "1/3", "2/3", "1/6", "5/6"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(38, ("0", "0", "1/3", "2/3", "1/6", "5/6"), ("1/2", "1/2", "1/8", "3/8", "5/8", "7/8")),
    OpenRow(39, ("0", "0", "1/3", "2/3", "1/6", "5/6"), ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7")),
    OpenRow(40, ("0", "0", "1/4", "1/4", "3/4", "3/4"), ("1/2", "1/2", "1/3", "1/3", "2/3", "2/3")),
    OpenRow(41, ("0", "0", "1/4", "1/4", "3/4", "3/4"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(42, ("0", "0", "1/4", "1/4", "3/4", "3/4"), ("1/3", "2/3", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(43, ("0", "0", "1/4", "3/4", "1/6", "5/6"), ("1/2", "1/2", "1/3", "2/3", "1/3", "2/3")),
    OpenRow(44, ("0", "0", "1/4", "3/4", "1/6", "5/6"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(45, ("0", "0", "1/4", "3/4", "1/6", "5/6"), ("1/2", "1/2", "1/8", "3/8", "5/8", "7/8")),
    OpenRow(46, ("0", "0", "1/4", "3/4", "1/6", "5/6"), ("1/3", "1/3", "1/3", "2/3", "2/3", "2/3")),
    OpenRow(47, ("0", "0", "1/4", "3/4", "1/6", "5/6"), ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7")),
    OpenRow(48, ("0", "0", "1/5", "2/5", "3/5", "4/5"), ("1/2", "1/2", "1/3", "1/3", "2/3", "2/3")),
    OpenRow(49, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/2", "1/2", "1/3", "1/3", "2/3", "2/3")),
    OpenRow(50, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(51, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/2", "1/2", "1/8", "3/8", "5/8", "7/8")),
    OpenRow(52, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/2", "1/2", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(53, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/3", "1/3", "1/3", "2/3", "2/3", "2/3")),
    OpenRow(54, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/3", "1/3", "2/3", "2/3", "1/4", "3/4")),
    OpenRow(55, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7")),
    OpenRow(56, ("0", "0", "1/6", "1/6", "5/6", "5/6"), ("1/9", "2/9", "4/9", "5/9", "7/9", "8/9")),
    OpenRow(57, ("0", "0", "1/8", "3/8", "5/8", "7/8"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(58, ("0", "0", "1/8", "3/8", "5/8", "7/8"), ("1/2", "1/2", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(59, ("0", "0", "1/10", "3/10", "7/10", "9/10"), ("1/2", "1/2", "1/5", "2/5", "3/5", "4/5")),
    OpenRow(60, ("0", "0", "1/10", "3/10", "7/10", "9/10"), ("1/2", "1/2", "1/12", "5/12", "7/12", "11/12")),
    OpenRow(61, ("0", "0", "1/10", "3/10", "7/10", "9/10"), ("1/7", "2/7", "3/7", "4/7", "5/7", "6/7")),
    OpenRow(62, ("0", "0", "1/12", "5/12", "7/12", "11/12"), ("1/3", "2/3", "1/4", "3/4", "1/4", "3/4")),
    OpenRow(63, ("1/3", "1/3", "1/3", "2/3", "2/3", "2/3"), ("1/6", "1/6", "1/6", "5/6", "5/6", "5/6")),
    OpenRow(64, ("1/3", "1/3", "2/3", "2/3", "1/3", "2/3"), ("1/9", "2/9", "4/9", "5/9", "7/9", "8/9")),
)

TABLE_B_COUNT = 143
TABLE_C_COUNT = 211
CENSUS_TOTAL = 458

DEPENDENT_EXAMPLES: tuple[DependentExample, ...] = (
    DependentExample(
        label="degree-4 dependent",
        alpha=("1/2", "1/2", "1/3", "2/3"),
        beta=("1/4", "1/4", "3/4", "3/4"),
        word="BA",
        expected_c=2,
    ),
    DependentExample(
        label="degree-6 dependent",
        alpha=("1/2", "1/2", "1/2", "1/2", "1/6", "5/6"),
        beta=("1/9", "2/9", "4/9", "5/9", "7/9", "8/9"),
        word="B^2A",
        expected_c=1,
    ),
)


def witness_rows() -> tuple[MumRow, ...]:
    return tuple(row for row in TABLE_A if row.witness)


def open_rows() -> tuple[MumRow, ...]:
    return tuple(row for row in TABLE_A if not row.witness)
