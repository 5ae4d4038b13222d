"""Exact arithmetic over Q(sqrt 3), and exact matrix rank over that field.

Rotation by 120 degrees has matrix entries -1/2 and +-sqrt(3)/2, so every
coordinate this package touches lives in the field of numbers a + b*sqrt(3)
with rational a, b. Since sqrt(3) is irrational, such a number is zero
exactly when a = b = 0, which is what makes zero-tolerance rank computation
possible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True, eq=False)
class QSqrt3:
    """The number a + b*sqrt(3) with exact rational components."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "QSqrt3 | None":
        if isinstance(value, QSqrt3):
            return value
        if isinstance(value, (int, Fraction)):
            return QSqrt3(value)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt3":
        # (a + b*sqrt3)^-1 = (a - b*sqrt3) / (a^2 - 3 b^2); the norm is
        # nonzero for nonzero inputs because sqrt(3) is irrational.
        norm = self.a * self.a - 3 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        return QSqrt3(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def conjugate(self) -> "QSqrt3":
        return QSqrt3(self.a, -self.b)

    # -- predicates and views --------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * _SQRT3

    def __repr__(self) -> str:
        return f"QSqrt3({self.a}, {self.b})"

    def as_json_dict(self) -> dict:
        return {
            "a": f"{self.a.numerator}/{self.a.denominator}",
            "b": f"{self.b.numerator}/{self.b.denominator}",
        }


Q_ZERO = QSqrt3()


@dataclass(frozen=True)
class ExactMatrix:
    """A dense matrix over Q(sqrt 3), stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[QSqrt3, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: list[list[QSqrt3]]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, tuple(tuple(r) for r in rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[r][c] for r in range(self.rows)) for c in range(self.cols)),
        )


def _integer_rows(m: ExactMatrix) -> list[list[tuple[int, int]]]:
    # Scale each row by the lcm of its denominators; row scaling by a
    # nonzero rational does not change the rank.
    rows = []
    for row in m.entries:
        scale = 1
        for x in row:
            scale = scale * x.a.denominator // math.gcd(scale, x.a.denominator)
            scale = scale * x.b.denominator // math.gcd(scale, x.b.denominator)
        rows.append(
            [
                (
                    int(x.a.numerator * (scale // x.a.denominator)),
                    int(x.b.numerator * (scale // x.b.denominator)),
                )
                for x in row
            ]
        )
    return rows


def exact_rank(m: ExactMatrix) -> int:
    """Rank over Q(sqrt 3), by Gaussian elimination with exact division.

    Pivoting is deterministic: for each column, the first remaining row with
    a nonzero entry is used. Dividing by the pivot goes through its
    conjugate, so each updated row is an integer multiple (the pivot's norm)
    of the exact eliminated row; the integer content is then gcd-reduced to
    keep the entries small.
    """
    rows = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if rows[r][col] != (0, 0):
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot_row = rows[rank]
        pa, pb = pivot_row[col]
        norm = pa * pa - 3 * pb * pb
        for r in range(rank + 1, nrows):
            fa, fb = rows[r][col]
            if fa == 0 and fb == 0:
                continue
            # factor = (fa + fb s) * conj(pivot), s = sqrt 3
            ta = fa * pa - 3 * fb * pb
            tb = fb * pa - fa * pb
            row = rows[r]
            new = row[:col]
            g = 0
            for c in range(col, ncols):
                xa, xb = row[c]
                ya, yb = pivot_row[c]
                na = norm * xa - ta * ya - 3 * tb * yb
                nb = norm * xb - ta * yb - tb * ya
                new.append((na, nb))
                if g != 1:
                    g = math.gcd(g, na, nb)
            if g > 1:
                new[col:] = [(na // g, nb // g) for na, nb in new[col:]]
            rows[r] = new
        rank += 1
        if rank == nrows:
            break
    return rank
