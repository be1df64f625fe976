"""Exact scalar arithmetic and a minimal dense complex-matrix kernel.

Half-integers (the spins and magnetic indices used everywhere else) are
stored exactly as twice their value.  Rational work uses
``fractions.Fraction``.  Matrices are plain numpy ``complex128`` arrays;
the few operations needed elsewhere (commutator, conjugate transpose,
residual norm, exact rational elimination) live here so that every
tolerance decision in the package flows through one place.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "HalfInt",
    "half_int_range",
    "commutator",
    "dagger",
    "max_abs",
    "RationalSolution",
    "solve_rational_linear",
]


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact integer or half-integer, stored as twice its value.

    ``HalfInt(3)`` is the number 3/2; ``HalfInt(4)`` is the number 2.
    Addition, subtraction and negation are closed; multiplication is
    defined only by an integer (a product of two half-integers is in
    general a quarter-integer and is not representable).
    """

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int):
            raise TypeError(f"twice must be an int, got {type(self.twice).__name__}")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "HalfInt":
        """Accept a HalfInt, an int, or a Fraction with denominator 1 or 2."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, (int, np.integer)):
            return cls(2 * int(value))
        if isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator == 1:
                return cls(int(doubled))
            raise ValueError(f"{value} is not an integer or half-integer")
        raise TypeError(f"cannot interpret {value!r} as a half-integer")

    @classmethod
    def parse(cls, text) -> "HalfInt":
        """Parse "2", "-3" or "p/2" strings (also accepts plain ints)."""
        if isinstance(text, (int, np.integer)):
            return cls(2 * int(text))
        if not isinstance(text, str):
            raise TypeError(f"cannot parse {text!r} as a half-integer")
        s = text.strip()
        if "/" in s:
            num_text, den_text = s.split("/", 1)
            num = int(num_text)
            den = int(den_text)
            if den == 2:
                return cls(num)
            if den == 1:
                return cls(2 * num)
            raise ValueError(f"half-integer denominator must be 1 or 2: {text!r}")
        return cls(2 * int(s))

    # -- queries -------------------------------------------------------------

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self) -> float:
        return self.twice / 2.0

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.coerce(other).twice)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInt":
        return HalfInt(self.twice - HalfInt.coerce(other).twice)

    def __rsub__(self, other) -> "HalfInt":
        return HalfInt(HalfInt.coerce(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __mul__(self, other) -> "HalfInt":
        if isinstance(other, (int, np.integer)):
            return HalfInt(self.twice * int(other))
        return NotImplemented

    __rmul__ = __mul__


def half_int_range(low: HalfInt, high: HalfInt) -> list[HalfInt]:
    """Inclusive list low, low+1, ..., high (unit steps; empty if high < low)."""
    if (high.twice - low.twice) % 2 != 0:
        raise ValueError(f"{low} and {high} do not differ by an integer")
    return [HalfInt(t) for t in range(low.twice, high.twice + 1, 2)]


# ---------------------------------------------------------------------------
# Dense complex matrices
# ---------------------------------------------------------------------------


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """[x, y] = x @ y - y @ x for square matrices of equal dimension."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"commutator needs square matrices, got shape {x.shape}")
    if x.shape != y.shape:
        raise ValueError(f"commutator shape mismatch: {x.shape} vs {y.shape}")
    return x @ y - y @ x


def dagger(x: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(x).conj().T


def max_abs(x: np.ndarray) -> float:
    """Largest entry magnitude; 0.0 for an empty matrix."""
    x = np.asarray(x)
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x)))


# ---------------------------------------------------------------------------
# Exact rational linear solve
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalSolution:
    """Outcome of an exact linear solve over the rationals.

    status is one of "unique", "underdetermined", "inconsistent".  The
    solution vector is present only for "unique"; dof (number of free
    variables) is present whenever the system is consistent.
    """

    status: str
    solution: Optional[list[Fraction]]
    dof: Optional[int]

    @property
    def is_unique(self) -> bool:
        return self.status == "unique"


def solve_rational_linear(
    matrix: Sequence[Sequence], rhs: Sequence
) -> RationalSolution:
    """Gauss-Jordan elimination over Fractions; rank decisions are exact.

    Entries may be ints or Fractions.  Never raises on rank defects: the
    returned status distinguishes unique / underdetermined / inconsistent.
    """
    rows = [[Fraction(entry) for entry in row] for row in matrix]
    b = [Fraction(entry) for entry in rhs]
    if len(rows) != len(b):
        raise ValueError(f"{len(rows)} rows but {len(b)} right-hand sides")
    ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged coefficient matrix")

    nrows = len(rows)
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        b[r], b[pivot_row] = b[pivot_row], b[r]
        pivot = rows[r][c]
        for i in range(nrows):
            if i == r or rows[i][c] == 0:
                continue
            factor = rows[i][c] / pivot
            for cc in range(c, ncols):
                rows[i][cc] -= factor * rows[r][cc]
            b[i] -= factor * b[r]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break

    for i in range(len(pivot_cols), nrows):
        if b[i] != 0:
            return RationalSolution("inconsistent", None, None)

    rank = len(pivot_cols)
    if rank < ncols:
        return RationalSolution("underdetermined", None, ncols - rank)

    solution = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        solution[c] = b[i] / rows[i][c]
    return RationalSolution("unique", solution, 0)
