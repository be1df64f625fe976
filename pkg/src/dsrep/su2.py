"""Ladder coefficients and generator matrices for a single spin-A irrep.

Rows and columns are indexed by the magnetic quantum number in descending
order a = A, A-1, ..., -A.  That ordering is a global convention shared by
every module that builds block matrices.
"""

from __future__ import annotations

import numpy as np

from .numeric import HalfInt, half_int_range

__all__ = [
    "spin_dim",
    "spin_indices",
    "ladder_r",
    "ladder_s",
    "su2_generators",
]


def _check_spin(a_max: HalfInt) -> None:
    if a_max.twice < 0:
        raise ValueError(f"spin must be non-negative, got {a_max}")


def _check_index(a_max: HalfInt, a: HalfInt) -> None:
    if (a.twice - a_max.twice) % 2 != 0:
        raise ValueError(f"index {a} has wrong parity for spin {a_max}")
    if abs(a.twice) > a_max.twice:
        raise ValueError(f"index {a} outside [-{a_max}, {a_max}]")


def spin_dim(a_max: HalfInt) -> int:
    """Dimension 2A + 1 of the spin-A irrep."""
    _check_spin(a_max)
    return a_max.twice + 1


def spin_indices(a_max: HalfInt) -> list[HalfInt]:
    """Magnetic indices in the fixed descending order A, A-1, ..., -A."""
    _check_spin(a_max)
    return half_int_range(-a_max, a_max)[::-1]


def ladder_r(a_max: HalfInt, a: HalfInt) -> float:
    """Raising coefficient sqrt((A - a)(A + a + 1)); zero at a = A."""
    _check_spin(a_max)
    _check_index(a_max, a)
    radicand = (a_max.as_fraction - a.as_fraction) * (a_max.as_fraction + a.as_fraction + 1)
    return float(np.sqrt(float(radicand)))


def ladder_s(a_max: HalfInt, a: HalfInt) -> float:
    """Lowering coefficient sqrt((A + a)(A - a + 1)); zero at a = -A."""
    _check_spin(a_max)
    _check_index(a_max, a)
    radicand = (a_max.as_fraction + a.as_fraction) * (a_max.as_fraction - a.as_fraction + 1)
    return float(np.sqrt(float(radicand)))


def su2_generators(a_max: HalfInt) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Matrices (A+, A-, Az) for the spin-A irrep under the descending order.

    A+ has entries r(a2) at rows a1 = a2 + 1, A- has s(a2) at a1 = a2 - 1,
    and Az is diagonal with the index itself.  For A = 0 all three are the
    1x1 zero matrix.
    """
    indices = spin_indices(a_max)
    n = len(indices)
    pos = {a.twice: i for i, a in enumerate(indices)}
    plus = np.zeros((n, n), dtype=complex)
    minus = np.zeros((n, n), dtype=complex)
    z = np.zeros((n, n), dtype=complex)
    for col, a2 in enumerate(indices):
        z[col, col] = float(a2)
        up = a2.twice + 2
        if up in pos:
            plus[pos[up], col] = ladder_r(a_max, a2)
        down = a2.twice - 2
        if down in pos:
            minus[pos[down], col] = ladder_s(a_max, a2)
    return plus, minus, z
