"""Game-length bounds and the linear system behind them.

Every game from ``n`` 1's balances, index by index, the summands created
and consumed. Writing those balances as a linear system in the move
tallies and eliminating the splitting unknowns gives the exact length

    L = sum_j a_j * delta_j - sum_{i>=2} (i - 1) * MC_i,    a_j = F_{j+2} - j - 2,

so ``sum_j a_j delta_j`` is an upper bound, attained exactly by games with
no combining moves beyond combine-1. Irrational quantities live in
:class:`QuadExact`, so bound comparisons never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import isqrt

import numpy as np

from .engine import MoveTally
from .fibzeck import FIB, MAX_INDEX, ZeckendorfProfile, zeckendorf


# ---------------------------------------------------------------- exact Z[sqrt5]/2

def _sign_root5(a: int, b: int) -> int:
    """Sign of ``a + b*sqrt(5)``."""
    if a >= 0 and b >= 0:
        return 0 if a == 0 and b == 0 else 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare magnitudes squared
    lhs, rhs = a * a, 5 * b * b
    if lhs == rhs:
        return 0
    return (1 if a > 0 else -1) if lhs > rhs else (1 if b > 0 else -1)


@total_ordering
class QuadExact:
    """The number ``(p + q*sqrt(5)) / 2`` with integer ``p``, ``q``."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int = 0) -> None:
        self.p = int(p)
        self.q = int(q)

    @classmethod
    def coerce(cls, x: int | QuadExact) -> QuadExact:
        if isinstance(x, QuadExact):
            return x
        if isinstance(x, (int, np.integer)):
            return cls(2 * int(x), 0)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadExact")

    PHI: QuadExact
    PHI_SQUARED: QuadExact

    def __add__(self, other: int | QuadExact) -> QuadExact:
        o = self.coerce(other)
        return QuadExact(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self) -> QuadExact:
        return QuadExact(-self.p, -self.q)

    def __sub__(self, other: int | QuadExact) -> QuadExact:
        return self + -self.coerce(other)

    def __rsub__(self, other: int | QuadExact) -> QuadExact:
        return self.coerce(other) - self

    def __mul__(self, k: int) -> QuadExact:
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return QuadExact(self.p * int(k), self.q * int(k))

    __rmul__ = __mul__

    def sign(self) -> int:
        return _sign_root5(self.p, self.q)

    def __eq__(self, other: object) -> bool:
        try:
            o = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __lt__(self, other: int | QuadExact) -> bool:
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __float__(self) -> float:
        return (self.p + self.q * 5 ** 0.5) / 2

    def decimal(self, digits: int = 7) -> str:
        """Decimal expansion truncated toward zero, computed exactly."""
        scale = 10**digits
        a, b = self.p * scale, self.q * scale
        neg = self.sign() < 0
        if neg:
            a, b = -a, -b
        root = isqrt(5 * b * b)
        if b < 0:
            root = -root if root * root == 5 * b * b else -root - 1
        whole, frac = divmod((a + root) // 2, scale)
        return f"{'-' if neg and (whole or frac) else ''}{whole}.{frac:0{digits}d}"

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p // 2) if self.p % 2 == 0 else f"{self.p}/2"
        mag = abs(self.q)
        root = "√5" if mag == 1 else f"{mag}√5"
        sign = "+" if self.q > 0 else "-"
        head = f"{self.p}{sign}" if self.p else ("" if self.q > 0 else "-")
        return f"({head}{root})/2"

    def __repr__(self) -> str:
        return f"QuadExact({self.p}, {self.q})"


QuadExact.PHI = QuadExact(1, 1)
QuadExact.PHI_SQUARED = QuadExact(3, 1)


# ---------------------------------------------------------------- bounds

def coeff_a(i: int) -> int:
    """Weight of ``delta_i`` in the sharp upper bound, ``F_{i+2} - i - 2``."""
    if not 1 <= i <= MAX_INDEX - 2:
        raise IndexError(f"coefficient index {i} outside 1..{MAX_INDEX - 2}")
    return FIB[i + 2] - i - 2


def sharp_upper(profile: ZeckendorfProfile) -> int:
    return sum(coeff_a(i) for i in profile.indices())


def closed_upper(profile: ZeckendorfProfile) -> QuadExact:
    """``phi^2 * n - IZ(n) - phi * Z(n)`` exactly."""
    return QuadExact.PHI_SQUARED * profile.n - profile.iz - QuadExact.PHI * profile.z


def lower_bound(profile: ZeckendorfProfile) -> int:
    return profile.n - profile.z


def prior_upper(profile: ZeckendorfProfile) -> int:
    return 3 * profile.n - 3 * profile.z - profile.iz + 1


def binet_bound(j: int) -> QuadExact:
    """Per-index ceiling ``phi^2 * F_j - j - phi`` on ``coeff_a(j)``."""
    return QuadExact.PHI_SQUARED * FIB[j] - j - QuadExact.PHI


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower: int
    sharp_upper: int
    prior_upper: int
    closed_upper: QuadExact

    @property
    def ordered(self) -> bool:
        return self.lower <= self.sharp_upper and self.closed_upper >= self.sharp_upper


def bounds_report(n: int) -> BoundsReport:
    prof = zeckendorf(n)
    return BoundsReport(n, lower_bound(prof), sharp_upper(prof), prior_upper(prof), closed_upper(prof))


def exact_length_identity(tally: MoveTally, profile: ZeckendorfProfile) -> int:
    """Actual game length minus the length predicted from the combine tallies (0 when valid)."""
    predicted = sharp_upper(profile) - sum((i - 1) * c for i, c in tally.mc.items() if i >= 2)
    return tally.total - predicted


# ---------------------------------------------------------------- linear system

def system_entry(i: int, j: int, i_max: int) -> int:
    """Entry ``m_{i,j}`` (1-based) of the accounting matrix for ``i_max``.

    Row ``i`` balances ``F_{i+1}``. Column 1 holds combine-1, columns
    ``2..i_max-1`` the splits ``MS_2..MS_{i_max-1}``, and the remaining
    columns the combines ``MC_2..MC_{i_max-1}``. The combine feeding
    ``F_{i+1}`` from below only exists for ``i >= 2``.
    """
    width = 2 * i_max - 3
    if j == i:
        return 1
    if j == i + 1 and j <= i_max - 1:
        return -2
    if j == i + 3 and j <= i_max - 1:
        return 1
    if j == i + i_max - 2 and i >= 2:
        return 1
    if j == i + i_max - 1 and j <= width:
        return -1
    if j == i + i_max and j <= width:
        return -1
    return 0


@dataclass(frozen=True)
class AccountingSystem:
    i_max: int
    m_matrix: np.ndarray
    a_matrix: np.ndarray

    def rhs(self, profile: ZeckendorfProfile) -> np.ndarray:
        return np.array([profile.delta(i) for i in range(2, self.i_max + 1)], dtype=np.int64)

    def unknowns(self, tally: MoveTally) -> np.ndarray:
        """``[MC_1, MS_2..MS_{i_max-1}, MC_2..MC_{i_max-1}]`` for ``tally``."""
        top = self.i_max - 1
        vals = [tally.combines(1)]
        vals += [tally.splits(i) for i in range(2, top + 1)]
        vals += [tally.combines(i) for i in range(2, top + 1)]
        return np.array(vals, dtype=np.int64)


def build_system(i_max: int) -> AccountingSystem:
    if i_max < 3:
        raise ValueError(f"the accounting system is empty for i_max={i_max} < 3")
    rows, cols = i_max - 1, 2 * i_max - 3
    m = np.array(
        [[system_entry(i, j, i_max) for j in range(1, cols + 1)] for i in range(1, rows + 1)],
        dtype=np.int64,
    )
    return AccountingSystem(i_max, m, m[:, :rows].copy())


def unit_upper_inverse(a: np.ndarray) -> np.ndarray:
    """Invert a unit upper-triangular integer matrix by Gauss-Jordan, exactly."""
    size = a.shape[0]
    if a.shape != (size, size):
        raise ValueError("matrix must be square")
    if np.any(np.diag(a) != 1) or np.any(np.tril(a, -1)):
        raise ValueError("matrix is not unit upper-triangular")
    work = [[int(x) for x in row] for row in a]
    inv = [[int(r == c) for c in range(size)] for r in range(size)]
    # back-substitution sweep; pivots are 1 so no division
    for col in range(size - 1, -1, -1):
        for r in range(col):
            f = work[r][col]
            if f:
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return np.array(inv, dtype=np.int64)


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class InverseReport:
    i_max: int
    inverse: np.ndarray
    claims: tuple[ClaimResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)


def _first_failure(cells) -> tuple | None:
    for cell, ok in cells:
        if not ok:
            return cell
    return None


def verify_inverse_claims(i_max: int) -> InverseReport:
    """Check the closed forms for the inverse of the square block of the system.

    Claims (1-based ``a_{i,j}`` entries of the inverse, ``s = i_max - 1``):

    * ``inverse``: ``A @ A^-1 == I``
    * ``first_row``: ``a_{1,j} == F_{j+1} - 1``
    * ``shift``: ``a_{i+1,j+1} == a_{i,j}``
    * ``recurrence``: ``a_{i,j} == 2 a_{i,j-1} - a_{i,j-3}`` for ``j >= 4`` above the diagonal
    * ``column_sums``: ``0`` followed by the column sums equals ``coeff_a(1..i_max)``
    """
    if not 3 <= i_max <= 40:
        raise ValueError(f"i_max must lie in 3..40, got {i_max}")
    system = build_system(i_max)
    a = system.a_matrix
    inv = unit_upper_inverse(a)
    s = a.shape[0]
    e = lambda i, j: int(inv[i - 1, j - 1])  # noqa: E731

    claims = []
    ident = a @ inv
    claims.append(ClaimResult("inverse", bool(np.array_equal(ident, np.eye(s, dtype=np.int64))),
                              _first_failure((((r + 1, c + 1),), ident[r, c] == (r == c))
                                             for r in range(s) for c in range(s))))
    bad = _first_failure(((1, j), e(1, j) == FIB[j + 1] - 1) for j in range(1, s + 1))
    claims.append(ClaimResult("first_row", bad is None, bad))
    bad = _first_failure(((i, j), e(i + 1, j + 1) == e(i, j))
                         for i in range(1, s) for j in range(1, s))
    claims.append(ClaimResult("shift", bad is None, bad))
    bad = _first_failure(((i, j), e(i, j) == 2 * e(i, j - 1) - e(i, j - 3))
                         for i in range(1, s + 1) for j in range(max(4, i + 1), s + 1))
    claims.append(ClaimResult("recurrence", bad is None, bad))
    sums = [0, *(int(x) for x in inv.sum(axis=0))]
    want = [coeff_a(j) for j in range(1, i_max + 1)]
    bad = _first_failure(((j + 1,), x == y) for j, (x, y) in enumerate(zip(sums, want)))
    claims.append(ClaimResult("column_sums", bad is None and len(sums) == len(want), bad))
    return InverseReport(i_max, inv, tuple(claims))
