"""Exact rational scalars, symmetric matrices and linear algebra over Q.

Rationals are :class:`fractions.Fraction`. Symmetric matrices are immutable
:class:`QSymMatrix` values; inertia and determinants are computed on an
integer rescaling of the matrix by the kernels in :mod:`contactd3._backend`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import _backend
from .errors import DomainError

Rat = Fraction


def to_rat(value) -> Fraction:
    """Parse ``value`` (int, Fraction or a ``"p/q"`` string) into a Fraction.

    Floats are refused so that no binary rounding enters an exact pipeline.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rat_str(x: Fraction) -> str:
    return str(Fraction(x))


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def sigma(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


class QSymMatrix:
    """Immutable symmetric matrix with rational entries."""

    __slots__ = ("_rows", "_hash")

    def __init__(self, entries: Iterable[Iterable] = ()):
        if isinstance(entries, QSymMatrix):
            entries = entries.rows
        rows = tuple(tuple(to_rat(x) for x in row) for row in entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DomainError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise DomainError(f"matrix is not symmetric at ({i}, {j})")
        self._rows = rows
        self._hash = None

    @classmethod
    def zeros(cls, n: int) -> "QSymMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, diag: Sequence) -> "QSymMatrix":
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def direct_sum(cls, *blocks) -> "QSymMatrix":
        mats = [b if isinstance(b, QSymMatrix) else cls(b) for b in blocks]
        n = sum(m.dim for m in mats)
        rows = [[Fraction(0)] * n for _ in range(n)]
        off = 0
        for m in mats:
            for i in range(m.dim):
                for j in range(m.dim):
                    rows[off + i][off + j] = m[i, j]
            off += m.dim
        return cls(rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __len__(self):
        return len(self._rows)

    def __eq__(self, other):
        if isinstance(other, QSymMatrix):
            return self._rows == other._rows
        try:
            return self._rows == QSymMatrix(other)._rows
        except (TypeError, DomainError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"QSymMatrix([{body}])"

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self._rows for x in row)

    def to_int_rows(self) -> list:
        if not self.is_integral():
            raise DomainError("matrix has non-integer entries")
        return [[x.numerator for x in row] for row in self._rows]

    def scaled_int_rows(self) -> tuple[list, int]:
        """Return ``(rows, L)`` with ``rows == L * self`` integral and ``L > 0``."""
        L = 1
        for row in self._rows:
            for x in row:
                L = math.lcm(L, x.denominator)
        return [[(x * L).numerator for x in row] for row in self._rows], L

    def congruent(self, E: Sequence[Sequence]) -> "QSymMatrix":
        """Return ``E^T Q E`` for a square matrix ``E`` of matching size."""
        n = self.dim
        E = [[to_rat(x) for x in row] for row in E]
        if len(E) != n or any(len(r) != n for r in E):
            raise DomainError("congruence matrix has the wrong shape")
        QE = [[sum(self._rows[i][k] * E[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        return QSymMatrix([[sum(E[k][i] * QE[k][j] for k in range(n)) for j in range(n)]
                           for i in range(n)])

    def apply(self, x: Sequence) -> tuple:
        return tuple(sum(self._rows[i][k] * x[k] for k in range(self.dim))
                     for i in range(self.dim))


def negative_cf_expand(r) -> list[int]:
    """Negative continued fraction of ``r <= -1``.

    Returns ``[a0, ..., am]`` with ``r = a0 - 1/(a1 - 1/(... - 1/am))``, using
    ``a0 = floor(r)`` and recursing on ``-1/(r - a0)``. For ``r < -1`` every
    entry is at most -2; ``r = -1`` gives ``[-1]``.
    """
    r = to_rat(r)
    if r > -1:
        raise DomainError(f"negative continued fractions need r <= -1, got {r}")
    out = []
    while True:
        a = math.floor(r)
        out.append(a)
        rest = r - a
        if rest == 0:
            return out
        r = -1 / rest


def cf_evaluate(coeffs: Sequence[int]) -> Fraction:
    """Evaluate ``a0 - 1/(a1 - 1/(... - 1/am))`` exactly."""
    if not coeffs:
        raise DomainError("empty continued fraction")
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        if value == 0:
            raise DomainError("division by zero while evaluating continued fraction")
        value = Fraction(a) - 1 / value
    return value


def inertia(Q: QSymMatrix) -> Inertia:
    if not isinstance(Q, QSymMatrix):
        Q = QSymMatrix(Q)
    rows, _ = Q.scaled_int_rows()
    return Inertia(*_backend.int_inertia(rows))


def signature(Q: QSymMatrix) -> int:
    return inertia(Q).sigma


def determinant(Q: QSymMatrix) -> Fraction:
    if not isinstance(Q, QSymMatrix):
        Q = QSymMatrix(Q)
    rows, L = Q.scaled_int_rows()
    return Fraction(_backend.int_det(rows), L ** Q.dim)


def solve_linear(Q: QSymMatrix, r: Sequence) -> tuple | None:
    """Some exact solution ``x`` of ``Q x = r``, or ``None`` if there is none.

    Gauss-Jordan elimination over Q; free variables are set to zero.
    """
    if not isinstance(Q, QSymMatrix):
        Q = QSymMatrix(Q)
    n = Q.dim
    if len(r) != n:
        raise DomainError(f"right-hand side has length {len(r)}, expected {n}")
    aug = [list(Q.rows[i]) + [to_rat(r[i])] for i in range(n)]
    pivots = []
    row = 0
    for c in range(n):
        p = next((i for i in range(row, n) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[row], aug[p] = aug[p], aug[row]
        prow = aug[row]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [x * inv for x in prow]
        for i in range(n):
            if i != row:
                f = aug[i][c]
                if f:
                    ri = aug[i]
                    for k in range(c, n + 1):
                        if prow[k]:
                            ri[k] -= f * prow[k]
        pivots.append(c)
        row += 1
        if row == n:
            break
    if any(aug[i][n] != 0 for i in range(row, n)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return tuple(x)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v, strict=True)), Fraction(0))
