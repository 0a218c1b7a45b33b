"""Exact rational and double-precision square matrices, plus pattern conformance.

Two deliberately small matrix types back the two arithmetic backends.  The
rational type keeps every entry as a Fraction so characteristic polynomials
and residuals can be computed without rounding; the float type is the working
representation for numeric pipelines and can be lifted to the rational type
exactly, since every finite double is a rational number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .patterns import Sign, SignPattern, block_diag_patterns


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(
        f"rational entries must be int, str or Fraction, got {type(value).__name__}; "
        "lift float matrices with FloatMatrix.lift()"
    )


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable square matrix with Fraction entries."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_as_fraction(e) for e in row) for row in self.entries)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have order at least 1")
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        return cls(tuple(tuple(row) for row in rows))

    def to_float(self) -> "FloatMatrix":
        """Round each entry to the nearest double."""
        return FloatMatrix(tuple(tuple(float(e) for e in row) for row in self.entries))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [[str(e) for e in row] for row in self.entries],
        }

    def __repr__(self) -> str:
        return f"RationalMatrix({self.entries!r})"


@dataclass(frozen=True)
class FloatMatrix:
    """Immutable square matrix with finite float entries."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(float(e) for e in row) for row in self.entries)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have order at least 1")
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for e in row:
                if not math.isfinite(e):
                    raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> float:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "FloatMatrix":
        return cls(tuple(tuple(row) for row in rows))

    def lift(self) -> RationalMatrix:
        """Exact rational image; doubles are dyadic rationals so nothing is lost."""
        return RationalMatrix(
            tuple(tuple(Fraction(e) for e in row) for row in self.entries)
        )

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.entries]}

    def __repr__(self) -> str:
        return f"FloatMatrix({self.entries!r})"


def matrix_from_dict(data: dict):
    """Parse a matrix mapping; string entries select the rational backend.

    Entries may be JSON numbers (float backend) or strings like "3" or "-2/7"
    (rational backend).  A single string entry commits the whole matrix to the
    rational backend, in which case integer-valued numbers are accepted
    exactly and non-integer numbers are rejected as ambiguous.
    """
    entries = data["entries"]
    has_string = any(isinstance(e, str) for row in entries for e in row)
    if has_string:
        rows = []
        for row in entries:
            out = []
            for e in row:
                if isinstance(e, str):
                    out.append(Fraction(e))
                elif isinstance(e, int):
                    out.append(Fraction(e))
                elif isinstance(e, float) and e.is_integer():
                    out.append(Fraction(int(e)))
                else:
                    raise ValueError(
                        "rational matrix entries must be strings or integers"
                    )
            rows.append(out)
        matrix = RationalMatrix.from_rows(rows)
    else:
        matrix = FloatMatrix.from_rows(entries)
    if "n" in data and data["n"] != matrix.n:
        raise ValueError(f"declared order {data['n']} does not match {matrix.n} rows")
    return matrix


def conforms(matrix, pattern: SignPattern) -> bool:
    """True when every entry's sign matches the pattern entry exactly.

    Zero pattern entries require exactly zero matrix entries; no tolerance is
    applied on either backend.
    """
    if matrix.n != pattern.n:
        raise ValueError(f"order mismatch: matrix is {matrix.n}, pattern is {pattern.n}")
    for i in range(matrix.n):
        for j in range(matrix.n):
            if Sign.of(matrix[i, j]) is not pattern[i, j]:
                return False
    return True


def block_diag(blocks: Iterable):
    """Direct sum of matrices, or of sign patterns, with zero off-diagonal blocks.

    All blocks must be of the same type: RationalMatrix, FloatMatrix or
    SignPattern.
    """
    blocks = list(blocks)
    if not blocks:
        raise ValueError("need at least one block")
    first = type(blocks[0])
    if any(type(b) is not first for b in blocks):
        raise TypeError("all blocks must have the same type")
    if first is SignPattern:
        return block_diag_patterns(blocks)
    if first is RationalMatrix:
        zero = Fraction(0)
        cls = RationalMatrix
    elif first is FloatMatrix:
        zero = 0.0
        cls = FloatMatrix
    else:
        raise TypeError(f"cannot build a block diagonal of {first.__name__}")
    n = sum(b.n for b in blocks)
    rows = [[zero] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[offset + i][offset + j] = b[i, j]
        offset += b.n
    return cls.from_rows(rows)
