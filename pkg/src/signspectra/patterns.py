"""Square sign patterns over {+, 0, -} and the built-in family used by the realizers.

A sign pattern prescribes, entry by entry, whether a real matrix entry must be
positive, zero, or negative.  The built-ins cover the parameterized 6x6
template pattern, a 2x2 companion-style pattern, and their block-diagonal
compositions up to arbitrary size.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Sign(Enum):
    """Qualitative sign of a real number."""

    PLUS = "+"
    ZERO = "0"
    MINUS = "-"

    @classmethod
    def of(cls, value) -> "Sign":
        """Sign of a number.  Zero must be exact; no tolerance is applied."""
        if value > 0:
            return cls.PLUS
        if value < 0:
            return cls.MINUS
        return cls.ZERO

    @classmethod
    def from_char(cls, ch: str) -> "Sign":
        try:
            return cls(ch)
        except ValueError:
            raise ValueError(f"invalid sign character {ch!r}, expected one of '+', '0', '-'") from None

    def __repr__(self) -> str:
        return f"Sign({self.value!r})"


@dataclass(frozen=True)
class SignPattern:
    """Immutable n x n array of Sign values."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        n = len(rows)
        if n == 0:
            raise ValueError("sign pattern must have order at least 1")
        for row in rows:
            if len(row) != n:
                raise ValueError("sign pattern must be square")
            for s in row:
                if not isinstance(s, Sign):
                    raise TypeError(f"pattern entries must be Sign, got {type(s).__name__}")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> Sign:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "SignPattern":
        """Build from strings of '+', '0', '-', one per row."""
        return cls(tuple(tuple(Sign.from_char(ch) for ch in row) for row in rows))

    def to_rows(self) -> list:
        return ["".join(s.value for s in row) for row in self.entries]

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": self.to_rows()}

    @classmethod
    def from_dict(cls, data: dict) -> "SignPattern":
        pattern = cls.from_rows(data["rows"])
        if "n" in data and data["n"] != pattern.n:
            raise ValueError(f"declared order {data['n']} does not match {pattern.n} rows")
        return pattern

    def __repr__(self) -> str:
        return f"SignPattern.from_rows({self.to_rows()!r})"


def block_diag_patterns(blocks: Iterable[SignPattern]) -> SignPattern:
    """Direct sum of sign patterns; off-diagonal blocks are all zero."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("need at least one block")
    n = sum(b.n for b in blocks)
    rows = [[Sign.ZERO] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[offset + i][offset + j] = b[i, j]
        offset += b.n
    return SignPattern(tuple(tuple(row) for row in rows))


def is_superpattern(p: SignPattern, q: SignPattern) -> bool:
    """True when p agrees with q on every nonzero entry of q.

    Equal patterns are superpatterns of each other; the relation allows p to
    fill in zeros of q with any sign.
    """
    if p.n != q.n:
        return False
    for i in range(q.n):
        for j in range(q.n):
            s = q[i, j]
            if s is not Sign.ZERO and p[i, j] is not s:
                return False
    return True


_T_ROWS = ("++0000", "--+000", "000+00", "0000+0", "--000+", "+++0-0")
_TPRIME_ROWS = ("++0000", "--+000", "+00+00", "0000+0", "--000+", "+++0-0")
_D_ROWS = ("++", "--")

_T = SignPattern.from_rows(_T_ROWS)
_TPRIME = SignPattern.from_rows(_TPRIME_ROWS)
_D = SignPattern.from_rows(_D_ROWS)


def composite_pattern(t: int, d: int) -> SignPattern:
    """Direct sum of t copies of the 6x6 template pattern and d 2x2 blocks, in that order."""
    if t < 0 or d < 0 or t + d == 0:
        raise ValueError("need t >= 0, d >= 0 and at least one block")
    return block_diag_patterns([_T] * t + [_D] * d)


def builtin_pattern(name: str, t: int | None = None, d: int | None = None) -> SignPattern:
    """Look up a named pattern.

    Recognized names: "T", "Tprime", "D", "X_template" (alias of "T"), "S"
    (one T block and five D blocks), "Sprime" (same with Tprime), "TD" (one T,
    one D), "U1" (alias of "TD"), "U2", "U3" (repeated doublings of U1), and
    "V" which takes the block counts t and d explicitly.
    """
    if name == "V":
        if t is None or d is None:
            raise ValueError('pattern "V" requires both t and d')
        return composite_pattern(t, d)
    if t is not None or d is not None:
        raise ValueError(f"pattern {name!r} does not take t or d")
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown pattern name {name!r}") from None


def _build_builtins() -> dict:
    td = block_diag_patterns([_T, _D])
    u2 = block_diag_patterns([td, td])
    u3 = block_diag_patterns([u2, u2])
    return {
        "T": _T,
        "Tprime": _TPRIME,
        "D": _D,
        "X_template": _T,
        "S": block_diag_patterns([_T] + [_D] * 5),
        "Sprime": block_diag_patterns([_TPRIME] + [_D] * 5),
        "TD": td,
        "U1": td,
        "U2": u2,
        "U3": u3,
    }


_BUILTINS = _build_builtins()

BUILTIN_NAMES = tuple(_BUILTINS) + ("V",)
