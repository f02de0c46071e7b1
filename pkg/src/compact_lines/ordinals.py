"""Ordinal codes below omega^2.

An :class:`OrdCode` ``(a, b)`` stands for ``w*a + b``.  This is the countable
stand-in used wherever a construction would normally range over the first
uncountable ordinal: it is the smallest universe with limit points and
fundamental sequences in which every query still terminates.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidOrdinal

__all__ = ["OrdCode", "ZERO", "OMEGA", "omega_times", "parse_ord"]


@dataclass(frozen=True, order=True)
class OrdCode:
    a: int
    b: int = 0

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise InvalidOrdinal(f"ordinal code needs naturals, got {self.a!r}, {self.b!r}")
        if self.a < 0 or self.b < 0:
            raise InvalidOrdinal(f"negative ordinal code ({self.a}, {self.b})")

    @property
    def is_limit(self) -> bool:
        return self.b == 0 and self.a >= 1

    @property
    def is_successor(self) -> bool:
        return self.b > 0

    def succ(self) -> OrdCode:
        return OrdCode(self.a, self.b + 1)

    def fs(self, n: int) -> OrdCode:
        """n-th term of the fundamental sequence: ``fs(w*a, n) = w*(a-1) + n + 1``."""
        if not self.is_limit:
            raise InvalidOrdinal(f"{self} is not a limit")
        if n < 0:
            raise ValueError("fundamental sequence index must be >= 0")
        return OrdCode(self.a - 1, n + 1)

    def fs_index(self, alpha: OrdCode) -> int | None:
        """Position of ``alpha`` in the fundamental sequence of ``self``, or None."""
        if not self.is_limit:
            raise InvalidOrdinal(f"{self} is not a limit")
        if alpha.a == self.a - 1 and alpha.b >= 1:
            return alpha.b - 1
        return None

    def first_fs_at_least(self, alpha: OrdCode) -> int:
        """Least n with ``fs(self, n) >= alpha``; requires ``alpha < self``."""
        if alpha >= self:
            raise InvalidOrdinal(f"{alpha} is not below {self}")
        if alpha.a < self.a - 1:
            return 0
        return max(alpha.b - 1, 0)

    def __str__(self) -> str:
        if self.a == 0:
            return str(self.b)
        if self.b == 0:
            return f"w.{self.a}"
        return f"w.{self.a}+{self.b}"

    def __repr__(self) -> str:
        return f"OrdCode({self.a}, {self.b})"


ZERO = OrdCode(0, 0)
OMEGA = OrdCode(1, 0)


def omega_times(a: int) -> OrdCode:
    return OrdCode(a, 0)


_ORD_RE = re.compile(r"\s*(?:(\d+)|w\s*\.\s*(\d+)(?:\s*\+\s*(\d+))?)\s*", re.IGNORECASE)


def parse_ord(text: str) -> OrdCode:
    """Parse ``"5"``, ``"w.2"`` or ``"w.2+3"``."""
    m = _ORD_RE.fullmatch(text)
    if m is None:
        raise InvalidOrdinal(f"cannot parse ordinal {text!r}")
    if m.group(1) is not None:
        return OrdCode(0, int(m.group(1)))
    return OrdCode(int(m.group(2)), int(m.group(3) or 0))
