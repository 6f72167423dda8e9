"""Arithmetic in Z4 and in the 16-element ring R = Z4 + u*Z4 with u^2 = 0.

Elements of R are written a + u*b with a, b in {0,1,2,3}.  All operations
reduce mod 4 immediately, so every value has a unique representation.
The element-level Gray map sends a + u*b to the pair (b, 2a+b) in Z4^2,
and the Lee weight of a + u*b is the Z4 Lee weight of that pair.
"""

from __future__ import annotations

import re

from .errors import NonUnitError, ParseError

# classical Lee weight on Z4
Z4_LEE = (0, 1, 2, 1)


def z4_lee(v: int) -> int:
    """Lee weight of a single Z4 residue."""
    return Z4_LEE[v % 4]


class RElem:
    """An element a + u*b of R = Z4 + u*Z4, u^2 = 0.  Immutable by convention."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a % 4
        self.b = b % 4

    def __add__(self, other: "RElem") -> "RElem":
        return RElem(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RElem") -> "RElem":
        return RElem(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RElem":
        return RElem(-self.a, -self.b)

    def __mul__(self, other):
        # (a+ub)(c+ud) = ac + u(ad+bc), the u^2 term vanishes
        if isinstance(other, int):
            other = RElem(other, 0)
        return RElem(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, RElem) and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def is_unit(self) -> bool:
        """a + u*b is a unit of R iff a is a unit of Z4."""
        return self.a in (1, 3)

    def inverse(self) -> "RElem":
        """Multiplicative inverse; a^2 = 1 for units of Z4, so it is a - u*b."""
        if not self.is_unit():
            raise NonUnitError(f"{self} is not a unit of R")
        return RElem(self.a, -self.b)

    def gray(self) -> tuple[int, int]:
        """Image (b, 2a+b) in Z4^2 under the Gray map."""
        return (self.b, (2 * self.a + self.b) % 4)

    def lee_weight(self) -> int:
        g = self.gray()
        return z4_lee(g[0]) + z4_lee(g[1])

    def __str__(self) -> str:
        if self.a == 0 and self.b == 0:
            return "0"
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b:
            parts.append("u" if self.b == 1 else f"{self.b}u")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"RElem({self.a}, {self.b})"


ZERO = RElem(0, 0)
ONE = RElem(1, 0)
TWO = RElem(2, 0)
U = RElem(0, 1)
ONE_PLUS_2U = RElem(1, 2)
THREE_PLUS_2U = RElem(3, 2)

ALL_ELEMS = tuple(RElem(a, b) for a in range(4) for b in range(4))
UNITS = tuple(x for x in ALL_ELEMS if x.is_unit())

_RELEM_RE = re.compile(r"^(?:(\d+)(?:\+(\d*)u)?|(\d*)u)$")


def parse_relem(text: str) -> RElem:
    """Parse '0', '2', 'u', '2u', '1+2u', '3+u', ... (whitespace ignored)."""
    s = re.sub(r"\s+", "", text)
    m = _RELEM_RE.match(s)
    if not m:
        raise ParseError(f"cannot parse ring element {text!r}")
    a_str, b_after_plus, b_only = m.groups()
    if b_only is not None:
        return RElem(0, int(b_only) if b_only else 1)
    a = int(a_str)
    if b_after_plus is None:
        return RElem(a, 0)
    return RElem(a, int(b_after_plus) if b_after_plus else 1)
