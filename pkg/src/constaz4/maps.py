"""Vector-level maps: Gray map, cyclic and constacyclic shifts, twist scaling.

R vectors are tuples of :class:`~constaz4.ring.RElem`; Z4 vectors are tuples
of residues.  The Gray map doubles the length: first half collects the
u-parts b_i, second half the values 2*a_i + b_i.
"""

from __future__ import annotations

from .errors import EmptyVectorError, LengthMismatchError, NonUnitError, TwistUndefinedError
from .ring import ONE, RElem, z4_lee


def phi_vec(v: tuple) -> tuple:
    """Gray map R^n -> Z4^(2n)."""
    return tuple(c.b for c in v) + tuple((2 * c.a + c.b) % 4 for c in v)


def sigma(v: tuple) -> tuple:
    """Right cyclic shift by one position (any alphabet)."""
    if not v:
        raise EmptyVectorError("cannot shift an empty vector")
    return (v[-1],) + v[:-1]


def tau(v: tuple, lam: RElem) -> tuple:
    """Constacyclic shift: rotate right, scale the wrapped coordinate by lam."""
    if not v:
        raise EmptyVectorError("cannot shift an empty vector")
    if not lam.is_unit():
        raise NonUnitError(f"constacyclic constant {lam} must be a unit")
    return (lam * v[-1],) + v[:-1]


def mu_bar(v: tuple, lam: RElem) -> tuple:
    """Scale coordinate i by lam^i; needs lam^2 = 1 so it is an involution."""
    if lam * lam != ONE:
        raise TwistUndefinedError(f"scaling map needs lam^2 = 1, got lam = {lam}")
    return tuple(c if i % 2 == 0 else lam * c for i, c in enumerate(v))


def lee_weight_vec(v: tuple) -> int:
    """Lee weight of an R vector (sum of element weights)."""
    return sum(c.lee_weight() for c in v)


def lee_distance(x: tuple, y: tuple) -> int:
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths {len(x)} and {len(y)} differ")
    return lee_weight_vec(tuple(a - b for a, b in zip(x, y)))


def z4_lee_weight_vec(v: tuple) -> int:
    """Lee weight of a Z4 vector."""
    return sum(z4_lee(c) for c in v)


def format_vector(v: tuple) -> str:
    return "[" + ", ".join(str(c) for c in v) + "]"
