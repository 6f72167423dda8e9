"""Factor x^n - 1 (n odd) into monic basic irreducible polynomials over Z4.

The route is classical: factor x^n + 1 over F2 (square-free since n is odd),
then lift each binary irreducible factor to Z4 with one Graeffe step
f(x^2) = +-(e(x)^2 - o(x)^2), where e and o are the even- and odd-exponent
parts of the binary factor read with 0/1 coefficients.  Every lift is
self-checked: it must reduce mod 2 to its source and the full product must
come back to x^n - 1 exactly.

Binary polynomials are packed as ints, bit i = coefficient of x^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import EvenLengthError, LiftCheckError
from .poly import z4p, z4p_divmod, z4p_mod2, z4p_mul, z4p_scale, z4p_xn_minus_1

# ---------------------------------------------------------------------------
# F2[x] on bitmask ints
# ---------------------------------------------------------------------------


def f2_deg(f: int) -> int:
    return f.bit_length() - 1


def f2_mul(f: int, g: int) -> int:
    out = 0
    while f:
        low = f & -f
        out ^= g << (low.bit_length() - 1)
        f ^= low
    return out


def f2_divmod(f: int, g: int) -> tuple[int, int]:
    if g == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dg = f2_deg(g)
    q = 0
    while f2_deg(f) >= dg and f:
        shift = f2_deg(f) - dg
        q ^= 1 << shift
        f ^= g << shift
    return q, f


def f2_coeffs(f: int) -> tuple:
    return tuple((f >> i) & 1 for i in range(f.bit_length()))


@lru_cache(maxsize=None)
def _irreducibles_f2(max_deg: int) -> tuple:
    """All binary irreducibles of degree 1..max_deg, by trial division."""
    irr = []
    for d in range(1, max_deg + 1):
        for tail in range(1 << d):
            f = (1 << d) | tail
            if d > 1 and not (f & 1):
                continue  # divisible by x
            if all(f2_divmod(f, p)[1] for p in irr if f2_deg(p) <= d // 2):
                irr.append(f)
    return tuple(irr)


def is_irreducible_f2(f: int) -> bool:
    d = f2_deg(f)
    if d < 1:
        return False
    return all(f2_divmod(f, p)[1] for p in _irreducibles_f2(max(d // 2, 1)) if f2_deg(p) <= d // 2)


def factor_f2(n: int) -> list[int]:
    """Monic irreducible binary factors of x^n + 1, ascending (degree, value)."""
    if n < 1 or n % 2 == 0:
        raise EvenLengthError(f"n must be odd and positive, got {n}")
    rem = (1 << n) | 1  # x^n + 1
    factors = []
    d = 1
    while f2_deg(rem) > 0:
        # once no factor of degree <= deg(rem)/2 can remain, rem is irreducible
        if d > f2_deg(rem) // 2:
            factors.append(rem)
            break
        for p in _irreducibles_f2(d):
            if f2_deg(p) != d:
                continue
            q, r = f2_divmod(rem, p)
            if r == 0:
                factors.append(p)
                rem = q
        d += 1
    factors.sort(key=lambda f: (f2_deg(f), f))
    return factors


# ---------------------------------------------------------------------------
# Graeffe lift to Z4
# ---------------------------------------------------------------------------


def graeffe_lift(f2: int, n: int | None = None) -> tuple:
    """Unique monic Hensel lift of a binary irreducible divisor of x^n + 1.

    One Graeffe step suffices from mod 2 to mod 4: with f2 = e + o split
    into even- and odd-exponent parts (coefficients lifted verbatim),
    e(x)^2 - o(x)^2 has only even exponents and equals +-f(x^2).
    """
    coeffs = f2_coeffs(f2)
    e = z4p(c if i % 2 == 0 else 0 for i, c in enumerate(coeffs))
    o = z4p(c if i % 2 == 1 else 0 for i, c in enumerate(coeffs))
    e2, o2 = z4p_mul(e, e), z4p_mul(o, o)
    width = max(len(e2), len(o2))
    diff = z4p([a - b for a, b in zip(_pad(e2, width), _pad(o2, width))])
    if any(v and i % 2 for i, v in enumerate(diff)):
        raise LiftCheckError("Graeffe square has odd-exponent terms")
    f = z4p(diff[i] for i in range(0, len(diff), 2))
    if f and f[-1] == 3:
        f = z4p_scale(f, 3)  # resolve the sign so the lift is monic
    if not f or f[-1] != 1:
        raise LiftCheckError("lift is not monic after sign normalization")
    if z4p_mod2(f) != f2:
        raise LiftCheckError("lift does not reduce to its binary source mod 2")
    if n is not None:
        _, rem = z4p_divmod(z4p_xn_minus_1(n), f)
        if rem:
            raise LiftCheckError(f"lift does not divide x^{n} - 1 over Z4")
    return f


def _pad(f: tuple, n: int | None = None) -> list:
    out = list(f)
    target = n if n is not None else len(out)
    out += [0] * (target - len(out))
    return out


@dataclass(frozen=True)
class Z4Factorization:
    """Monic basic irreducible factors of x^n - 1 over Z4, in canonical order."""

    n: int
    factors: tuple

    def __len__(self) -> int:
        return len(self.factors)

    def product(self) -> tuple:
        out = z4p([1])
        for f in self.factors:
            out = z4p_mul(out, f)
        return out


def factor_xn_minus_1_z4(n: int) -> Z4Factorization:
    """Factor x^n - 1 over Z4, n odd; deterministic (degree, coefficients) order."""
    lifted = [graeffe_lift(f, n) for f in factor_f2(n)]
    lifted.sort(key=lambda f: (len(f), f))
    fact = Z4Factorization(n, tuple(lifted))
    if fact.product() != z4p_xn_minus_1(n):
        raise LiftCheckError(f"factor product does not equal x^{n} - 1 over Z4")
    return fact


def cyclotomic_coset_count(n: int) -> int:
    """Number of 2-cyclotomic cosets mod n (n odd)."""
    if n % 2 == 0:
        raise EvenLengthError(f"n must be odd, got {n}")
    seen = set()
    count = 0
    for s in range(n):
        if s in seen:
            continue
        count += 1
        c = s
        while True:
            seen.add(c)
            c = (2 * c) % n
            if c == s:
                break
    return count
