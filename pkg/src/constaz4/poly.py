"""Dense polynomials over Z4 and over R, quotient reduction, and the twist.

Z4 polynomials are plain tuples of residues, ascending by exponent, with no
trailing zeros (the zero polynomial is the empty tuple).  R polynomials are
wrapped in :class:`RPoly` with the same conventions.  Reduction in
R[x]/<x^n - lambda> replaces x^n by lambda; the twist substitutes
x -> lambda*x, which for lambda^2 = 1 simply scales the coefficient at
exponent i by lambda^i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DegreeError, NonUnitError, ParseError, TwistUndefinedError
from .ring import ONE, RElem, ZERO, parse_relem

# ---------------------------------------------------------------------------
# Z4 polynomial helpers (tuples of residues, ascending)
# ---------------------------------------------------------------------------


def z4p(coeffs) -> tuple:
    """Normalize: reduce mod 4 and strip trailing zeros."""
    c = [v % 4 for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def z4p_deg(f: tuple) -> int:
    return len(f) - 1


def z4p_add(f: tuple, g: tuple) -> tuple:
    n = max(len(f), len(g))
    return z4p((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n))


def z4p_neg(f: tuple) -> tuple:
    return z4p(-v for v in f)


def z4p_scale(f: tuple, s: int) -> tuple:
    return z4p(s * v for v in f)


def z4p_mul(f: tuple, g: tuple) -> tuple:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return z4p(out)


def z4p_divmod(f: tuple, g: tuple) -> tuple[tuple, tuple]:
    """Division by a divisor with unit leading coefficient."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    lead = g[-1]
    if lead not in (1, 3):
        raise NonUnitError("divisor leading coefficient must be a unit of Z4")
    inv = lead  # 1 and 3 are self-inverse mod 4
    rem = list(f)
    quo = [0] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g):
        while rem and rem[-1] % 4 == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        shift = len(rem) - len(g)
        q = (rem[-1] * inv) % 4
        quo[shift] = q
        for i, gi in enumerate(g):
            rem[shift + i] = (rem[shift + i] - q * gi) % 4
        rem.pop()
    return z4p(quo), z4p(rem)


def z4p_mod2(f: tuple) -> int:
    """Reduce mod 2, packed as a bitmask (bit i = coefficient of x^i)."""
    m = 0
    for i, v in enumerate(f):
        if v % 2:
            m |= 1 << i
    return m


def z4p_xn_minus_1(n: int) -> tuple:
    return z4p([3] + [0] * (n - 1) + [1])


def z4p_reduce_xn(f: tuple, n: int, lam_z4: int = 1) -> tuple:
    """Reduce mod x^n - lam_z4 by folding x^(n+k) -> lam_z4 * x^k."""
    c = [0] * n
    for i, v in enumerate(f):
        j, k = divmod(i, n)
        c[k] += v * pow(lam_z4, j, 4)
    return z4p(c)


# ---------------------------------------------------------------------------
# R polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientCtx:
    """Ambient quotient ring R[x]/<x^n - lam>."""

    n: int
    lam: RElem

    def __post_init__(self):
        if self.n < 1:
            raise DegreeError("quotient length must be positive")
        if not self.lam.is_unit():
            raise NonUnitError(f"constacyclic constant {self.lam} must be a unit")


class RPoly:
    """Polynomial over R, dense ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_z4(cls, coeffs) -> "RPoly":
        return cls([RElem(v, 0) for v in coeffs])

    @classmethod
    def from_pairs(cls, pairs) -> "RPoly":
        return cls([RElem(a, b) for a, b in pairs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, RPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> RElem:
        return self.coeffs[i] if i < len(self.coeffs) else ZERO

    def __add__(self, other: "RPoly") -> "RPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "RPoly") -> "RPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RPoly(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "RPoly":
        return RPoly(-c for c in self.coeffs)

    def scaled(self, e: RElem) -> "RPoly":
        return RPoly(e * c for c in self.coeffs)

    def mul(self, other: "RPoly") -> "RPoly":
        if not self or not other:
            return RPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + ci * cj
        return RPoly(out)

    def reduced(self, ctx: QuotientCtx) -> "RPoly":
        """Fold x^(n+k) -> lam * x^k until degree < n."""
        n = ctx.n
        out = [ZERO] * n
        for i, c in enumerate(self.coeffs):
            j, k = divmod(i, n)
            scale = ONE
            for _ in range(j):
                scale = scale * ctx.lam
            out[k] = out[k] + scale * c
        return RPoly(out)

    def mul_mod(self, other: "RPoly", ctx: QuotientCtx) -> "RPoly":
        return self.mul(other).reduced(ctx)

    def shift_mod(self, ctx: QuotientCtx) -> "RPoly":
        """Multiply by x in R[x]/<x^n - lam>."""
        out = [ZERO] + list(self.coeffs)
        if len(out) > ctx.n:
            top = out.pop()
            out[0] = out[0] + ctx.lam * top
        return RPoly(out)

    def twist(self, lam: RElem) -> "RPoly":
        """Substitute x -> lam*x, i.e. scale coefficient i by lam^i.

        Only defined for lam with lam^2 = 1, which makes it an involution.
        """
        if lam * lam != ONE:
            raise TwistUndefinedError(f"twist needs lam^2 = 1, got lam = {lam}")
        return RPoly(c if i % 2 == 0 else lam * c for i, c in enumerate(self.coeffs))

    def unit_parts(self) -> tuple:
        """Z4 polynomial of the a-parts (not normalized against trailing zeros of R)."""
        return z4p(c.a for c in self.coeffs)

    def u_parts(self) -> tuple:
        return z4p(c.b for c in self.coeffs)

    def coeff_vector(self, n: int) -> tuple:
        """Length-n coefficient vector, padding with zeros."""
        if self.degree >= n:
            raise DegreeError(f"degree {self.degree} does not fit in length {n}")
        return tuple(self[i] for i in range(n))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"RPoly({format_poly(self)!r})"


X = RPoly([ZERO, ONE])


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def format_poly(f: RPoly) -> str:
    """Canonical rendering: descending exponents, reduced coefficients."""
    if not f:
        return "0"
    terms = []
    for exp in range(f.degree, -1, -1):
        c = f[exp]
        if not c:
            continue
        cs = str(c)
        mixed = c.a != 0 and c.b != 0
        if exp == 0:
            terms.append(f"({cs})" if mixed else cs)
            continue
        xpart = "x" if exp == 1 else f"x^{exp}"
        if c == ONE:
            terms.append(xpart)
        elif mixed:
            terms.append(f"({cs}){xpart}")
        else:
            terms.append(f"{cs}{xpart}")
    return "+".join(terms)


def format_z4poly(f: tuple) -> str:
    return format_poly(RPoly.from_z4(f))


_INT_RE = re.compile(r"\d+")


def _read_int(s: str, i: int) -> tuple[int, int]:
    m = _INT_RE.match(s, i)
    if not m:
        raise ParseError("expected integer", i)
    return int(m.group()), m.end()


def _parse_term(s: str, start: int, end: int) -> tuple[RElem, int]:
    """Parse one term of the despaced string s[start:end] -> (coefficient, exponent)."""
    i = start
    coeff = None
    if i < end and s[i].isdigit():
        k, i = _read_int(s, i)
        if i < end and s[i] == "u":
            coeff = RElem(0, k)
            i += 1
        elif i < end and s[i] == "(":
            inner, i = _read_paren(s, i, end)
            coeff = k * inner
        else:
            coeff = RElem(k, 0)
    elif i < end and s[i] == "u":
        coeff = RElem(0, 1)
        i += 1
    elif i < end and s[i] == "(":
        coeff, i = _read_paren(s, i, end)
    exp = None
    if i < end and s[i] == "*":
        i += 1
    if i < end and s[i] == "x":
        i += 1
        if i < end and s[i] == "^":
            exp, i = _read_int(s, i + 1)
        else:
            exp = 1
    else:
        if coeff is None:
            raise ParseError("empty term", start)
        exp = 0
    if i != end:
        raise ParseError(f"unexpected {s[i]!r} in term", i)
    return (ONE if coeff is None else coeff), exp


def _read_paren(s: str, i: int, end: int) -> tuple[RElem, int]:
    close = s.find(")", i, end)
    if close < 0:
        raise ParseError("unbalanced parenthesis", i)
    return parse_relem(s[i + 1 : close]), close + 1


def parse_poly(text: str) -> RPoly:
    """Parse the polynomial grammar shared by Z4 and R polynomials."""
    s = re.sub(r"\s+", "", text).replace("−", "-")
    if not s:
        raise ParseError("empty polynomial text", 0)
    # split at +/- outside parentheses
    terms = []
    depth = 0
    sign = 1
    tstart = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        tstart = 1
    i = tstart
    coeffs: dict[int, RElem] = {}

    def finish(a: int, b: int, sg: int):
        c, e = _parse_term(s, a, b)
        if sg < 0:
            c = -c
        coeffs[e] = coeffs.get(e, ZERO) + c

    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parenthesis", i)
        elif ch in "+-" and depth == 0:
            finish(tstart, i, sign)
            sign = -1 if ch == "-" else 1
            tstart = i + 1
        i += 1
    if depth != 0:
        raise ParseError("unbalanced parenthesis", len(s) - 1)
    finish(tstart, len(s), sign)
    if not coeffs:
        return RPoly()
    top = max(coeffs)
    return RPoly(coeffs.get(e, ZERO) for e in range(top + 1))


def parse_z4poly(text: str) -> tuple:
    f = parse_poly(text)
    bad = [i for i, c in enumerate(f.coeffs) if c.b]
    if bad:
        raise ParseError(f"coefficient of x^{bad[0]} has a u-part; expected a Z4 polynomial")
    return z4p(c.a for c in f.coeffs)
