"""Exact dense univariate polynomials in the indeterminate ``q``.

Coefficients are Python ints, or ``Fraction`` where a division produced one.
Fractions with denominator 1 are folded back to ints so that integer
polynomials stay integer polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd
from numbers import Rational
from typing import Iterable, Union

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"non-rational coefficient {c!r}")


@total_ordering
class QPoly:
    """Polynomial ``c[0] + c[1] q + ... + c[d] q^d`` with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    # construction helpers
    @classmethod
    def const(cls, c) -> "QPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "QPoly":
        return cls([0] * degree + [c])

    @classmethod
    def gen(cls) -> "QPoly":
        return cls([0, 1])

    @staticmethod
    def coerce(x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        return QPoly([x])

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Coeff:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coefficient(self, k: int) -> Coeff:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return list(self.coeffs)

    def padded(self, length: int) -> list:
        """Coefficient list ``[c0, ..., c_{length-1}]`` zero-padded."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    # arithmetic
    def __add__(self, other):
        other = QPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return QPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        other = QPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = QPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a scalar, or exact division by a polynomial."""
        if isinstance(other, QPoly):
            quo, rem = self.divmod(other)
            if not rem.is_zero():
                raise ArithmeticError(f"{other} does not divide {self}")
            return quo
        return QPoly(Fraction(c) / other for c in self.coeffs)

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = Fraction(other.lead)
        quo = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quo[k - d] = c
            for i, oc in enumerate(other.coeffs):
                rem[k - d + i] -= c * oc
        return QPoly(quo), QPoly(rem[:d] if d > 0 else [])

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or another QPoly."""
        acc = 0 if not isinstance(x, QPoly) else QPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "QPoly":
        return QPoly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def content(self) -> Coeff:
        """Positive gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.int_coeffs():
            g = gcd(g, c)
        return g

    # comparison / hashing: equality is coefficient-level
    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __lt__(self, other):
        # graded order: degree first, then coefficients from the top down
        other = QPoly.coerce(other)
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


def _fmt_coeff(c) -> str:
    return str(c) if isinstance(c, int) else f"({c})"


def format_poly(p: QPoly, var: str = "q") -> str:
    """Expanded human-readable form, highest degree first."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def factor_rational_roots(p: QPoly) -> tuple[int, list[tuple[QPoly, int]], QPoly]:
    """Split an integer polynomial as ``content * prod(linear^e) * rest``.

    Linear factors are primitive ``(a q - b)`` for the rational roots of ``p``;
    ``rest`` is primitive with no rational root. The sign is carried by the
    content so that ``rest`` has positive leading coefficient.
    """
    if p.is_zero():
        return 0, [], QPoly([1])
    content = p.content()
    if p.lead < 0:
        content = -content
    rest = p / content
    factors: list[tuple[QPoly, int]] = []
    # powers of q first
    k = 0
    while rest.coefficient(0) == 0 and rest.degree > 0:
        rest = QPoly(rest.coeffs[1:])
        k += 1
    if k:
        factors.append((QPoly([0, 1]), k))
    changed = True
    while changed and rest.degree > 0:
        changed = False
        c0, cn = rest.coefficient(0), rest.lead
        cands = sorted({Fraction(s * b, a) for b in _divisors(c0) for a in _divisors(cn) for s in (1, -1)},
                       key=lambda r: (abs(r), r < 0))
        for r in cands:
            if rest(r) == 0:
                lin = QPoly([-r.numerator, r.denominator])
                e = 0
                while rest.degree > 0 and rest(r) == 0:
                    rest = rest / lin
                    e += 1
                factors.append((lin, e))
                changed = True
                break
    factors.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs[::-1] if fe[0].coefficient(0) != 0 else ()))
    return content, factors, rest


def format_factored(p: QPoly, var: str = "q") -> str:
    """Human form with rational linear factors pulled out, e.g. ``80(q + 1)^2(q^2 + q - 3)``."""
    content, factors, rest = factor_rational_roots(p)
    if content == 0:
        return "0"
    pieces = []
    if rest.degree > 0:
        pieces.append(f"({format_poly(rest, var)})")
    for f, e in factors:
        if f == QPoly([0, 1]):
            body = var
        else:
            body = f"({format_poly(f, var)})"
        pieces.append(body + (f"^{e}" if e > 1 else ""))
    # q-power goes first, like the printed tables
    pieces.sort(key=lambda s: 0 if s.startswith(var) else 1)
    head = ""
    if content == -1:
        head = "-"
    elif content != 1 or not pieces:
        head = str(content)
    return head + "".join(pieces)


q = QPoly.gen()

