"""Exact polynomial arithmetic in q and the closed-form q-Catalan numbers.

Everything here is integer-exact: polynomials are dense coefficient vectors
over Python ints, and quotients are computed by long division with an
explicit failure signal rather than rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


class InexactDivisionError(ArithmeticError):
    """Polynomial long division left a remainder where exactness was required."""


class SizeGuardError(ValueError):
    """An enumeration was requested beyond its guarded rank."""


class QPoly:
    """Polynomial in q with integer coefficients, constant term first.

    Trailing zero coefficients are stripped; the zero polynomial has an
    empty coefficient tuple, so ``degree()`` is ``len(coeffs) - 1`` for
    nonzero polynomials.

    >>> str(QPoly([1, 0, 2, 1]))
    '1 + 2q^2 + q^3'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls((0,) * exponent + (coefficient,))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == QPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            other = QPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            other = QPoly((other,))
        return self + (-other)

    def __rsub__(self, other: int) -> "QPoly":
        return QPoly((other,)) - self

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def divexact(self, other: "QPoly") -> "QPoly":
        """Exact quotient self / other; raises InexactDivisionError otherwise."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        if len(rem) < len(d):
            if any(rem):
                raise InexactDivisionError(f"{self} not divisible by {other}")
            return QPoly()
        q = [0] * (len(rem) - len(d) + 1)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if c % lead:
                raise InexactDivisionError(f"{self} not divisible by {other}")
            q[k] = c // lead
            if q[k]:
                for j, y in enumerate(d):
                    rem[k + j] -= q[k] * y
        if any(rem):
            raise InexactDivisionError(f"{self} not divisible by {other}")
        return QPoly(q)

    def substitute_power(self, m: int) -> "QPoly":
        """The polynomial with q replaced by q^m."""
        if m < 1:
            raise ValueError("power must be >= 1")
        out = [0] * (m * self.degree() + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return QPoly(out)

    def __call__(self, x: int) -> int:
        val = 0
        for c in reversed(self.coeffs):
            val = val * x + c
        return val

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        return cls(data["coeffs"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


_FIXED_RANK = {"H3": 3, "H4": 4, "F4": 4, "E6": 6, "E7": 7, "E8": 8}

_EXCEPTIONAL_DEGREES = {
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}

FAMILIES = ("A", "B", "D", "I2") + tuple(_FIXED_RANK)


@dataclass(frozen=True)
class GroupType:
    """A reflection-group type: family letter plus rank.

    Families A, B, D support the full poset/path machinery; I2 and the
    exceptional families exist only for the Catalan-number table (for I2
    the ``rank`` field holds the defining parameter k).
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.family == "D" and self.rank < 2:
            raise ValueError("type D needs rank >= 2")
        if self.family == "I2" and self.rank < 2:
            raise ValueError("I2(k) needs k >= 2")
        fixed = _FIXED_RANK.get(self.family)
        if fixed is not None and self.rank != fixed:
            raise ValueError(f"{self.family} has rank {fixed}")

    @property
    def n(self) -> int:
        """The classical index n: one-line length for the group, path length.

        For A_{n-1} this is rank + 1 (the group is the symmetric group S_n);
        for B_n and D_n it equals the rank.
        """
        if self.family == "A":
            return self.rank + 1
        if self.family in ("B", "D"):
            return self.rank
        raise ValueError(f"no classical index for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def degrees(t: GroupType) -> tuple[int, ...]:
    """The multiset of degrees d_1 <= ... <= d_l of the reflection group."""
    if t.family == "A":
        return tuple(range(2, t.rank + 2))
    if t.family == "B":
        return tuple(range(2, 2 * t.rank + 1, 2))
    if t.family == "D":
        return tuple(sorted(list(range(2, 2 * t.rank - 1, 2)) + [t.rank]))
    if t.family == "I2":
        return (2, t.rank)
    return _EXCEPTIONAL_DEGREES[t.family]


def coxeter_number(t: GroupType) -> int:
    return max(degrees(t))


def q_integer(k: int) -> QPoly:
    """The q-analogue 1 + q + ... + q^(k-1); k = 0 gives the zero polynomial."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return QPoly((1,) * k)


def q_factorial(k: int) -> QPoly:
    out = QPoly.one()
    for i in range(2, k + 1):
        out = out * q_integer(i)
    return out


def q_binomial(k: int, l: int) -> QPoly:
    """The q-binomial coefficient, computed by the q-Pascal recurrence.

    >>> str(q_binomial(4, 2))
    '1 + q + 2q^2 + q^3 + q^4'
    """
    if l < 0 or k < 0:
        raise ValueError("arguments must be >= 0")
    if l > k:
        raise ValueError("need l <= k")
    l = min(l, k - l)
    # row[j] holds qbinom(i, j); Pascal step: qbinom(i,j) = qbinom(i-1,j-1) + q^j qbinom(i-1,j)
    row = [QPoly.one()] + [QPoly.zero()] * l
    for i in range(1, k + 1):
        for j in range(min(i, l), 0, -1):
            row[j] = row[j - 1] + QPoly.monomial(j) * row[j]
    return row[l]


def cat_number(t: GroupType) -> int:
    """The Catalan number prod (d_i + h)/d_i of the reflection group, exactly."""
    ds = degrees(t)
    h = coxeter_number(t)
    num = math.prod(d + h for d in ds)
    den = math.prod(ds)
    if num % den:
        raise ArithmeticError(f"degree table for {t} gives a non-integer")
    return num // den


@lru_cache(maxsize=None)
def qcat_product(t: GroupType) -> QPoly:
    """The q-Catalan number prod [d_i + h]_q / [d_i]_q as an exact polynomial."""
    ds = degrees(t)
    h = coxeter_number(t)
    num = QPoly.one()
    for d in ds:
        num = num * q_integer(d + h)
    den = QPoly.one()
    for d in ds:
        den = den * q_integer(d)
    try:
        return num.divexact(den)
    except InexactDivisionError as exc:
        raise ArithmeticError(f"degree table for {t} is inconsistent") from exc


def qcat_a(n: int) -> QPoly:
    """The classical q-Catalan number qbinom(2n, n) / [n+1]_q."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return q_binomial(2 * n, n).divexact(q_integer(n + 1))


def is_palindromic(p: QPoly, center: int) -> bool:
    """True iff coeff(k) == coeff(center - k) for all k."""
    top = max(p.degree(), center)
    return all(p.coeff(k) == p.coeff(center - k) for k in range(0, top + 1))
