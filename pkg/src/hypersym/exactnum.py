"""Exact arithmetic in the cyclotomic fields Q(w_d) = Q[x]/Phi_d(x).

Rationals are plain :class:`fractions.Fraction` values.  A :class:`Cyclo`
is the reduced residue of a rational polynomial modulo Phi_d, stored as its
coefficient tuple (constant term first).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, "Cyclo"]


class IncompatibleOrderError(ValueError):
    """Raised when combining cyclotomic numbers from different fields."""


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, constant first)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    """Long division over Q; ``den`` must be nonzero."""
    num = _trim([Fraction(c) for c in num])
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        _trim(num)
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Phi_d as an integer coefficient tuple, constant term first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if d < 1:
        raise ValueError(f"cyclotomic order must be positive, got {d}")
    num: list = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            q, r = _poly_divmod(num, cyclotomic_polynomial(e))
            assert not r
            num = q
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def totient(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


@lru_cache(maxsize=None)
def _power_residues(d: int) -> tuple[tuple[int, ...], ...]:
    """Reduced integer coefficients of x^j mod Phi_d for j = 0 .. 2*phi(d) - 2."""
    phi = cyclotomic_polynomial(d)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        # multiply by x, then fold the overflow using x^deg = -sum phi[i] x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(d: int, poly: Sequence) -> tuple[Fraction, ...]:
    residues = _power_residues(d)
    deg = totient(d)
    out = [Fraction(0)] * deg
    for j, c in enumerate(poly):
        if c == 0:
            continue
        if j < len(residues):
            row = residues[j]
        else:
            row = _power_residues_big(d, j)
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return tuple(out)


@lru_cache(maxsize=None)
def _power_residues_big(d: int, j: int) -> tuple[int, ...]:
    _, r = _poly_divmod([0] * j + [1], cyclotomic_polynomial(d))
    deg = totient(d)
    r = [int(c) for c in r] + [0] * (deg - len(r))
    return tuple(r)


# ---------------------------------------------------------------------------


class Cyclo:
    """An element of Q(w_d), w_d the class of x modulo Phi_d."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        coeffs = [Fraction(c) for c in coeffs]
        deg = totient(order)
        if len(coeffs) > deg:
            reduced = _reduce(order, coeffs)
        else:
            reduced = tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))
        self.order = order
        self.coeffs = reduced
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "Cyclo":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "Cyclo":
        deg = totient(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, order: int) -> "Cyclo":
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "Cyclo":
        return cls.rational(order, 1)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "Cyclo":
        if isinstance(other, Cyclo):
            if other.order != self.order:
                raise IncompatibleOrderError(
                    f"cannot combine Q(w_{self.order}) with Q(w_{other.order})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.rational(self.order, other)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo._raw(self.order, _reduce(self.order, _poly_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        """Multiplicative inverse via the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # invariant: s * self == r0 (mod Phi)
        r0, r1 = _trim(list(self.coeffs)), _trim([Fraction(c) for c in cyclotomic_polynomial(self.order)])
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant since Phi is irreducible
        assert len(r0) == 1
        c = r0[0]
        return Cyclo(self.order, [x / c for x in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclo._raw(self.order, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "Cyclo":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates / comparison ---------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.order, self.coeffs))
        return self._hash

    # -- field embedding -----------------------------------------------------

    def embed(self, order: int) -> "Cyclo":
        """Image under Q(w_e) -> Q(w_order), w_e -> w_order^(order/e)."""
        if order == self.order:
            return self
        if order % self.order:
            raise IncompatibleOrderError(f"Q(w_{self.order}) does not embed in Q(w_{order})")
        step = order // self.order
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for j, c in enumerate(self.coeffs):
            poly[j * step] = c
        return Cyclo(order, poly)

    # -- presentation --------------------------------------------------------

    def __repr__(self) -> str:
        return f"Cyclo({self.order}, {format_cyclo(self)!r})"

    def __str__(self) -> str:
        return format_cyclo(self)

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, order: int, data: Sequence[str]) -> "Cyclo":
        if len(data) != totient(order):
            raise ValueError(f"expected {totient(order)} coefficients for order {order}, got {len(data)}")
        return cls(order, [Fraction(s) for s in data])


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def omega_pow(d: int, k: int) -> Cyclo:
    """w_d^k as a reduced residue."""
    if d < 2:
        raise ValueError(f"need d >= 2 for a primitive root, got {d}")
    k %= d
    deg = totient(d)
    if k < len(_power_residues(d)):
        row = _power_residues(d)[k]
    else:
        row = _power_residues_big(d, k)
    assert len(row) == deg
    return Cyclo._raw(d, tuple(Fraction(c) for c in row))


def mul_matrix(c: Cyclo) -> list[list[Fraction]]:
    """Matrix M with coeffs(c * a) = M @ coeffs(a)."""
    deg = totient(c.order)
    cols = []
    for j in range(deg):
        basis = Cyclo._raw(c.order, tuple(Fraction(int(i == j)) for i in range(deg)))
        cols.append((c * basis).coeffs)
    return [[cols[j][i] for j in range(deg)] for i in range(deg)]


# ---------------------------------------------------------------------------
# literal syntax: "p/q", "w", "-3*w^2", "1/2+1/3*w^2"

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?)?
        (?P<w>w(?:\^(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_cyclo(text: str, order: int) -> Cyclo:
    """Parse a literal such as ``"1/2+1/3*w^2"`` into Q(w_order)."""
    text = text.strip()
    if not text:
        raise ValueError("empty cyclotomic literal")
    total = Cyclo.zero(order)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos or not (m.group("coef") or m.group("w")):
            raise ValueError(f"cannot parse cyclotomic literal {text!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        if m.group("w"):
            if order < 2:
                raise ValueError("w is not defined for order 1")
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            total = total + omega_pow(order, exp) * coef
        else:
            total = total + coef
        pos = m.end()
        first = False
    return total


def format_cyclo(c: Cyclo) -> str:
    terms = []
    for j, a in enumerate(c.coeffs):
        if a == 0:
            continue
        mag = abs(a)
        if j == 0:
            body = str(mag)
        else:
            w = "w" if j == 1 else f"w^{j}"
            body = w if mag == 1 else f"{mag}*{w}"
        terms.append(("-" if a < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out
