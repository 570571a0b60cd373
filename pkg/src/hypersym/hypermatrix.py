"""Dense n x ... x n hypermatrices over Q(w) and the action of Q(w)[S_d].

Entries are kept as one integer numerator array of shape ``(n,)*d + (phi,)``
(the trailing axis holds the cyclotomic coefficients) over a single positive
common denominator.  Permuting arguments is then an axis transpose, and a
group-algebra element acts by summing transposes.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .combinat import Permutation
from .exactnum import Cyclo, IncompatibleOrderError, mul_matrix, totient


class InvalidInputError(ValueError):
    """Arguments with the wrong shape, degree or format."""


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def _as_cyclo(x, order: int) -> Cyclo:
    if isinstance(x, Cyclo):
        return x.embed(order)
    return Cyclo.rational(order, Fraction(x))


class Hypermatrix:
    """An order-d hypermatrix with all axes of length n, i.e. a d-linear form."""

    def __init__(self, n: int, d: int, root_order: int, num: np.ndarray, den: int = 1):
        if n < 1 or d < 1:
            raise InvalidInputError(f"need n, d >= 1, got n={n}, d={d}")
        if root_order % d and d > 1:
            raise InvalidInputError(f"root_order {root_order} is not a multiple of d={d}")
        phi = totient(root_order)
        if num.shape != (n,) * d + (phi,):
            raise InvalidInputError(f"numerator array has shape {num.shape}, expected {(n,) * d + (phi,)}")
        if den <= 0:
            raise InvalidInputError("denominator must be positive")
        self.n, self.d, self.root_order = n, d, root_order
        g = math.gcd(den, *num.ravel().tolist())
        if g > 1:
            num = num // g
            den //= g
        self._num = num
        self._den = den

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_entries(cls, n: int, d: int, entries: Iterable, root_order: int | None = None) -> "Hypermatrix":
        """Build from n^d entries in row-major order (slot 1 slowest)."""
        root_order = d if root_order is None else root_order
        entries = [_as_cyclo(e, root_order) for e in entries]
        if len(entries) != n**d:
            raise InvalidInputError(f"expected {n ** d} entries, got {len(entries)}")
        phi = totient(root_order)
        den = 1
        for e in entries:
            for c in e.coeffs:
                den = _lcm(den, c.denominator)
        flat = np.empty((n**d, phi), dtype=object)
        for i, e in enumerate(entries):
            for j, c in enumerate(e.coeffs):
                flat[i, j] = c.numerator * (den // c.denominator)
        return cls(n, d, root_order, flat.reshape((n,) * d + (phi,)), den)

    @classmethod
    def from_array(cls, array, root_order: int | None = None) -> "Hypermatrix":
        """Build from a nested sequence / ndarray of rationals or Cyclo values."""
        arr = np.asarray(array, dtype=object)
        d = arr.ndim
        n = arr.shape[0]
        if any(s != n for s in arr.shape):
            raise InvalidInputError(f"hypermatrix must be cubical, got shape {arr.shape}")
        return cls.from_entries(n, d, arr.ravel().tolist(), root_order)

    @classmethod
    def zeros(cls, n: int, d: int, root_order: int | None = None) -> "Hypermatrix":
        root_order = d if root_order is None else root_order
        num = np.zeros((n,) * d + (totient(root_order),), dtype=object)
        num[...] = 0
        return cls(n, d, root_order, num, 1)

    @classmethod
    def basis(cls, n: int, d: int, index: Sequence[int], root_order: int | None = None) -> "Hypermatrix":
        """The hypermatrix with a single 1 at the (1-based) multi-index."""
        h = cls.zeros(n, d, root_order)
        num = h._num.copy()
        num[tuple(i - 1 for i in index) + (0,)] = 1
        return cls(n, d, h.root_order, num, 1)

    def _like(self, num: np.ndarray, den: int) -> "Hypermatrix":
        return Hypermatrix(self.n, self.d, self.root_order, num, den)

    # -- entries ----------------------------------------------------------------

    @property
    def phi(self) -> int:
        return self._num.shape[-1]

    def entry(self, *index: int) -> Cyclo:
        """Entry a_{i_1 ... i_d}, 1-based."""
        if len(index) == 1 and not isinstance(index[0], int):
            index = tuple(index[0])
        if len(index) != self.d or any(not 1 <= i <= self.n for i in index):
            raise InvalidInputError(f"bad multi-index {index} for n={self.n}, d={self.d}")
        raw = self._num[tuple(i - 1 for i in index)]
        return Cyclo._raw(self.root_order, tuple(Fraction(int(c), self._den) for c in raw))

    def entries(self) -> list[Cyclo]:
        return [self.entry(idx) for idx in product(range(1, self.n + 1), repeat=self.d)]

    @cached_property
    def cyclo_array(self) -> np.ndarray:
        out = np.empty((self.n,) * self.d, dtype=object)
        for idx in product(range(self.n), repeat=self.d):
            out[idx] = self.entry(tuple(i + 1 for i in idx))
        return out

    def is_rational(self) -> bool:
        return not self._num[..., 1:].any()

    # -- linear structure -----------------------------------------------------

    def _check_compatible(self, other: "Hypermatrix") -> None:
        if (self.n, self.d) != (other.n, other.d):
            raise InvalidInputError(f"format mismatch: ({self.n},{self.d}) vs ({other.n},{other.d})")
        if self.root_order != other.root_order:
            raise IncompatibleOrderError(f"root orders differ: {self.root_order} vs {other.root_order}")

    def __add__(self, other: "Hypermatrix") -> "Hypermatrix":
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        self._check_compatible(other)
        den = _lcm(self._den, other._den)
        num = self._num * (den // self._den) + other._num * (den // other._den)
        return self._like(num, den)

    def __neg__(self) -> "Hypermatrix":
        return self._like(-self._num, self._den)

    def __sub__(self, other: "Hypermatrix") -> "Hypermatrix":
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Hypermatrix":
        """Multiply every entry by a rational or cyclotomic scalar."""
        if isinstance(c, Cyclo) and c.is_rational():
            c = c.coeffs[0]
        if not isinstance(c, Cyclo):
            c = Fraction(c)
            return self._like(self._num * c.numerator, self._den * c.denominator) if c else self.zeros(
                self.n, self.d, self.root_order
            )
        c = c.embed(self.root_order)
        m = mul_matrix(c)
        mden = 1
        for row in m:
            for x in row:
                mden = _lcm(mden, x.denominator)
        kt = np.array([[int(x * mden) for x in row] for row in m], dtype=object).T
        return self._like(self._num.dot(kt), self._den * mden)

    def __mul__(self, c) -> "Hypermatrix":
        if isinstance(c, Hypermatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._num.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return (
            (self.n, self.d, self.root_order, self._den) == (other.n, other.d, other.root_order, other._den)
            and bool(np.all(self._num == other._num))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Hypermatrix(n={self.n}, d={self.d}, root_order={self.root_order}, nonzero={int(np.count_nonzero(self._num.any(axis=-1)))})"

    # -- serialization ----------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "root_order": self.root_order,
            "entries": [e.to_json() for e in self.entries()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_json_obj(), **kwargs)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Hypermatrix":
        try:
            n, d = int(obj["n"]), int(obj["d"])
            root_order = int(obj.get("root_order", d))
            entries = [Cyclo.from_json(root_order, e) for e in obj["entries"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"malformed hypermatrix document: {exc}") from exc
        return cls.from_entries(n, d, entries, root_order)

    @classmethod
    def from_json(cls, text: str) -> "Hypermatrix":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"invalid JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise InvalidInputError("hypermatrix document must be a JSON object")
        return cls.from_json_obj(obj)


# ---------------------------------------------------------------------------
# group algebra


class GroupAlgebraElement:
    """A finite formal sum  sum_sigma c_sigma sigma  in Q(w)[S_d]."""

    def __init__(self, d: int, terms: Mapping[Permutation, object] | None = None, order: int = 1):
        self.d = d
        self.order = order
        clean: dict[Permutation, Cyclo] = {}
        for sigma, c in (terms or {}).items():
            if sigma.degree != d:
                raise InvalidInputError(f"permutation of degree {sigma.degree} in an S_{d} element")
            if isinstance(c, Cyclo) and c.order != order:
                if order % c.order == 0:
                    c = c.embed(order)
                else:
                    raise IncompatibleOrderError(f"coefficient in Q(w_{c.order}) for algebra over Q(w_{order})")
            c = _as_cyclo(c, order)
            if not c.is_zero():
                clean[sigma] = c
        self.terms = clean

    @classmethod
    def from_perm(cls, sigma: Permutation, coeff=1, order: int = 1) -> "GroupAlgebraElement":
        return cls(sigma.degree, {sigma: coeff}, order)

    @classmethod
    def identity(cls, d: int, order: int = 1) -> "GroupAlgebraElement":
        return cls.from_perm(Permutation.identity(d), 1, order)

    def _common(self, other: "GroupAlgebraElement") -> int:
        if other.d != self.d:
            raise InvalidInputError(f"degree mismatch: S_{self.d} vs S_{other.d}")
        return math.lcm(self.order, other.order)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        order = self._common(other)
        terms: dict = defaultdict(lambda: Cyclo.zero(order))
        for src in (self, other):
            for s, c in src.terms.items():
                terms[s] = terms[s] + c.embed(order)
        return GroupAlgebraElement(self.d, terms, order)

    def __neg__(self):
        return GroupAlgebraElement(self.d, {s: -c for s, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            order = self._common(other)
            terms: dict = defaultdict(lambda: Cyclo.zero(order))
            for s, a in self.terms.items():
                for t, b in other.terms.items():
                    terms[s * t] = terms[s * t] + a.embed(order) * b.embed(order)
            return GroupAlgebraElement(self.d, terms, order)
        if isinstance(other, Cyclo):
            order = math.lcm(self.order, other.order)
            return GroupAlgebraElement(
                self.d, {s: c.embed(order) * other.embed(order) for s, c in self.terms.items()}, order
            )
        return GroupAlgebraElement(self.d, {s: c * other for s, c in self.terms.items()}, self.order)

    def __rmul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        order = self._common(other)
        if set(self.terms) != set(other.terms):
            return False
        return all(c.embed(order) == other.terms[s].embed(order) for s, c in self.terms.items())

    __hash__ = None

    def coefficient(self, sigma: Permutation) -> Cyclo:
        return self.terms.get(sigma, Cyclo.zero(self.order))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{s!r}" for s, c in self.terms.items()) or "0"
        return f"GroupAlgebraElement(S_{self.d}: {body})"


# ---------------------------------------------------------------------------
# actions and evaluation


def _axes(sigma: Permutation) -> list[int]:
    # (sigma F)[i_1..i_d] = F[i_sigma(1)..i_sigma(d)]  <=>  transpose by sigma^-1
    inv = sigma.inverse()
    return [j - 1 for j in inv.images]


def act(sigma: Permutation, F: Hypermatrix) -> Hypermatrix:
    """(sigma F)(x_1, ..., x_d) = F(x_sigma(1), ..., x_sigma(d))."""
    if sigma.degree != F.d:
        raise InvalidInputError(f"permutation of degree {sigma.degree} acting on an order-{F.d} hypermatrix")
    num = np.ascontiguousarray(np.transpose(F._num, _axes(sigma) + [F.d]))
    return F._like(num, F._den)


def act_algebra(gamma: GroupAlgebraElement, F: Hypermatrix) -> Hypermatrix:
    """sum_sigma c_sigma (sigma F), exactly."""
    if gamma.d != F.d:
        raise InvalidInputError(f"S_{gamma.d} element acting on an order-{F.d} hypermatrix")
    if F.root_order % gamma.order:
        raise IncompatibleOrderError(
            f"coefficients in Q(w_{gamma.order}) do not embed in Q(w_{F.root_order})"
        )
    by_coeff: dict[Cyclo, list[Permutation]] = defaultdict(list)
    for sigma, c in gamma.terms.items():
        by_coeff[c.embed(F.root_order)].append(sigma)
    result = Hypermatrix.zeros(F.n, F.d, F.root_order)
    for c, sigmas in by_coeff.items():
        acc = np.zeros_like(F._num)
        for sigma in sigmas:
            acc = acc + np.transpose(F._num, _axes(sigma) + [F.d])
        result = result + F._like(acc, F._den).scale(c)
    return result


def _coerce_vector(F: Hypermatrix, v: Sequence) -> list[Cyclo]:
    if len(v) != F.n:
        raise InvalidInputError(f"vector of length {len(v)} for n={F.n}")
    try:
        return [_as_cyclo(x, F.root_order) for x in v]
    except IncompatibleOrderError as exc:
        raise InvalidInputError(str(exc)) from exc


def _contract(arr: np.ndarray, vectors: Sequence[Sequence[Cyclo] | None]) -> np.ndarray:
    # contract axes from the last one backwards so earlier axis numbers stay valid
    out = arr
    for axis in reversed(range(len(vectors))):
        vec = vectors[axis]
        if vec is None:
            continue
        out = np.tensordot(out, np.array(vec, dtype=object), axes=([axis], [0]))
    return out


def eval_form(F: Hypermatrix, vectors: Sequence[Sequence]) -> Cyclo:
    """F(x_1, ..., x_d) for coordinate vectors x_j."""
    if len(vectors) != F.d:
        raise InvalidInputError(f"expected {F.d} vectors, got {len(vectors)}")
    vecs = [_coerce_vector(F, v) for v in vectors]
    out = _contract(F.cyclo_array, vecs)
    return _as_cyclo(out[()] if isinstance(out, np.ndarray) else out, F.root_order)


def slice_form(F: Hypermatrix, v: Sequence, slot: int) -> list[Cyclo]:
    """The covector F(v, ..., v, -, v, ..., v) with the free argument in ``slot`` (1-based)."""
    if not 1 <= slot <= F.d:
        raise InvalidInputError(f"slot {slot} out of range 1..{F.d}")
    vec = _coerce_vector(F, v)
    vecs = [None if s == slot else vec for s in range(1, F.d + 1)]
    out = _contract(F.cyclo_array, vecs)
    return [_as_cyclo(x, F.root_order) for x in out]


def diag_eval(F: Hypermatrix, v: Sequence) -> Cyclo:
    """F(v, ..., v)."""
    return eval_form(F, [v] * F.d)
