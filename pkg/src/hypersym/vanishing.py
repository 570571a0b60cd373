"""Vanishing criteria for the hyperdeterminant.

Condition (*) asks for one vector v with every slice F(v,..,v,-,v,..,v)
identically zero; it forces Det(F) = 0.  The diagonal system

    G_i(l_1..l_n) = F(v, ..., v, e_i),   v = sum_j l_j e_j,

collects the last-slot slices as forms of degree d-1 and satisfies the Euler
relation sum_i l_i G_i = F(v, ..., v).  For n = 2 a nonzero common root is
detected exactly by the Sylvester resultant; for larger n only a finite
field search is offered, which is evidence and nothing more.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import product
from math import comb
from typing import Sequence

import numpy as np
import sympy

from .exactnum import Cyclo, totient
from .hypermatrix import Hypermatrix, InvalidInputError, slice_form
from .linalg import det

Poly = dict  # exponent tuple -> Cyclo, homogeneous


class DegenerateSystemError(ValueError):
    """Both forms vanish identically: every point is a witness."""


def star_condition(F: Hypermatrix, v: Sequence) -> bool:
    """True iff every slice F(v,..,v,-,v,..,v) is the zero covector."""
    return all(all(c.is_zero() for c in slice_form(F, v, s)) for s in range(1, F.d + 1))


def cayley_det_222(F: Hypermatrix) -> Cyclo:
    """Hyperdeterminant of a 2x2x2 hypermatrix (Cayley's formula)."""
    if (F.n, F.d) != (2, 3):
        raise InvalidInputError(f"Cayley's hyperdeterminant needs n=2, d=3, got n={F.n}, d={F.d}")
    a = F.entry

    def det2(p, q, r, s):
        return p * s - q * r

    first = det2(a(1, 1, 1), a(1, 2, 2), a(2, 1, 1), a(2, 2, 2)) + det2(a(1, 2, 1), a(1, 1, 2), a(2, 2, 1), a(2, 1, 2))
    second = det2(a(1, 1, 1), a(1, 1, 2), a(2, 1, 1), a(2, 1, 2)) * det2(a(1, 2, 1), a(1, 2, 2), a(2, 2, 1), a(2, 2, 2))
    return first * first - second * 4


# ---------------------------------------------------------------------------
# diagonal system


def _exponent(idx: Sequence[int], n: int) -> tuple[int, ...]:
    e = [0] * n
    for i in idx:
        e[i] += 1
    return tuple(e)


def _clean(poly: dict) -> Poly:
    return {e: c for e, c in poly.items() if not c.is_zero()}


@dataclass
class DiagSystem:
    n: int
    degree: int
    order: int
    polys: list = field(default_factory=list)

    def euler_combination(self) -> Poly:
        """sum_i l_i G_i."""
        out: dict = defaultdict(lambda: Cyclo.zero(self.order))
        for i, g in enumerate(self.polys):
            for e, c in g.items():
                shifted = tuple(x + (k == i) for k, x in enumerate(e))
                out[shifted] = out[shifted] + c
        return _clean(out)

    def is_zero(self) -> bool:
        return all(not g for g in self.polys)

    def evaluate(self, point: Sequence) -> list[Cyclo]:
        pt = [x if isinstance(x, Cyclo) else Cyclo.rational(self.order, x) for x in point]
        out = []
        for g in self.polys:
            acc = Cyclo.zero(self.order)
            for e, c in g.items():
                term = c
                for x, k in zip(pt, e):
                    if k:
                        term = term * x**k
                acc = acc + term
            out.append(acc)
        return out

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "root_order": self.order,
            "polys": [
                {",".join(map(str, e)): c.to_json() for e, c in sorted(g.items(), reverse=True)}
                for g in self.polys
            ],
        }


def diag_system(F: Hypermatrix) -> DiagSystem:
    arr = F.cyclo_array
    polys = []
    for i in range(F.n):
        g: dict = defaultdict(lambda: Cyclo.zero(F.root_order))
        for idx in product(range(F.n), repeat=F.d - 1):
            c = arr[idx + (i,)]
            if not c.is_zero():
                e = _exponent(idx, F.n)
                g[e] = g[e] + c
        polys.append(_clean(g))
    return DiagSystem(F.n, F.d - 1, F.root_order, polys)


def diag_polynomial(F: Hypermatrix) -> Poly:
    """F(v, ..., v) expanded as a form of degree d in the coordinates of v."""
    arr = F.cyclo_array
    out: dict = defaultdict(lambda: Cyclo.zero(F.root_order))
    for idx in product(range(F.n), repeat=F.d):
        c = arr[idx]
        if not c.is_zero():
            e = _exponent(idx, F.n)
            out[e] = out[e] + c
    return _clean(out)


# ---------------------------------------------------------------------------
# n = 2: resultant and exact witnesses


def _binary_coeffs(g: Poly, degree: int, order: int) -> list[Cyclo]:
    """Coefficients of l1^degree, l1^(degree-1) l2, ..., l2^degree."""
    return [g.get((degree - k, k), Cyclo.zero(order)) for k in range(degree + 1)]


def sylvester_matrix(f: Sequence, g: Sequence) -> list[list]:
    p, q = len(f) - 1, len(g) - 1
    size = p + q
    zero = f[0] * 0
    rows = []
    for s in range(q):
        rows.append([zero] * s + list(f) + [zero] * (size - p - 1 - s))
    for s in range(p):
        rows.append([zero] * s + list(g) + [zero] * (size - q - 1 - s))
    return rows


def resultant_n2(system: DiagSystem) -> Cyclo:
    """Sylvester resultant of (G_1, G_2); zero iff they share a projective root."""
    if system.n != 2:
        raise InvalidInputError(f"resultant needs n=2, got n={system.n}")
    if system.is_zero():
        raise DegenerateSystemError("degenerate: every point is a witness")
    f = _binary_coeffs(system.polys[0], system.degree, system.order)
    g = _binary_coeffs(system.polys[1], system.degree, system.order)
    return det(sylvester_matrix(f, g), one=Cyclo.one(system.order))


def _upoly_trim(p: list) -> list:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _upoly_rem(a: list, b: list) -> list:
    a = list(a)
    lead_inv = b[-1].inverse()
    while len(a) >= len(b) and a:
        c = a[-1] * lead_inv
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - c * bc
        _upoly_trim(a)
    return a


def _upoly_gcd(a: list, b: list) -> list:
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    while b:
        a, b = b, _upoly_rem(a, b)
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def _rational_roots(poly: list) -> list[Fraction]:
    """Rational roots of a univariate polynomial with rational coefficients."""
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.coeffs[0].numerator, c.coeffs[0].denominator) * t**k for k, c in enumerate(poly))
    roots = []
    for factor, _ in sympy.factor_list(expr, t)[1]:
        fp = sympy.Poly(factor, t)
        if fp.degree() == 1:
            a1, a0 = fp.all_coeffs()
            r = sympy.Rational(-a0 / a1)
            roots.append(Fraction(int(r.p), int(r.q)))
    return sorted(roots)


@dataclass
class WitnessReport:
    mode: str
    witness: tuple | None
    status: str
    details: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = [x.to_json() if isinstance(x, Cyclo) else x for x in self.witness]
        return {"mode": self.mode, "status": self.status, "witness": wit, **self.details}


def witness_n2(F: Hypermatrix) -> WitnessReport:
    """Exact search for u != 0 with F(u, ..., u, V) = 0 when n = 2.

    Roots are reported when the gcd of the dehomogenized G_i is linear or has
    a rational linear factor; otherwise a root exists only in an extension.
    """
    system = diag_system(F)
    if system.n != 2:
        raise InvalidInputError("exact witness extraction is implemented for n=2 only")
    order = system.order
    if system.is_zero():
        return WitnessReport("exact", (Cyclo.zero(order), Cyclo.one(order)), "found")
    res = resultant_n2(system)
    if not res.is_zero():
        return WitnessReport("exact", None, "none", {"resultant": res.to_json()})
    deg = system.degree
    f = _binary_coeffs(system.polys[0], deg, order)
    g = _binary_coeffs(system.polys[1], deg, order)
    # root at infinity of the chart l2 = 1, i.e. the point (1, 0)
    if f[0].is_zero() and g[0].is_zero():
        return WitnessReport("exact", (Cyclo.one(order), Cyclo.zero(order)), "found")
    # G(t, 1) has coefficient of t^j equal to coefficient index deg - j
    fu = list(reversed(f))
    gu = list(reversed(g))
    h = _upoly_gcd(fu, gu)
    if len(h) == 2:
        return WitnessReport("exact", (-h[0], Cyclo.one(order)), "found")
    if len(h) > 2 and all(c.is_rational() for c in h):
        roots = _rational_roots(h)
        if roots:
            return WitnessReport("exact", (Cyclo.rational(order, roots[0]), Cyclo.one(order)), "found")
    return WitnessReport("exact", None, "exists in an extension field", {"gcd_degree": len(h) - 1})


# ---------------------------------------------------------------------------
# finite field evidence


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _mult_order(x: int, p: int) -> int:
    k, y = 1, x % p
    while y != 1:
        y = y * x % p
        k += 1
    return k


def root_image(order: int, p: int) -> int:
    """Smallest element of GF(p)^* of multiplicative order exactly ``order``."""
    return next(x for x in range(1, p) if _mult_order(x, p) == order)


def reduce_mod_p(F: Hypermatrix, p: int) -> np.ndarray:
    """Image of F under Q(w) -> GF(p), w -> root_image(root_order, p)."""
    if not _is_prime(p):
        raise InvalidInputError(f"{p} is not prime")
    if (p - 1) % F.root_order:
        raise InvalidInputError(f"p={p} is not 1 mod root_order={F.root_order}")
    if F._den % p == 0:
        raise InvalidInputError(f"p={p} divides an entry denominator")
    w = root_image(F.root_order, p)
    powers = np.array([pow(w, j, p) for j in range(totient(F.root_order))], dtype=object)
    num = (F._num.dot(powers)) % p
    return (num * pow(F._den, -1, p) % p).astype(np.int64)


@lru_cache(maxsize=None)
def field_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree k over GF(p), low coefficients first."""
    if k == 1:
        return (0, 1)
    x = sympy.Symbol("x")
    for low in product(range(p), repeat=k):
        coeffs = low + (1,)
        if low[0] and sympy.Poly(coeffs[::-1], x, modulus=p).is_irreducible:
            return coeffs
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


@lru_cache(maxsize=None)
def _mul_table(p: int, k: int) -> np.ndarray:
    """T[i, j] = coordinates of t^(i+j) in the basis 1, t, .., t^(k-1) of GF(p^k)."""
    mod = field_modulus(p, k)
    powers = [[int(i == j) for j in range(k)] for i in range(k)]
    while len(powers) < 2 * k - 1:
        prev = powers[-1]
        shifted = [0] + prev[:-1]
        top = prev[-1]
        powers.append([(c - top * m) % p for c, m in zip(shifted, mod)])
    return np.array([[powers[i + j] for j in range(k)] for i in range(k)], dtype=np.int64)


def _decode(codes: np.ndarray, p: int, k: int) -> np.ndarray:
    """Integer codes sum c_j p^j -> coefficient arrays (..., k)."""
    return (codes[..., None] // p ** np.arange(k, dtype=np.int64)) % p


def projective_points(n: int, p: int, degree: int = 1) -> np.ndarray:
    """Normalized points of P^(n-1)(GF(p^degree)) in lexicographic order.

    Field elements are integer codes sum c_j p^j of their coordinates in the
    power basis, so for degree 1 the codes are the residues themselves.
    """
    q = p**degree
    pts = []
    for lead in range(n - 1, -1, -1):
        # first nonzero coordinate at position `lead`, set to 1
        for tail in product(range(q), repeat=n - 1 - lead):
            pts.append((0,) * lead + (1,) + tail)
    return np.array(sorted(pts), dtype=np.int64).reshape(-1, n)


def ff_slices(Fp: np.ndarray, points: np.ndarray, p: int, slot: int, degree: int = 1) -> np.ndarray:
    """Slices at every point with the free argument in ``slot``.

    ``points`` holds coefficient arrays of shape (batch, n, degree); the result
    has shape (batch, n, degree).
    """
    T = _mul_table(p, degree)
    t = np.moveaxis(Fp, slot - 1, -1)  # free axis last
    t = np.einsum("i...,bic->b...c", t, points) % p
    for _ in range(Fp.ndim - 2):
        t = np.einsum("bi...a,bic,acl->b...l", t, points, T, optimize=True) % p
    return t


def witness_search_ff(F: Hypermatrix, p: int, degree: int = 1, chunk: int = 1 << 14) -> WitnessReport:
    """First projective point over GF(p^degree) where the reduced G_i all vanish.

    The outcome is heuristic evidence only: a point over a finite field neither
    proves nor refutes the existence of a witness in characteristic zero.
    For ``degree > 1`` coordinates are reported as coefficient tuples in the
    power basis of GF(p)[t]/(modulus).
    """
    if degree < 1:
        raise InvalidInputError(f"degree must be positive, got {degree}")
    Fp = reduce_mod_p(F, p)
    codes = projective_points(F.n, p, degree)
    mode = f"evidence-ff({p})" if degree == 1 else f"evidence-ff({p}^{degree})"
    details = {"p": p, "omega_image": root_image(F.root_order, p), "points_scanned": int(len(codes))}
    if degree > 1:
        details["degree"] = degree
        details["modulus"] = list(field_modulus(p, degree))
    for start in range(0, len(codes), chunk):
        pts = _decode(codes[start : start + chunk], p, degree)
        last = ff_slices(Fp, pts, p, F.d, degree)
        hits = np.flatnonzero(~last.reshape(len(pts), -1).any(axis=1))
        if len(hits):
            u = pts[hits[0]]
            details["all_slots_zero"] = star_condition_ff(Fp, u, p, degree)
            if degree == 1:
                wit = tuple(int(x) for x in u[:, 0])
            else:
                wit = tuple(tuple(int(c) for c in x) for x in u)
            return WitnessReport(mode, wit, "found", details)
    return WitnessReport(mode, None, "none", details)


def star_condition_ff(Fp: np.ndarray, u, p: int, degree: int = 1) -> bool:
    """Condition (*) for the reduced model at u (residues, or coefficient tuples when degree > 1)."""
    pt = np.asarray(u, dtype=np.int64).reshape(1, Fp.shape[0], degree) % p
    return all(not ff_slices(Fp, pt, p, s, degree).any() for s in range(1, Fp.ndim + 1))


# ---------------------------------------------------------------------------


def chern_top(n: int, d: int) -> int:
    """c_(n-1) of Omega_{P^(n-1)}(d): coefficient of h^(n-1) in (1+(d-1)h)^n / (1+dh)."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    num = [comb(n, i) * (d - 1) ** i for i in range(n)]
    # series division by 1 + dh:  q_k = a_k - d q_(k-1)
    q = 0
    for a in num:
        q = a - d * q
    return q
