"""Polynomials over Z_p: Horner evaluation, Lagrange interpolation, true degree,
and the Vandermonde row that detects degenerate secret tuples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateX, EmptyInput, KTooLargeForField, ModulusMismatch, ZeroInverse
from .field import FieldElement, PrimeModulus, as_modulus, inv_mod

#: Degree of the zero polynomial. Compares below every integer degree.
NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class Polynomial:
    """Coefficients ``a_0, a_1, ...`` (index i holds the coefficient of x**i).

    Trailing zero coefficients are kept as stored; :attr:`degree` ignores them.
    """

    coefficients: tuple[FieldElement, ...]
    modulus: PrimeModulus

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        for c in self.coefficients:
            if c.modulus.p != self.modulus.p:
                raise ModulusMismatch(f"coefficient mod {c.p} in polynomial mod {self.modulus.p}")

    @classmethod
    def from_ints(cls, coefficients: Iterable[int], p: int | PrimeModulus) -> Polynomial:
        F = as_modulus(p)
        return cls(tuple(F(c) for c in coefficients), F)

    @property
    def values(self) -> list[int]:
        return [c.value for c in self.coefficients]

    @property
    def degree(self):
        return true_degree(self)

    def __call__(self, x) -> FieldElement:
        if isinstance(x, int):
            x = self.modulus(x)
        return poly_eval(self, x)

    def __str__(self) -> str:
        terms = []
        for i in reversed(range(len(self.coefficients))):
            c = self.coefficients[i].value
            if not c:
                continue
            coef = "" if c == 1 and i else str(c)
            terms.append(coef + ("" if i == 0 else "x" if i == 1 else f"x^{i}"))
        return " + ".join(terms) or "0"


def _horner(coeffs: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def poly_eval(q: Polynomial, x: FieldElement) -> FieldElement:
    if x.modulus.p != q.modulus.p:
        raise ModulusMismatch(f"evaluating mod {q.modulus.p} polynomial at mod {x.p} point")
    return FieldElement(_horner(q.values, x.value, q.modulus.p), q.modulus)


def true_degree(q: Polynomial):
    """Largest index with a nonzero coefficient, or :data:`NEG_INFINITY`."""
    for i in reversed(range(len(q.coefficients))):
        if q.coefficients[i].value:
            return i
    return NEG_INFINITY


def _mul_linear(poly: list[int], root: int, p: int) -> list[int]:
    # poly * (x - root)
    out = [0] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] = (out[i + 1] + c) % p
        out[i] = (out[i] - root * c) % p
    return out


def interpolate_ints(xs: Sequence[int], ys: Sequence[int], p: int) -> list[int]:
    """Lagrange-form interpolation on plain residues.

    Returns ``len(xs)`` coefficients, lowest degree first. ``xs`` must be
    distinct mod ``p``.
    """
    k = len(xs)
    coeffs = [0] * k
    for i in range(k):
        if not ys[i] % p:
            continue
        basis = [1]
        denom = 1
        for j in range(k):
            if j != i:
                basis = _mul_linear(basis, xs[j], p)
                denom = denom * (xs[i] - xs[j]) % p
        scale = ys[i] * inv_mod(denom, p) % p
        for d in range(k):
            coeffs[d] = (coeffs[d] + scale * basis[d]) % p
    return coeffs


def interpolate(points: Sequence[tuple[FieldElement, FieldElement]]) -> Polynomial:
    """Unique polynomial of degree below ``len(points)`` through ``points``.

    The result is stored with exactly ``len(points)`` coefficients; leading
    ones may be zero when the points lie on a lower-degree curve.
    """
    if not points:
        raise EmptyInput("cannot interpolate zero points")
    F = points[0][0].modulus
    xs, ys = [], []
    for x, y in points:
        if x.p != F.p or y.p != F.p:
            raise ModulusMismatch("points drawn from different fields")
        xs.append(x.value)
        ys.append(y.value)
    if len(set(xs)) != len(xs):
        raise DuplicateX(f"repeated x-coordinate among {xs}")
    return Polynomial.from_ints(interpolate_ints(xs, ys, F.p), F)


def solve_inverse(matrix: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Invert a square matrix over Z_p by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[v % p for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ZeroInverse(f"matrix is singular mod {p}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = inv_mod(aug[col][col], p)
        aug[col] = [v * scale % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def vandermonde_matrix(k: int, p: int) -> list[list[int]]:
    """Rows ``[x**(k-1), ..., x, 1]`` for nodes ``x = 0..k-1`` (with 0**0 = 1)."""
    return [[pow(x, k - 1 - j, p) for j in range(k)] for x in range(k)]


def vandermonde_first_row_inverse(k: int, p: int | PrimeModulus) -> list[FieldElement]:
    """Weights ``m_i`` with ``a_{k-1} = sum(m_i * s_i)`` for interpolation through ``(i, s_i)``.

    A secret tuple is degenerate for the points scheme exactly when this dot
    product vanishes.
    """
    F = as_modulus(p)
    if k < 1:
        raise EmptyInput("k must be positive")
    if k > F.p:
        raise KTooLargeForField(f"nodes 0..{k - 1} are not distinct mod {F.p}")
    row = solve_inverse(vandermonde_matrix(k, F.p), F.p)[0]
    return [F(m) for m in row]


def leading_coefficient_from_row(row: Sequence[FieldElement], secrets: Sequence[FieldElement | int]) -> FieldElement:
    F = row[0].modulus
    return F(sum(m.value * int(s) for m, s in zip(row, secrets, strict=True)))
