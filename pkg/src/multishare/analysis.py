"""Exhaustive checks of points-scheme degeneracy and share storage overhead."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import InvalidParams, KTooLargeForField, TooLarge
from .field import PrimeModulus, as_modulus
from .poly import interpolate, true_degree, vandermonde_first_row_inverse
from .schemes import Scheme

CENSUS_LIMIT = 10**8


class Method(enum.Enum):
    INTERPOLATE = "interpolate"
    VANDERMONDE = "vandermonde"


@dataclass(frozen=True)
class CensusReport:
    modulus: PrimeModulus
    k: int
    total_tuples: int
    degenerate_count: int

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def closed_form(self) -> int:
        return self.p ** (self.k - 1)

    @property
    def failure_percent(self) -> Fraction:
        return Fraction(100 * self.degenerate_count, self.total_tuples)


def _is_degenerate_interpolate(k: int, p: int):
    F = PrimeModulus(p)
    nodes = [F(i) for i in range(k)]

    def check(secrets) -> bool:
        q = interpolate([(x, F(s)) for x, s in zip(nodes, secrets)])
        return true_degree(q) < k - 1

    return check


def _is_degenerate_vandermonde(k: int, p: int):
    row = [m.value for m in vandermonde_first_row_inverse(k, p)]

    def check(secrets) -> bool:
        return sum(m * s for m, s in zip(row, secrets)) % p == 0

    return check


def degeneracy_test(k: int, p: int, method: Method):
    """Predicate on a secret tuple: does the points scheme lose degree on it?"""
    if method is Method.INTERPOLATE:
        return _is_degenerate_interpolate(k, p)
    return _is_degenerate_vandermonde(k, p)


def _validate(F: PrimeModulus, k: int) -> None:
    if k < 1:
        raise InvalidParams("k must be positive")
    if k > F.p:
        raise KTooLargeForField(f"k={k} exceeds p={F.p}")
    if F.p**k > CENSUS_LIMIT:
        raise TooLarge(f"p**k = {F.p}**{k} exceeds the exhaustive bound {CENSUS_LIMIT}")


def degenerate_tuples(p: int | PrimeModulus, k: int, method: Method = Method.INTERPOLATE) -> Iterator[tuple[int, ...]]:
    """Yield every ordered tuple in Z_p**k classified degenerate by ``method``."""
    F = as_modulus(p)
    _validate(F, k)
    check = degeneracy_test(k, F.p, method)
    for secrets in itertools.product(range(F.p), repeat=k):
        if check(secrets):
            yield secrets


def degeneracy_census(p: int | PrimeModulus, k: int, method: Method = Method.INTERPOLATE) -> CensusReport:
    F = as_modulus(p)
    _validate(F, k)
    count = sum(1 for _ in degenerate_tuples(F, k, method))
    return CensusReport(F, k, F.p**k, count)


def eq1_check(report: CensusReport) -> bool:
    """True iff the census hits ``p**(k-1)`` failures, i.e. a failure rate of exactly 100/p percent."""
    return (
        report.total_tuples == report.p**report.k
        and report.degenerate_count == report.closed_form
        and report.failure_percent == Fraction(100, report.p)
    )


@dataclass(frozen=True)
class BlowupReport:
    scheme: Scheme
    n: int
    threshold: int
    k_secrets: int
    secret_size: int
    blowup: Fraction


def blowup_factor(scheme: Scheme, n: int, threshold: int, k_secrets: int, d: int = 1) -> BlowupReport:
    """Total share storage over total secret storage.

    A share is one field element, the same size ``d`` as a secret. Shamir
    shares each secret separately, so ``k`` secrets cost ``k * n`` shares.
    """
    if min(n, threshold, k_secrets, d) < 1:
        raise InvalidParams("n, threshold, k_secrets and d must all be positive")
    if threshold > n:
        raise InvalidParams(f"threshold {threshold} exceeds n={n}")
    if scheme is Scheme.SHAMIR:
        share_units = k_secrets * n * d
    else:
        if scheme is Scheme.POINTS and threshold != k_secrets:
            raise InvalidParams("the points scheme fixes the threshold to the number of secrets")
        if k_secrets > threshold:
            raise InvalidParams(f"{k_secrets} secrets cannot be packed under threshold {threshold}")
        share_units = n * d
    return BlowupReport(scheme, n, threshold, k_secrets, d, Fraction(share_units, k_secrets * d))


def shamir_consistency_counts(p: int | PrimeModulus, k: int, x: int, y: int, nonzero_leading: bool = False) -> dict[int, int]:
    """For each candidate secret, count the polynomials of degree < k through ``(x, y)`` with that constant term.

    ``nonzero_leading=True`` restricts to the polynomials :func:`shamir_split`
    can actually emit.
    """
    F = as_modulus(p)
    if F.p**k > CENSUS_LIMIT:
        raise TooLarge(f"{F.p}**{k} polynomials is beyond the exhaustive bound")
    counts = {c: 0 for c in range(F.p)}
    for coeffs in itertools.product(range(F.p), repeat=k):
        if nonzero_leading and not coeffs[-1]:
            continue
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % F.p
        if acc == y % F.p:
            counts[coeffs[0]] += 1
    return counts
