"""Shamir single-secret sharing, the points scheme and the coefficient-packing scheme.

Coordinates are fixed so shares are reproducible: SHAMIR and COEFF shares sit
at ``x = 1..n``; POINTS shares sit at ``x = k..k+n-1``, past the nodes that
carry the secrets.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AllZeroSecrets,
    ChunkExceedsModulus,
    DegenerateSecretSet,
    DuplicateX,
    InvalidParams,
    LeadingSecretZero,
    MixedShares,
    QuorumTooSmall,
)
from .field import FieldElement, PrimeModulus, as_modulus
from .poly import Polynomial, interpolate, poly_eval, true_degree


class Scheme(enum.Enum):
    SHAMIR = "shamir"
    POINTS = "points"
    COEFF = "coeff"


@dataclass(frozen=True)
class Share:
    scheme: Scheme
    modulus: PrimeModulus
    threshold: int
    x: FieldElement
    y: FieldElement

    def __post_init__(self):
        if self.threshold < 2:
            raise InvalidParams(f"threshold must be at least 2, got {self.threshold}")
        if self.x.p != self.modulus.p or self.y.p != self.modulus.p:
            raise MixedShares("share coordinates live in a different field than the share")
        if self.scheme is not Scheme.POINTS and self.x.value == 0:
            raise InvalidParams("x = 0 would hand out the constant term directly")
        if self.scheme is Scheme.POINTS and self.x.value < self.threshold:
            # values 0..k-1 are the secret nodes; larger residues are all legal
            raise InvalidParams(f"points share at reserved node x={self.x.value}")

    @property
    def point(self) -> tuple[FieldElement, FieldElement]:
        return self.x, self.y


class RandomSource:
    """Uniform residues from a seedable generator.

    With ``seed=None`` the operating system CSPRNG is used and output is not
    reproducible.
    """

    def __init__(self, seed: int | None = None):
        self.seed = seed
        self._rng = random.SystemRandom() if seed is None else random.Random(seed)

    def residue(self, p: int) -> int:
        return self._rng.randrange(p)

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return self._rng.randint(lo, hi)

    def nonzero(self, p: int) -> int:
        while True:
            v = self._rng.randrange(p)
            if v:
                return v


def _secret_elements(secrets: Sequence[FieldElement | int], F: PrimeModulus | None) -> list[FieldElement]:
    if not secrets:
        raise InvalidParams("at least one secret is required")
    if F is None:
        if not isinstance(secrets[0], FieldElement):
            raise InvalidParams("a modulus is required when secrets are plain ints")
        F = secrets[0].modulus
    out = []
    for s in secrets:
        if isinstance(s, FieldElement):
            if s.p != F.p:
                raise MixedShares("secrets drawn from different fields")
            out.append(s)
        else:
            if not 0 <= s < F.p:
                raise InvalidParams(f"secret {s} is not a residue mod {F.p}")
            out.append(F(s))
    return out


def _emit(scheme, F, threshold, q, xs):
    return [Share(scheme, F, threshold, F(x), poly_eval(q, F(x))) for x in xs]


def _check_quorum(shares: Sequence[Share], scheme: Scheme) -> tuple[PrimeModulus, int]:
    if not shares:
        raise QuorumTooSmall("no shares supplied")
    first = shares[0]
    for s in shares:
        if s.scheme is not scheme:
            raise MixedShares(f"expected {scheme.value} shares, got {s.scheme.value}")
        if s.modulus.p != first.modulus.p:
            raise MixedShares(f"shares mix moduli {first.modulus.p} and {s.modulus.p}")
        if s.threshold != first.threshold:
            raise MixedShares(f"shares mix thresholds {first.threshold} and {s.threshold}")
    xs = [s.x.value for s in shares]
    if len(set(xs)) != len(xs):
        raise DuplicateX(f"repeated share x-coordinate among {xs}")
    if len(shares) < first.threshold:
        raise QuorumTooSmall(f"{len(shares)} shares supplied, threshold is {first.threshold}")
    return first.modulus, first.threshold


# -- Shamir -------------------------------------------------------------------

def shamir_split(secret: FieldElement, k: int, n: int, rng: RandomSource) -> list[Share]:
    F = secret.modulus
    if not 2 <= k <= n:
        raise InvalidParams(f"need 2 <= k <= n, got k={k}, n={n}")
    if n >= F.p:
        raise InvalidParams(f"n={n} shares need n < p={F.p}")
    coeffs = [secret.value] + [rng.residue(F.p) for _ in range(k - 2)] + [rng.nonzero(F.p)]
    q = Polynomial.from_ints(coeffs, F)
    return _emit(Scheme.SHAMIR, F, k, q, range(1, n + 1))


def shamir_reconstruct(shares: Sequence[Share]) -> FieldElement:
    _check_quorum(shares, Scheme.SHAMIR)
    return interpolate([s.point for s in shares]).coefficients[0]


# -- points scheme --------------------------------------------------------------

def points_polynomial(secrets: Sequence[FieldElement]) -> Polynomial:
    """Interpolate ``(i, s_i)`` for ``i = 0..k-1``."""
    F = secrets[0].modulus
    return interpolate([(F(i), s) for i, s in enumerate(secrets)])


def points_split(
    secrets: Sequence[FieldElement | int],
    n: int,
    p: int | PrimeModulus | None = None,
    strict: bool = True,
) -> list[Share]:
    """Share ``k`` secrets as the values of a degree ``k-1`` polynomial at ``0..k-1``.

    Raises :class:`DegenerateSecretSet` when the secrets lie on a lower-degree
    polynomial, since shares of it would open with fewer than ``k`` holders.
    ``strict=False`` emits those weak shares anyway, as the unchecked scheme
    would; they still carry threshold ``k``.
    """
    F = as_modulus(p) if p is not None else None
    values = _secret_elements(secrets, F)
    F = values[0].modulus
    k = len(values)
    if k < 2:
        raise InvalidParams("the points scheme needs at least 2 secrets")
    if k > F.p:
        raise InvalidParams(f"{k} secret nodes do not fit in Z_{F.p}")
    q = points_polynomial(values)
    degree = true_degree(q)
    if strict and degree < k - 1:
        raise DegenerateSecretSet(degree, k)
    if n < k or k + n > F.p:
        raise InvalidParams(f"need k <= n and k + n <= p, got k={k}, n={n}, p={F.p}")
    return _emit(Scheme.POINTS, F, k, q, range(k, k + n))


def points_reconstruct(shares: Sequence[Share]) -> list[FieldElement]:
    F, k = _check_quorum(shares, Scheme.POINTS)
    q = interpolate([s.point for s in shares])
    return [poly_eval(q, F(i)) for i in range(k)]


# -- coefficient packing -----------------------------------------------------------

def coeff_polynomial(secrets: Sequence[FieldElement], m: int, rng: RandomSource | None = None) -> Polynomial:
    F = secrets[0].modulus
    k = len(secrets)
    if not 1 <= k <= m:
        raise InvalidParams(f"need 1 <= k <= m, got k={k}, m={m}")
    if not any(s.value for s in secrets):
        raise AllZeroSecrets("cannot share an all-zero secret set")
    coeffs = [s.value for s in secrets]
    if m == k:
        if not coeffs[-1]:
            raise LeadingSecretZero(
                f"secret s_{k - 1} is the leading coefficient and must be nonzero when m = k"
            )
    else:
        if rng is None:
            raise InvalidParams("m > k needs a RandomSource for the padding coefficients")
        coeffs += [rng.residue(F.p) for _ in range(m - k - 1)] + [rng.nonzero(F.p)]
    return Polynomial.from_ints(coeffs, F)


def coeff_split(
    secrets: Sequence[FieldElement | int],
    m: int,
    n: int,
    rng: RandomSource | None = None,
    p: int | PrimeModulus | None = None,
) -> list[Share]:
    """Pack ``k`` secrets as the low coefficients of a degree ``m-1`` polynomial.

    Degrees ``k..m-1`` are random padding; the top one is never zero, so any
    ``m`` shares are needed. Shares are taken at ``x = 1..n``.
    """
    F = as_modulus(p) if p is not None else None
    values = _secret_elements(secrets, F)
    F = values[0].modulus
    if m < 2 or m > n:
        raise InvalidParams(f"need 2 <= m <= n, got m={m}, n={n}")
    if n >= F.p:
        raise InvalidParams(f"n={n} shares need n < p={F.p}")
    q = coeff_polynomial(values, m, rng)
    return _emit(Scheme.COEFF, F, m, q, range(1, n + 1))


def coeff_reconstruct(shares: Sequence[Share], k: int | None = None) -> list[FieldElement]:
    """Recover the first ``k`` coefficients (all ``m`` when ``k`` is omitted)."""
    _, m = _check_quorum(shares, Scheme.COEFF)
    if k is None:
        k = m
    if not 1 <= k <= m:
        raise InvalidParams(f"k_secrets={k} must lie in 1..{m}")
    q = interpolate([s.point for s in shares])
    return list(q.coefficients[:k])


# -- large secrets -------------------------------------------------------------------

def chunk_width(length: int, k: int) -> int:
    """Bits per chunk when ``length`` bytes are cut into ``k`` pieces."""
    return -(-8 * length // k)


def chunk_secret(data: bytes, k: int, p: int | PrimeModulus) -> list[FieldElement]:
    """Cut ``data`` into ``k`` equal-width big-endian integers, most significant first.

    The byte string is read as one integer of ``8 * len(data)`` bits and padded
    with leading zero bits to ``k * width``. Chunk 0 becomes ``a_0``.
    """
    F = as_modulus(p)
    if k < 1:
        raise InvalidParams("k must be positive")
    width = chunk_width(len(data), k)
    whole = int.from_bytes(data, "big")
    mask = (1 << width) - 1
    chunks = [(whole >> (width * (k - 1 - i))) & mask for i in range(k)]
    for i, c in enumerate(chunks):
        if c >= F.p:
            raise ChunkExceedsModulus(
                f"chunk {i} = {c} is not below p = {F.p}; use a larger p or more chunks"
            )
    return [F(c) for c in chunks]


def unchunk_secret(chunks: Sequence[FieldElement | int], length: int) -> bytes:
    k = len(chunks)
    width = chunk_width(length, k)
    whole = 0
    for c in chunks:
        c = int(c)
        if c >> width:
            raise ChunkExceedsModulus(f"chunk {c} is wider than {width} bits")
        whole = (whole << width) | c
    if whole >> (8 * length):
        raise InvalidParams(f"chunks encode more than {length} bytes")
    return whole.to_bytes(length, "big")
