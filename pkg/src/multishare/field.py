"""Exact arithmetic in the prime field Z_p for moduli below 2**61."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModulusMismatch, NotPrime, ZeroInverse

MAX_MODULUS = 1 << 61

# Deterministic for every n < 3.3e24, which covers the 2**61 bound.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for all n < 2**64."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class PrimeModulus:
    """A validated prime ``p`` with ``2 <= p < 2**61``.

    Calling the modulus reduces an integer into the field::

        >>> F = PrimeModulus(7)
        >>> F(10)
        FieldElement(3, p=7)
    """

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise NotPrime(f"modulus must be an int, got {self.p!r}")
        if not 2 <= self.p < MAX_MODULUS:
            raise NotPrime(f"modulus {self.p} outside [2, 2**61)")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"PrimeModulus({self.p})"

    def elements(self):
        """Iterate over every residue 0..p-1."""
        return (FieldElement(v, self) for v in range(self.p))


def as_modulus(p: int | PrimeModulus) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


@dataclass(frozen=True, slots=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.modulus.p}")

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(f"mod {self.modulus.p} vs mod {other.modulus.p}")
            return other
        if isinstance(other, int):
            return self.modulus(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return fe_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return fe_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return fe_sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return fe_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return fe_mul(self, fe_inv(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return fe_mul(other, fe_inv(self))

    def __neg__(self):
        return FieldElement(-self.value % self.p, self.modulus)

    def __pow__(self, e: int):
        return fe_pow(self, e)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, p={self.p})"

    def __str__(self) -> str:
        return str(self.value)


def _check(a: FieldElement, b: FieldElement) -> None:
    if a.modulus.p != b.modulus.p:
        raise ModulusMismatch(f"mod {a.modulus.p} vs mod {b.modulus.p}")


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return FieldElement((a.value + b.value) % a.p, a.modulus)


def fe_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return FieldElement((a.value - b.value) % a.p, a.modulus)


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return FieldElement(a.value * b.value % a.p, a.modulus)


def fe_pow(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        return fe_pow(fe_inv(a), -e)
    return FieldElement(pow(a.value, e, a.p), a.modulus)


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % p


def inv_fermat(a: int, p: int) -> int:
    """Inverse of ``a`` modulo prime ``p`` as a**(p-2)."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def fe_inv(a: FieldElement) -> FieldElement:
    return FieldElement(inv_mod(a.value, a.p), a.modulus)
