"""Attacks that work when no fresh randomness enters the sharing polynomial.

* Divisibility leak: if every coefficient is small enough that evaluating
  ``q(u)`` never wraps mod p, then ``u | q(u)`` exactly when ``u | a_0``.
* Related secrets: the points scheme is linear in its secrets, so a holder of
  ``(u, q(u))`` can forge ``(u, d*q(u))`` for a group sharing ``d`` times the
  same secrets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, WraparoundRisk
from .field import FieldElement, PrimeModulus, as_modulus
from .schemes import RandomSource, Scheme, Share, shamir_split, coeff_split


@dataclass(frozen=True)
class DivisibilityInference:
    u: FieldElement
    q_u: FieldElement
    r: int
    divisible: bool
    search_space_size: int


def max_unreduced_value(r: int, u: int, threshold: int) -> int:
    """Largest value q(u) can take before reduction when all coefficients are <= r."""
    return sum(r * u**i for i in range(threshold))


def search_space(r: int, u: int, divisible: bool) -> int:
    """Remaining candidates for ``a_0`` after the divisibility observation.

    Multiples of ``u`` up to ``r`` number ``r // u + 1`` (zero included); the
    complement is reported as ``r - r // u - 1``.
    """
    return r // u + 1 if divisible else r - r // u - 1


def divisibility_attack(share: Share, r: int) -> DivisibilityInference:
    """Decide whether ``u`` divides the constant term from one coefficient-packed share.

    Raises :class:`WraparoundRisk` unless ``sum(r * u**i for i < threshold) < p``;
    past that bound reduction mod p can break the inference.
    """
    if share.scheme is not Scheme.COEFF:
        raise InvalidParams(f"divisibility inference applies to coeff shares, not {share.scheme.value}")
    u = share.x.value
    if r < 1:
        raise InvalidParams("the coefficient bound r must be positive")
    if u < 2:
        raise InvalidParams("u = 1 divides everything; nothing to infer")
    if max_unreduced_value(r, u, share.threshold) >= share.modulus.p:
        raise WraparoundRisk(
            f"coefficients up to {r} at x={u} can reach "
            f"{max_unreduced_value(r, u, share.threshold)} >= p={share.modulus.p}"
        )
    divisible = share.y.value % u == 0
    return DivisibilityInference(share.x, share.y, r, divisible, search_space(r, u, divisible))


@dataclass(frozen=True)
class ControlResult:
    """Tally of ``u | q(u)`` against ``u | a_0`` over repeated sharings."""

    trials: int
    share_divisible: int
    secret_divisible: int
    agreements: int

    @property
    def share_divisible_rate(self) -> float:
        return self.share_divisible / self.trials

    @property
    def agreement_rate(self) -> float:
        return self.agreements / self.trials


def divisibility_control(
    scheme: Scheme,
    p: int | PrimeModulus,
    threshold: int,
    u: int,
    r: int,
    trials: int,
    seed: int,
) -> ControlResult:
    """Share small random secrets ``trials`` times and watch the share at ``x = u``.

    For COEFF every coefficient is drawn from ``0..r`` and ``agreement_rate`` is
    1. For SHAMIR the padding is uniform in Z_p and divisibility of the share
    carries no information about the secret.
    """
    F = as_modulus(p)
    rng = RandomSource(seed)
    share_div = secret_div = agree = 0
    for _ in range(trials):
        if scheme is Scheme.SHAMIR:
            a0 = rng.integer(0, r)
            shares = shamir_split(F(a0), threshold, max(u, threshold), rng)
        elif scheme is Scheme.COEFF:
            coeffs = [rng.integer(0, r) for _ in range(threshold - 1)] + [rng.integer(1, r)]
            a0 = coeffs[0]
            shares = coeff_split(coeffs, threshold, max(u, threshold), p=F)
        else:
            raise InvalidParams("the control compares shamir and coeff shares")
        y = shares[u - 1].y.value
        s_div = y % u == 0
        a_div = a0 % u == 0
        share_div += s_div
        secret_div += a_div
        agree += s_div == a_div
    return ControlResult(trials, share_div, secret_div, agree)


@dataclass(frozen=True)
class RelatedShareForgery:
    d: FieldElement
    source_share: Share
    forged_share: Share


def related_share_forgery(source: Share, d: FieldElement | int, k: int | None = None) -> RelatedShareForgery:
    """Turn a share of secrets ``s`` into a share of ``d * s`` at the same x.

    Works for the points scheme and for coefficient packing with ``m = k``;
    a Shamir share has fresh random padding and gives no such relation.
    """
    if source.scheme is Scheme.SHAMIR:
        raise InvalidParams("shamir shares carry independent randomness; scaling them forges nothing")
    if k is not None and k != source.threshold:
        raise InvalidParams(f"source share has threshold {source.threshold}, expected {k}")
    if isinstance(d, int):
        d = source.modulus(d)
    forged = Share(source.scheme, source.modulus, source.threshold, source.x, d * source.y)
    return RelatedShareForgery(d, source, forged)
